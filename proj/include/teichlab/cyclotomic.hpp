// SPDX-License-Identifier: Apache-2.0

#ifndef TEICHLAB_CYCLOTOMIC_HPP
#define TEICHLAB_CYCLOTOMIC_HPP

#include <map>
#include <string>
#include <vector>

#include "teichlab/integer.hpp"

namespace teichlab {

/// Parameters of a context q = p^d, n = q - 1, with zeta a primitive nth root of unity.
struct Context {
    Int p;
    unsigned d = 0;
    Int q;
    Int n;
    Int phi_n;
    Int num_primes;  // phi(n)/d, the number of primes over p

    static Context make(const Int& p, unsigned d);
};

/// Polynomial with unbounded integer coefficients, lowest degree first,
/// trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial x_pow(std::size_t k);
    // x^n - 1
    static IntPolynomial x_pow_minus_one(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    const Int& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Division by a monic divisor; exact in Z[x].
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Formal Z-linear combination of roots of unity zeta^a, exponents canonical in [0, n).
class ExponentSum {
public:
    ExponentSum() : n_(1) {}
    explicit ExponentSum(Int n) : n_(std::move(n)) {}
    ExponentSum(Int n, const std::vector<std::pair<Int, Int>>& terms);

    // zeta^a1 + zeta^a2 + ... (unit coefficients)
    static ExponentSum roots(const Int& n, const std::vector<Int>& exps);

    const Int& modulus() const { return n_; }
    const std::map<Int, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const Int& exp, const Int& coeff);
    ExponentSum operator+(const ExponentSum& o) const;

    // term-level equality (same exponent/coefficient map); ring-level equality
    // is ring_equal below
    bool operator==(const ExponentSum& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator<(const ExponentSum& o) const {
        return terms_ < o.terms_;
    }

    std::string to_string(bool ascii = false) const;

private:
    Int n_;
    std::map<Int, Int> terms_;
};

Int euler_phi(const Int& n);

Int multiplicative_order(const Int& a, const Int& n);

// Phi_n(x), memoized; thread-safe.
IntPolynomial cyclotomic_poly(std::size_t n);

// Canonical representative of alpha in Z[x]/(Phi_n), degree < phi(n).
IntPolynomial exp_sum_to_ring(const ExponentSum& alpha, const Context& ctx);

bool ring_equal(const ExponentSum& a, const ExponentSum& b, const Context& ctx);

}  // namespace teichlab

#endif
