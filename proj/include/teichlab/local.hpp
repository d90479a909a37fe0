// SPDX-License-Identifier: Apache-2.0

#ifndef TEICHLAB_LOCAL_HPP
#define TEICHLAB_LOCAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teichlab/cyclotomic.hpp"
#include "teichlab/integer.hpp"

namespace teichlab {

/// Polynomial with coefficients in Z/modulus, lowest degree first, trailing
/// zeros trimmed. The modulus is p^N for a context prime p.
class ModPolynomial {
public:
    ModPolynomial() = default;
    ModPolynomial(Int modulus, std::vector<Int> coeffs);

    static ModPolynomial from_int_poly(const IntPolynomial& f, const Int& modulus);
    static ModPolynomial x_pow(const Int& modulus, std::size_t k);

    const Int& modulus() const { return modulus_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    ModPolynomial operator+(const ModPolynomial& o) const;
    ModPolynomial operator-(const ModPolynomial& o) const;
    ModPolynomial operator*(const ModPolynomial& o) const;
    bool operator==(const ModPolynomial& o) const {
        return modulus_ == o.modulus_ && coeffs_ == o.coeffs_;
    }
    bool operator<(const ModPolynomial& o) const;  // lexicographic, constant term first

    // Same coefficients reduced into a smaller (dividing) modulus.
    ModPolynomial reduced_mod(const Int& new_modulus) const;

    // Division by a monic divisor over Z/modulus.
    std::pair<ModPolynomial, ModPolynomial> divmod_monic(const ModPolynomial& divisor) const;

    ModPolynomial mul_mod(const ModPolynomial& o, const ModPolynomial& monic_mod) const;
    ModPolynomial pow_mod(Int e, const ModPolynomial& monic_mod) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void check_same(const ModPolynomial& o) const;
    Int modulus_;
    std::vector<Int> coeffs_;
};

// Monic gcd of polynomials over the field Z/p (modulus must be prime).
ModPolynomial poly_gcd_mod_p(ModPolynomial a, ModPolynomial b);

/// One prime over p: an irreducible degree-d factor of Phi_n mod p plus its
/// Hensel lift mod p^N.
struct PrimeData {
    Context ctx;
    ModPolynomial f_mod_p;  // modulus p, monic, degree d
    ModPolynomial f_lift;   // modulus p^N, monic, congruent to f_mod_p mod p
    unsigned precision = 0; // N
    unsigned label = 0;     // index in the canonically sorted factor list
};

using PrimePtr = std::shared_ptr<const PrimeData>;

/// All primes over p at a common precision, canonically ordered.
struct PrimeSet {
    Context ctx;
    unsigned precision = 0;
    std::uint64_t seed = 0;
    std::vector<PrimePtr> primes;

    const PrimePtr& by_factor(const std::vector<Int>& mod_p_coeffs) const;
};

/// Element of R = (Z/p^N)[x]/(f_N), degree < d. `level` tracks the currently
/// valid precision; poly.modulus == p^level.
struct LocalElement {
    PrimePtr prime;
    ModPolynomial poly;
    unsigned level = 0;
};

/// Element of the residue field F_q = F_p[x]/(f mod p).
struct ResidueElement {
    PrimePtr prime;
    ModPolynomial poly;  // modulus p, degree < d

    bool is_zero() const { return poly.is_zero(); }
};

// Equal-degree factorization of Phi_n mod p into phi(n)/d monic irreducible
// degree-d factors, canonically sorted.
std::vector<ModPolynomial> factor_cyclotomic_mod_p(const Context& ctx, std::uint64_t seed = 1);

// Quadratic Hensel lift of a monic irreducible factor of Phi_n mod p to p^N.
ModPolynomial hensel_lift(const ModPolynomial& f, const Context& ctx, unsigned N);

PrimeSet make_prime_set(const Context& ctx, unsigned precision, std::uint64_t seed = 1);

LocalElement local_make(const PrimePtr& prime, ModPolynomial poly, unsigned level);
LocalElement local_zero(const PrimePtr& prime, unsigned level);
LocalElement local_one(const PrimePtr& prime, unsigned level);
// The class of x, a primitive nth root of unity in R.
LocalElement local_gen(const PrimePtr& prime, unsigned level);

LocalElement local_add(const LocalElement& a, const LocalElement& b);
LocalElement local_sub(const LocalElement& a, const LocalElement& b);
LocalElement local_mul(const LocalElement& a, const LocalElement& b);
LocalElement local_pow(const LocalElement& a, Int e);

ResidueElement residue(const LocalElement& a);

ResidueElement residue_mul(const ResidueElement& a, const ResidueElement& b);
ResidueElement residue_pow(const ResidueElement& a, Int e);
// x-bar^k in F_q
ResidueElement residue_gen_pow(const PrimePtr& prime, const Int& k);

// Discrete log of b to base x-bar in F_q^x; nullopt when b = 0.
// Linear scan for n < 2^16, Pohlig-Hellman with BSGS otherwise;
// force_pohlig_hellman skips the scan fallback.
std::optional<Int> dlog(const ResidueElement& b, bool force_pohlig_hellman = false);

// JSON array of decimal-string coefficients, constant term first, plus the
// modulus as a decimal string.
std::string mod_poly_to_json(const ModPolynomial& f);
ModPolynomial mod_poly_from_json(const std::string& text);

// Unique t in R at precision N with t^q = t and t = b mod p, by Frobenius
// iteration from a coefficientwise lift. Throws if no fixed point appears
// within N+1 iterations.
LocalElement teichmuller_lift_oracle(const ResidueElement& b, unsigned N);

// gcd(m^a - 1, m^b - 1); asserts equality with m^gcd(a,b) - 1.
Int gcd_power_identity(const Int& m, unsigned a, unsigned b);

}  // namespace teichlab

#endif
