// SPDX-License-Identifier: Apache-2.0

#include "teichlab/cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace teichlab {

Context Context::make(const Int& p, unsigned d) {
    if (!is_prime(p)) throw std::invalid_argument("Context: p must be prime");
    if (d == 0) throw std::invalid_argument("Context: d must be positive");
    Context ctx;
    ctx.p = p;
    ctx.d = d;
    ctx.q = pow_int(p, d);
    ctx.n = ctx.q - 1;
    ctx.phi_n = euler_phi(ctx.n);
    if (ctx.phi_n % d != 0) throw std::logic_error("Context: d does not divide phi(n)");
    ctx.num_primes = ctx.phi_n / d;
    return ctx;
}

IntPolynomial IntPolynomial::x_pow(std::size_t k) {
    std::vector<Int> c(k + 1, 0);
    c[k] = 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
    std::vector<Int> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1)
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Int> rem = coeffs_;
    const long dd = divisor.degree();
    if (degree() < dd) return {IntPolynomial{}, *this};
    std::vector<Int> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (long i = degree(); i >= dd; --i) {
        Int c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ExponentSum::ExponentSum(Int n, const std::vector<std::pair<Int, Int>>& terms) : n_(std::move(n)) {
    for (const auto& [a, c] : terms) add_term(a, c);
}

ExponentSum ExponentSum::roots(const Int& n, const std::vector<Int>& exps) {
    ExponentSum s(n);
    for (const Int& a : exps) s.add_term(a, 1);
    return s;
}

void ExponentSum::add_term(const Int& exp, const Int& coeff) {
    if (coeff == 0) return;
    Int a = mod_reduce(exp, n_);
    auto it = terms_.find(a);
    if (it == terms_.end()) {
        terms_.emplace(a, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ExponentSum ExponentSum::operator+(const ExponentSum& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ExponentSum: modulus mismatch");
    ExponentSum s = *this;
    for (const auto& [a, c] : o.terms_) s.add_term(a, c);
    return s;
}

std::string ExponentSum::to_string(bool ascii) const {
    if (terms_.empty()) return "0";
    const char* z = ascii ? "z" : "ζ";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1) os << abs_c << "*";
        os << z << "^" << a;
    }
    return os.str();
}

Int euler_phi(const Int& n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    Int r = n;
    for (const auto& [p, e] : factorize(n)) {
        r = r / p * (p - 1);
    }
    return r;
}

Int multiplicative_order(const Int& a, const Int& n) {
    Int g = gcd(mod_reduce(a, n), n);
    if (n == 1) return 1;
    if (g != 1) throw std::invalid_argument("multiplicative_order: gcd(a, n) != 1");
    Int x = mod_reduce(a, n);
    Int acc = x;
    Int k = 1;
    while (acc != 1) {
        acc = acc * x % n;
        ++k;
        if (k > n) throw std::logic_error("multiplicative_order: runaway loop");
    }
    return k;
}

IntPolynomial cyclotomic_poly(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    static std::unordered_map<std::size_t, IntPolynomial> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    IntPolynomial result;
    if (n == 1) {
        result = IntPolynomial({-1, 1});
    } else {
        // x^n - 1 divided exactly by the product of Phi_d over proper divisors d | n
        IntPolynomial num = IntPolynomial::x_pow_minus_one(n);
        IntPolynomial den({1});
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d == 0) den = den * cyclotomic_poly(d);
        }
        auto [q, r] = num.divmod_monic(den);
        if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: division not exact");
        result = std::move(q);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(n, result);
    return result;
}

IntPolynomial exp_sum_to_ring(const ExponentSum& alpha, const Context& ctx) {
    const std::size_t n = static_cast<std::size_t>(ctx.n);
    std::vector<Int> c(n, 0);
    for (const auto& [a, coeff] : alpha.terms()) c[static_cast<std::size_t>(a)] += coeff;
    IntPolynomial raw{std::move(c)};
    auto [q, r] = raw.divmod_monic(cyclotomic_poly(n));
    return r;
}

bool ring_equal(const ExponentSum& a, const ExponentSum& b, const Context& ctx) {
    return exp_sum_to_ring(a, ctx) == exp_sum_to_ring(b, ctx);
}

}  // namespace teichlab
