// SPDX-License-Identifier: Apache-2.0

#include "teichlab/local.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace teichlab {

namespace {

Int pow2_cap(const Int& p, unsigned a) { return pow_int(p, a); }

std::string coeff_key(const ModPolynomial& f) {
    std::ostringstream os;
    for (const Int& c : f.coeffs()) os << c << ",";
    return os.str();
}

}  // namespace

ModPolynomial::ModPolynomial(Int modulus, std::vector<Int> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
    if (modulus_ < 2) throw std::invalid_argument("ModPolynomial: modulus must be >= 2");
    for (Int& c : coeffs_) c = mod_reduce(c, modulus_);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPolynomial ModPolynomial::from_int_poly(const IntPolynomial& f, const Int& modulus) {
    return ModPolynomial(modulus, f.coeffs());
}

ModPolynomial ModPolynomial::x_pow(const Int& modulus, std::size_t k) {
    std::vector<Int> c(k + 1, 0);
    c[k] = 1;
    return ModPolynomial(modulus, std::move(c));
}

void ModPolynomial::check_same(const ModPolynomial& o) const {
    if (modulus_ != o.modulus_) throw std::invalid_argument("ModPolynomial: modulus mismatch");
}

ModPolynomial ModPolynomial::operator+(const ModPolynomial& o) const {
    check_same(o);
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return ModPolynomial(modulus_, std::move(c));
}

ModPolynomial ModPolynomial::operator-(const ModPolynomial& o) const {
    check_same(o);
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return ModPolynomial(modulus_, std::move(c));
}

ModPolynomial ModPolynomial::operator*(const ModPolynomial& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return ModPolynomial(modulus_, {});
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return ModPolynomial(modulus_, std::move(c));
}

bool ModPolynomial::operator<(const ModPolynomial& o) const {
    std::size_t m = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < m; ++i) {
        Int a = coeff(i), b = o.coeff(i);
        if (a != b) return a < b;
    }
    return false;
}

ModPolynomial ModPolynomial::reduced_mod(const Int& new_modulus) const {
    if (modulus_ % new_modulus != 0)
        throw std::invalid_argument("reduced_mod: new modulus must divide old");
    return ModPolynomial(new_modulus, coeffs_);
}

std::pair<ModPolynomial, ModPolynomial> ModPolynomial::divmod_monic(const ModPolynomial& divisor) const {
    check_same(divisor);
    if (!divisor.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
    const long dd = divisor.degree();
    if (degree() < dd) return {ModPolynomial(modulus_, {}), *this};
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
    for (long i = degree(); i >= dd; --i) {
        Int c = mod_reduce(rem[static_cast<std::size_t>(i)], modulus_);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {ModPolynomial(modulus_, std::move(quot)), ModPolynomial(modulus_, std::move(rem))};
}

ModPolynomial ModPolynomial::mul_mod(const ModPolynomial& o, const ModPolynomial& monic_mod) const {
    return ((*this) * o).divmod_monic(monic_mod).second;
}

ModPolynomial ModPolynomial::pow_mod(Int e, const ModPolynomial& monic_mod) const {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    ModPolynomial r(modulus_, {1});
    ModPolynomial base = divmod_monic(monic_mod).second;
    while (e > 0) {
        if ((e & 1) != 0) r = r.mul_mod(base, monic_mod);
        base = base.mul_mod(base, monic_mod);
        e >>= 1;
    }
    return r;
}

std::string ModPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

ModPolynomial scalar_mul(const ModPolynomial& f, const Int& s) {
    std::vector<Int> c = f.coeffs();
    for (Int& x : c) x *= s;
    return ModPolynomial(f.modulus(), std::move(c));
}

ModPolynomial make_monic_mod_p(const ModPolynomial& f) {
    if (f.is_zero()) return f;
    Int inv = mod_inverse(f.coeffs().back(), f.modulus());
    return scalar_mul(f, inv);
}

// s*a + t*b = g (monic) over the field Z/p.
struct ExtGcd {
    ModPolynomial g, s, t;
};

ExtGcd poly_ext_gcd_mod_p(ModPolynomial a, ModPolynomial b) {
    const Int p = a.modulus();
    ModPolynomial old_r = a, r = b;
    ModPolynomial old_s(p, {1}), s(p, {});
    ModPolynomial old_t(p, {}), t(p, {1});
    while (!r.is_zero()) {
        Int lead_inv = mod_inverse(r.coeffs().back(), p);
        ModPolynomial r_monic = scalar_mul(r, lead_inv);
        auto [q_monic, rem] = old_r.divmod_monic(r_monic);
        ModPolynomial q = scalar_mul(q_monic, lead_inv);
        ModPolynomial new_r = old_r - q * r;
        old_r = r;
        r = new_r;
        ModPolynomial new_s = old_s - q * s;
        old_s = s;
        s = new_s;
        ModPolynomial new_t = old_t - q * t;
        old_t = t;
        t = new_t;
    }
    Int lead_inv = mod_inverse(old_r.coeffs().back(), p);
    return {scalar_mul(old_r, lead_inv), scalar_mul(old_s, lead_inv), scalar_mul(old_t, lead_inv)};
}

}  // namespace

ModPolynomial poly_gcd_mod_p(ModPolynomial a, ModPolynomial b) {
    const Int p = a.modulus();
    while (!b.is_zero()) {
        ModPolynomial b_monic = make_monic_mod_p(b);
        ModPolynomial r = a.divmod_monic(b_monic).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : make_monic_mod_p(a);
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus). Every irreducible factor of the
// input has degree d.
void equal_degree_split(const ModPolynomial& F, const Context& ctx, std::mt19937_64& rng,
                        std::vector<ModPolynomial>& out) {
    if (F.degree() == static_cast<long>(ctx.d)) {
        out.push_back(F);
        return;
    }
    const Int p = ctx.p;
    const std::uint64_t p_u64 = static_cast<std::uint64_t>(p);
    while (true) {
        std::vector<Int> rc(static_cast<std::size_t>(F.degree()), 0);
        for (Int& c : rc) c = Int(rng() % p_u64);
        ModPolynomial a(p, std::move(rc));
        if (a.is_zero()) continue;
        ModPolynomial candidate(p, {});
        if (p == 2) {
            // trace map a + a^2 + a^4 + ... + a^(2^(d-1)) mod F
            ModPolynomial acc = a.divmod_monic(F).second;
            ModPolynomial tr = acc;
            for (unsigned i = 1; i < ctx.d; ++i) {
                acc = acc.mul_mod(acc, F);
                tr = tr + acc;
            }
            candidate = tr;
        } else {
            Int e = (ctx.q - 1) / 2;
            candidate = a.pow_mod(e, F) - ModPolynomial(p, {1});
        }
        ModPolynomial g = poly_gcd_mod_p(candidate, F);
        if (g.is_zero() || g.degree() == 0 || g.degree() == F.degree()) continue;
        auto [quot, rem] = F.divmod_monic(g);
        if (!rem.is_zero()) throw std::logic_error("equal_degree_split: inexact division");
        equal_degree_split(g, ctx, rng, out);
        equal_degree_split(quot, ctx, rng, out);
        return;
    }
}

}  // namespace

std::vector<ModPolynomial> factor_cyclotomic_mod_p(const Context& ctx, std::uint64_t seed) {
    if (ctx.n % ctx.p == 0) throw std::invalid_argument("factor_cyclotomic_mod_p: p divides n");
    IntPolynomial phi = cyclotomic_poly(static_cast<std::size_t>(ctx.n));
    ModPolynomial F = ModPolynomial::from_int_poly(phi, ctx.p);
    std::mt19937_64 rng(seed);
    std::vector<ModPolynomial> factors;
    equal_degree_split(F, ctx, rng, factors);
    std::sort(factors.begin(), factors.end());
    if (Int(factors.size()) != ctx.num_primes)
        throw std::logic_error("factor_cyclotomic_mod_p: wrong factor count");
    ModPolynomial prod(ctx.p, {1});
    for (const auto& f : factors) prod = prod * f;
    if (!(prod == F)) throw std::logic_error("factor_cyclotomic_mod_p: product check failed");
    return factors;
}

ModPolynomial hensel_lift(const ModPolynomial& f, const Context& ctx, unsigned N) {
    if (N == 0) throw std::invalid_argument("hensel_lift: N must be positive");
    if (f.modulus() != ctx.p || !f.is_monic())
        throw std::invalid_argument("hensel_lift: f must be monic mod p");
    IntPolynomial phi_z = cyclotomic_poly(static_cast<std::size_t>(ctx.n));
    ModPolynomial phi_p = ModPolynomial::from_int_poly(phi_z, ctx.p);
    auto [g0, r0] = phi_p.divmod_monic(f);
    if (!r0.is_zero()) throw std::invalid_argument("hensel_lift: f does not divide Phi_n mod p");
    if (N == 1) return f;

    // s*g + t*h = 1 mod p, h := f monic
    ExtGcd bez = poly_ext_gcd_mod_p(g0, f);
    if (bez.g.degree() != 0) throw std::logic_error("hensel_lift: factors not coprime mod p");

    unsigned level = 1;
    ModPolynomial h = f, g = g0, s = bez.s, t = bez.t;
    while (level < N) {
        unsigned next = std::min(2 * level, N);
        Int m = pow2_cap(ctx.p, next);
        ModPolynomial phi = ModPolynomial::from_int_poly(phi_z, m);
        ModPolynomial hh(m, h.coeffs()), gg(m, g.coeffs());
        ModPolynomial ss(m, s.coeffs()), tt(m, t.coeffs());

        ModPolynomial e = phi - gg * hh;
        auto [q, r] = (ss * e).divmod_monic(hh);
        ModPolynomial g_new = gg + tt * e + q * gg;
        ModPolynomial h_new = hh + r;

        ModPolynomial b = ss * g_new + tt * h_new - ModPolynomial(m, {1});
        auto [c, d2] = (ss * b).divmod_monic(h_new);
        ModPolynomial s_new = ss - d2;
        ModPolynomial t_new = tt - tt * b - c * g_new;

        h = h_new;
        g = g_new;
        s = s_new;
        t = t_new;
        level = next;
    }
    if (!h.is_monic() || h.degree() != f.degree())
        throw std::logic_error("hensel_lift: lift lost shape");
    // divisibility check mod p^N
    Int m = pow2_cap(ctx.p, N);
    ModPolynomial phi = ModPolynomial::from_int_poly(phi_z, m);
    if (!phi.divmod_monic(h).second.is_zero())
        throw std::logic_error("hensel_lift: lifted factor does not divide Phi_n");
    return h;
}

const PrimePtr& PrimeSet::by_factor(const std::vector<Int>& mod_p_coeffs) const {
    for (const auto& pr : primes) {
        if (pr->f_mod_p.coeffs() == mod_p_coeffs) return pr;
    }
    throw std::invalid_argument("PrimeSet::by_factor: no such factor");
}

PrimeSet make_prime_set(const Context& ctx, unsigned precision, std::uint64_t seed) {
    PrimeSet set;
    set.ctx = ctx;
    set.precision = precision;
    set.seed = seed;
    auto factors = factor_cyclotomic_mod_p(ctx, seed);
    unsigned label = 0;
    for (const auto& f : factors) {
        PrimeData pd;
        pd.ctx = ctx;
        pd.f_mod_p = f;
        pd.f_lift = hensel_lift(f, ctx, precision);
        pd.precision = precision;
        pd.label = label++;
        set.primes.push_back(std::make_shared<const PrimeData>(std::move(pd)));
    }
    return set;
}

namespace {

void check_same_prime(const LocalElement& a, const LocalElement& b) {
    if (a.prime != b.prime && !(a.prime->ctx.p == b.prime->ctx.p && a.prime->f_mod_p == b.prime->f_mod_p))
        throw std::invalid_argument("local op: PrimeData mismatch");
    if (a.level != b.level) throw std::invalid_argument("local op: precision level mismatch");
}

ModPolynomial lift_at_level(const PrimePtr& prime, unsigned level) {
    Int m = pow_int(prime->ctx.p, level);
    return prime->f_lift.reduced_mod(m);
}

}  // namespace

LocalElement local_make(const PrimePtr& prime, ModPolynomial poly, unsigned level) {
    if (level == 0 || level > prime->precision)
        throw std::invalid_argument("local_make: level out of range");
    ModPolynomial f = lift_at_level(prime, level);
    Int m = pow_int(prime->ctx.p, level);
    ModPolynomial reduced = ModPolynomial(m, poly.coeffs()).divmod_monic(f).second;
    return LocalElement{prime, std::move(reduced), level};
}

LocalElement local_zero(const PrimePtr& prime, unsigned level) {
    return local_make(prime, ModPolynomial(pow_int(prime->ctx.p, level), {}), level);
}

LocalElement local_one(const PrimePtr& prime, unsigned level) {
    return local_make(prime, ModPolynomial(pow_int(prime->ctx.p, level), {1}), level);
}

LocalElement local_gen(const PrimePtr& prime, unsigned level) {
    return local_make(prime, ModPolynomial::x_pow(pow_int(prime->ctx.p, level), 1), level);
}

LocalElement local_add(const LocalElement& a, const LocalElement& b) {
    check_same_prime(a, b);
    return LocalElement{a.prime, a.poly + b.poly, a.level};
}

LocalElement local_sub(const LocalElement& a, const LocalElement& b) {
    check_same_prime(a, b);
    return LocalElement{a.prime, a.poly - b.poly, a.level};
}

LocalElement local_mul(const LocalElement& a, const LocalElement& b) {
    check_same_prime(a, b);
    ModPolynomial f = lift_at_level(a.prime, a.level);
    return LocalElement{a.prime, a.poly.mul_mod(b.poly, f), a.level};
}

LocalElement local_pow(const LocalElement& a, Int e) {
    ModPolynomial f = lift_at_level(a.prime, a.level);
    return LocalElement{a.prime, a.poly.pow_mod(std::move(e), f), a.level};
}

ResidueElement residue(const LocalElement& a) {
    return ResidueElement{a.prime, a.poly.reduced_mod(a.prime->ctx.p)};
}

ResidueElement residue_mul(const ResidueElement& a, const ResidueElement& b) {
    return ResidueElement{a.prime, a.poly.mul_mod(b.poly, a.prime->f_mod_p)};
}

ResidueElement residue_pow(const ResidueElement& a, Int e) {
    return ResidueElement{a.prime, a.poly.pow_mod(std::move(e), a.prime->f_mod_p)};
}

ResidueElement residue_gen_pow(const PrimePtr& prime, const Int& k) {
    ModPolynomial x = ModPolynomial::x_pow(prime->ctx.p, 1);
    return ResidueElement{prime, x.pow_mod(mod_reduce(k, prime->ctx.n), prime->f_mod_p)};
}

namespace {

ResidueElement residue_inverse(const ResidueElement& a) {
    return residue_pow(a, a.prime->ctx.q - 2);
}

// Discrete log in the order-ell cyclic group generated by gamma, by
// baby-step/giant-step.
Int bsgs_prime_order(const ResidueElement& gamma, const ResidueElement& h, const Int& ell) {
    Int m = 1;
    while (m * m < ell) ++m;
    std::map<std::string, Int> baby;
    ResidueElement cur{gamma.prime, ModPolynomial(gamma.prime->ctx.p, {1})};
    for (Int j = 0; j < m; ++j) {
        baby.emplace(coeff_key(cur.poly), j);
        cur = residue_mul(cur, gamma);
    }
    ResidueElement giant = residue_inverse(residue_pow(gamma, m));
    ResidueElement y = h;
    for (Int i = 0; i * m <= ell; ++i) {
        auto it = baby.find(coeff_key(y.poly));
        if (it != baby.end()) return mod_reduce(i * m + it->second, ell);
        y = residue_mul(y, giant);
    }
    throw std::logic_error("bsgs: no solution (element outside subgroup?)");
}

Int dlog_pohlig_hellman(const ResidueElement& b) {
    const Int n = b.prime->ctx.n;
    ResidueElement g = residue_gen_pow(b.prime, 1);
    std::vector<Int> residues, moduli;
    for (const auto& [ell, e] : factorize(n)) {
        Int pe = pow_int(ell, e);
        ResidueElement g_i = residue_pow(g, n / pe);
        ResidueElement h_i = residue_pow(b, n / pe);
        ResidueElement gamma = residue_pow(g_i, pow_int(ell, e - 1));  // order ell
        Int x = 0;
        ResidueElement g_i_inv = residue_inverse(g_i);
        for (unsigned k = 0; k < e; ++k) {
            ResidueElement target = residue_mul(h_i, residue_pow(g_i_inv, x));
            target = residue_pow(target, pow_int(ell, e - 1 - k));
            Int digit = bsgs_prime_order(gamma, target, ell);
            x += digit * pow_int(ell, k);
        }
        residues.push_back(x);
        moduli.push_back(pe);
    }
    // CRT
    Int x = 0, M = 1;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        Int mi = moduli[i];
        Int delta = mod_reduce(residues[i] - x, mi);
        Int add = delta * mod_inverse(M % mi, mi) % mi;
        x += M * add;
        M *= mi;
    }
    return mod_reduce(x, n);
}

}  // namespace

std::optional<Int> dlog(const ResidueElement& b, bool force_pohlig_hellman) {
    if (b.is_zero()) return std::nullopt;
    const Int n = b.prime->ctx.n;
    if (n < 65536 && !force_pohlig_hellman) {
        ResidueElement g = residue_gen_pow(b.prime, 1);
        ResidueElement acc{b.prime, ModPolynomial(b.prime->ctx.p, {1})};
        for (Int j = 0; j < n; ++j) {
            if (acc.poly == b.poly) return j;
            acc = residue_mul(acc, g);
        }
        throw std::logic_error("dlog: generator does not reach element");
    }
    return dlog_pohlig_hellman(b);
}

LocalElement teichmuller_lift_oracle(const ResidueElement& b, unsigned N) {
    Int m = pow_int(b.prime->ctx.p, N);
    LocalElement t = local_make(b.prime, ModPolynomial(m, b.poly.coeffs()), N);
    for (unsigned i = 0; i <= N + 1; ++i) {
        LocalElement next = local_pow(t, b.prime->ctx.q);
        if (next.poly == t.poly) return t;
        t = next;
    }
    throw std::logic_error("teichmuller_lift_oracle: no fixed point within N+1 iterations");
}

std::string mod_poly_to_json(const ModPolynomial& f) {
    nlohmann::json j;
    j["modulus"] = f.modulus().str();
    nlohmann::json c = nlohmann::json::array();
    for (const Int& x : f.coeffs()) c.push_back(x.str());
    j["coeffs"] = c;
    return j.dump();
}

ModPolynomial mod_poly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Int modulus(j.at("modulus").get<std::string>());
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return ModPolynomial(modulus, std::move(coeffs));
}

Int gcd_power_identity(const Int& m, unsigned a, unsigned b) {
    if (m < 2) throw std::invalid_argument("gcd_power_identity: m must be >= 2");
    if (a == 0 || b == 0) throw std::invalid_argument("gcd_power_identity: a, b must be positive");
    Int lhs = gcd(Int(pow_int(m, a) - 1), Int(pow_int(m, b) - 1));
    Int rhs = pow_int(m, std::gcd(a, b)) - 1;
    if (lhs != rhs) throw std::logic_error("gcd_power_identity: identity violated");
    return lhs;
}

}  // namespace teichlab
