// SPDX-License-Identifier: Apache-2.0

#include "teichlab/patterns.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace teichlab {

namespace {

bool sigma_in_hp(const Int& sigma, const Context& ctx) {
    Int s = 1;
    for (unsigned c = 0; c < ctx.d; ++c) {
        if (s == mod_reduce(sigma, ctx.n)) return true;
        s = s * ctx.p % ctx.n;
    }
    return false;
}

// c with p^c = sigma mod n, for sigma in H_p
unsigned hp_exponent(const Int& sigma, const Context& ctx) {
    Int s = 1;
    for (unsigned c = 0; c < ctx.d; ++c) {
        if (s == mod_reduce(sigma, ctx.n)) return c;
        s = s * ctx.p % ctx.n;
    }
    throw std::invalid_argument("hp_exponent: sigma not in H_p");
}

std::string factor_string(const PrimePtr& prime) { return prime->f_mod_p.to_string(); }

}  // namespace

ConspiracyReport verify_equivariance(const ExponentSum& alpha, const AffineElement& g,
                                     const PrimeSet& primes, const PrimePtr& prime, unsigned N) {
    ConspiracyReport rep;
    rep.phenomenon = Phenomenon::Equivariance;
    rep.element = alpha;
    rep.witness = g.to_string();
    rep.verified_digits = N;
    PrimePtr image_prime = galois_image_of_prime(primes, prime, g.sigma);
    rep.prime_factors = {factor_string(prime), factor_string(image_prime)};
    TeichExpansion base = expand(alpha, prime, N);
    TeichExpansion image = expand(act(g, alpha), image_prime, N);
    rep.confirmed = true;
    for (unsigned m = 0; m < N; ++m) {
        if (!(act_on_digit(g, base.digits[m]) == image.digits[m])) {
            rep.confirmed = false;
            rep.failing_index = m;
            break;
        }
    }
    return rep;
}

ConspiracyReport verify_permutation_conspiracy(const ExponentSum& alpha, const AffineElement& g,
                                               const PrimeSet& primes, const PrimePtr& prime,
                                               unsigned N) {
    if (!sigma_in_hp(g.sigma, primes.ctx))
        throw std::invalid_argument("verify_permutation_conspiracy: g not in Aff(H_p)");
    ConspiracyReport rep;
    rep.phenomenon = Phenomenon::Permutation;
    rep.element = alpha;
    rep.witness = g.to_string();
    rep.prime_factors = {factor_string(prime)};
    rep.verified_digits = N;
    TeichExpansion base = expand(alpha, prime, N);
    TeichExpansion image = expand(act(g, alpha), prime, N);
    rep.confirmed = true;
    for (unsigned m = 0; m < N; ++m) {
        if (!(act_on_digit(g, base.digits[m]) == image.digits[m])) {
            rep.confirmed = false;
            rep.failing_index = m;
            break;
        }
    }
    return rep;
}

ConspiracyReport verify_restricted_coefficients(const ExponentSum& alpha, unsigned c, const Int& b,
                                                const PrimePtr& prime, unsigned N) {
    const Context& ctx = prime->ctx;
    AffineElement g = AffineElement::make(pow_mod(ctx.p, c, ctx.n), b, ctx.n);
    if (!ring_equal(act(g, alpha), alpha, ctx))
        throw std::invalid_argument("verify_restricted_coefficients: g does not stabilize alpha");
    ConspiracyReport rep;
    rep.phenomenon = Phenomenon::Restricted;
    rep.element = alpha;
    rep.witness = g.to_string();
    rep.prime_factors = {factor_string(prime)};
    rep.verified_digits = N;
    std::set<TeichDigit> allowed = fixed_points(c, b, ctx);
    bool alpha_nonzero = !exp_sum_to_ring(alpha, ctx).is_zero();
    if (alpha_nonzero) {
        unsigned cd = c == 0 ? ctx.d : std::gcd(c, ctx.d);
        Int pg = pow_int(ctx.p, cd);
        if (mod_reduce(b, ctx.n) % (pg - 1) != 0)
            throw std::logic_error("verify_restricted_coefficients: divisibility p^(c,d)-1 | b fails");
        if (Int(allowed.size()) != pg)
            throw std::logic_error("verify_restricted_coefficients: fixed-point count is not p^(c,d)");
    }
    TeichExpansion e = expand(alpha, prime, N);
    rep.confirmed = true;
    for (unsigned m = 0; m < N; ++m) {
        if (allowed.find(e.digits[m]) == allowed.end()) {
            rep.confirmed = false;
            rep.failing_index = m;
            break;
        }
    }
    return rep;
}

CollusionInvariants collusion_uv_direct(const Int& sigma, const Int& b, const Int& n) {
    AffineElement g = AffineElement::make(sigma, b, n);
    Int k = order(g);
    Int u = 0, v = 0;
    Int pow = 1;  // sigma^i
    Int partial = 0;  // sum_{0 <= j < i} sigma^j
    for (Int i = 0; i < k; ++i) {
        u = mod_reduce(u + pow, n);
        v = mod_reduce(v + partial, n);
        partial = mod_reduce(partial + pow, n);
        pow = pow * mod_reduce(sigma, n) % n;
    }
    return CollusionInvariants{mod_reduce(sigma, n), mod_reduce(b, n), k, u, v};
}

CrtCollusionInvariants collusion_uv_crt(const Int& sigma, const Int& b, const Int& n) {
    CollusionInvariants direct = collusion_uv_direct(sigma, b, n);
    const Int k = direct.k;
    const Int s = direct.sigma;

    struct Pin {
        Int residue;
        Int modulus;
    };
    std::vector<Pin> u_pins, v_pins;
    for (const auto& [ell, e] : factorize(n)) {
        Int le = pow_int(ell, e);
        if (mod_reduce(s, le) == 1) {
            u_pins.push_back({mod_reduce(k, le), le});
            v_pins.push_back({mod_reduce(k * (k - 1) / 2, le), le});
        } else {
            Int a = mod_reduce(1 - s, le);  // nonzero mod ell^e
            unsigned val = 0;
            Int aa = a;
            while (aa % ell == 0) {
                aa /= ell;
                ++val;
            }
            Int lr = pow_int(ell, e - val);  // r = e - v_ell(1 - sigma)
            u_pins.push_back({0, lr});
            // solve (1 - sigma) v = k mod ell^r
            Int A = mod_reduce(1 - s, lr);
            Int g0 = gcd(A, lr);
            if (mod_reduce(k, lr) % g0 != 0)
                throw std::logic_error("collusion_uv_crt: v congruence unsolvable");
            Int m2 = lr / g0;
            if (m2 > 1) {
                Int vres = mod_reduce(k, lr) / g0 * mod_inverse(A / g0, m2) % m2;
                v_pins.push_back({vres, m2});
            }
        }
    }
    auto combine = [](const std::vector<Pin>& pins) {
        Int x = 0, M = 1;
        for (const auto& pin : pins) {
            if (pin.modulus == 1) continue;
            Int delta = mod_reduce(pin.residue - x, pin.modulus);
            Int add = delta * mod_inverse(M % pin.modulus, pin.modulus) % pin.modulus;
            x += M * add;
            M *= pin.modulus;
        }
        return std::pair<Int, Int>(x, M);
    };
    auto [u, Mu] = combine(u_pins);
    auto [v, Mv] = combine(v_pins);
    if (mod_reduce(direct.u, Mu) != u)
        throw std::logic_error("collusion_uv_crt: u disagrees with direct summation");
    if (mod_reduce(direct.v, Mv) != v)
        throw std::logic_error("collusion_uv_crt: v disagrees with direct summation");
    CrtCollusionInvariants out;
    out.inv = CollusionInvariants{direct.sigma, direct.b, k, u, v};
    out.u_modulus = Mu;
    out.v_modulus = Mv;
    return out;
}

ConspiracyReport verify_collusion(const ExponentSum& alpha, const AffineElement& g,
                                  const PrimeSet& primes, const PrimePtr& prime, unsigned N) {
    const Context& ctx = primes.ctx;
    if (!ring_equal(act(g, alpha), alpha, ctx))
        throw std::invalid_argument("verify_collusion: g does not stabilize alpha");
    CollusionInvariants uv = collusion_uv_direct(g.sigma, g.b, ctx.n);
    ConspiracyReport rep;
    rep.phenomenon = Phenomenon::Collusion;
    rep.element = alpha;
    rep.witness = g.to_string();
    rep.verified_digits = N;

    // the k conjugate primes p^(sigma^i)
    std::vector<PrimePtr> conjugates;
    PrimePtr cur = prime;
    for (Int i = 0; i < uv.k; ++i) {
        conjugates.push_back(cur);
        rep.prime_factors.push_back(factor_string(cur));
        cur = galois_image_of_prime(primes, cur, g.sigma);
    }
    std::vector<TeichExpansion> exps;
    exps.reserve(conjugates.size());
    for (const auto& pr : conjugates) exps.push_back(expand(alpha, pr, N));

    rep.confirmed = true;
    std::optional<Int> constant;
    bool constant_ok = true;
    for (unsigned m = 0; m < N && rep.confirmed; ++m) {
        bool base_zero = exps[0].digits[m].is_zero();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i].digits[m].is_zero() != base_zero) {
                rep.confirmed = false;
                rep.failing_index = m;
                break;
            }
        }
        if (!rep.confirmed || base_zero) continue;
        Int j = *exps[0].digits[m].exp;
        Int prod = 0;
        for (const auto& e : exps) prod = mod_reduce(prod + *e.digits[m].exp, ctx.n);
        Int predicted = mod_reduce(uv.u * j + uv.v * uv.b, ctx.n);
        if (prod != predicted) {
            rep.confirmed = false;
            rep.failing_index = m;
            break;
        }
        if (!constant) constant = prod;
        else if (*constant != prod) constant_ok = false;
    }
    if (rep.confirmed && constant && constant_ok) rep.product_exponent = constant;
    return rep;
}

ConspiracyReport verify_pair_collusion(const Int& a1, const Int& a2, const PrimeSet& primes,
                                       const PrimePtr& prime, unsigned N) {
    const Context& ctx = primes.ctx;
    if (mod_reduce(a1, ctx.n) == mod_reduce(a2, ctx.n))
        throw std::invalid_argument("verify_pair_collusion: exponents must be distinct mod n");
    ExponentSum alpha = ExponentSum::roots(ctx.n, {a1, a2});
    AffineElement g = AffineElement::make(-1, a1 + a2, ctx.n);
    ConspiracyReport rep = verify_collusion(alpha, g, primes, prime, N);
    Int expected = mod_reduce(a1 + a2, ctx.n);
    if (rep.confirmed && rep.product_exponent && *rep.product_exponent != expected) {
        rep.confirmed = false;
    }
    return rep;
}

SixPrimeReport six_prime_product(const ExponentSum& alpha, const PrimeSet& primes, unsigned N) {
    const Context& ctx = primes.ctx;
    if (ctx.n != 63) throw std::invalid_argument("six_prime_product: requires n = 63");
    std::vector<TeichExpansion> exps;
    for (const auto& pr : primes.primes) exps.push_back(expand(alpha, pr, N));

    SixPrimeReport out;
    ConspiracyReport& full = out.full_product;
    full.phenomenon = Phenomenon::Collusion;
    full.element = alpha;
    full.witness = "product over all primes";
    for (const auto& pr : primes.primes) full.prime_factors.push_back(factor_string(pr));
    full.verified_digits = N;
    full.confirmed = true;
    std::optional<Int> constant;
    for (unsigned m = 0; m < N; ++m) {
        bool any_zero = false;
        Int prod = 0;
        for (const auto& e : exps) {
            if (e.digits[m].is_zero()) {
                any_zero = true;
                break;
            }
            prod = mod_reduce(prod + *e.digits[m].exp, ctx.n);
        }
        if (any_zero) continue;
        if (!constant) constant = prod;
        else if (*constant != prod) {
            full.confirmed = false;
            full.failing_index = m;
            break;
        }
    }
    if (full.confirmed) full.product_exponent = constant;

    // pairing induced by sigma = -1, recomputed from the Galois action
    std::vector<bool> done(primes.primes.size(), false);
    for (std::size_t i = 0; i < primes.primes.size(); ++i) {
        if (done[i]) continue;
        PrimePtr partner = galois_image_of_prime(primes, primes.primes[i], Int(-1));
        std::size_t j = partner->label;
        done[i] = true;
        done[j] = true;
        ConspiracyReport pr;
        pr.phenomenon = Phenomenon::Collusion;
        pr.element = alpha;
        pr.witness = "sigma = -1 pairing";
        pr.prime_factors = {factor_string(primes.primes[i]), factor_string(partner)};
        pr.verified_digits = N;
        pr.confirmed = true;
        std::optional<Int> pconst;
        for (unsigned m = 0; m < N; ++m) {
            const TeichDigit& da = exps[i].digits[m];
            const TeichDigit& db = exps[j].digits[m];
            if (da.is_zero() != db.is_zero()) {
                pr.confirmed = false;
                pr.failing_index = m;
                break;
            }
            if (da.is_zero()) continue;
            Int prod = mod_reduce(*da.exp + *db.exp, ctx.n);
            if (!pconst) pconst = prod;
            else if (*pconst != prod) {
                pr.confirmed = false;
                pr.failing_index = m;
                break;
            }
        }
        if (pr.confirmed) pr.product_exponent = pconst;
        out.pair_products.push_back(std::move(pr));
    }
    return out;
}

std::vector<ConspiracyReport> detect(const ExponentSum& alpha, const PrimeSet& primes, unsigned N) {
    const Context& ctx = primes.ctx;
    std::vector<ConspiracyReport> reports;

    OrbitResult hp = orbit_stabilizer(alpha, AffineSubgroup::aff_hp(ctx), ctx);
    ConspiracyReport orb;
    orb.phenomenon = Phenomenon::OrbitSize;
    orb.element = alpha;
    orb.witness = "Aff(H_p)";
    orb.verified_digits = 0;
    orb.confirmed = true;
    orb.orbit_size = hp.orbit.size();
    reports.push_back(std::move(orb));

    AffineSubgroup full_stab = stabilizer(alpha, AffineSubgroup::full(ctx.n), ctx);

    std::vector<AffineElement> witnesses;
    for (const auto& g : full_stab.elements)
        if (!g.is_identity()) witnesses.push_back(g);
    std::sort(witnesses.begin(), witnesses.end(),
              [](const AffineElement& a, const AffineElement& b) { return a.to_string() < b.to_string(); });

    for (const auto& g : witnesses) {
        for (const auto& pr : primes.primes) {
            if (sigma_in_hp(g.sigma, ctx)) {
                unsigned c = hp_exponent(g.sigma, ctx);
                reports.push_back(verify_restricted_coefficients(alpha, c, g.b, pr, N));
            }
            reports.push_back(verify_collusion(alpha, g, primes, pr, N));
        }
    }
    return reports;
}

std::string phenomenon_name(Phenomenon ph) {
    switch (ph) {
        case Phenomenon::Equivariance: return "equivariance";
        case Phenomenon::Permutation: return "permutation";
        case Phenomenon::Restricted: return "restricted";
        case Phenomenon::Collusion: return "collusion";
        case Phenomenon::OrbitSize: return "orbit";
    }
    return "unknown";
}

nlohmann::json report_to_json(const ConspiracyReport& r) {
    nlohmann::json j;
    j["phenomenon"] = phenomenon_name(r.phenomenon);
    nlohmann::json element = nlohmann::json::object();
    for (const auto& [a, c] : r.element.terms()) element[a.str()] = c.str();
    j["element"] = element;
    j["witness"] = r.witness;
    j["primes"] = r.prime_factors;
    j["digits"] = r.verified_digits;
    j["outcome"] = r.confirmed ? "confirmed" : "refuted";
    if (r.failing_index) j["failing_index"] = *r.failing_index;
    if (r.product_exponent) j["product_exponent"] = r.product_exponent->str();
    if (r.orbit_size) j["orbit_size"] = *r.orbit_size;
    return j;
}

}  // namespace teichlab
