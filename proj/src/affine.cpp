// SPDX-License-Identifier: Apache-2.0

#include "teichlab/affine.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace teichlab {

AffineElement AffineElement::make(const Int& sigma, const Int& b, const Int& n) {
    if (n < 1) throw std::invalid_argument("AffineElement: n must be positive");
    Int s = mod_reduce(sigma, n);
    if (gcd(s, n) != 1) throw std::invalid_argument("AffineElement: sigma must be a unit mod n");
    return AffineElement{s, mod_reduce(b, n), n};
}

AffineElement AffineElement::identity(const Int& n) { return make(1, 0, n); }

std::string AffineElement::to_string() const {
    std::ostringstream os;
    if (sigma != 1) os << sigma;
    os << "x";
    if (b != 0) os << "+" << b;
    return os.str();
}

AffineElement parse_affine(const std::string& text, const Int& n) {
    // accepts "σx+b", "σx-b", "x+b", "σx", "x"
    auto xpos = text.find('x');
    if (xpos == std::string::npos) throw std::invalid_argument("parse_affine: missing 'x'");
    std::string spart = text.substr(0, xpos);
    std::string bpart = text.substr(xpos + 1);
    Int sigma = 1;
    if (!spart.empty() && spart != "+") {
        if (spart == "-") sigma = -1;
        else sigma = Int(spart);
    }
    Int b = 0;
    if (!bpart.empty()) {
        if (bpart[0] == '+') bpart = bpart.substr(1);
        b = Int(bpart);
    }
    return AffineElement::make(sigma, b, n);
}

AffineElement compose(const AffineElement& g1, const AffineElement& g2) {
    if (g1.n != g2.n) throw std::invalid_argument("compose: modulus mismatch");
    return AffineElement::make(g1.sigma * g2.sigma, g1.sigma * g2.b + g1.b, g1.n);
}

AffineElement inverse(const AffineElement& g) {
    Int si = mod_inverse(g.sigma, g.n);
    return AffineElement::make(si, -si * g.b, g.n);
}

Int order(const AffineElement& g) {
    AffineElement id = AffineElement::identity(g.n);
    AffineElement acc = g;
    Int k = 1;
    Int cap = g.n * euler_phi(g.n);
    while (!(acc == id)) {
        acc = compose(g, acc);
        ++k;
        if (k > cap) throw std::logic_error("order: cap exceeded");
    }
    return k;
}

ExponentSum act(const AffineElement& g, const ExponentSum& alpha) {
    if (g.n != alpha.modulus()) throw std::invalid_argument("act: modulus mismatch");
    ExponentSum out(g.n);
    for (const auto& [a, c] : alpha.terms()) out.add_term(g.sigma * a + g.b, c);
    return out;
}

TeichDigit act_on_digit(const AffineElement& g, const TeichDigit& digit) {
    if (digit.is_zero()) return digit;
    return TeichDigit::root(mod_reduce(g.sigma * *digit.exp + g.b, g.n));
}

AffineSubgroup AffineSubgroup::full(const Int& n) {
    AffineSubgroup G;
    G.kind = Kind::Full;
    G.n = n;
    if (n == 1) {
        G.elements.push_back(AffineElement::identity(n));
        return G;
    }
    for (Int s = 1; s < n; ++s) {
        if (gcd(s, n) != 1) continue;
        for (Int b = 0; b < n; ++b) G.elements.push_back(AffineElement{s, b, n});
    }
    return G;
}

AffineSubgroup AffineSubgroup::aff_hp(const Context& ctx) {
    AffineSubgroup G;
    G.kind = Kind::AffHp;
    G.n = ctx.n;
    std::set<Int> sigmas;
    Int s = 1;
    for (unsigned c = 0; c < ctx.d; ++c) {
        sigmas.insert(s);
        s = s * ctx.p % ctx.n;
    }
    for (const Int& sig : sigmas)
        for (Int b = 0; b < ctx.n; ++b) G.elements.push_back(AffineElement{sig, b, ctx.n});
    return G;
}

AffineSubgroup AffineSubgroup::cyclic(const AffineElement& generator) {
    AffineSubgroup G;
    G.kind = Kind::Cyclic;
    G.n = generator.n;
    AffineElement acc = AffineElement::identity(generator.n);
    do {
        G.elements.push_back(acc);
        acc = compose(generator, acc);
    } while (!acc.is_identity());
    return G;
}

bool AffineSubgroup::contains(const AffineElement& g) const {
    for (const auto& e : elements)
        if (e == g) return true;
    return false;
}

OrbitResult orbit_stabilizer(const ExponentSum& alpha, const AffineSubgroup& G, const Context& ctx) {
    constexpr std::size_t kSizeCap = 1u << 20;
    if (G.size() > kSizeCap) throw std::invalid_argument("orbit_stabilizer: group too large");
    OrbitResult out;
    out.stabilizer.kind = AffineSubgroup::Kind::Subset;
    out.stabilizer.n = G.n;
    std::map<std::vector<Int>, ExponentSum> seen;
    IntPolynomial alpha_ring = exp_sum_to_ring(alpha, ctx);
    for (const auto& g : G.elements) {
        ExponentSum image = act(g, alpha);
        IntPolynomial key = exp_sum_to_ring(image, ctx);
        if (key == alpha_ring) out.stabilizer.elements.push_back(g);
        seen.emplace(key.coeffs(), image);
    }
    for (auto& [k, v] : seen) out.orbit.push_back(v);
    if (out.orbit.size() * out.stabilizer.size() != G.size())
        throw std::logic_error("orbit_stabilizer: orbit-stabilizer identity violated");
    return out;
}

std::vector<ExponentSum> orbit(const ExponentSum& alpha, const AffineSubgroup& G, const Context& ctx) {
    return orbit_stabilizer(alpha, G, ctx).orbit;
}

AffineSubgroup stabilizer(const ExponentSum& alpha, const AffineSubgroup& G, const Context& ctx) {
    return orbit_stabilizer(alpha, G, ctx).stabilizer;
}

std::set<TeichDigit> fixed_points(unsigned c, const Int& b, const Context& ctx) {
    const Int n = ctx.n;
    Int bb = mod_reduce(b, n);
    std::set<TeichDigit> closed;
    closed.insert(TeichDigit::zero());
    // nonzero fixed points: solutions of (p^c - 1) a + b = 0 mod n; there are
    // g = p^gcd(c,d) - 1 of them exactly when g | b
    unsigned cd = c == 0 ? ctx.d : std::gcd(c, ctx.d);
    Int g = pow_int(ctx.p, cd) - 1;
    Int pc1 = mod_reduce(pow_mod(ctx.p, c, n) - 1, n);
    if (bb % g == 0) {
        Int n_g = n / g;
        Int a0;
        if (pc1 == 0) {
            // identity multiplier: fixed iff b == 0, then everything is fixed
            if (bb != 0) {
                // g | b forced b to be a multiple of n here; unreachable unless b == 0
                throw std::logic_error("fixed_points: inconsistent closed form");
            }
            a0 = 0;
        } else {
            a0 = mod_reduce(-(bb / g) * mod_inverse(pc1 / g % n_g, n_g), n_g);
        }
        for (Int t = 0; t < g; ++t) closed.insert(TeichDigit::root(mod_reduce(a0 + t * n_g, n)));
    }
    // brute-force cross-check
    std::set<TeichDigit> brute;
    brute.insert(TeichDigit::zero());
    for (Int a = 0; a < n; ++a) {
        if (mod_reduce(pc1 * a + bb, n) == 0) brute.insert(TeichDigit::root(a));
    }
    if (closed != brute) throw std::logic_error("fixed_points: closed form disagrees with scan");
    return closed;
}

PrimePtr galois_image_of_prime(const PrimeSet& primes, const PrimePtr& prime, const Int& sigma) {
    const Int n = primes.ctx.n;
    Int si = mod_inverse(mod_reduce(sigma, n), n);
    ResidueElement root = residue_gen_pow(prime, si);
    PrimePtr found;
    for (const auto& cand : primes.primes) {
        // evaluate cand's factor at x-bar^(sigma^-1) inside F_q = F_p[x]/(f)
        ResidueElement acc{prime, ModPolynomial(primes.ctx.p, {})};
        ResidueElement power{prime, ModPolynomial(primes.ctx.p, {1})};
        for (std::size_t i = 0; i < cand->f_mod_p.coeffs().size(); ++i) {
            const Int& ci = cand->f_mod_p.coeffs()[i];
            if (ci != 0) {
                ResidueElement term{prime, ModPolynomial(primes.ctx.p, {ci}).mul_mod(power.poly, prime->f_mod_p)};
                acc = ResidueElement{prime, acc.poly + term.poly};
            }
            power = residue_mul(power, root);
        }
        if (acc.is_zero()) {
            if (found) throw std::logic_error("galois_image_of_prime: multiple factors vanish");
            found = cand;
        }
    }
    if (!found) throw std::logic_error("galois_image_of_prime: no factor vanishes");
    return found;
}

}  // namespace teichlab
