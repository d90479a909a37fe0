// SPDX-License-Identifier: Apache-2.0

#ifndef TEICHLAB_AFFINE_HPP
#define TEICHLAB_AFFINE_HPP

#include <set>
#include <string>
#include <vector>

#include "teichlab/local.hpp"
#include "teichlab/teich.hpp"

namespace teichlab {

/// The map x -> sigma*x + b on Z/n, gcd(sigma, n) = 1.
struct AffineElement {
    Int sigma;
    Int b;
    Int n;

    static AffineElement make(const Int& sigma, const Int& b, const Int& n);
    static AffineElement identity(const Int& n);

    bool is_identity() const { return b == 0 && (sigma == 1 || n == 1); }
    bool operator==(const AffineElement& o) const {
        return sigma == o.sigma && b == o.b && n == o.n;
    }
    bool operator<(const AffineElement& o) const {
        if (sigma != o.sigma) return sigma < o.sigma;
        return b < o.b;
    }

    std::string to_string() const;  // "σx+b"
};

AffineElement parse_affine(const std::string& text, const Int& n);

AffineElement compose(const AffineElement& g1, const AffineElement& g2);
AffineElement inverse(const AffineElement& g);
Int order(const AffineElement& g);

ExponentSum act(const AffineElement& g, const ExponentSum& alpha);
TeichDigit act_on_digit(const AffineElement& g, const TeichDigit& digit);

struct AffineSubgroup {
    enum class Kind { Full, AffHp, Cyclic, Subset };
    Kind kind = Kind::Subset;
    Int n;
    std::vector<AffineElement> elements;

    static AffineSubgroup full(const Int& n);
    static AffineSubgroup aff_hp(const Context& ctx);
    static AffineSubgroup cyclic(const AffineElement& generator);

    std::size_t size() const { return elements.size(); }
    bool is_trivial() const { return elements.size() == 1; }
    bool contains(const AffineElement& g) const;
};

struct OrbitResult {
    std::vector<ExponentSum> orbit;  // distinct up to ring equality
    AffineSubgroup stabilizer;
};

// Orbit and stabilizer of alpha under G, with ring-level equality.
// Asserts |orbit| * |stabilizer| = |G|.
OrbitResult orbit_stabilizer(const ExponentSum& alpha, const AffineSubgroup& G, const Context& ctx);

std::vector<ExponentSum> orbit(const ExponentSum& alpha, const AffineSubgroup& G, const Context& ctx);
AffineSubgroup stabilizer(const ExponentSum& alpha, const AffineSubgroup& G, const Context& ctx);

// Fixed digits of p^c x + b in mu_{q-1} union {0}, by closed form, asserted
// against a brute-force scan.
std::set<TeichDigit> fixed_points(unsigned c, const Int& b, const Context& ctx);

// The prime whose factor vanishes at x-bar^(sigma^-1), i.e. the image of the
// given prime under the Galois element sigma.
PrimePtr galois_image_of_prime(const PrimeSet& primes, const PrimePtr& prime, const Int& sigma);

}  // namespace teichlab

#endif
