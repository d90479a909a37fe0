// SPDX-License-Identifier: Apache-2.0

#ifndef TEICHLAB_PATTERNS_HPP
#define TEICHLAB_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "teichlab/affine.hpp"
#include "teichlab/teich.hpp"

namespace teichlab {

/// The invariants (u, v) of an order-k element sigma*x + b: the digitwise
/// product over the k conjugate primes of a stabilized element equals
/// zeta^(u*j + v*b) where zeta^j is the base digit.
struct CollusionInvariants {
    Int sigma;
    Int b;
    Int k;
    Int u;
    Int v;
};

/// CRT-derived invariants. u and v are pinned only modulo u_modulus and
/// v_modulus (products of the prime-power moduli the local characterization
/// determines); the stored values are canonical residues at those moduli.
struct CrtCollusionInvariants {
    CollusionInvariants inv;
    Int u_modulus;
    Int v_modulus;
};

enum class Phenomenon { Equivariance, Permutation, Restricted, Collusion, OrbitSize };

struct ConspiracyReport {
    Phenomenon phenomenon = Phenomenon::Equivariance;
    ExponentSum element;
    std::string witness;                    // affine element(s), rendered
    std::vector<std::string> prime_factors; // involved primes by mod-p factor
    unsigned verified_digits = 0;
    bool confirmed = false;
    std::optional<unsigned> failing_index;
    std::optional<Int> product_exponent;    // constant product, when applicable
    std::optional<std::size_t> orbit_size;
};

// Theorem-level check: the image of every digit of alpha at p under g equals
// the corresponding digit of g(alpha) at the Galois image of p.
ConspiracyReport verify_equivariance(const ExponentSum& alpha, const AffineElement& g,
                                     const PrimeSet& primes, const PrimePtr& prime, unsigned N);

// Same-prime digit permutation for g in Aff(H_p).
ConspiracyReport verify_permutation_conspiracy(const ExponentSum& alpha, const AffineElement& g,
                                               const PrimeSet& primes, const PrimePtr& prime,
                                               unsigned N);

// Digits of a g-stabilized element lie in the fixed-point set of g = p^c x + b.
ConspiracyReport verify_restricted_coefficients(const ExponentSum& alpha, unsigned c, const Int& b,
                                                const PrimePtr& prime, unsigned N);

CollusionInvariants collusion_uv_direct(const Int& sigma, const Int& b, const Int& n);
CrtCollusionInvariants collusion_uv_crt(const Int& sigma, const Int& b, const Int& n);

// Digitwise product over the k conjugate primes equals zeta^(u*j + v*b); zero
// digits are synchronized across the conjugates.
ConspiracyReport verify_collusion(const ExponentSum& alpha, const AffineElement& g,
                                  const PrimeSet& primes, const PrimePtr& prime, unsigned N);

// Specialization for alpha = zeta^a1 + zeta^a2 with g = -x + a1 + a2;
// constant product zeta^(a1+a2).
ConspiracyReport verify_pair_collusion(const Int& a1, const Int& a2, const PrimeSet& primes,
                                       const PrimePtr& prime, unsigned N);

struct SixPrimeReport {
    ConspiracyReport full_product;
    std::vector<ConspiracyReport> pair_products;
};

// q = 2^6 products: the full product over all six primes and the products over
// the sigma = -1 pairing.
SixPrimeReport six_prime_product(const ExponentSum& alpha, const PrimeSet& primes, unsigned N);

// Orchestrator: stabilizers in Aff(H_p) and Aff(n), phenomenon predictions
// verified against expansions at every prime, plus the Aff(H_p) orbit size.
std::vector<ConspiracyReport> detect(const ExponentSum& alpha, const PrimeSet& primes, unsigned N);

std::string phenomenon_name(Phenomenon ph);
nlohmann::json report_to_json(const ConspiracyReport& r);

}  // namespace teichlab

#endif
