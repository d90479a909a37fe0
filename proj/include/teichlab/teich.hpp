// SPDX-License-Identifier: Apache-2.0

#ifndef TEICHLAB_TEICH_HPP
#define TEICHLAB_TEICH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "teichlab/local.hpp"

namespace teichlab {

/// One coefficient of a Teichmuller expansion: 0 or zeta^j.
struct TeichDigit {
    std::optional<Int> exp;  // nullopt == Zero

    static TeichDigit zero() { return {}; }
    static TeichDigit root(Int j) { return {std::move(j)}; }

    bool is_zero() const { return !exp.has_value(); }

    bool operator==(const TeichDigit& o) const { return exp == o.exp; }
    bool operator<(const TeichDigit& o) const {
        if (is_zero() != o.is_zero()) return is_zero();
        if (is_zero()) return false;
        return *exp < *o.exp;
    }

    std::string to_string(bool ascii = false) const;
};

struct TeichExpansion {
    ExponentSum element;
    PrimePtr prime;
    std::vector<TeichDigit> digits;
    unsigned precision = 0;  // N
};

// alpha as an element of R at the prime's full precision.
LocalElement embed(const ExponentSum& alpha, const PrimePtr& prime);
LocalElement embed(const ExponentSum& alpha, const PrimePtr& prime, unsigned level);

// First N digits of the expansion of alpha at the prime. Every digit is
// cross-checked against the Frobenius-iteration lift of its residue.
TeichExpansion expand(const ExponentSum& alpha, const PrimePtr& prime, unsigned N);

// Sum digit_m * p^m equals the image of the element in R mod p^N.
bool reconstruct_check(const TeichExpansion& exp);

struct DigitStats {
    unsigned total = 0;
    std::map<TeichDigit, unsigned> counts;  // absent digits have count 0

    unsigned count(const TeichDigit& d) const;
    // percentage as integer tenths (count/total*1000, round-half-up)
    unsigned percent_tenths(const TeichDigit& d) const;
};

DigitStats digit_stats(const ExponentSum& alpha, const PrimePtr& prime, unsigned N);

std::string render_expansion(const TeichExpansion& exp, bool ascii = false);

nlohmann::json expansion_to_json(const TeichExpansion& exp);
// Requires the matching PrimeSet to resolve the factor reference.
TeichExpansion expansion_from_json(const nlohmann::json& j, const PrimeSet& primes);

}  // namespace teichlab

#endif
