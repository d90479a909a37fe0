// SPDX-License-Identifier: Apache-2.0

#ifndef TEICHLAB_INTEGER_HPP
#define TEICHLAB_INTEGER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace teichlab {

using Int = boost::multiprecision::cpp_int;

// Canonical residue in [0, m).
inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow_int(Int base, std::uint64_t e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int pow_mod(Int base, Int e, const Int& m) {
    Int r = 1;
    base = mod_reduce(base, m);
    while (e > 0) {
        if ((e & 1) != 0) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

Int mod_inverse(const Int& a, const Int& m);

bool is_prime(const Int& n);

// (prime, exponent) pairs, primes ascending. Trial division; inputs are desk scale.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

}  // namespace teichlab

#endif
