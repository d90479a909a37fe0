// SPDX-License-Identifier: Apache-2.0

#include "teichlab/integer.hpp"

#include <stdexcept>

namespace teichlab {

Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_reduce(old_s, m);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<Int, unsigned>> out;
    for (Int f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            unsigned e = 0;
            while (n % f == 0) {
                n /= f;
                ++e;
            }
            out.emplace_back(f, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

}  // namespace teichlab
