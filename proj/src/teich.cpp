// SPDX-License-Identifier: Apache-2.0

#include "teichlab/teich.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace teichlab {

std::string TeichDigit::to_string(bool ascii) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << (ascii ? "z" : "ζ") << "^" << *exp;
    return os.str();
}

LocalElement embed(const ExponentSum& alpha, const PrimePtr& prime, unsigned level) {
    if (alpha.modulus() != prime->ctx.n) throw std::invalid_argument("embed: modulus mismatch");
    LocalElement acc = local_zero(prime, level);
    LocalElement x = local_gen(prime, level);
    Int m = pow_int(prime->ctx.p, level);
    for (const auto& [a, c] : alpha.terms()) {
        LocalElement xa = local_pow(x, a);
        LocalElement scaled{prime, ModPolynomial(m, {c}).mul_mod(xa.poly, prime->f_lift.reduced_mod(m)), level};
        acc = local_add(acc, scaled);
    }
    return acc;
}

LocalElement embed(const ExponentSum& alpha, const PrimePtr& prime) {
    return embed(alpha, prime, prime->precision);
}

namespace {

LocalElement digit_value(const TeichDigit& d, const PrimePtr& prime, unsigned level) {
    if (d.is_zero()) return local_zero(prime, level);
    return local_pow(local_gen(prime, level), *d.exp);
}

}  // namespace

TeichExpansion expand(const ExponentSum& alpha, const PrimePtr& prime, unsigned N) {
    if (N == 0) throw std::invalid_argument("expand: digit count must be positive");
    if (N > prime->precision) throw std::invalid_argument("expand: precision exhausted");
    TeichExpansion out{alpha, prime, {}, N};
    LocalElement beta = embed(alpha, prime, N);
    const Int p = prime->ctx.p;
    for (unsigned m = 0; m < N; ++m) {
        unsigned level = N - m;
        ResidueElement r = residue(beta);
        TeichDigit digit = r.is_zero() ? TeichDigit::zero() : TeichDigit::root(*dlog(r));
        LocalElement value = digit_value(digit, prime, level);

        // cross-check against the Frobenius-iteration lift at remaining precision
        LocalElement oracle = teichmuller_lift_oracle(r, level);
        if (!(oracle.poly == value.poly))
            throw std::logic_error("expand: digit disagrees with Teichmuller lift oracle");

        out.digits.push_back(std::move(digit));
        if (m + 1 == N) break;

        LocalElement diff = local_sub(beta, value);
        Int next_mod = pow_int(p, level - 1);
        std::vector<Int> c = diff.poly.coeffs();
        for (Int& x : c) {
            if (x % p != 0) throw std::logic_error("expand: divisibility violated");
            x /= p;
        }
        beta = local_make(prime, ModPolynomial(next_mod, std::move(c)), level - 1);
    }
    return out;
}

bool reconstruct_check(const TeichExpansion& exp) {
    const PrimePtr& prime = exp.prime;
    unsigned N = exp.precision;
    LocalElement acc = local_zero(prime, N);
    Int pk = 1;
    Int m = pow_int(prime->ctx.p, N);
    for (std::size_t i = 0; i < exp.digits.size(); ++i) {
        LocalElement v = digit_value(exp.digits[i], prime, N);
        LocalElement scaled{prime, ModPolynomial(m, {pk}).mul_mod(v.poly, prime->f_lift.reduced_mod(m)), N};
        acc = local_add(acc, scaled);
        pk *= prime->ctx.p;
    }
    LocalElement target = embed(exp.element, prime, N);
    return acc.poly == target.poly;
}

unsigned DigitStats::count(const TeichDigit& d) const {
    auto it = counts.find(d);
    return it == counts.end() ? 0u : it->second;
}

unsigned DigitStats::percent_tenths(const TeichDigit& d) const {
    // round-half-up of count/total*1000
    unsigned c = count(d);
    return static_cast<unsigned>((2000ULL * c + total) / (2ULL * total));
}

DigitStats digit_stats(const ExponentSum& alpha, const PrimePtr& prime, unsigned N) {
    TeichExpansion e = expand(alpha, prime, N);
    DigitStats s;
    s.total = N;
    for (const auto& d : e.digits) ++s.counts[d];
    return s;
}

std::string render_expansion(const TeichExpansion& exp, bool ascii) {
    std::ostringstream os;
    for (std::size_t m = 0; m < exp.digits.size(); ++m) {
        if (m > 0) os << " + ";
        os << exp.digits[m].to_string(ascii);
        if (m == 1) os << " p";
        if (m > 1) os << " p^" << m;
    }
    return os.str();
}

namespace {

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

}  // namespace

nlohmann::json expansion_to_json(const TeichExpansion& exp) {
    nlohmann::json j;
    j["p"] = to_ll(exp.prime->ctx.p);
    j["d"] = exp.prime->ctx.d;
    nlohmann::json factor = nlohmann::json::array();
    for (const Int& c : exp.prime->f_mod_p.coeffs()) factor.push_back(to_ll(c));
    j["factor"] = factor;
    nlohmann::json element = nlohmann::json::object();
    for (const auto& [a, c] : exp.element.terms()) element[a.str()] = to_ll(c);
    j["element"] = element;
    nlohmann::json digits = nlohmann::json::array();
    for (const auto& d : exp.digits) {
        if (d.is_zero())
            digits.push_back(nlohmann::json{{"zero", true}});
        else
            digits.push_back(nlohmann::json{{"exp", to_ll(*d.exp)}});
    }
    j["digits"] = digits;
    j["precision"] = exp.precision;
    return j;
}

TeichExpansion expansion_from_json(const nlohmann::json& j, const PrimeSet& primes) {
    std::vector<Int> factor;
    for (const auto& c : j.at("factor")) factor.emplace_back(c.get<long long>());
    const PrimePtr& prime = primes.by_factor(factor);
    ExponentSum element(prime->ctx.n);
    for (const auto& [a, c] : j.at("element").items())
        element.add_term(Int(a), Int(c.get<long long>()));
    TeichExpansion out{element, prime, {}, j.at("precision").get<unsigned>()};
    for (const auto& dj : j.at("digits")) {
        if (dj.contains("zero"))
            out.digits.push_back(TeichDigit::zero());
        else
            out.digits.push_back(TeichDigit::root(Int(dj.at("exp").get<long long>())));
    }
    return out;
}

}  // namespace teichlab
