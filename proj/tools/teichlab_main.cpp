// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "teichlab/affine.hpp"
#include "teichlab/cyclotomic.hpp"
#include "teichlab/local.hpp"
#include "teichlab/patterns.hpp"
#include "teichlab/teich.hpp"

namespace {

using namespace teichlab;
using nlohmann::json;

struct CliConfig {
    long long p = 2;
    unsigned d = 4;
    std::string factor;        // coefficient list, constant term first
    int factor_index = -1;
    std::string element;       // "a1,a2,..." or "a:c" pairs
    unsigned digits = 10;
    std::string format = "text";
    bool ascii = false;
    std::uint64_t seed = 1;
    std::string group = "affhp";
    long long sigma = 1;
    long long b = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

ExponentSum parse_element(const std::string& text, const Int& n) {
    ExponentSum sum(n);
    for (const std::string& tok : split(text, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty term in element list");
        auto colon = tok.find(':');
        Int a(colon == std::string::npos ? tok : tok.substr(0, colon));
        Int c = colon == std::string::npos ? Int(1) : Int(tok.substr(colon + 1));
        if (a < 0 || a >= n) {
            std::ostringstream os;
            os << "element exponent " << a << " out of range [0, " << n << ")";
            throw std::invalid_argument(os.str());
        }
        sum.add_term(a, c);
    }
    return sum;
}

PrimePtr select_prime(const PrimeSet& set, const CliConfig& cfg) {
    if (!cfg.factor.empty()) {
        std::vector<Int> coeffs;
        for (const std::string& tok : split(cfg.factor, ',')) coeffs.emplace_back(tok);
        return set.by_factor(coeffs);
    }
    int idx = cfg.factor_index < 0 ? 0 : cfg.factor_index;
    if (idx >= static_cast<int>(set.primes.size()))
        throw std::invalid_argument("factor index out of range");
    return set.primes[static_cast<std::size_t>(idx)];
}

Context make_context(const CliConfig& cfg) { return Context::make(Int(cfg.p), cfg.d); }

json factor_json(const std::vector<ModPolynomial>& factors, const CliConfig& cfg) {
    json j;
    j["p"] = cfg.p;
    j["d"] = cfg.d;
    j["seed"] = cfg.seed;
    json arr = json::array();
    for (const auto& f : factors) {
        json c = json::array();
        for (const Int& x : f.coeffs()) c.push_back(x.str());
        arr.push_back(c);
    }
    j["factors"] = arr;
    return j;
}

int cmd_factor(const CliConfig& cfg) {
    Context ctx = make_context(cfg);
    auto factors = factor_cyclotomic_mod_p(ctx, cfg.seed);
    if (cfg.format == "json") {
        std::cout << factor_json(factors, cfg).dump() << "\n";
    } else {
        for (std::size_t i = 0; i < factors.size(); ++i)
            std::cout << "f" << (i + 1) << ": " << factors[i].to_string() << "\n";
    }
    return 0;
}

int cmd_expand(const CliConfig& cfg) {
    Context ctx = make_context(cfg);
    if (cfg.digits == 0) throw std::invalid_argument("digit count must be positive");
    PrimeSet set = make_prime_set(ctx, cfg.digits, cfg.seed);
    PrimePtr prime = select_prime(set, cfg);
    ExponentSum alpha = parse_element(cfg.element, ctx.n);
    TeichExpansion e = expand(alpha, prime, cfg.digits);
    if (cfg.format == "json") {
        json j = expansion_to_json(e);
        j["seed"] = cfg.seed;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << alpha.to_string(cfg.ascii) << " = " << render_expansion(e, cfg.ascii)
                  << " + ...\n";
    }
    return 0;
}

int cmd_stats(const CliConfig& cfg) {
    Context ctx = make_context(cfg);
    PrimeSet set = make_prime_set(ctx, cfg.digits, cfg.seed);
    PrimePtr prime = select_prime(set, cfg);
    ExponentSum alpha = parse_element(cfg.element, ctx.n);
    DigitStats s = digit_stats(alpha, prime, cfg.digits);
    std::vector<TeichDigit> all{TeichDigit::zero()};
    for (Int j = 0; j < ctx.n; ++j) all.push_back(TeichDigit::root(j));
    if (cfg.format == "json") {
        json j;
        j["p"] = cfg.p;
        j["d"] = cfg.d;
        j["seed"] = cfg.seed;
        j["digits"] = cfg.digits;
        json rows = json::array();
        for (const auto& dgt : all) {
            json row;
            row["digit"] = dgt.to_string(true);
            row["count"] = s.count(dgt);
            row["percent_tenths"] = s.percent_tenths(dgt);
            rows.push_back(row);
        }
        j["distribution"] = rows;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& dgt : all) {
            unsigned t = s.percent_tenths(dgt);
            std::cout << dgt.to_string(cfg.ascii) << ": " << (t / 10) << "." << (t % 10) << "\n";
        }
    }
    return 0;
}

int cmd_orbit(const CliConfig& cfg) {
    Context ctx = make_context(cfg);
    ExponentSum alpha = parse_element(cfg.element, ctx.n);
    AffineSubgroup G = cfg.group == "full" ? AffineSubgroup::full(ctx.n) : AffineSubgroup::aff_hp(ctx);
    OrbitResult r = orbit_stabilizer(alpha, G, ctx);
    if (cfg.format == "json") {
        json j;
        j["group"] = cfg.group;
        j["orbit_size"] = r.orbit.size();
        json stab = json::array();
        for (const auto& g : r.stabilizer.elements) stab.push_back(g.to_string());
        j["stabilizer"] = stab;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "orbit size: " << r.orbit.size() << "\n";
        std::cout << "stabilizer size: " << r.stabilizer.size() << "\n";
        for (const auto& g : r.stabilizer.elements) std::cout << "  " << g.to_string() << "\n";
    }
    return 0;
}

int report_lines(const std::vector<ConspiracyReport>& reports, const CliConfig& cfg) {
    bool all_ok = true;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << phenomenon_name(r.phenomenon) << " [" << r.witness << "] "
                      << (r.confirmed ? "confirmed" : "REFUTED");
            if (r.product_exponent)
                std::cout << " product=" << TeichDigit::root(*r.product_exponent).to_string(cfg.ascii);
            if (r.orbit_size) std::cout << " orbit=" << *r.orbit_size;
            std::cout << "\n";
        }
    }
    for (const auto& r : reports) all_ok = all_ok && r.confirmed;
    return all_ok ? 0 : 1;
}

int cmd_detect(const CliConfig& cfg) {
    Context ctx = make_context(cfg);
    PrimeSet set = make_prime_set(ctx, cfg.digits, cfg.seed);
    ExponentSum alpha = parse_element(cfg.element, ctx.n);
    return report_lines(detect(alpha, set, cfg.digits), cfg);
}

int cmd_collude(const CliConfig& cfg) {
    Context ctx = make_context(cfg);
    PrimeSet set = make_prime_set(ctx, cfg.digits, cfg.seed);
    PrimePtr prime = select_prime(set, cfg);
    ExponentSum alpha = parse_element(cfg.element, ctx.n);
    AffineElement g = AffineElement::make(Int(cfg.sigma), Int(cfg.b), ctx.n);
    return report_lines({verify_collusion(alpha, g, set, prime, cfg.digits)}, cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Teichmuller expansions, affine orbits, and digit phenomena"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool with_element, bool with_digits) {
        sub->add_option("--p", cfg.p, "characteristic prime");
        sub->add_option("--d", cfg.d, "extension degree");
        sub->add_option("--format", cfg.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", cfg.seed, "factorization seed");
        sub->add_flag("--ascii", cfg.ascii, "ASCII output (z^j instead of the zeta glyph)");
        if (with_element) sub->add_option("--element", cfg.element, "exponent list a1,a2 or a:c pairs")->required();
        if (with_digits) sub->add_option("--digits", cfg.digits, "number of digits");
        sub->add_option("--factor", cfg.factor, "prime by mod-p coefficients, constant first");
        sub->add_option("--factor-index", cfg.factor_index, "prime by canonical index");
    };

    CLI::App* factor = app.add_subcommand("factor", "factor Phi_n mod p");
    add_common(factor, false, false);
    CLI::App* expand = app.add_subcommand("expand", "Teichmuller expansion of an element");
    add_common(expand, true, true);
    CLI::App* stats = app.add_subcommand("stats", "digit distribution of an expansion");
    add_common(stats, true, true);
    CLI::App* orb = app.add_subcommand("orbit", "affine orbit and stabilizer");
    add_common(orb, true, false);
    orb->add_option("--group", cfg.group, "affhp|full")->check(CLI::IsMember({"affhp", "full"}));
    CLI::App* det = app.add_subcommand("detect", "detect and verify digit phenomena");
    add_common(det, true, true);
    CLI::App* col = app.add_subcommand("collude", "verify a prime collusion product");
    add_common(col, true, true);
    col->add_option("--sigma", cfg.sigma, "multiplier of the stabilizing affine element")->required();
    col->add_option("--b", cfg.b, "translation of the stabilizing affine element");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env_seed = std::getenv("TEICHLAB_SEED")) cfg.seed = std::strtoull(env_seed, nullptr, 10);

    try {
        if (factor->parsed()) return cmd_factor(cfg);
        if (expand->parsed()) return cmd_expand(cfg);
        if (stats->parsed()) return cmd_stats(cfg);
        if (orb->parsed()) return cmd_orbit(cfg);
        if (det->parsed()) return cmd_detect(cfg);
        if (col->parsed()) return cmd_collude(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
