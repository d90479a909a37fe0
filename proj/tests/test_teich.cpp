// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "teichlab/teich.hpp"

using namespace teichlab;

namespace {

// "4,8,6,-,3" style row spec, "-" meaning the zero digit
std::vector<TeichDigit> row(const std::string& spec) {
    std::vector<TeichDigit> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string tok = spec.substr(pos, comma - pos);
        out.push_back(tok == "-" ? TeichDigit::zero() : TeichDigit::root(Int(tok)));
        pos = comma + 1;
        if (comma == spec.size()) break;
    }
    return out;
}

struct Fixture15 {
    Context ctx = Context::make(2, 4);
    PrimeSet set = make_prime_set(ctx, 24);
    // x^4+x+1 and x^4+x^3+1 in canonical order
    PrimePtr f1 = set.by_factor({1, 1, 0, 0, 1});
    PrimePtr f2 = set.by_factor({1, 0, 0, 1, 1});
};

}  // namespace

TEST_CASE("embed goldens") {
    Fixture15 fx;
    CHECK(embed(ExponentSum(15), fx.f1).poly.is_zero());
    CHECK(embed(ExponentSum::roots(15, {0}), fx.f1).poly.coeffs() == std::vector<Int>{1});
    // zeta -> x-bar
    CHECK(embed(ExponentSum::roots(15, {1}), fx.f1).poly ==
          local_gen(fx.f1, fx.set.precision).poly);
    // zeta^10 + zeta^5 + 1 = 0
    CHECK(embed(ExponentSum::roots(15, {10, 5, 0}), fx.f1).poly.is_zero());
}

TEST_CASE("embed is additive") {
    Fixture15 fx;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        ExponentSum a(15), b(15);
        for (int j = 0; j < 3; ++j) {
            a.add_term(Int(rng() % 15), Int(rng() % 7) - 3);
            b.add_term(Int(rng() % 15), Int(rng() % 7) - 3);
        }
        CHECK(embed(a + b, fx.f1).poly ==
              local_add(embed(a, fx.f1), embed(b, fx.f1)).poly);
    }
}

TEST_CASE("19-digit expansions at x^4+x+1") {
    Fixture15 fx;
    auto check_row = [&](std::vector<Int> exps, const std::string& digits) {
        TeichExpansion e = expand(ExponentSum::roots(15, std::move(exps)), fx.f1, 19);
        CHECK(e.digits == row(digits));
    };
    check_row({0, 1}, "4,8,6,5,3,-,8,10,7,10,2,11,-,1,12,7,-,14,2");
    check_row({1, 3}, "9,2,13,11,7,-,2,6,0,6,5,8,-,3,10,0,-,14,5");
    check_row({2, 10}, "4,6,5,12,11,-,6,7,13,7,3,0,-,10,8,13,-,9,3");
    check_row({3, 7}, "4,5,12,8,0,-,5,13,1,13,11,2,-,7,6,1,-,14,11");
}

TEST_CASE("restricted-coefficient expansions") {
    Fixture15 fx;
    SUBCASE("at x^4+x+1") {
        CHECK(expand(ExponentSum::roots(15, {0, 3}), fx.f1, 10).digits ==
              row("14,9,4,9,14,-,-,9,14,-"));
        CHECK(expand(ExponentSum::roots(15, {2, 11}), fx.f1, 10).digits ==
              row("9,14,4,14,9,-,-,14,9,-"));
        CHECK(expand(ExponentSum::roots(15, {1, 7}), fx.f1, 10).digits ==
              row("14,4,9,4,14,-,-,4,14,-"));
    }
    SUBCASE("at x^4+x^3+1") {
        CHECK(expand(ExponentSum::roots(15, {0, 1}), fx.f2, 10).digits ==
              row("12,8,10,11,13,-,8,6,9,6"));
        CHECK(expand(ExponentSum::roots(15, {2, 11}), fx.f2, 10).digits ==
              row("4,14,9,14,4,-,-,14,4,-"));
    }
}

TEST_CASE("constant expansions") {
    Fixture15 fx;
    for (const auto& pr : {fx.f1, fx.f2}) {
        TeichExpansion a = expand(ExponentSum::roots(15, {4, 14}), pr, 24);
        for (const TeichDigit& d : a.digits) CHECK(d == TeichDigit::root(9));
    }
    TeichExpansion b = expand(ExponentSum::roots(15, {1, 6}), fx.f1, 24);
    for (const TeichDigit& d : b.digits) CHECK(d == TeichDigit::root(11));
}

TEST_CASE("expansions at q = 2^6") {
    Context ctx = Context::make(2, 6);
    PrimeSet set = make_prime_set(ctx, 12);
    // g1..g6 in the order the golden rows below are listed, by mod-2 coefficients
    std::vector<std::vector<Int>> gs = {
        {1, 1, 0, 0, 1, 1, 1},  // x^6+x^5+x^4+x+1
        {1, 1, 0, 0, 0, 0, 1},  // x^6+x+1
        {1, 0, 1, 1, 0, 1, 1},  // x^6+x^5+x^3+x^2+1
        {1, 1, 0, 1, 1, 0, 1},  // x^6+x^4+x^3+x+1
        {1, 0, 0, 0, 0, 1, 1},  // x^6+x^5+1
        {1, 1, 1, 0, 0, 1, 1},  // x^6+x^5+x^2+x+1
    };
    SUBCASE("zeta^0 + zeta^1 rows") {
        std::vector<std::string> rows = {
            "39,32,4,53,35,2,2,44,39,2",  "6,32,19,44,1,11,24,29,20,16",
            "8,32,20,14,51,20,40,37,40,45", "56,32,44,50,13,44,24,27,24,19",
            "58,32,45,20,0,53,40,35,44,48", "25,32,60,11,29,62,62,20,25,62"};
        for (std::size_t i = 0; i < 6; ++i) {
            TeichExpansion e = expand(ExponentSum::roots(63, {0, 1}), set.by_factor(gs[i]), 10);
            CHECK(e.digits == row(rows[i]));
        }
    }
    SUBCASE("zeta^4 + zeta^37 + zeta^43 rows") {
        std::vector<std::string> rows = {
            "56,35,56,14,14,35,35,56,14", "35,14,35,56,56,14,14,35,56",
            "14,56,14,35,35,56,56,14,35", "35,35,56,14,35,-,-,35,14",
            "56,56,14,35,56,-,-,56,35",   "14,14,35,56,14,-,-,14,56"};
        for (std::size_t i = 0; i < 6; ++i) {
            TeichExpansion e =
                expand(ExponentSum::roots(63, {4, 37, 43}), set.by_factor(gs[i]), 9);
            CHECK(e.digits == row(rows[i]));
            for (const TeichDigit& d : e.digits)
                CHECK((d.is_zero() || *d.exp == 14 || *d.exp == 35 || *d.exp == 56));
        }
    }
}

TEST_CASE("reconstruct_check") {
    Fixture15 fx;
    TeichExpansion e = expand(ExponentSum::roots(15, {0, 1}), fx.f1, 19);
    CHECK(reconstruct_check(e));
    SUBCASE("perturbed digit fails") {
        TeichExpansion bad = e;
        bad.digits[3] = TeichDigit::root(2);
        CHECK_FALSE(reconstruct_check(bad));
    }
    SUBCASE("zero element") {
        CHECK(reconstruct_check(expand(ExponentSum(15), fx.f1, 8)));
    }
}

TEST_CASE("reconstruction holds for random elements") {
    Fixture15 fx;
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        ExponentSum a(15);
        int k = 1 + rng() % 3;
        for (int j = 0; j < k; ++j) a.add_term(Int(rng() % 15), 1);
        CHECK(reconstruct_check(expand(a, rng() % 2 ? fx.f1 : fx.f2, 20)));
    }
}

TEST_CASE("digit statistics") {
    Fixture15 fx;
    SUBCASE("single root element") {
        // tau(zeta^7) = zeta^7 exactly: digit m=0 is Root(7), the rest zero
        DigitStats s = digit_stats(ExponentSum::roots(15, {7}), fx.f1, 10);
        CHECK(s.total == 10);
        CHECK(s.count(TeichDigit::root(7)) == 1);
        CHECK(s.count(TeichDigit::zero()) == 9);
        CHECK(s.percent_tenths(TeichDigit::root(7)) == 100);
        CHECK(s.percent_tenths(TeichDigit::zero()) == 900);
    }
    SUBCASE("500-digit tables") {
        Context ctx = Context::make(2, 4);
        PrimeSet big = make_prime_set(ctx, 500);
        PrimePtr f1 = big.by_factor({1, 1, 0, 0, 1});
        // rows ordered: zero digit, then zeta^0..zeta^14, values in tenths of %
        auto check_table = [&](std::vector<Int> exps, const std::vector<unsigned>& tenths) {
            DigitStats s = digit_stats(ExponentSum::roots(15, std::move(exps)), f1, 500);
            REQUIRE(tenths.size() == 16);
            CHECK(s.percent_tenths(TeichDigit::zero()) == tenths[0]);
            for (int j = 0; j < 15; ++j)
                CHECK(s.percent_tenths(TeichDigit::root(j)) == tenths[j + 1]);
        };
        check_table({0, 1}, {54, 76, 70, 62, 56, 56, 74, 52, 50, 54, 58, 84, 78, 44, 68, 64});
        check_table({1, 3}, {54, 50, 76, 54, 70, 58, 62, 84, 56, 78, 56, 44, 74, 68, 52, 64});
        check_table({2, 10}, {54, 78, 68, 76, 62, 56, 52, 54, 84, 44, 64, 70, 56, 74, 50, 58});
        check_table({3, 7}, {54, 56, 50, 78, 76, 56, 54, 44, 70, 74, 58, 68, 62, 52, 84, 64});
    }
}

TEST_CASE("expand is deterministic") {
    Fixture15 fx;
    TeichExpansion a = expand(ExponentSum::roots(15, {2, 10}), fx.f1, 24);
    TeichExpansion b = expand(ExponentSum::roots(15, {2, 10}), fx.f1, 24);
    CHECK(a.digits == b.digits);
}

TEST_CASE("leading digit is multiplicative on units") {
    Fixture15 fx;
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        Int a = Int(rng() % 15), b = Int(rng() % 15);
        TeichDigit da = expand(ExponentSum::roots(15, {a}), fx.f1, 1).digits[0];
        TeichDigit db = expand(ExponentSum::roots(15, {b}), fx.f1, 1).digits[0];
        CHECK(da == TeichDigit::root(a));
        CHECK(db == TeichDigit::root(b));
    }
}

TEST_CASE("expansion JSON round trip") {
    Fixture15 fx;
    TeichExpansion e = expand(ExponentSum::roots(15, {0, 1}), fx.f1, 19);
    nlohmann::json j = expansion_to_json(e);
    CHECK(j["p"] == 2);
    CHECK(j["d"] == 4);
    CHECK(j["precision"] == 19);
    CHECK(j["digits"][5].contains("zero"));
    CHECK(j["digits"][0]["exp"] == 4);
    TeichExpansion back = expansion_from_json(j, fx.set);
    CHECK(back.digits == e.digits);
    CHECK(back.element == e.element);
    CHECK(back.prime->label == e.prime->label);
}

TEST_CASE("expand rejects insufficient precision") {
    Context ctx = Context::make(2, 4);
    PrimeSet set = make_prime_set(ctx, 5);
    CHECK_THROWS(expand(ExponentSum::roots(15, {0, 1}), set.primes[0], 10));
}

TEST_CASE("render_expansion") {
    Fixture15 fx;
    TeichExpansion e = expand(ExponentSum::roots(15, {1, 6}), fx.f1, 3);
    std::string text = render_expansion(e, true);
    CHECK(text.find("z^11") != std::string::npos);
    CHECK(text.find("p^2") != std::string::npos);
}
