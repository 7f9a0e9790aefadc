#include <doctest.h>

#include <cmath>
#include <string>

#include "helpers.hpp"
#include "sixstate/keyrate.hpp"

using namespace sixstate;

TEST_SUITE("keyrate") {

TEST_CASE("worst-case two-basis rate") {
    CHECK(bb84_worst_case_rate(0.0) == 1.0);
    CHECK(bb84_worst_case_rate(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
    // frozen: 1 - 2 H(0.05)
    CHECK(bb84_worst_case_rate(0.05) == doctest::Approx(0.42720608576808774).epsilon(1e-13));
    CHECK_THROWS_AS(bb84_worst_case_rate(-0.01), std::domain_error);
    CHECK_THROWS_AS(bb84_worst_case_rate(0.51), std::domain_error);
}

TEST_CASE("three-basis hashing rate") {
    CHECK(six_state_hashing_rate(0.0) == 1.0);
    CHECK(six_state_hashing_rate(0.05) == doctest::Approx(0.49681626831941620).epsilon(1e-13));
    // the zero crossing sits below 0.1262
    CHECK(std::fabs(six_state_hashing_rate(0.126193)) <= 1e-4);
    CHECK(six_state_hashing_rate(0.126193) > 0.0);
    CHECK(six_state_hashing_rate(0.1262) < 0.0);
    CHECK_THROWS_AS(six_state_hashing_rate(0.67), std::domain_error);
}

TEST_CASE("two-stage decomposition matches the joint entropy") {
    const subroutine_a_decomposition_result at_zero = subroutine_a_decomposition(0.0);
    CHECK(at_zero.h_bit == 0.0);
    CHECK(at_zero.h_phase_given_bit == 0.0);
    CHECK(at_zero.rate == 1.0);

    const subroutine_a_decomposition_result r = subroutine_a_decomposition(0.12);
    CHECK(r.h_bit == doctest::Approx(0.52936086528736437).epsilon(1e-13));
    CHECK(r.h_phase_given_bit == doctest::Approx(0.43600943057072359).epsilon(1e-13));

    for (int i = 0; i <= 60; ++i) {
        const double p = 0.01 * i;
        const subroutine_a_decomposition_result d = subroutine_a_decomposition(p);
        // the two stages together cost exactly the joint entropy
        CHECK(d.h_bit + d.h_phase_given_bit ==
              doctest::Approx(entropy4(from_bit_error_depolarizing(p))).epsilon(1e-12));
        CHECK(d.rate == doctest::Approx(six_state_hashing_rate(p)).epsilon(1e-12));
        // conditioning cannot increase entropy
        const marginal_info info = marginals_and_mutual_info(from_bit_error_depolarizing(p));
        CHECK(d.h_phase_given_bit <= info.h_phase + 1e-12);
        CHECK(d.h_phase_given_bit == doctest::Approx(info.h_phase - info.mutual).epsilon(1e-12));
    }
}

TEST_CASE("block-hash config bounds") {
    CHECK_THROWS_AS(cat_hash_config(0), std::invalid_argument);
    CHECK_THROWS_AS(cat_hash_config(13), std::invalid_argument);
    CHECK(cat_hash_config(1).m == 1);
    CHECK(cat_hash_config(12).m == 12);
}

TEST_CASE("block length one reduces to plain hashing") {
    const cat_hash_config cfg(1);
    for (int i = 0; i <= 26; ++i) {
        const double p = 0.025 * i;
        CHECK(cat_hash_rate(p, cfg) == doctest::Approx(six_state_hashing_rate(p)).epsilon(1e-12));
    }
}

TEST_CASE("block-hash rate at zero error is one key bit per block") {
    for (int m = 1; m <= 12; ++m) {
        CHECK(cat_hash_rate(0.0, cat_hash_config(m)) == doctest::Approx(1.0 / m).epsilon(1e-14));
    }
}

TEST_CASE("block-hash rate matches the exhaustive enumeration") {
    // the oracle enumerates all 4^m class words; feasible for m <= 4
    for (int m = 1; m <= 4; ++m) {
        const cat_hash_config cfg(m);
        for (int i = 0; i <= 9; ++i) {
            const double p = 0.005 + 0.0295 * i;  // spread over (0, 0.27]
            CHECK(cat_hash_rate(p, cfg) == doctest::Approx(oracle::cat_rate_bruteforce(p, m)).epsilon(1e-10));
        }
    }
}

TEST_CASE("block hashing beats plain hashing just above the plain threshold") {
    const double p = 0.1265;
    CHECK(six_state_hashing_rate(p) < 0.0);
    bool some_positive = false;
    for (int m = 2; m <= 7; ++m) some_positive = some_positive || cat_hash_rate(p, cat_hash_config(m)) > 0.0;
    CHECK(some_positive);
}

TEST_CASE("threshold solving") {
    const double bb84 = threshold([](double p) { return bb84_worst_case_rate(p); }, 0.05, 0.2, 1e-6);
    CHECK(bb84 == doctest::Approx(0.11002786443835955).epsilon(2e-6));

    const double six = threshold([](double p) { return six_state_hashing_rate(p); }, 0.05, 0.2, 1e-6);
    CHECK(six == doctest::Approx(0.12619308327682118).epsilon(2e-6));

    // bracket independence: any valid bracket agrees to within 2 tol
    const double six_b = threshold([](double p) { return six_state_hashing_rate(p); }, 0.1, 0.14, 1e-6);
    CHECK(std::fabs(six - six_b) <= 2e-6);

    // tighter tolerance sharpens the answer
    const double six_tight = threshold([](double p) { return six_state_hashing_rate(p); }, 0.05, 0.2, 1e-10);
    CHECK(std::fabs(six_tight - 0.12619308327682118) <= 2e-10);
}

TEST_CASE("threshold rejects bad input") {
    auto rate = [](double p) { return six_state_hashing_rate(p); };
    CHECK_THROWS_AS(threshold(rate, 0.2, 0.05, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(threshold(rate, 0.05, 0.2, 1e-11), std::invalid_argument);
    // an invalid bracket names both endpoint values
    try {
        threshold(rate, 0.2, 0.3, 1e-6);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("0.2") != std::string::npos);
        CHECK(msg.find("0.3") != std::string::npos);
        CHECK(msg.find("rate") != std::string::npos);
    }
}

TEST_CASE("best block-hash threshold across block lengths") {
    const cat_threshold_result best = best_cat_threshold(2, 7, 1e-6);
    CHECK(best.m == 5);
    CHECK(best.p_star == doctest::Approx(0.12690405869752655).epsilon(2e-6));
    CHECK(best.p_star > 0.1262);
    CHECK(best.p_star < 0.1280);
    // frozen per-m crossings
    CHECK(threshold([](double p) { return cat_hash_rate(p, cat_hash_config(2)); }, 0.05, 0.2, 1e-6) ==
          doctest::Approx(0.125682145).epsilon(2e-6));
    CHECK(threshold([](double p) { return cat_hash_rate(p, cat_hash_config(3)); }, 0.05, 0.2, 1e-6) ==
          doctest::Approx(0.126753286).epsilon(2e-6));
    CHECK_THROWS_AS(best_cat_threshold(3, 2, 1e-6), std::invalid_argument);
}

TEST_CASE("three bases never pay more than two") {
    for (int i = 1; i <= 100; ++i) {
        const double p = 0.0025 * i;  // (0, 0.25]
        CHECK(six_state_hashing_rate(p) >= bb84_worst_case_rate(p) - 1e-12);
        if (p > 0.01) CHECK(six_state_hashing_rate(p) > bb84_worst_case_rate(p));
    }
}

TEST_CASE("rate curves") {
    const rate_curve_table single = rate_curve([](double p) { return six_state_hashing_rate(p); }, {0.0});
    REQUIRE(single.size() == 1);
    CHECK(single[0].rate == 1.0);

    const rate_curve_table two = rate_curve([](double p) { return six_state_hashing_rate(p); }, {0.0, 0.126193});
    CHECK(std::fabs(two[1].rate) <= 1e-4);

    // decreasing on a fine grid for every family
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(0.0025 * i);
    for (const auto& fn : {std::function<double(double)>([](double p) { return bb84_worst_case_rate(p); }),
                           std::function<double(double)>([](double p) { return six_state_hashing_rate(p); }),
                           std::function<double(double)>([](double p) { return cat_hash_rate(p, cat_hash_config(3)); })}) {
        const rate_curve_table curve = rate_curve(fn, grid);
        REQUIRE(curve.size() == grid.size());
        for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].rate < curve[i - 1].rate);
    }

    CHECK_THROWS_AS(rate_curve([](double p) { return p; }, {0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(rate_curve([](double p) { return p; }, {0.2, 0.1}), std::invalid_argument);

    // a domain violation reports the offending index
    try {
        rate_curve([](double p) { return bb84_worst_case_rate(p); }, {0.1, 0.3, 0.6});
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }
}

}  // TEST_SUITE
