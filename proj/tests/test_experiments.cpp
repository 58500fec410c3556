#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "treetau/experiments.hpp"
#include "treetau/trees.hpp"

using namespace treetau;

TEST_CASE("brute_expected_tau") {
    CHECK(brute_expected_tau(DegreeSequence({3, 3, 3, 3})) == 16);
    CHECK(brute_expected_tau(DegreeSequence({2, 2, 2})) == 3);
    CHECK(brute_expected_tau(DegreeSequence({2, 2, 2, 2})) == 4);
    CHECK(brute_expected_tau(DegreeSequence({1, 1, 1, 1})) == 0);
    CHECK(brute_expected_tau(DegreeSequence({2, 2, 1, 1})) == 1);
    // 60 six-cycles (tau 6) and 10 triangle pairs (tau 0): E = 36/7.
    CHECK(brute_expected_tau(DegreeSequence({2, 2, 2, 2, 2, 2})) == Rational(36, 7));
    CHECK_THROWS_AS(brute_expected_tau(DegreeSequence({5, 1, 1, 1})), std::domain_error);
}

TEST_CASE("brute_expected_tau_by_x") {
    const auto by_x = brute_expected_tau_by_x(DegreeSequence({3, 3, 3, 3}));
    Rational total = 0;
    for (const auto& [x, v] : by_x) {
        const int xmax = *std::max_element(x.values().begin(), x.values().end());
        CHECK(v == (xmax == 3 ? Rational(1) : Rational(2)));
        total += v;
    }
    CHECK(by_x.size() == 10);
    CHECK(total == 16);

    // Identity: the per-x values sum to the direct expectation.
    for (const auto& values :
         {std::vector<int>{2, 2, 2, 2}, std::vector<int>{3, 2, 2, 1}, std::vector<int>{3, 3, 2, 2, 2}}) {
        const DegreeSequence d(values);
        Rational sum = 0;
        for (const auto& [x, v] : brute_expected_tau_by_x(d)) sum += v;
        CHECK(sum == brute_expected_tau(d));
    }
}

TEST_CASE("brute_containment_probability") {
    const DegreeSequence d({2, 2, 2, 2});
    const LabeledTree path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(brute_containment_probability(d, path) == Rational(1, 3));
    const LabeledTree star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(brute_containment_probability(d, star) == 0);

    // Summing over all trees of one degree class recovers the per-x value.
    const auto by_x = brute_expected_tau_by_x(d);
    const TreeDegreeSequence x = path.degree_sequence();
    Rational sum = 0;
    enumerate_trees(x, [&](const LabeledTree& t) {
        sum += brute_containment_probability(d, t);
    });
    CHECK(sum == by_x.at(x));
}

TEST_CASE("mc_expected_tau") {
    // Gamma_d = {K4}: the estimate is exactly ln 16 with zero spread.
    const MonteCarloEstimate k4 = mc_expected_tau(DegreeSequence({3, 3, 3, 3}), 40, 5, 2);
    CHECK(k4.mean_log == doctest::Approx(std::log(16.0)).epsilon(1e-12));
    CHECK(k4.std_error == doctest::Approx(0.0));
    CHECK(k4.samples == 40);
    CHECK(k4.workers == 2);

    // Reproducibility: identical arguments give identical results.
    const DegreeSequence six(std::vector<int>(6, 2));
    const MonteCarloEstimate a = mc_expected_tau(six, 500, 11, 3);
    const MonteCarloEstimate b = mc_expected_tau(six, 500, 11, 3);
    CHECK(a.mean_log == b.mean_log);
    CHECK(a.std_error == b.std_error);

    // Agreement with the exact expectation, allowing 5 standard errors.
    const MonteCarloEstimate mc = mc_expected_tau(six, 4000, 29, 2);
    const double truth = std::log(36.0 / 7.0);
    CHECK(std::abs(mc.mean_log - truth) < 5.0 * mc.std_error + 0.01);

    CHECK_THROWS(mc_expected_tau(six, 0, 1));
}

TEST_CASE("connectivity_frequency") {
    CHECK(connectivity_frequency(DegreeSequence({3, 3, 3, 3}), 50, 1) == doctest::Approx(1.0));
    CHECK(connectivity_frequency(DegreeSequence({1, 1, 1, 1}), 50, 1) == doctest::Approx(0.0));
    // P(six-cycle) = 6/7; binomial sd at 2000 samples ~0.0078.
    CHECK(connectivity_frequency(DegreeSequence(std::vector<int>(6, 2)), 2000, 3) ==
          doctest::Approx(6.0 / 7.0).epsilon(0.05));
}

TEST_CASE("compare") {
    CompareConfig config;
    config.truth = TruthMode::brute;
    const ComparisonReport rep = compare(DegreeSequence({3, 3, 3, 3}), config);
    CHECK(rep.truth_log == doctest::Approx(std::log(16.0)).epsilon(1e-12));
    CHECK(rep.ratio_log == doctest::Approx(rep.truth_log - rep.formula_log).epsilon(1e-12));
    CHECK(rep.band > 0.0);
    CHECK(rep.within_band == (std::abs(rep.ratio_log) <= rep.band_multiplier * rep.band));

    CompareConfig mc_config;
    mc_config.truth = TruthMode::mc;
    mc_config.samples = 100;
    mc_config.seed = 4;
    const ComparisonReport mc_rep = compare(DegreeSequence({3, 3, 3, 3}), mc_config);
    CHECK(mc_rep.truth_log == doctest::Approx(std::log(16.0)).epsilon(1e-12));
}
