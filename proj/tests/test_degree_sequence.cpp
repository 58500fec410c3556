#include <doctest.h>

#include <cmath>
#include <set>

#include "treetau/degree_sequence.hpp"

using namespace treetau;

TEST_CASE("construction validates") {
    CHECK_THROWS(DegreeSequence({}));
    CHECK_THROWS(DegreeSequence({0, 2}));
    CHECK_THROWS(DegreeSequence({1, 1, 1}));  // odd sum
    CHECK_NOTHROW(DegreeSequence({3, 3, 3, 3}));
}

TEST_CASE("graphicality") {
    CHECK(is_graphical(DegreeSequence({3, 3, 3, 3})));
    CHECK(is_graphical(DegreeSequence({3, 1, 1, 1})));
    CHECK_FALSE(is_graphical(DegreeSequence({5, 1, 1, 1})));
    CHECK_FALSE(is_graphical(DegreeSequence({4, 4, 1, 1})));
    CHECK(is_graphical(DegreeSequence({2, 2, 2})));
}

TEST_CASE("stats") {
    const DegreeSequence regular({3, 3, 3, 3});
    CHECK(regular.stats().d_bar == 3);
    CHECK(regular.stats().r_variance == 0);
    CHECK(regular.stats().d_max == 3);
    CHECK(regular.stats().m == 6);

    const DegreeSequence mixed({5, 5, 1, 1});
    CHECK(mixed.stats().d_bar == 3);
    CHECK(mixed.stats().r_variance == 4);

    // Half degree 5, half degree 1: d_bar = 3, d_hat = sqrt(5).
    std::vector<int> half(20, 5);
    half.resize(40, 1);
    const DegreeSequence five_one(half);
    CHECK(five_one.stats().d_bar == 3);
    CHECK(five_one.stats().d_hat_log == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-12));

    // AM-GM: d_hat_log <= ln d_bar.
    CHECK(mixed.stats().d_hat_log <= std::log(3.0));
}

TEST_CASE("size condition") {
    CHECK(size_condition_holds(DegreeSequence(std::vector<int>(100, 3))));
    CHECK_FALSE(size_condition_holds(DegreeSequence(std::vector<int>(80, 3))));
    CHECK_FALSE(size_condition_holds(DegreeSequence({2, 2, 2, 2})));
    // condition implies d_bar > 2
    const DegreeSequence d(std::vector<int>(100, 3));
    CHECK(d.stats().d_bar > 2);
}

TEST_CASE("eta") {
    const DegreeSequence reg3(std::vector<int>(100, 3));
    CHECK(eta(reg3) == doctest::Approx(0.81).epsilon(1e-12));

    const DegreeSequence reg4(std::vector<int>(10000, 4));
    const double expected = std::min({256.0 / 40000.0, 64.0 * std::log(1e4) / 20000.0, 8.0});
    CHECK(eta(reg4) == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(eta(DegreeSequence({2, 2})), std::domain_error);
}

namespace {

// Independent oracle: odometer over [1, d_j]^n, filter by sum.
std::set<std::vector<int>> brute_suitable(const DegreeSequence& d) {
    std::set<std::vector<int>> out;
    std::vector<int> x(d.n(), 1);
    while (true) {
        long sum = 0;
        for (int v : x) sum += v;
        if (sum == 2L * d.n() - 2) out.insert(x);
        int pos = d.n() - 1;
        while (pos >= 0 && x[pos] == d.degree(pos)) x[pos--] = 1;
        if (pos < 0) break;
        ++x[pos];
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_suitable") {
    const DegreeSequence k4({3, 3, 3, 3});
    const auto xs = enumerate_suitable(k4);
    CHECK(xs.size() == 10);  // 4 perms of (3,1,1,1) + 6 of (2,2,1,1)

    const DegreeSequence pair({1, 1});
    const auto xs2 = enumerate_suitable(pair);
    REQUIRE(xs2.size() == 1);
    CHECK(xs2[0].values() == std::vector<int>{1, 1});

    for (const DegreeSequence& d :
         {DegreeSequence({2, 2, 1, 1}), DegreeSequence({3, 2, 2, 1}), DegreeSequence({4, 3, 2, 2, 1})}) {
        const auto oracle = brute_suitable(d);
        const auto got = enumerate_suitable(d);
        REQUIRE(got.size() == oracle.size());
        std::vector<std::vector<int>> sorted_got;
        for (const auto& x : got) {
            CHECK(is_suitable(x, d));
            sorted_got.push_back(x.values());
        }
        // lexicographic order, no duplicates
        CHECK(std::is_sorted(sorted_got.begin(), sorted_got.end()));
        for (const auto& v : sorted_got) CHECK(oracle.count(v) == 1);
    }

    CHECK_THROWS_AS(enumerate_suitable(DegreeSequence(std::vector<int>(20, 3))),
                    std::length_error);
}

TEST_CASE("sample_suitable_x invariants") {
    RandomSource rng(42);
    const DegreeSequence d({2, 2, 2, 2, 2, 2});
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = sample_suitable_x(d, rng);
        long sum = 0;
        for (int j = 0; j < d.n(); ++j) {
            CHECK(x.degree(j) >= 1);
            CHECK(x.degree(j) <= d.degree(j));
            sum += x.degree(j) - 1;
        }
        CHECK(sum == d.n() - 2);
    }
}

TEST_CASE("joint_factorial_moment") {
    const DegreeSequence d({3, 3, 3, 3});
    CHECK(joint_factorial_moment(d, 0, 1, 1, 1) == Rational(1, 7));
    CHECK(joint_factorial_moment(d, 0, 1, 0, 0) == 1);
    CHECK(joint_factorial_moment(d, 0, 1, 3, 0) == 0);  // (2)_3 = 0
    CHECK_THROWS(joint_factorial_moment(d, 1, 1, 1, 1));

    // E(X_1 - 1) = (d_1-1)(n-2)/((d_bar-1)n) = 2*2/8 = 1/2; empirical check.
    RandomSource rng(7);
    const int trials = 100000;
    long sum = 0;
    for (int i = 0; i < trials; ++i) sum += sample_suitable_x(d, rng).degree(0) - 1;
    const double mean = static_cast<double>(sum) / trials;
    // Var(X_1 - 1) <= 1/2 here; 3 sigma of the mean is well under 0.01.
    CHECK(mean == doctest::Approx(0.5).epsilon(0.02));
}
