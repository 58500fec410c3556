#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "treetau/trees.hpp"

using namespace treetau;

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

TEST_CASE("LabeledTree validates") {
    CHECK_NOTHROW(LabeledTree(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS(LabeledTree(3, {{0, 1}}));                  // too few edges
    CHECK_THROWS(LabeledTree(3, {{0, 1}, {0, 1}}));          // repeated edge
    CHECK_THROWS(LabeledTree(4, {{0, 1}, {1, 2}, {0, 2}}));  // cycle
    CHECK_THROWS(LabeledTree(3, {{0, 1}, {3, 2}}));          // vertex out of range
}

TEST_CASE("prufer worked example") {
    // 0-based version of the classic 7-vertex example: code (1,6,0,6,1).
    const LabeledTree tree(7, sorted_edges({{2, 1}, {1, 5}, {1, 6}, {6, 3}, {6, 0}, {0, 4}}));
    const PruferCode code = prufer_encode(tree);
    CHECK(code.n == 7);
    CHECK(code.code == std::vector<int>{1, 6, 0, 6, 1});
    CHECK(prufer_decode(code) == tree);

    const TreeDegreeSequence x = tree.degree_sequence();
    CHECK(x.values() == std::vector<int>{2, 3, 1, 1, 1, 1, 3});
}

TEST_CASE("prufer round trip exhaustive") {
    for (int n = 3; n <= 6; ++n) {
        std::set<LabeledTree> seen;
        std::vector<int> code(n - 2, 0);
        while (true) {
            const LabeledTree t = prufer_decode({n, code});
            // degree law: deg(j) = multiplicity in code + 1
            const auto x = t.degree_sequence();
            for (int j = 0; j < n; ++j) {
                const long mult = std::count(code.begin(), code.end(), j);
                CHECK(x.degree(j) == mult + 1);
            }
            CHECK(prufer_encode(t).code == code);
            seen.insert(t);
            int pos = n - 3;
            while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
            if (pos < 0) break;
            ++code[pos];
        }
        // Cayley: n^{n-2} labelled trees.
        CHECK(static_cast<long>(seen.size()) == std::lround(std::pow(n, n - 2)));
    }
}

TEST_CASE("count_trees_with_degrees") {
    CHECK(count_trees_with_degrees(TreeDegreeSequence({1, 1})) == 1);
    CHECK(count_trees_with_degrees(TreeDegreeSequence({2, 2, 1, 1})) == 2);
    CHECK(count_trees_with_degrees(TreeDegreeSequence({3, 1, 1, 1})) == 1);
    CHECK(count_trees_with_degrees(TreeDegreeSequence({2, 3, 1, 1, 1, 2})) == 4 * 3);

    // Sum over all tree degree sequences of |T_x| = n^{n-2}.
    const int n = 6;
    BigInt total = 0;
    std::vector<int> x(n, 1);
    const auto recurse = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining == 0) {
                std::vector<int> xs(x.begin(), x.end());
                total += count_trees_with_degrees(TreeDegreeSequence(xs));
            }
            return;
        }
        for (int v = 1; v <= remaining + 1; ++v) {
            x[pos] = v;
            self(self, pos + 1, remaining - (v - 1));
        }
    };
    recurse(recurse, 0, n - 2);
    CHECK(total == BigInt(1296));  // 6^4
}

TEST_CASE("enumerate_trees matches count") {
    for (const auto& values : {std::vector<int>{2, 2, 1, 1}, std::vector<int>{3, 2, 1, 1, 1, 2},
                               std::vector<int>{2, 2, 2, 2, 1, 1}}) {
        const TreeDegreeSequence x(values);
        const auto trees = enumerate_trees(x);
        CHECK(BigInt(trees.size()) == count_trees_with_degrees(x));
        std::set<LabeledTree> distinct(trees.begin(), trees.end());
        CHECK(distinct.size() == trees.size());
        for (const auto& t : trees) CHECK(t.degree_sequence() == x);
    }
    std::vector<int> big(40, 2);
    big[38] = big[39] = 1;
    CHECK_THROWS_AS(enumerate_trees(TreeDegreeSequence(big), 100), std::length_error);
}

TEST_CASE("sample_tree is uniform") {
    RandomSource rng(123);
    const TreeDegreeSequence x({2, 3, 1, 1, 1, 2});  // |T_x| = 12
    const auto all = enumerate_trees(x);
    std::map<LabeledTree, int> counts;
    const int trials = 12000;
    for (int i = 0; i < trials; ++i) {
        const LabeledTree t = sample_tree(x, rng);
        CHECK(t.degree_sequence() == x);
        ++counts[t];
    }
    CHECK(counts.size() == all.size());
    // chi-square with 11 dof; 40 is far beyond the 0.999 quantile (~31.3)
    double chi2 = 0.0;
    const double expected = trials / 12.0;
    for (const auto& [t, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 40.0);
}

TEST_CASE("forest containment matches exhaustive fractions") {
    const TreeDegreeSequence x({2, 3, 1, 1, 1, 2});
    const auto all = enumerate_trees(x);
    const auto exhaustive = [&](const std::vector<Edge>& edges) {
        long hits = 0;
        for (const auto& t : all) {
            bool contains = true;
            for (const Edge& e : edges)
                if (!std::binary_search(t.edges().begin(), t.edges().end(), e)) contains = false;
            hits += contains;
        }
        return Rational(hits, static_cast<long>(all.size()));
    };

    // Empty forest, single edges, a two-edge path, a two-component forest,
    // and a full spanning tree.
    const std::vector<std::vector<Edge>> forests = {
        {}, {{0, 1}}, {{1, 2}}, {{0, 1}, {1, 2}}, {{0, 1}, {4, 5}}, all.front().edges()};
    for (const auto& edges : forests) {
        const Forest forest(x.n(), edges);
        CHECK(forest_containment_probability(x, forest) == exhaustive(edges));
    }

    // Edge fractions against the closed form and the exhaustive count.
    for (int j = 0; j < x.n(); ++j)
        for (int k = j + 1; k < x.n(); ++k) {
            const Rational frac = edge_adjacency_fraction(x, j, k);
            CHECK(frac == Rational(x.degree(j) + x.degree(k) - 2, x.n() - 2));
            CHECK(frac == exhaustive({{j, k}}));
        }
}

TEST_CASE("edge functionals") {
    const TreeDegreeSequence x({2, 2, 1, 1});
    const double s = 1.0 / std::sqrt(6.0);
    const std::vector<double> phi = {s, s, 2 * s, 2 * s};
    CHECK(mean_edge_functional(x, phi) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));

    // Closed form equals the exhaustive average, for several x and phi.
    RandomSource rng(5);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (const auto& values : {std::vector<int>{2, 2, 1, 1}, std::vector<int>{2, 3, 1, 1, 1, 2},
                               std::vector<int>{3, 3, 1, 1, 1, 1, 2}}) {
        const TreeDegreeSequence xs(values);
        const auto all = enumerate_trees(xs);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<double> p(xs.n());
            for (double& v : p) v = unif(rng);
            double total = 0.0;
            for (const auto& t : all) total += edge_functional(t, p);
            CHECK(mean_edge_functional(xs, p) ==
                  doctest::Approx(total / all.size()).epsilon(1e-10));
        }
    }
}

TEST_CASE("phi_seminorm") {
    CHECK(phi_seminorm(std::vector<double>{1, 2, 10}) == doctest::Approx(9.0));
    CHECK(phi_seminorm(std::vector<double>{0, 1, 3, 10}) == doctest::Approx(12.0));
    CHECK(phi_seminorm(std::vector<double>{4, 4, 4}) == doctest::Approx(0.0));

    // Grid oracle: minimize over a fine grid of c.
    RandomSource rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> phi(9);
    for (double& v : phi) v = unif(rng);
    double best = 1e18;
    for (double c = -0.1; c <= 1.1; c += 1e-4) {
        double s = 0.0;
        for (double v : phi) s += std::abs(v - c);
        best = std::min(best, s);
    }
    // the grid minimum overshoots the true minimum by at most n * step / 2
    CHECK(phi_seminorm(phi) <= best + 1e-12);
    CHECK(phi_seminorm(phi) >= best - 1e-3);
}
