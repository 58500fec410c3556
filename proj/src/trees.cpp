#include "treetau/trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace treetau {

namespace {

std::vector<Edge> normalize_edges(int n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("bad edge endpoints");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("repeated edge");
    return edges;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

LabeledTree::LabeledTree(int n, std::vector<Edge> edges)
    : n_(n), edges_(normalize_edges(n, std::move(edges))) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    if (static_cast<int>(edges_.size()) != n - 1)
        throw std::invalid_argument("tree needs exactly n-1 edges");
    Dsu dsu(n);
    for (const auto& [u, v] : edges_)
        if (!dsu.unite(u, v)) throw std::invalid_argument("edge set contains a cycle");
}

TreeDegreeSequence LabeledTree::degree_sequence() const {
    std::vector<int> x(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++x[u];
        ++x[v];
    }
    return TreeDegreeSequence(std::move(x));
}

Forest::Forest(int n, std::vector<Edge> edges)
    : n_(n), edges_(normalize_edges(n, std::move(edges))), degrees_(n, 0), component_of_(n, -1) {
    Dsu dsu(n);
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
        if (!dsu.unite(u, v)) throw std::invalid_argument("forest contains a cycle");
    }
    for (int v = 0; v < n; ++v) {
        int root = dsu.find(v);
        if (component_of_[root] < 0) component_of_[root] = component_count_++;
        component_of_[v] = component_of_[root];
    }
}

PruferCode prufer_encode(const LabeledTree& tree) {
    const int n = tree.n();
    if (n < 2) throw std::invalid_argument("prufer_encode needs n >= 2");
    std::vector<int> degree(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : tree.edges()) {
        ++degree[u];
        ++degree[v];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> removed(n, 0);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);

    PruferCode out;
    out.n = n;
    out.code.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        removed[leaf] = 1;
        int parent = -1;
        for (int w : adj[leaf])
            if (!removed[w]) parent = w;
        out.code.push_back(parent);
        if (--degree[parent] == 1) leaves.insert(parent);
    }
    return out;
}

LabeledTree prufer_decode(const PruferCode& code) {
    const int n = code.n;
    if (n < 2) throw std::invalid_argument("prufer_decode needs n >= 2");
    if (static_cast<int>(code.code.size()) != n - 2)
        throw std::invalid_argument("code length must be n-2");
    std::vector<int> degree(n, 1);
    for (int b : code.code) {
        if (b < 0 || b >= n) throw std::invalid_argument("code entry out of range");
        ++degree[b];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int b : code.code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, b);
        if (--degree[b] == 1) leaves.insert(b);
    }
    // Final edge joins the two surviving vertices.
    int u = *leaves.begin();
    int v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return LabeledTree(n, std::move(edges));
}

BigInt count_trees_with_degrees(const TreeDegreeSequence& x) {
    const int n = x.n();
    if (n == 1) return 0;  // no degree vector sums to 0 with positive entries
    BigInt count = factorial(n - 2);
    for (int j = 0; j < n; ++j) count /= factorial(x.degree(j) - 1);
    return count;
}

namespace {

std::vector<int> base_code(const TreeDegreeSequence& x) {
    std::vector<int> code;
    code.reserve(x.n() - 2);
    for (int j = 0; j < x.n(); ++j)
        for (int r = 1; r < x.degree(j); ++r) code.push_back(j);
    return code;
}

}  // namespace

LabeledTree sample_tree(const TreeDegreeSequence& x, RandomSource& rng) {
    std::vector<int> code = base_code(x);
    for (int i = static_cast<int>(code.size()) - 1; i > 0; --i) {
        std::uniform_int_distribution<int> dist(0, i);
        std::swap(code[i], code[dist(rng)]);
    }
    return prufer_decode({x.n(), std::move(code)});
}

void enumerate_trees(const TreeDegreeSequence& x,
                     const std::function<void(const LabeledTree&)>& visit, std::int64_t cap) {
    if (count_trees_with_degrees(x) > cap) throw std::length_error("tree enumeration cap exceeded");
    std::vector<int> code = base_code(x);
    do {
        visit(prufer_decode({x.n(), code}));
    } while (std::next_permutation(code.begin(), code.end()));
}

std::vector<LabeledTree> enumerate_trees(const TreeDegreeSequence& x, std::int64_t cap) {
    std::vector<LabeledTree> out;
    enumerate_trees(x, [&](const LabeledTree& t) { out.push_back(t); }, cap);
    return out;
}

Rational forest_containment_probability(const TreeDegreeSequence& x, const Forest& forest) {
    const int n = x.n();
    if (forest.n() != n) throw std::invalid_argument("vertex count mismatch");
    for (int j = 0; j < n; ++j)
        if (forest.degrees()[j] > x.degree(j)) return 0;

    const int r = forest.component_count();
    if (r == 1) {
        // S is a spanning tree; a tree contains it iff it equals it.
        return Rational(1, count_trees_with_degrees(x));
    }

    // Component totals x'_i = sum_{j in S_i} (x_j - s_j).
    std::vector<long> component_total(r, 0);
    for (int j = 0; j < n; ++j)
        component_total[forest.component_of()[j]] += x.degree(j) - forest.degrees()[j];

    Rational prob = 1;
    for (int i = 0; i < r; ++i) {
        if (component_total[i] == 0) return 0;
        prob *= component_total[i];
    }
    prob /= Rational(falling_factorial(n - 2, n - r));
    for (int j = 0; j < n; ++j) {
        const int sj = forest.degrees()[j];
        if (sj == 0)
            prob /= x.degree(j);
        else
            prob *= Rational(falling_factorial(x.degree(j) - 1, sj - 1));
    }
    return prob;
}

Rational edge_adjacency_fraction(const TreeDegreeSequence& x, int j, int k) {
    if (j == k) throw std::invalid_argument("vertices must differ");
    if (x.n() < 3) throw std::invalid_argument("needs n >= 3");
    return Rational(x.degree(j) + x.degree(k) - 2, x.n() - 2);
}

double edge_functional(const LabeledTree& tree, std::span<const double> phi) {
    double sum = 0.0;
    for (const auto& [u, v] : tree.edges()) sum += phi[u] * phi[v];
    return sum;
}

double mean_edge_functional(const TreeDegreeSequence& x, std::span<const double> phi) {
    const int n = x.n();
    if (n < 3) throw std::invalid_argument("needs n >= 3");
    double phi_sum = 0.0, weighted = 0.0, weighted_sq = 0.0;
    for (int j = 0; j < n; ++j) {
        phi_sum += phi[j];
        weighted += (x.degree(j) - 1) * phi[j];
        weighted_sq += (x.degree(j) - 1) * phi[j] * phi[j];
    }
    return (phi_sum * weighted - weighted_sq) / (n - 2);
}

double phi_seminorm(std::span<const double> phi) {
    std::vector<double> sorted(phi.begin(), phi.end());
    std::sort(sorted.begin(), sorted.end());
    const double c = sorted[(sorted.size() - 1) / 2];  // lower median
    double sum = 0.0;
    for (double v : sorted) sum += std::abs(v - c);
    return sum;
}

}  // namespace treetau
