#include "treetau/graphs.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace treetau {

namespace {

std::vector<Edge> sort_edges(int n, std::vector<Edge> edges, bool allow_loops) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("bad edge endpoints");
        if (!allow_loops && u == v) throw std::invalid_argument("loop in simple graph");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(sort_edges(n, std::move(edges), true)) {}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        deg[u] += 1;
        deg[v] += 1;  // a loop (u == v) counts twice in total
    }
    return deg;
}

bool Multigraph::is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].first == edges_[i].second) return false;
        if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    return true;
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(sort_edges(n, std::move(edges), false)) {
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("repeated edge in simple graph");
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool SimpleGraph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

Multigraph configuration_sample(const DegreeSequence& d, RandomSource& rng) {
    const long points = d.degree_sum();
    std::vector<int> cell(points);
    long p = 0;
    for (int j = 0; j < d.n(); ++j)
        for (int r = 0; r < d.degree(j); ++r) cell[p++] = j;
    // Uniform perfect matching: shuffle the points and pair consecutively.
    for (long i = points - 1; i > 0; --i) {
        std::uniform_int_distribution<long> dist(0, i);
        std::swap(cell[i], cell[dist(rng)]);
    }
    std::vector<Edge> edges;
    edges.reserve(points / 2);
    for (long i = 0; i < points; i += 2) edges.emplace_back(cell[i], cell[i + 1]);
    return Multigraph(d.n(), std::move(edges));
}

SimpleGraph sample_simple_graph(const DegreeSequence& d, RandomSource& rng, long retry_limit) {
    for (long attempt = 0; attempt < retry_limit; ++attempt) {
        Multigraph g = configuration_sample(d, rng);
        if (g.is_simple()) return SimpleGraph(g.n(), g.edges());
    }
    throw std::runtime_error("sample_simple_graph: retry limit exhausted");
}

namespace {

void enumerate_graphs_rec(std::vector<int>& residual, std::vector<std::vector<char>>& adjacent,
                          std::vector<Edge>& edges, int n,
                          const std::function<void(const SimpleGraph&)>& visit) {
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (residual[v] > 0) {
            u = v;
            break;
        }
    if (u < 0) {
        visit(SimpleGraph(n, edges));
        return;
    }
    // Saturate u completely: choose residual[u] neighbors among the later
    // unsaturated, non-adjacent vertices.
    std::vector<int> candidates;
    for (int v = u + 1; v < n; ++v)
        if (residual[v] > 0 && !adjacent[u][v]) candidates.push_back(v);
    const int need = residual[u];
    if (static_cast<int>(candidates.size()) < need) return;

    std::vector<int> pick(need);
    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == need) {
            residual[u] = 0;
            for (int v : pick) {
                --residual[v];
                adjacent[u][v] = adjacent[v][u] = 1;
                edges.emplace_back(u, v);
            }
            enumerate_graphs_rec(residual, adjacent, edges, n, visit);
            residual[u] = need;
            for (int v : pick) {
                ++residual[v];
                adjacent[u][v] = adjacent[v][u] = 0;
                edges.pop_back();
            }
            return;
        }
        for (int i = start; i <= static_cast<int>(candidates.size()) - (need - depth); ++i) {
            pick[depth] = candidates[i];
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
}

}  // namespace

void enumerate_graphs(const DegreeSequence& d,
                      const std::function<void(const SimpleGraph&)>& visit, int max_n,
                      long max_m) {
    if (d.n() > max_n || d.m() > max_m) throw std::length_error("graph enumeration cap exceeded");
    std::vector<int> residual(d.degrees());
    std::vector<std::vector<char>> adjacent(d.n(), std::vector<char>(d.n(), 0));
    std::vector<Edge> edges;
    enumerate_graphs_rec(residual, adjacent, edges, d.n(), visit);
}

std::vector<SimpleGraph> enumerate_graphs(const DegreeSequence& d, int max_n, long max_m) {
    std::vector<SimpleGraph> out;
    enumerate_graphs(d, [&](const SimpleGraph& g) { out.push_back(g); }, max_n, max_m);
    return out;
}

namespace {

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced_laplacian(const SimpleGraph& g) {
    const int k = g.n() - 1;  // drop the last row and column
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> lap =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(k, k);
    for (const auto& [u, v] : g.edges()) {
        if (u < k) lap(u, u) += 1;
        if (v < k) lap(v, v) += 1;
        if (u < k && v < k) {
            lap(u, v) -= 1;
            lap(v, u) -= 1;
        }
    }
    return lap;
}

/// Fraction-free Bareiss elimination; exact determinant for integer scalars.
BigInt bareiss_determinant(Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> m) {
    const Eigen::Index k = m.rows();
    if (k == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (Eigen::Index p = 0; p < k - 1; ++p) {
        if (m(p, p) == 0) {
            Eigen::Index swap_row = -1;
            for (Eigen::Index i = p + 1; i < k; ++i)
                if (m(i, p) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            m.row(p).swap(m.row(swap_row));
            sign = -sign;
        }
        for (Eigen::Index i = p + 1; i < k; ++i)
            for (Eigen::Index j = p + 1; j < k; ++j)
                m(i, j) = (m(p, p) * m(i, j) - m(i, p) * m(p, j)) / prev;
        prev = m(p, p);
    }
    return sign * m(k - 1, k - 1);
}

}  // namespace

BigInt spanning_tree_count(const SimpleGraph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (g.n() == 1) return 1;
    return bareiss_determinant(reduced_laplacian<BigInt>(g));
}

double spanning_tree_count_log(const SimpleGraph& g) {
    if (!g.is_connected()) throw std::domain_error("spanning_tree_count_log: graph disconnected");
    if (g.n() == 1) return 0.0;
    Eigen::MatrixXd lap = reduced_laplacian<double>(g);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(lap);
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < lap.rows(); ++i)
        log_det += std::log(std::abs(lu.matrixLU()(i, i)));
    return log_det;
}

double spanning_tree_count_log_auto(const SimpleGraph& g, int exact_threshold) {
    if (g.n() <= exact_threshold) {
        BigInt tau = spanning_tree_count(g);
        if (tau == 0) throw std::domain_error("spanning_tree_count_log_auto: graph disconnected");
        return log_bigint(tau);
    }
    return spanning_tree_count_log(g);
}

bool contains_subgraph(const SimpleGraph& g, const LabeledTree& tree) {
    if (g.n() != tree.n()) throw std::invalid_argument("vertex count mismatch");
    for (const auto& [u, v] : tree.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

std::map<TreeDegreeSequence, BigInt> spanning_trees_by_degree(const SimpleGraph& g, int max_n) {
    std::map<TreeDegreeSequence, BigInt> out;
    if (g.n() < 2 || !g.is_connected()) return out;
    DegreeSequence host(g.degrees());
    enumerate_suitable(host, [&](const TreeDegreeSequence& x) {
        BigInt count = 0;
        enumerate_trees(x, [&](const LabeledTree& t) {
            if (contains_subgraph(g, t)) ++count;
        });
        if (count > 0) out.emplace(x, count);
    }, max_n);
    return out;
}

}  // namespace treetau
