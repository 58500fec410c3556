#pragma once

#include <functional>
#include <map>
#include <vector>

#include "treetau/degree_sequence.hpp"
#include "treetau/numeric.hpp"
#include "treetau/rng.hpp"
#include "treetau/trees.hpp"

namespace treetau {

/// Edge multiset with loops allowed; a loop contributes 2 to its degree.
class Multigraph {
  public:
    Multigraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> degrees() const;
    bool is_simple() const;

  private:
    int n_;
    std::vector<Edge> edges_;  // sorted, u <= v, duplicates allowed
};

/// Loop-free edge set without multiplicity, sorted edge list.
class SimpleGraph {
  public:
    SimpleGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> degrees() const;
    bool has_edge(int u, int v) const;
    bool is_connected() const;

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator<(const SimpleGraph& other) const { return edges_ < other.edges_; }

  private:
    int n_;
    std::vector<Edge> edges_;
};

/// Uniform random pairing of sum(d) labelled points grouped in cells of size
/// d_j, projected to a multigraph.
Multigraph configuration_sample(const DegreeSequence& d, RandomSource& rng);

/// Rejection through the configuration model until simple; uniform over the
/// set of simple graphs with degree sequence d. Throws std::runtime_error when
/// the retry limit is exhausted.
SimpleGraph sample_simple_graph(const DegreeSequence& d, RandomSource& rng,
                                long retry_limit = 1'000'000);

/// All simple graphs with degree sequence d, each exactly once, by
/// backtracking over the lowest unsaturated vertex. Throws std::length_error
/// past the caps.
void enumerate_graphs(const DegreeSequence& d,
                      const std::function<void(const SimpleGraph&)>& visit, int max_n = 10,
                      long max_m = 15);
std::vector<SimpleGraph> enumerate_graphs(const DegreeSequence& d, int max_n = 10,
                                          long max_m = 15);

/// Exact tau(G) as the determinant of the reduced Laplacian, fraction-free
/// elimination over big integers. 0 iff disconnected (for n >= 2).
BigInt spanning_tree_count(const SimpleGraph& g);

/// ln tau(G) through pivoted floating elimination. Throws std::domain_error on
/// a disconnected graph.
double spanning_tree_count_log(const SimpleGraph& g);

/// Exact or logarithmic path depending on size; returns ln tau.
/// exact_threshold mirrors the default switchover at n = 64.
double spanning_tree_count_log_auto(const SimpleGraph& g, int exact_threshold = 64);

bool contains_subgraph(const SimpleGraph& g, const LabeledTree& tree);

/// Number of spanning trees per tree degree sequence, by enumerating T_x and
/// testing containment. Sums to spanning_tree_count(G).
std::map<TreeDegreeSequence, BigInt> spanning_trees_by_degree(const SimpleGraph& g,
                                                              int max_n = 10);

}  // namespace treetau
