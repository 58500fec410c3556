#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "treetau/degree_sequence.hpp"
#include "treetau/numeric.hpp"
#include "treetau/rng.hpp"

namespace treetau {

using Edge = std::pair<int, int>;  // unordered, stored with first < second, 0-based

/// Tree on {0..n-1} held as a sorted edge list; equality is set equality.
class LabeledTree {
  public:
    LabeledTree(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    TreeDegreeSequence degree_sequence() const;

    bool operator==(const LabeledTree& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator<(const LabeledTree& other) const { return edges_ < other.edges_; }

  private:
    int n_;
    std::vector<Edge> edges_;
};

/// Length-(n-2) sequence over {0..n-1}; vertex j appears deg(j) - 1 times.
struct PruferCode {
    int n = 0;
    std::vector<int> code;  // size n - 2
};

/// Acyclic edge set on {0..n-1}; isolated vertices are trivial components.
class Forest {
  public:
    Forest(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    /// Component index per vertex, components numbered 0..component_count-1.
    const std::vector<int>& component_of() const { return component_of_; }
    int component_count() const { return component_count_; }

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
    std::vector<int> component_of_;
    int component_count_ = 0;
};

/// Record the neighbor of the lowest-labelled leaf, delete it, repeat until a
/// single edge remains.
PruferCode prufer_encode(const LabeledTree& tree);
LabeledTree prufer_decode(const PruferCode& code);

/// |T_x| = (n-2)! / prod (x_j - 1)!.
BigInt count_trees_with_degrees(const TreeDegreeSequence& x);

/// Exactly uniform over T_x: shuffle the fixed code multiset and decode.
LabeledTree sample_tree(const TreeDegreeSequence& x, RandomSource& rng);

/// Every tree of T_x once, by multiset permutations of the code in
/// lexicographic order. Throws std::length_error when |T_x| exceeds the cap.
void enumerate_trees(const TreeDegreeSequence& x,
                     const std::function<void(const LabeledTree&)>& visit,
                     std::int64_t cap = 10'000'000);
std::vector<LabeledTree> enumerate_trees(const TreeDegreeSequence& x,
                                         std::int64_t cap = 10'000'000);

/// Probability that a uniform random tree in T_x contains the forest S.
/// Multi-component S uses the closed form
///   [prod_i sum_{j in S_i} (x_j - s_j)] / (n-2)_{n-r} * prod_j (x_j-1)_{s_j-1}
/// with (x_j-1)_{s_j-1} read as 1/x_j when s_j = 0. A single-component S is a
/// spanning tree and is handled by direct membership.
Rational forest_containment_probability(const TreeDegreeSequence& x, const Forest& forest);

/// Fraction of trees in T_x with j and k adjacent: (x_j + x_k - 2)/(n - 2).
Rational edge_adjacency_fraction(const TreeDegreeSequence& x, int j, int k);

/// F(T) = sum over edges {j,k} of phi(j) phi(k).
double edge_functional(const LabeledTree& tree, std::span<const double> phi);

/// Average of F over T_x:
/// (1/(n-2)) [ (sum phi)(sum (x_j-1) phi_j) - sum (x_j-1) phi_j^2 ].
double mean_edge_functional(const TreeDegreeSequence& x, std::span<const double> phi);

/// min_c sum |phi_j - c|, attained at any median (lower median used).
double phi_seminorm(std::span<const double> phi);

}  // namespace treetau
