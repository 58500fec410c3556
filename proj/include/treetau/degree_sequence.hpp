#pragma once

#include <functional>
#include <vector>

#include "treetau/numeric.hpp"
#include "treetau/rng.hpp"

namespace treetau {

/// Summary statistics of a degree sequence. d_bar and r_variance are exact
/// rationals; the geometric mean is kept in log form only.
struct DegreeStats {
    Rational d_bar;
    double d_hat_log = 0.0;  // (1/n) sum ln d_j
    Rational r_variance;     // (1/n) sum (d_j - d_bar)^2
    int d_max = 0;
    long m = 0;
};

/// Vector of positive integer degrees with even sum. Immutable after
/// construction; construction validates.
class DegreeSequence {
  public:
    explicit DegreeSequence(std::vector<int> degrees);

    int n() const { return static_cast<int>(degrees_.size()); }
    long m() const { return m_; }
    int degree(int j) const { return degrees_[j]; }
    int max_degree() const { return d_max_; }
    long degree_sum() const { return 2 * m_; }
    const std::vector<int>& degrees() const { return degrees_; }

    const DegreeStats& stats() const { return stats_; }

  private:
    std::vector<int> degrees_;
    long m_ = 0;
    int d_max_ = 0;
    DegreeStats stats_;
};

/// Positive integer vector summing to 2n-2.
class TreeDegreeSequence {
  public:
    explicit TreeDegreeSequence(std::vector<int> x);

    int n() const { return static_cast<int>(x_.size()); }
    int degree(int j) const { return x_[j]; }
    const std::vector<int>& values() const { return x_; }

    bool operator==(const TreeDegreeSequence& other) const { return x_ == other.x_; }
    bool operator<(const TreeDegreeSequence& other) const { return x_ < other.x_; }

  private:
    std::vector<int> x_;
};

/// x_j <= d_j for all j.
bool is_suitable(const TreeDegreeSequence& x, const DegreeSequence& d);

/// Erdos-Gallai test (plus even sum, which holds by construction).
bool is_graphical(const DegreeSequence& d);

/// d_max^4 <= (d_bar - 2) n, evaluated exactly.
bool size_condition_holds(const DegreeSequence& d);

/// min{ d_max^4/((d-2)^2 n), d_max^3 ln n/((d-2)n), d_max (d-2) }.
/// Throws std::domain_error when d_bar <= 2.
double eta(const DegreeSequence& d);

/// All tree degree sequences x with 1 <= x_j <= d_j, in lexicographic order.
/// Throws std::length_error when n exceeds the cap.
void enumerate_suitable(const DegreeSequence& d,
                        const std::function<void(const TreeDegreeSequence&)>& visit,
                        int max_n = 12);
std::vector<TreeDegreeSequence> enumerate_suitable(const DegreeSequence& d, int max_n = 12);

/// X_j = |A_j intersect B| + 1 for a uniform (n-2)-subset B of a partition of
/// {1..(d_bar-1)n} into blocks of size d_j - 1. X - 1 is multivariate
/// hypergeometric; sum (X_j - 1) = n - 2 always.
TreeDegreeSequence sample_suitable_x(const DegreeSequence& d, RandomSource& rng);

/// E[(X_i - 1)_s (X_j - 1)_t] = (d_i-1)_s (d_j-1)_t (n-2)_{s+t} / ((d_bar-1)n)_{s+t}.
Rational joint_factorial_moment(const DegreeSequence& d, int i, int j, int s, int t);

}  // namespace treetau
