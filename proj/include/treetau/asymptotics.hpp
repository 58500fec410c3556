#pragma once

#include <vector>

#include "treetau/degree_sequence.hpp"
#include "treetau/graphs.hpp"
#include "treetau/numeric.hpp"
#include "treetau/trees.hpp"

namespace treetau {

/// A value carried in natural-log space together with the magnitude of its
/// O(.) band (implied constant 1). condition_ok records whether the formula's
/// hypothesis held; permissive evaluation computes anyway and flags.
struct AsymptoticEstimate {
    double log_value = 0.0;
    double error_exponent = 0.0;
    bool condition_ok = true;
};

enum class Mode { strict, permissive };

/// lambda_0 = (1/(2 d_bar n)) sum (d_j)_2.
Rational lambda0(const DegreeSequence& d);

/// lambda(x) = (1/(2(d_bar-2)n + 4)) sum (d_j - x_j)_2.
/// Throws std::domain_error when the denominator is nonpositive.
Rational lambda_x(const DegreeSequence& d, const TreeDegreeSequence& x);

/// mu(T) = (1/((d_bar-2)n + 2)) sum over edges {i,j} of (d_i-x_i)(d_j-x_j),
/// with x the degree sequence of T.
Rational mu_T(const DegreeSequence& d, const LabeledTree& tree);

/// Mean of mu(T) over T_x, in closed form:
/// sum_{j != k} (x_j-1)(d_j-x_j)(d_k-x_k) / ((n-2)((d_bar-2)n + 2)).
Rational mu_bar(const DegreeSequence& d, const TreeDegreeSequence& x);

/// (1/n) sum (x_j-1)(d_j-x_j) -- the simplified form of mu_bar used in the
/// single-x expectation's exponent.
Rational mu_bar_approx(const DegreeSequence& d, const TreeDegreeSequence& x);

/// f(x) = lambda0 + lambda0^2 - lambda(x) - lambda(x)^2.
double f_of_x(const DegreeSequence& d, const TreeDegreeSequence& x);

/// g(x) = f(x) - mu_bar(x).
double g_of_x(const DegreeSequence& d, const TreeDegreeSequence& x);

/// Average of e^{-mu(T)} over T_x, by exhaustive enumeration.
double beta_exact(const DegreeSequence& d, const TreeDegreeSequence& x,
                  std::int64_t cap = 10'000'000);

/// beta(x) = exp(-mu_bar(x) + O(band)); the band is the smaller of the
/// enumeration-free branches.
AsymptoticEstimate beta_approx(const DegreeSequence& d, const TreeDegreeSequence& x);

/// Count of simple graphs with degree sequence g avoiding the edges of
/// forbidden: (2m)!/(m! 2^m prod g_i!) exp(-lambda - lambda^2 - mu), band
/// Delta_hat^2/m. condition_ok reports the Delta_hat <= eps_1 m check.
AsymptoticEstimate estimate_simple_graph_count(const std::vector<int>& g,
                                               const SimpleGraph& forbidden);

/// P(d, T): probability that the uniform random graph with degree sequence d
/// contains the tree T.
AsymptoticEstimate estimate_containment_probability(const DegreeSequence& d,
                                                    const LabeledTree& tree);

/// ln H_d, the leading-order prefactor, assembled entirely in log space.
double H_d_log(const DegreeSequence& d);

/// E g(X) closed form:
/// (6d^2-14d+7)/(4(d-1)^2) + R/(2(d-1)^3) + (2d^2-4d+1)R^2/(4(d-1)^4 d^2),
/// band d_max^3/(d_bar n). The value lives in log_value (it is already an
/// exponent).
AsymptoticEstimate expected_g_closed_form(const DegreeSequence& d);

/// ln E tau_d per the headline formula; band d_max^4/((d_bar-2)n) + eta.
AsymptoticEstimate expected_tau_asymptotic(const DegreeSequence& d,
                                           Mode mode = Mode::strict);

/// ln E tau_d(x) for a fixed suitable tree degree sequence.
AsymptoticEstimate expected_tau_for_tree_degrees(const DegreeSequence& d,
                                                 const TreeDegreeSequence& x,
                                                 Mode mode = Mode::strict);

/// Near-2 regime, d_bar = 2 + 2x/n: ln E tau_d with band d_max^4/x + x^3/n^2.
/// Throws std::invalid_argument when x_param disagrees with d.
AsymptoticEstimate expected_tau_near_two(const DegreeSequence& d, double x_param,
                                         Mode mode = Mode::strict);

}  // namespace treetau
