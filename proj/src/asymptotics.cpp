#include "treetau/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace treetau {

namespace {

void require_suitable(const DegreeSequence& d, const TreeDegreeSequence& x) {
    if (!is_suitable(x, d)) throw std::invalid_argument("x is not suitable for d");
}

double require_mean_above_two(const DegreeSequence& d) {
    const Rational excess = d.stats().d_bar - 2;
    if (excess <= 0) throw std::domain_error("formula requires mean degree > 2");
    return to_double(excess);
}

}  // namespace

Rational lambda0(const DegreeSequence& d) {
    BigInt sum = 0;
    for (int dj : d.degrees()) sum += BigInt(dj) * (dj - 1);
    return Rational(sum, 2 * BigInt(d.degree_sum()));
}

Rational lambda_x(const DegreeSequence& d, const TreeDegreeSequence& x) {
    require_suitable(d, x);
    // 2(d_bar-2)n + 4 = 2 sum(d) - 4n + 4
    const long denom = 2 * d.degree_sum() - 4L * d.n() + 4;
    if (denom <= 0) throw std::domain_error("lambda_x: nonpositive denominator");
    BigInt sum = 0;
    for (int j = 0; j < d.n(); ++j) {
        const long gap = d.degree(j) - x.degree(j);
        sum += BigInt(gap) * (gap - 1);
    }
    return Rational(sum, denom);
}

Rational mu_T(const DegreeSequence& d, const LabeledTree& tree) {
    const TreeDegreeSequence x = tree.degree_sequence();
    require_suitable(d, x);
    const long denom = d.degree_sum() - 2L * d.n() + 2;
    if (denom <= 0) throw std::domain_error("mu_T: nonpositive denominator");
    BigInt sum = 0;
    for (const auto& [u, v] : tree.edges())
        sum += BigInt(d.degree(u) - x.degree(u)) * (d.degree(v) - x.degree(v));
    return Rational(sum, denom);
}

Rational mu_bar(const DegreeSequence& d, const TreeDegreeSequence& x) {
    require_suitable(d, x);
    const int n = d.n();
    if (n < 3) throw std::invalid_argument("mu_bar needs n >= 3");
    const long denom_part = d.degree_sum() - 2L * n + 2;
    if (denom_part <= 0) throw std::domain_error("mu_bar: nonpositive denominator");
    // sum_{j != k} (x_j-1)(d_j-x_j)(d_k-x_k)
    //   = sum_j (x_j-1)(d_j-x_j) (S - (d_j-x_j)),  S = sum_k (d_k-x_k).
    long gap_sum = 0;
    for (int j = 0; j < n; ++j) gap_sum += d.degree(j) - x.degree(j);
    BigInt sum = 0;
    for (int j = 0; j < n; ++j) {
        const long gap = d.degree(j) - x.degree(j);
        sum += BigInt(x.degree(j) - 1) * gap * (gap_sum - gap);
    }
    return Rational(sum, BigInt(n - 2) * denom_part);
}

Rational mu_bar_approx(const DegreeSequence& d, const TreeDegreeSequence& x) {
    require_suitable(d, x);
    BigInt sum = 0;
    for (int j = 0; j < d.n(); ++j)
        sum += BigInt(x.degree(j) - 1) * (d.degree(j) - x.degree(j));
    return Rational(sum, d.n());
}

double f_of_x(const DegreeSequence& d, const TreeDegreeSequence& x) {
    const Rational l0 = lambda0(d);
    const Rational lx = lambda_x(d, x);
    return to_double(l0 + l0 * l0 - lx - lx * lx);
}

double g_of_x(const DegreeSequence& d, const TreeDegreeSequence& x) {
    return f_of_x(d, x) - to_double(mu_bar(d, x));
}

double beta_exact(const DegreeSequence& d, const TreeDegreeSequence& x, std::int64_t cap) {
    require_suitable(d, x);
    double sum = 0.0;
    std::int64_t count = 0;
    enumerate_trees(x, [&](const LabeledTree& t) {
        sum += std::exp(-to_double(mu_T(d, t)));
        ++count;
    }, cap);
    return sum / static_cast<double>(count);
}

AsymptoticEstimate beta_approx(const DegreeSequence& d, const TreeDegreeSequence& x) {
    const double excess = require_mean_above_two(d);
    const double dm = d.max_degree();
    const double n = d.n();
    AsymptoticEstimate est;
    est.log_value = -to_double(mu_bar(d, x));
    const double branch1 = dm * dm * dm * dm / (excess * excess * n);
    const double branch2 = dm * dm * dm * std::log(n) / (excess * n);
    const double branch3 = dm * dm / (excess * n) + dm * excess;
    est.error_exponent = std::min({branch1, branch2, branch3});
    return est;
}

AsymptoticEstimate estimate_simple_graph_count(const std::vector<int>& g,
                                               const SimpleGraph& forbidden) {
    const int n = static_cast<int>(g.size());
    if (forbidden.n() != n) throw std::invalid_argument("vertex count mismatch");
    long sum = 0;
    int g_max = 0;
    for (int gi : g) {
        if (gi < 0) throw std::invalid_argument("degrees must be nonnegative");
        sum += gi;
        g_max = std::max(g_max, gi);
    }
    if (sum % 2 != 0) throw std::invalid_argument("degree sum must be even");
    if (g_max < 1) throw std::invalid_argument("needs g_max >= 1");
    const double m = static_cast<double>(sum) / 2.0;

    int x_max = 0;
    for (int dx : forbidden.degrees()) x_max = std::max(x_max, dx);
    const double delta_hat = 2.0 + g_max * (1.5 * g_max + x_max + 1.0);

    double lambda = 0.0;
    for (int gi : g) lambda += static_cast<double>(gi) * (gi - 1);
    lambda /= 4.0 * m;
    double mu = 0.0;
    for (const auto& [u, v] : forbidden.edges()) mu += static_cast<double>(g[u]) * g[v];
    mu /= 2.0 * m;

    double log_front = std::lgamma(2.0 * m + 1.0) - std::lgamma(m + 1.0) - m * std::log(2.0);
    for (int gi : g) log_front -= std::lgamma(gi + 1.0);

    AsymptoticEstimate est;
    est.log_value = log_front - lambda - lambda * lambda - mu;
    est.error_exponent = delta_hat * delta_hat / m;
    est.condition_ok = delta_hat < (2.0 / 3.0) * m;
    return est;
}

AsymptoticEstimate estimate_containment_probability(const DegreeSequence& d,
                                                    const LabeledTree& tree) {
    const double excess = require_mean_above_two(d);
    const TreeDegreeSequence x = tree.degree_sequence();
    require_suitable(d, x);
    const int n = d.n();
    const double dn = static_cast<double>(d.degree_sum());

    double log_front = log_falling_factorial(dn / 2.0, n - 1) + (n - 1) * std::log(2.0) -
                       log_falling_factorial(dn, 2 * n - 2);
    double log_products = 0.0;
    for (int j = 0; j < n; ++j)
        log_products += log_falling_factorial(d.degree(j), x.degree(j));

    const Rational l0 = lambda0(d);
    const Rational lx = lambda_x(d, x);
    const double exponent = to_double(l0 + l0 * l0 - lx - lx * lx - mu_T(d, tree));

    AsymptoticEstimate est;
    est.log_value = log_front + log_products + exponent;
    const double dm = d.max_degree();
    est.error_exponent = dm * dm * dm * dm / (excess * n);
    est.condition_ok = size_condition_holds(d);
    return est;
}

double H_d_log(const DegreeSequence& d) {
    const double excess = require_mean_above_two(d);
    const double dbar = to_double(d.stats().d_bar);
    const double n = d.n();
    const double per_vertex = d.stats().d_hat_log + (dbar - 1.0) * std::log(dbar - 1.0) -
                              (dbar / 2.0) * std::log(dbar) -
                              (dbar / 2.0 - 1.0) * std::log(excess);
    return 0.5 * std::log(dbar - 1.0) - 1.5 * std::log(excess) - std::log(n) + n * per_vertex;
}

AsymptoticEstimate expected_g_closed_form(const DegreeSequence& d) {
    require_mean_above_two(d);
    const Rational dbar = d.stats().d_bar;
    const Rational r_var = d.stats().r_variance;
    const Rational dm1 = dbar - 1;
    const Rational term1 = (6 * dbar * dbar - 14 * dbar + 7) / (4 * dm1 * dm1);
    const Rational term2 = r_var / (2 * dm1 * dm1 * dm1);
    const Rational term3 = (2 * dbar * dbar - 4 * dbar + 1) * r_var * r_var /
                           (4 * dm1 * dm1 * dm1 * dm1 * dbar * dbar);
    AsymptoticEstimate est;
    est.log_value = to_double(term1 + term2 + term3);
    const double dm = d.max_degree();
    est.error_exponent = dm * dm * dm / (to_double(dbar) * d.n());
    return est;
}

namespace {

bool check_condition(const DegreeSequence& d, Mode mode, const char* what) {
    const bool ok = size_condition_holds(d);
    if (!ok && mode == Mode::strict)
        throw std::domain_error(std::string(what) + ": d_max^4 <= (d_bar-2)n violated");
    return ok;
}

}  // namespace

AsymptoticEstimate expected_tau_asymptotic(const DegreeSequence& d, Mode mode) {
    const double excess = require_mean_above_two(d);
    const bool ok = check_condition(d, mode, "expected_tau_asymptotic");
    AsymptoticEstimate est;
    est.log_value = H_d_log(d) + expected_g_closed_form(d).log_value;
    const double dm = d.max_degree();
    est.error_exponent = dm * dm * dm * dm / (excess * d.n()) + eta(d);
    est.condition_ok = ok;
    return est;
}

AsymptoticEstimate expected_tau_for_tree_degrees(const DegreeSequence& d,
                                                 const TreeDegreeSequence& x, Mode mode) {
    const double excess = require_mean_above_two(d);
    require_suitable(d, x);
    const bool ok = check_condition(d, mode, "expected_tau_for_tree_degrees");
    const int n = d.n();

    double log_binomials = -log_binomial(static_cast<double>(d.degree_sum() - n), n - 2);
    for (int j = 0; j < n; ++j)
        log_binomials += log_binomial(d.degree(j) - 1, x.degree(j) - 1);

    const Rational dbar = d.stats().d_bar;
    const Rational r_var = d.stats().r_variance;
    const Rational shifted = r_var + dbar * dbar;
    const Rational lx = lambda_x(d, x);
    const Rational exponent = shifted * shifted / (4 * dbar * dbar) - Rational(1, 4) - lx -
                              lx * lx - mu_bar_approx(d, x);

    AsymptoticEstimate est;
    est.log_value = H_d_log(d) + log_binomials + to_double(exponent);
    const double dm = d.max_degree();
    est.error_exponent = dm * dm * dm * dm / (excess * n) + eta(d);
    est.condition_ok = ok;
    return est;
}

AsymptoticEstimate expected_tau_near_two(const DegreeSequence& d, double x_param, Mode mode) {
    const int n = d.n();
    // d_bar = 2 + 2x/n means x = (sum(d) - 2n)/2 exactly.
    const double x_from_d = static_cast<double>(d.degree_sum() - 2L * n) / 2.0;
    if (std::abs(x_param - x_from_d) > 1e-9)
        throw std::invalid_argument("expected_tau_near_two: x inconsistent with d");
    if (x_from_d <= 0) throw std::domain_error("expected_tau_near_two requires mean degree > 2");

    const double dm = d.max_degree();
    const bool admissible = (dm * dm * dm * dm / 2.0 <= x_param) && (x_param <= std::sqrt(n));
    if (!admissible && mode == Mode::strict)
        throw std::domain_error("expected_tau_near_two: d_max^4/2 <= x <= sqrt(n) violated");

    const double r_var = to_double(d.stats().r_variance);
    AsymptoticEstimate est;
    est.log_value = -std::log(static_cast<double>(n)) + x_param * (1.0 - std::log(2.0)) +
                    (1.5 + x_param) * std::log(n / (2.0 * x_param)) +
                    n * (d.stats().d_hat_log - std::log(2.0)) +
                    (6.0 + r_var) * (2.0 + r_var) / 16.0 +
                    1.5 * x_param * x_param / static_cast<double>(n);
    est.error_exponent = dm * dm * dm * dm / x_param +
                         x_param * x_param * x_param / (static_cast<double>(n) * n);
    est.condition_ok = admissible;
    return est;
}

}  // namespace treetau
