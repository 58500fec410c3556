#include "treetau/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

#include "treetau/rng.hpp"

namespace treetau {

Rational brute_expected_tau(const DegreeSequence& d, int max_n, long max_m) {
    BigInt total = 0;
    long count = 0;
    enumerate_graphs(d, [&](const SimpleGraph& g) {
        total += spanning_tree_count(g);
        ++count;
    }, max_n, max_m);
    if (count == 0) throw std::domain_error("degree sequence is not graphical");
    return Rational(total, count);
}

std::map<TreeDegreeSequence, Rational> brute_expected_tau_by_x(const DegreeSequence& d,
                                                               int max_n, long max_m) {
    std::map<TreeDegreeSequence, BigInt> totals;
    long count = 0;
    enumerate_graphs(d, [&](const SimpleGraph& g) {
        for (const auto& [x, c] : spanning_trees_by_degree(g, max_n)) totals[x] += c;
        ++count;
    }, max_n, max_m);
    if (count == 0) throw std::domain_error("degree sequence is not graphical");
    std::map<TreeDegreeSequence, Rational> out;
    for (const auto& [x, total] : totals) out.emplace(x, Rational(total, count));
    return out;
}

Rational brute_containment_probability(const DegreeSequence& d, const LabeledTree& tree,
                                       int max_n, long max_m) {
    long hits = 0, count = 0;
    enumerate_graphs(d, [&](const SimpleGraph& g) {
        if (contains_subgraph(g, tree)) ++hits;
        ++count;
    }, max_n, max_m);
    if (count == 0) throw std::domain_error("degree sequence is not graphical");
    return Rational(hits, count);
}

MonteCarloEstimate mc_expected_tau(const DegreeSequence& d, long samples, std::uint64_t seed,
                                   int workers, int exact_threshold) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    auto run_chunk = [&](int worker, long chunk) {
        RandomSource rng = worker_rng(seed, static_cast<std::uint64_t>(worker));
        std::vector<double> log_taus;  // -inf marks a disconnected sample
        log_taus.reserve(chunk);
        for (long i = 0; i < chunk; ++i) {
            SimpleGraph g = sample_simple_graph(d, rng);
            if (g.is_connected())
                log_taus.push_back(spanning_tree_count_log_auto(g, exact_threshold));
            else
                log_taus.push_back(-std::numeric_limits<double>::infinity());
        }
        return log_taus;
    };

    std::vector<std::future<std::vector<double>>> futures;
    const long base = samples / workers;
    for (int w = 0; w < workers; ++w) {
        const long chunk = base + (w < samples % workers ? 1 : 0);
        futures.push_back(std::async(std::launch::async, run_chunk, w, chunk));
    }
    std::vector<double> log_taus;
    log_taus.reserve(samples);
    for (auto& f : futures)
        for (double v : f.get()) log_taus.push_back(v);

    MonteCarloEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.workers = workers;
    const double log_sum = log_sum_exp(log_taus);
    est.mean_log = log_sum - std::log(static_cast<double>(samples));
    if (std::isfinite(est.mean_log)) {
        // Delta method on ln(mean): SE = sd(tau) / (mean(tau) sqrt(K)),
        // computed on values shifted by the log-mean.
        double var = 0.0;
        for (double lt : log_taus) {
            const double w = std::isfinite(lt) ? std::exp(lt - est.mean_log) : 0.0;
            var += (w - 1.0) * (w - 1.0);
        }
        var /= static_cast<double>(samples > 1 ? samples - 1 : 1);
        est.std_error = std::sqrt(var / static_cast<double>(samples));
    } else {
        est.std_error = std::numeric_limits<double>::infinity();
    }
    return est;
}

double connectivity_frequency(const DegreeSequence& d, long samples, std::uint64_t seed) {
    RandomSource rng = worker_rng(seed, 0);
    long connected = 0;
    for (long i = 0; i < samples; ++i)
        if (sample_simple_graph(d, rng).is_connected()) ++connected;
    return static_cast<double>(connected) / static_cast<double>(samples);
}

ComparisonReport compare(const DegreeSequence& d, const CompareConfig& config) {
    ComparisonReport rep;
    rep.band_multiplier = config.band_multiplier;
    if (config.truth == TruthMode::brute) {
        const Rational truth = brute_expected_tau(d);
        rep.truth_log = truth == 0 ? -std::numeric_limits<double>::infinity()
                                   : std::log(to_double(truth));
    } else {
        rep.truth_log =
            mc_expected_tau(d, config.samples, config.seed, config.workers).mean_log;
    }
    const AsymptoticEstimate formula = expected_tau_asymptotic(d, Mode::permissive);
    rep.formula_log = formula.log_value;
    rep.band = formula.error_exponent;
    rep.ratio_log = rep.truth_log - rep.formula_log;
    rep.within_band = std::abs(rep.ratio_log) <= config.band_multiplier * rep.band;
    return rep;
}

}  // namespace treetau
