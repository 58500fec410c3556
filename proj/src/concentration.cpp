#include "treetau/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "treetau/numeric.hpp"

namespace treetau {

double l_phi(const PhiSpec& phi) {
    const double width = phi.b - phi.a;
    if (width < 0) throw std::invalid_argument("l_phi: b < a");
    const double n = static_cast<double>(phi.values.size());
    return width * width * width *
           std::min(width * n, phi_seminorm(phi.values) * (std::log(n) + 2.0));
}

namespace {

ConcentrationReport report_from_values(const std::vector<double>& f_values, int xi,
                                       double scale) {
    if (xi != 1 && xi != -1) throw std::invalid_argument("xi must be +1 or -1");
    ConcentrationReport rep;
    rep.samples = static_cast<long>(f_values.size());
    rep.scale = scale;

    double mean = 0.0;
    for (double f : f_values) mean += f;
    mean /= static_cast<double>(f_values.size());
    rep.empirical_mean = mean;

    std::vector<double> scaled(f_values.size());
    for (std::size_t i = 0; i < f_values.size(); ++i) scaled[i] = xi * f_values[i];
    rep.exp_mean_log = log_sum_exp(scaled) - std::log(static_cast<double>(f_values.size()));
    rep.k_hat = rep.exp_mean_log - xi * mean;

    double max_dev = 0.0;
    for (double f : f_values) max_dev = std::max(max_dev, std::abs(f - mean));
    const int grid = 20;
    for (int i = 1; i <= grid; ++i) {
        TailEntry entry;
        entry.t = max_dev * static_cast<double>(i) / grid;
        if (entry.t <= 0.0) entry.t = 1e-12;
        long hits = 0;
        for (double f : f_values)
            if (std::abs(f - mean) > entry.t) ++hits;
        entry.empirical_prob = static_cast<double>(hits) / static_cast<double>(f_values.size());
        entry.bound = scale > 0.0 ? 2.0 * std::exp(-2.0 * entry.t * entry.t / scale)
                                  : (hits > 0 ? 0.0 : 2.0);
        entry.violated = entry.empirical_prob > entry.bound;
        rep.tail_table.push_back(entry);
    }
    return rep;
}

}  // namespace

ConcentrationReport tree_concentration_experiment(const TreeDegreeSequence& x,
                                                  const PhiSpec& phi, int xi, long samples,
                                                  RandomSource& rng,
                                                  std::int64_t exhaustive_cap) {
    if (static_cast<int>(phi.values.size()) != x.n())
        throw std::invalid_argument("phi size mismatch");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");

    std::vector<double> f_values;
    bool exhaustive = count_trees_with_degrees(x) <= exhaustive_cap;
    if (exhaustive) {
        enumerate_trees(x, [&](const LabeledTree& t) {
            f_values.push_back(edge_functional(t, phi.values));
        }, exhaustive_cap);
    } else {
        f_values.reserve(samples);
        for (long i = 0; i < samples; ++i)
            f_values.push_back(edge_functional(sample_tree(x, rng), phi.values));
    }
    ConcentrationReport rep = report_from_values(f_values, xi, l_phi(phi));
    rep.exhaustive = exhaustive;
    return rep;
}

namespace {

std::vector<int> sample_subset(long N, long r, RandomSource& rng) {
    // Floyd's algorithm, result sorted.
    std::vector<int> out;
    out.reserve(r);
    std::vector<char> taken(N, 0);
    for (long i = N - r; i < N; ++i) {
        std::uniform_int_distribution<long> dist(0, i);
        long t = dist(rng);
        if (taken[t]) t = i;
        taken[t] = 1;
        out.push_back(static_cast<int>(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ConcentrationReport subset_function_experiment(
    long N, long r, const std::function<double(std::span<const int>)>& h, double alpha,
    long samples, RandomSource& rng) {
    if (r < 1 || r > N) throw std::invalid_argument("need 1 <= r <= N");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");

    // Spot-verify the Lipschitz constant on random adjacent pairs (full
    // verification is exponential).
    bool lipschitz_ok = true;
    const long checks = std::min<long>(1000, samples);
    for (long c = 0; c < checks && r < N; ++c) {
        std::vector<int> a = sample_subset(N, r, rng);
        std::vector<char> in_a(N, 0);
        for (int v : a) in_a[v] = 1;
        std::vector<int> outside;
        for (int v = 0; v < N; ++v)
            if (!in_a[v]) outside.push_back(v);
        std::uniform_int_distribution<std::size_t> pick_in(0, a.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_out(0, outside.size() - 1);
        std::vector<int> b = a;
        b[pick_in(rng)] = outside[pick_out(rng)];
        std::sort(b.begin(), b.end());
        if (std::abs(h(a) - h(b)) > alpha + 1e-12) {
            lipschitz_ok = false;
            break;
        }
    }

    std::vector<double> values;
    values.reserve(samples);
    for (long i = 0; i < samples; ++i) values.push_back(h(sample_subset(N, r, rng)));

    const double scale = static_cast<double>(std::min(r, N - r)) * alpha * alpha;
    ConcentrationReport rep = report_from_values(values, 1, scale);
    rep.valid = lipschitz_ok;
    return rep;
}

}  // namespace treetau
