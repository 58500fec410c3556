#pragma once

#include <functional>
#include <span>
#include <vector>

#include "treetau/degree_sequence.hpp"
#include "treetau/rng.hpp"
#include "treetau/trees.hpp"

namespace treetau {

/// Vertex-valued function together with its admitted range [a, b].
struct PhiSpec {
    std::vector<double> values;
    double a = 0.0;
    double b = 0.0;
};

struct TailEntry {
    double t = 0.0;
    double empirical_prob = 0.0;
    double bound = 0.0;  // 2 exp(-2 t^2 / scale)
    bool violated = false;
};

/// Measurement of how far the exponential mean of F drifts from exp(mean F).
/// K_hat = ln mean(e^{xi F}) - xi mean(F); the bound being probed caps it at
/// scale/8 and the tails at 2 exp(-2t^2/scale).
struct ConcentrationReport {
    double empirical_mean = 0.0;
    double exp_mean_log = 0.0;
    double k_hat = 0.0;
    double scale = 0.0;  // L_phi or min{r, N-r} alpha^2
    long samples = 0;
    bool exhaustive = false;
    bool valid = true;  // false when a Lipschitz spot-check failed
    std::vector<TailEntry> tail_table;
};

/// L_phi = (b-a)^3 min{ (b-a) n, ||phi||_m (ln n + 2) }.
double l_phi(const PhiSpec& phi);

/// Samples (or exhausts) T_x, measures F(T) = sum phi(j) phi(k) over edges.
/// Exhaustive when |T_x| <= exhaustive_cap; pure measurement, asserts nothing.
ConcentrationReport tree_concentration_experiment(const TreeDegreeSequence& x,
                                                  const PhiSpec& phi, int xi, long samples,
                                                  RandomSource& rng,
                                                  std::int64_t exhaustive_cap = 100'000);

/// Uniform r-subsets of {0..N-1} under a caller-supplied h with adjacency
/// Lipschitz constant alpha (spot-verified on sampled adjacent pairs).
ConcentrationReport subset_function_experiment(
    long N, long r, const std::function<double(std::span<const int>)>& h, double alpha,
    long samples, RandomSource& rng);

}  // namespace treetau
