#pragma once

#include <cstdint>
#include <map>

#include "treetau/asymptotics.hpp"
#include "treetau/degree_sequence.hpp"
#include "treetau/graphs.hpp"
#include "treetau/numeric.hpp"
#include "treetau/trees.hpp"

namespace treetau {

/// Log-space sample mean of tau with its standard error (delta method on the
/// ln of the mean; biased low at small sample counts).
struct MonteCarloEstimate {
    double mean_log = 0.0;
    double std_error = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct ComparisonReport {
    double truth_log = 0.0;
    double formula_log = 0.0;
    double band = 0.0;
    double ratio_log = 0.0;
    double band_multiplier = 2.0;
    bool within_band = false;
};

/// (1/|Gamma_d|) sum of tau(G) over all graphs with degree sequence d, exact.
Rational brute_expected_tau(const DegreeSequence& d, int max_n = 10, long max_m = 15);

/// Exact E tau_d(x) per suitable x, via per-graph spanning-tree degree maps.
std::map<TreeDegreeSequence, Rational> brute_expected_tau_by_x(const DegreeSequence& d,
                                                               int max_n = 10,
                                                               long max_m = 15);

/// |{G in Gamma_d : T subgraph of G}| / |Gamma_d|, exact.
Rational brute_containment_probability(const DegreeSequence& d, const LabeledTree& tree,
                                       int max_n = 10, long max_m = 15);

/// Sample mean of tau over uniform graphs with degree sequence d.
/// Deterministic for fixed (seed, workers): each worker owns an independent
/// stream and results merge in worker order.
MonteCarloEstimate mc_expected_tau(const DegreeSequence& d, long samples, std::uint64_t seed,
                                   int workers = 1, int exact_threshold = 64);

/// Fraction of sampled graphs that are connected.
double connectivity_frequency(const DegreeSequence& d, long samples, std::uint64_t seed);

enum class TruthMode { brute, mc };

struct CompareConfig {
    TruthMode truth = TruthMode::mc;
    long samples = 500;
    std::uint64_t seed = 1;
    int workers = 1;
    double band_multiplier = 2.0;
};

/// Ground truth (brute or Monte Carlo) against expected_tau_asymptotic.
ComparisonReport compare(const DegreeSequence& d, const CompareConfig& config);

}  // namespace treetau
