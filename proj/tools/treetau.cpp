// treetau: spanning-tree expectations for random graphs with given degrees.
//
// Subcommands: validate, stats, count-trees, sample-tree, sample-graph,
// tau-exact, estimate, estimate-x, near-two, mc, compare, verify,
// concentration. JSON is the canonical output; the concentration tail table
// is CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "treetau/asymptotics.hpp"
#include "treetau/concentration.hpp"
#include "treetau/degree_sequence.hpp"
#include "treetau/experiments.hpp"
#include "treetau/graphs.hpp"
#include "treetau/io.hpp"
#include "treetau/trees.hpp"

using json = nlohmann::ordered_json;
using namespace treetau;

namespace {

struct CommonOpts {
    std::string degrees_file;
    std::string degrees_inline;
    std::string tree_degrees;
    std::string graph_file;
    std::string mode = "strict";
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int workers = 1;
    long samples = 1000;
};

std::uint64_t resolve_seed(const CommonOpts& opts) {
    if (opts.seed_given) return opts.seed;
    if (const char* env = std::getenv("TREETAU_SEED")) return std::strtoull(env, nullptr, 10);
    return std::random_device{}();
}

Mode parse_mode(const std::string& mode) {
    if (mode == "strict") return Mode::strict;
    if (mode == "permissive") return Mode::permissive;
    throw CLI::ValidationError("--mode must be strict or permissive");
}

DegreeSequence load_degrees(const CommonOpts& opts, std::string& input_text) {
    if (!opts.degrees_inline.empty()) {
        input_text = opts.degrees_inline;
        return DegreeSequence(parse_degree_list(opts.degrees_inline));
    }
    if (opts.degrees_file.empty())
        throw std::runtime_error("need --degrees FILE or --degrees-inline LIST");
    std::ifstream in(opts.degrees_file);
    if (!in) throw std::runtime_error("cannot open " + opts.degrees_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    input_text = buffer.str();
    std::istringstream replay(input_text);
    return DegreeSequence(read_degree_list(replay));
}

TreeDegreeSequence load_tree_degrees(const CommonOpts& opts) {
    if (opts.tree_degrees.empty()) throw std::runtime_error("need --tree-degrees LIST");
    return TreeDegreeSequence(parse_degree_list(opts.tree_degrees));
}

json meta_block(const std::string& input_text, std::uint64_t seed,
                std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    return json{{"version", TREETAU_VERSION},
                {"schema_version", 1},
                {"input_hash", fnv1a_hex(input_text)},
                {"seed", seed},
                {"wall_time_s", elapsed.count()}};
}

json stats_block(const DegreeSequence& d) {
    const DegreeStats& s = d.stats();
    return json{{"n", d.n()},
                {"m", s.m},
                {"d_max", s.d_max},
                {"d_bar", to_double(s.d_bar)},
                {"d_bar_exact", s.d_bar.str()},
                {"d_hat_log", s.d_hat_log},
                {"R", to_double(s.r_variance)},
                {"R_exact", s.r_variance.str()}};
}

json estimate_block(const AsymptoticEstimate& est) {
    return json{{"log_value", est.log_value},
                {"error_exponent", est.error_exponent},
                {"condition_ok", est.condition_ok}};
}

int run_verify(int max_n) {
    // Small exact oracle suite: three independent code paths must agree on
    // the expected spanning-tree count, overall and per tree degree class.
    std::vector<std::vector<int>> cases = {{3, 3, 3, 3}, {2, 2, 2, 2}, {2, 2, 2}, {2, 2, 2, 1, 1}};
    for (const auto& degrees : cases) {
        if (static_cast<int>(degrees.size()) > max_n) continue;
        const DegreeSequence d(degrees);
        const Rational direct = brute_expected_tau(d);
        Rational by_x_total = 0;
        const auto by_x = brute_expected_tau_by_x(d);
        for (const auto& [x, v] : by_x) by_x_total += v;
        if (by_x_total != direct) {
            std::cerr << "verify: sum over x != direct expectation\n";
            return 1;
        }
        for (const auto& [x, v] : by_x) {
            Rational via_containment = 0;
            enumerate_trees(x, [&](const LabeledTree& t) {
                via_containment += brute_containment_probability(d, t);
            });
            if (via_containment != v) {
                std::cerr << "verify: containment identity failed\n";
                return 1;
            }
        }
    }
    std::cout << "verify: all oracle identities hold\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning-tree expectations for random graphs with given degrees"};
    app.require_subcommand(1);
    CommonOpts opts;

    auto add_degree_opts = [&](CLI::App* cmd) {
        cmd->add_option("--degrees", opts.degrees_file, "degree sequence file");
        cmd->add_option("--degrees-inline", opts.degrees_inline, "inline degree list, e.g. 3,3,3,3");
    };
    auto add_seed_opts = [&](CLI::App* cmd) {
        cmd->add_option("--seed", opts.seed, "random seed (default: TREETAU_SEED or random)")
            ->each([&](const std::string&) { opts.seed_given = true; });
        cmd->add_option("--workers", opts.workers, "worker count");
    };

    CLI::App* validate = app.add_subcommand("validate", "graphicality and formula preconditions");
    add_degree_opts(validate);

    CLI::App* stats = app.add_subcommand("stats", "degree statistics");
    add_degree_opts(stats);

    CLI::App* count_trees = app.add_subcommand("count-trees", "|T_x| for a tree degree sequence");
    count_trees->add_option("--tree-degrees", opts.tree_degrees, "tree degree list")->required();

    CLI::App* sample_tree_cmd = app.add_subcommand("sample-tree", "uniform tree with given degrees");
    sample_tree_cmd->add_option("--tree-degrees", opts.tree_degrees)->required();
    add_seed_opts(sample_tree_cmd);

    CLI::App* sample_graph = app.add_subcommand("sample-graph", "uniform simple graph with given degrees");
    add_degree_opts(sample_graph);
    add_seed_opts(sample_graph);

    CLI::App* tau_exact = app.add_subcommand("tau-exact", "exact spanning tree count of a graph");
    tau_exact->add_option("--graph", opts.graph_file, "edge list file")->required();

    CLI::App* estimate = app.add_subcommand("estimate", "asymptotic E tau for a degree sequence");
    add_degree_opts(estimate);
    estimate->add_option("--mode", opts.mode, "strict|permissive");
    estimate->add_option("--format", opts.format, "json|csv");

    CLI::App* estimate_x = app.add_subcommand("estimate-x", "asymptotic E tau restricted to tree degrees x");
    add_degree_opts(estimate_x);
    estimate_x->add_option("--tree-degrees", opts.tree_degrees)->required();
    estimate_x->add_option("--mode", opts.mode, "strict|permissive");

    CLI::App* near_two = app.add_subcommand("near-two", "estimate for mean degree near 2");
    add_degree_opts(near_two);
    near_two->add_option("--mode", opts.mode, "strict|permissive");

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo E tau");
    add_degree_opts(mc);
    mc->add_option("--samples", opts.samples, "sample count");
    add_seed_opts(mc);

    CLI::App* compare_cmd = app.add_subcommand("compare", "formula vs ground truth");
    add_degree_opts(compare_cmd);
    std::string truth_mode = "mc";
    double band_multiplier = 2.0;
    compare_cmd->add_option("--mode", truth_mode, "brute|mc");
    compare_cmd->add_option("--samples", opts.samples);
    compare_cmd->add_option("--band-multiplier", band_multiplier);
    add_seed_opts(compare_cmd);

    CLI::App* verify = app.add_subcommand("verify", "run the exact oracle suite");
    int max_n = 7;
    verify->add_option("--max-n", max_n, "largest n to exercise");

    CLI::App* concentration = app.add_subcommand("concentration", "tree concentration tail table (CSV)");
    concentration->add_option("--tree-degrees", opts.tree_degrees)->required();
    std::string phi_list;
    int xi = -1;
    concentration->add_option("--phi", phi_list, "comma-separated phi values (default: phi_j = j/n)");
    concentration->add_option("--xi", xi, "+1 or -1");
    concentration->add_option("--samples", opts.samples);
    add_seed_opts(concentration);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const std::uint64_t seed = resolve_seed(opts);
        std::string input_text;

        if (validate->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            json out{{"graphical", is_graphical(d)},
                     {"size_condition", size_condition_holds(d)},
                     {"stats", stats_block(d)}};
            out["meta"] = meta_block(input_text, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (stats->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            json out{{"stats", stats_block(d)}};
            out["meta"] = meta_block(input_text, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (count_trees->parsed()) {
            const TreeDegreeSequence x = load_tree_degrees(opts);
            json out{{"count", count_trees_with_degrees(x).str()}};
            out["meta"] = meta_block(opts.tree_degrees, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (sample_tree_cmd->parsed()) {
            const TreeDegreeSequence x = load_tree_degrees(opts);
            RandomSource rng = worker_rng(seed, 0);
            const LabeledTree t = sample_tree(x, rng);
            write_edge_list(std::cout, t.n(), t.edges());
        } else if (sample_graph->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            RandomSource rng = worker_rng(seed, 0);
            const SimpleGraph g = sample_simple_graph(d, rng);
            write_edge_list(std::cout, g.n(), g.edges());
        } else if (tau_exact->parsed()) {
            const EdgeListFile file = read_edge_list_file(opts.graph_file);
            const SimpleGraph g(file.n, file.edges);
            const BigInt tau = spanning_tree_count(g);
            json out{{"tau", tau.str()}};
            out["log_tau"] = tau > 0 ? log_bigint(tau) : -std::numeric_limits<double>::infinity();
            out["meta"] = meta_block(opts.graph_file, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (estimate->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            const AsymptoticEstimate est = expected_tau_asymptotic(d, parse_mode(opts.mode));
            if (opts.format == "csv") {
                std::cout << "log_value,error_exponent,condition_ok\n"
                          << est.log_value << "," << est.error_exponent << ","
                          << (est.condition_ok ? 1 : 0) << "\n";
            } else {
                json out = estimate_block(est);
                if (est.log_value < 700.0) out["value"] = std::exp(est.log_value);
                out["stats"] = stats_block(d);
                out["meta"] = meta_block(input_text, seed, start);
                std::cout << out.dump(2) << "\n";
            }
        } else if (estimate_x->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            const TreeDegreeSequence x = load_tree_degrees(opts);
            const AsymptoticEstimate est =
                expected_tau_for_tree_degrees(d, x, parse_mode(opts.mode));
            json out = estimate_block(est);
            out["stats"] = stats_block(d);
            out["meta"] = meta_block(input_text + "|" + opts.tree_degrees, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (near_two->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            const double x_param = static_cast<double>(d.degree_sum() - 2L * d.n()) / 2.0;
            const AsymptoticEstimate est =
                expected_tau_near_two(d, x_param, parse_mode(opts.mode));
            json out = estimate_block(est);
            out["x"] = x_param;
            out["stats"] = stats_block(d);
            out["meta"] = meta_block(input_text, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (mc->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            const MonteCarloEstimate est = mc_expected_tau(d, opts.samples, seed, opts.workers);
            json out{{"mean_log", est.mean_log},
                     {"std_error", est.std_error},
                     {"samples", est.samples},
                     {"seed", est.seed},
                     {"workers", est.workers}};
            out["meta"] = meta_block(input_text, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (compare_cmd->parsed()) {
            const DegreeSequence d = load_degrees(opts, input_text);
            CompareConfig config;
            config.truth = truth_mode == "brute" ? TruthMode::brute : TruthMode::mc;
            config.samples = opts.samples;
            config.seed = seed;
            config.workers = opts.workers;
            config.band_multiplier = band_multiplier;
            const ComparisonReport rep = compare(d, config);
            json out{{"truth_log", rep.truth_log},
                     {"formula_log", rep.formula_log},
                     {"band", rep.band},
                     {"ratio_log", rep.ratio_log},
                     {"band_multiplier", rep.band_multiplier},
                     {"within_band", rep.within_band},
                     {"band_note", "constant-calibrated"}};
            out["meta"] = meta_block(input_text, seed, start);
            std::cout << out.dump(2) << "\n";
        } else if (verify->parsed()) {
            return run_verify(max_n);
        } else if (concentration->parsed()) {
            const TreeDegreeSequence x = load_tree_degrees(opts);
            PhiSpec phi;
            if (!phi_list.empty()) {
                for (int v : parse_degree_list(phi_list)) phi.values.push_back(v);
            } else {
                for (int j = 0; j < x.n(); ++j)
                    phi.values.push_back(static_cast<double>(j + 1) / x.n());
            }
            phi.a = *std::min_element(phi.values.begin(), phi.values.end());
            phi.b = *std::max_element(phi.values.begin(), phi.values.end());
            RandomSource rng = worker_rng(seed, 0);
            const ConcentrationReport rep =
                tree_concentration_experiment(x, phi, xi, opts.samples, rng);
            std::cout << "t,empirical,bound,violated\n";
            for (const TailEntry& e : rep.tail_table)
                std::cout << e.t << "," << e.empirical_prob << "," << e.bound << ","
                          << (e.violated ? 1 : 0) << "\n";
        }
        return 0;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
