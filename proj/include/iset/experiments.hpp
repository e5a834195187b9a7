#pragma once
// Named desk-scale experiments producing reproducible JSON reports plus
// optional per-trial CSV rows.  Each experiment merges its defaults with the
// user config; verdicts only ever read tolerances from the merged config.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "iset/bigint.hpp"
#include "iset/constants.hpp"
#include "iset/estimators.hpp"
#include "iset/exact_count.hpp"
#include "iset/generators.hpp"
#include "iset/graph.hpp"
#include "iset/rng.hpp"
#include "iset/seq_analysis.hpp"
#include "iset/stats.hpp"
#include "iset/version.hpp"

namespace iset {

using json = nlohmann::json;

struct ExperimentResult {
    json report;
    // Header line first; empty when the experiment has no per-trial rows.
    std::vector<std::string> csv_lines;
};

namespace detail {

// Runs body(t) for t in [0, trials) on `threads` workers.  Each result lands
// in its own pre-sized slot, so downstream aggregation (done serially in
// index order) is independent of scheduling.
template <typename T, typename Body>
std::vector<T> run_trials(std::size_t trials, int threads, Body body) {
    std::vector<T> out(trials);
    const std::size_t workers =
        std::min<std::size_t>(trials, threads < 1 ? 1 : static_cast<std::size_t>(threads));
    if (workers <= 1) {
        for (std::size_t t = 0; t < trials; ++t) out[t] = body(t);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= trials) return;
            try {
                out[t] = body(t);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

// User config overlaid onto experiment defaults; user keys win.
inline json merge_config(const json& config, json defaults) {
    for (auto it = config.begin(); it != config.end(); ++it) defaults[it.key()] = *it;
    return defaults;
}

inline std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

inline std::string fmt_bin(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

inline bool all_verdicts_pass(const json& verdicts) {
    for (const auto& v : verdicts)
        if (!v.get<bool>()) return false;
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual experiments.  Each returns {aggregates, verdicts} and appends CSV
// rows; dispatch and report assembly live in run_experiment below.
// ---------------------------------------------------------------------------

namespace detail {

struct ExperimentBody {
    json aggregates;
    json verdicts;
    std::vector<std::string> csv;
};

// Shared by the three tree-shape experiments: sample a uniform labelled tree
// per trial and compute its exact independence sequence.
struct TreeShapeRec {
    bool ok = false;
    int alpha = 0;
    int mode_low = 0;
    int mode_high = 0;
    int increasing_prefix = 0;
    int decreasing_suffix_start = 0;
    int check_index = 0;  // prefix length or last-third start, per experiment
};

enum class TreeShapeKind { kUnimodal, kPrefix, kLastThird };

inline ExperimentBody tree_shape_experiment(const json& eff, int threads, TreeShapeKind kind) {
    const int n = eff.at("n").get<int>();
    const std::size_t trials = eff.at("trials").get<std::size_t>();
    const std::uint64_t seed = eff.at("seed").get<std::uint64_t>();
    const double prefix_constant =
        kind == TreeShapeKind::kPrefix ? eff.at("prefix_constant").get<double>() : 0.0;
    if (n < 1) throw std::invalid_argument("tree experiment requires n >= 1");

    auto recs = run_trials<TreeShapeRec>(trials, threads, [&](std::size_t t) {
        Rng rng(seed, t);
        const Graph g = sample_uniform_tree(n, rng);
        const Sequence seq = independence_sequence_tree(g);
        const ShapeVerdict shape = analyze_shape(seq);
        TreeShapeRec r;
        r.alpha = static_cast<int>(seq.size()) - 1;
        r.mode_low = shape.mode_low;
        r.mode_high = shape.mode_high;
        r.increasing_prefix = shape.increasing_prefix;
        r.decreasing_suffix_start = shape.decreasing_suffix_start;
        switch (kind) {
            case TreeShapeKind::kUnimodal:
                r.ok = shape.unimodal;
                break;
            case TreeShapeKind::kPrefix:
                r.check_index = static_cast<int>(std::floor(prefix_constant * n));
                r.ok = strictly_increasing_through(seq, r.check_index);
                break;
            case TreeShapeKind::kLastThird:
                r.check_index = last_third_start(r.alpha);
                r.ok = non_increasing_from(seq, r.check_index);
                break;
        }
        return r;
    });

    std::size_t ok_count = 0;
    std::map<std::string, int> mode_hist;  // mode_low / n, 0.01-wide bins
    int min_increasing_prefix = n;
    for (const auto& r : recs) {
        if (r.ok) ++ok_count;
        mode_hist[fmt_bin(std::floor(100.0 * r.mode_low / n) / 100.0)]++;
        min_increasing_prefix = std::min(min_increasing_prefix, r.increasing_prefix);
    }

    ExperimentBody body;
    body.aggregates["trials"] = trials;
    body.aggregates["ok_count"] = ok_count;
    body.aggregates["ok_fraction"] = trials ? static_cast<double>(ok_count) / trials : 1.0;
    body.aggregates["min_increasing_prefix"] = min_increasing_prefix;
    body.aggregates["mode_over_n_histogram"] = mode_hist;  // informational, no verdict
    if (kind == TreeShapeKind::kPrefix)
        body.aggregates["required_prefix"] = static_cast<int>(std::floor(prefix_constant * n));

    const double min_frac = eff.at("min_pass_fraction").get<double>();
    body.verdicts["pass_fraction_ok"] =
        static_cast<double>(ok_count) >= min_frac * static_cast<double>(trials);

    body.csv.push_back(
        "trial,ok,alpha,mode_low,mode_high,increasing_prefix,decreasing_suffix_start,check_index");
    for (std::size_t t = 0; t < recs.size(); ++t) {
        const auto& r = recs[t];
        std::ostringstream row;
        row << t << ',' << (r.ok ? 1 : 0) << ',' << r.alpha << ',' << r.mode_low << ','
            << r.mode_high << ',' << r.increasing_prefix << ',' << r.decreasing_suffix_start << ','
            << r.check_index;
        body.csv.push_back(row.str());
    }
    return body;
}

inline ExperimentBody pittel_experiment(const json& eff, int threads) {
    const int n = eff.at("n").get<int>();
    const std::size_t trials = eff.at("trials").get<std::size_t>();
    const std::uint64_t seed = eff.at("seed").get<std::uint64_t>();
    if (n < 1 || trials < 2) throw std::invalid_argument("pittel requires n >= 1, trials >= 2");

    auto alphas = run_trials<int>(trials, threads, [&](std::size_t t) {
        Rng rng(seed, t);
        return alpha_tree(sample_uniform_tree(n, rng));
    });

    RunningStat stat;
    for (int a : alphas) stat.push(a);
    // Central moments for the informational normality summary.
    double m3 = 0.0, m4 = 0.0;
    for (int a : alphas) {
        const double d = a - stat.mean();
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m3 /= trials;
    m4 /= trials;
    const double sd = std::sqrt(stat.variance() * (trials - 1) / trials);  // population sd
    const double skewness = sd > 0 ? m3 / (sd * sd * sd) : 0.0;
    const double excess_kurtosis = sd > 0 ? m4 / (sd * sd * sd * sd) - 3.0 : 0.0;
    std::size_t within1 = 0;
    for (int a : alphas)
        if (std::abs(a - stat.mean()) <= stat.stddev()) ++within1;

    const PittelConstants pc = solve_rho();
    const double mean_over_n = stat.mean() / n;
    const double var_over_n = stat.variance() / n;

    ExperimentBody body;
    body.aggregates["trials"] = trials;
    body.aggregates["mean_alpha"] = stat.mean();
    body.aggregates["mean_over_n"] = mean_over_n;
    body.aggregates["variance_over_n"] = var_over_n;
    body.aggregates["rho"] = pc.rho;
    body.aggregates["variance_rate"] = pc.variance_rate;
    body.aggregates["variance_rate_corrected"] = pc.variance_rate_corrected;
    // Report which candidate rate the measurement actually matches: the
    // quoted rate, its square, or the corrected rate (quoted / (1 + rho)).
    {
        const std::array<std::pair<const char*, double>, 3> cands{{
            {"rate", pc.variance_rate},
            {"rate_squared", pc.variance_rate * pc.variance_rate},
            {"rate_over_1+rho", pc.variance_rate_corrected},
        }};
        const auto* best = &cands[0];
        for (const auto& c : cands)
            if (std::abs(var_over_n - c.second) < std::abs(var_over_n - best->second)) best = &c;
        body.aggregates["variance_expression_matched"] = best->first;
    }
    body.aggregates["skewness"] = skewness;
    body.aggregates["excess_kurtosis"] = excess_kurtosis;
    body.aggregates["fraction_within_one_stddev"] = static_cast<double>(within1) / trials;

    const double mean_tol = eff.at("mean_tolerance").get<double>();
    const double var_lo = eff.at("variance_low").get<double>();
    const double var_hi = eff.at("variance_high").get<double>();
    body.verdicts["mean_within_tolerance"] = std::abs(mean_over_n - pc.rho) <= mean_tol;
    body.verdicts["variance_in_range"] = var_over_n >= var_lo && var_over_n <= var_hi;

    body.csv.push_back("trial,alpha");
    for (std::size_t t = 0; t < alphas.size(); ++t)
        body.csv.push_back(std::to_string(t) + "," + std::to_string(alphas[t]));
    return body;
}

inline ExperimentBody er_ratio_experiment(const json& eff, int threads) {
    const int n = eff.at("n").get<int>();
    const double d = eff.at("d").get<double>();
    const int graphs = eff.at("graphs").get<int>();
    const int k_min = eff.at("k_min").get<int>();
    const int k_max = eff.at("k_max").get<int>();
    const std::size_t trials = eff.at("trials_per_cell").get<std::size_t>();
    const std::uint64_t seed = eff.at("seed").get<std::uint64_t>();
    const double p = d / n;
    if (n < 2 || p <= 0.0 || p >= 1.0) throw std::invalid_argument("er-ratio: need 0 < d/n < 1");
    if (k_min < 1 || k_max < k_min || k_max >= n)
        throw std::invalid_argument("er-ratio: need 1 <= k_min <= k_max < n");

    struct Cell {
        int k = 0;
        bool feasible = false;
        double exact_ratio = 0.0;
        double estimate = 0.0;
        double std_error = 0.0;
        double lower = 0.0, upper = 0.0;  // sandwich bounds
        bool within_sandwich = false;
        bool oracle_agrees = false;
    };
    struct PerGraph {
        std::vector<Cell> cells;
    };

    const double se_mult = eff.at("oracle_se_multiplier").get<double>();

    auto per_graph = run_trials<PerGraph>(graphs, threads, [&](std::size_t gi) {
        Rng grng(seed, (gi + 1) << 40);
        const Graph g = sample_gnp(n, p, grng);
        const Sequence seq = independence_sequence(g);
        PerGraph out;
        for (int k = k_min; k <= k_max; ++k) {
            Cell c;
            c.k = k;
            // Exact ratio requires x_k > 0 (and x_{k+1} may be 0).
            if (k + 1 < static_cast<int>(seq.size()) && seq[k] > 0) {
                c.feasible = true;
                c.exact_ratio = to_double(rat_of(seq[k + 1], seq[k]));
                const std::uint64_t stream_base =
                    ((gi + 1) << 40) | (static_cast<std::uint64_t>(k) << 25);
                const EstimateWithError est = ratio_estimate(g, k, trials, seed, stream_base);
                c.estimate = est.estimate;
                c.std_error = est.std_error;
                const double alpha = static_cast<double>(k) / n;
                const double s = er_proof_s(d, alpha);
                const double center = to_double(planted_mean_gnp(n, k, Rat(p))) / (k + 1);
                c.lower = (1.0 - s) * center;
                c.upper = (1.0 + s) * center;
                c.within_sandwich = c.estimate >= c.lower && c.estimate <= c.upper;
                c.oracle_agrees = std::abs(c.estimate - c.exact_ratio) <= se_mult * c.std_error;
            }
            out.cells.push_back(c);
        }
        return out;
    });

    std::size_t cells = 0, infeasible = 0, within = 0, agree = 0;
    for (const auto& pg : per_graph)
        for (const auto& c : pg.cells) {
            if (!c.feasible) {
                ++infeasible;
                continue;
            }
            ++cells;
            if (c.within_sandwich) ++within;
            if (c.oracle_agrees) ++agree;
        }

    ExperimentBody body;
    body.aggregates["graphs"] = graphs;
    body.aggregates["cells"] = cells;
    body.aggregates["infeasible_cells"] = infeasible;
    body.aggregates["within_sandwich_count"] = within;
    body.aggregates["within_sandwich_fraction"] =
        cells ? static_cast<double>(within) / cells : 1.0;
    body.aggregates["oracle_agreement_count"] = agree;
    body.aggregates["oracle_agreement_fraction"] =
        cells ? static_cast<double>(agree) / cells : 1.0;

    const double min_sandwich = eff.at("min_sandwich_fraction").get<double>();
    const double min_oracle = eff.at("min_oracle_agreement_fraction").get<double>();
    body.verdicts["sandwich_fraction_ok"] =
        cells > 0 && static_cast<double>(within) >= min_sandwich * static_cast<double>(cells);
    body.verdicts["oracle_agreement_ok"] =
        cells > 0 && static_cast<double>(agree) >= min_oracle * static_cast<double>(cells);

    body.csv.push_back(
        "graph,k,feasible,exact_ratio,estimate,std_error,lower,upper,within_sandwich,oracle_agrees");
    for (std::size_t gi = 0; gi < per_graph.size(); ++gi)
        for (const auto& c : per_graph[gi].cells) {
            std::ostringstream row;
            row << gi << ',' << c.k << ',' << (c.feasible ? 1 : 0) << ','
                << fmt_double(c.exact_ratio) << ',' << fmt_double(c.estimate) << ','
                << fmt_double(c.std_error) << ',' << fmt_double(c.lower) << ','
                << fmt_double(c.upper) << ',' << (c.within_sandwich ? 1 : 0) << ','
                << (c.oracle_agrees ? 1 : 0);
            body.csv.push_back(row.str());
        }
    return body;
}

inline ExperimentBody karp_maxind_experiment(const json& eff, int threads) {
    const int n = eff.at("n").get<int>();
    const double d = eff.at("d").get<double>();
    const std::size_t trials = eff.at("trials").get<std::size_t>();
    const std::uint64_t seed = eff.at("seed").get<std::uint64_t>();
    const double p = d / n;
    if (n < 2 || p <= 0.0 || p >= 1.0)
        throw std::invalid_argument("karp-maxind: need 0 < d/n < 1");

    auto alphas = run_trials<int>(trials, threads, [&](std::size_t t) {
        Rng rng(seed, t);
        const Graph g = sample_gnp(n, p, rng);
        return max_independent_set_size(g);
    });

    RunningStat frac;
    for (int a : alphas) frac.push(static_cast<double>(a) / n);
    const KarpConstants kc = karp_constants(d);

    ExperimentBody body;
    body.aggregates["trials"] = trials;
    body.aggregates["mean_fraction"] = frac.mean();
    body.aggregates["stddev_fraction"] = frac.stddev();
    body.aggregates["karp_fraction"] = kc.independent_fraction;
    body.aggregates["abs_difference"] = std::abs(frac.mean() - kc.independent_fraction);

    const double tol = eff.at("fraction_tolerance").get<double>();
    body.verdicts["mean_fraction_within_tolerance"] =
        std::abs(frac.mean() - kc.independent_fraction) <= tol;

    body.csv.push_back("trial,alpha,fraction");
    for (std::size_t t = 0; t < alphas.size(); ++t) {
        std::ostringstream row;
        row << t << ',' << alphas[t] << ',' << fmt_double(static_cast<double>(alphas[t]) / n);
        body.csv.push_back(row.str());
    }
    return body;
}

inline ExperimentBody concentration_experiment(const json& eff, int /*threads*/) {
    const json& model = eff.at("model");
    const std::string family = model.at("family").get<std::string>();
    const int n = model.at("n").get<int>();
    const int k = eff.at("k").get<int>();
    const std::size_t trials = eff.at("trials").get<std::size_t>();
    const std::uint64_t seed = eff.at("seed").get<std::uint64_t>();
    std::vector<double> grid;
    for (const auto& s : eff.at("s_grid")) grid.push_back(s.get<double>());

    ModelSpec spec = ModelSpec::tree(n);
    if (family == "gnp") {
        spec = model.contains("p") ? ModelSpec::gnp(n, model.at("p").get<double>())
                                   : ModelSpec::gnp_with_degree(n, model.at("d").get<double>());
    } else if (family != "tree") {
        throw std::invalid_argument("concentration: family must be tree or gnp");
    }

    const ConcentrationReport rep = planted_concentration_experiment(spec, k, trials, seed, grid);

    ExperimentBody body;
    body.aggregates["model"] = family;
    body.aggregates["n"] = n;
    body.aggregates["k"] = k;
    body.aggregates["trials"] = rep.trials;
    body.aggregates["theoretical_mean"] = rep.theoretical_mean;
    body.aggregates["empirical_mean"] = rep.empirical_mean;
    body.aggregates["empirical_stddev"] = rep.empirical_stddev;
    json quantiles = json::object();
    for (std::size_t i = 0; i < rep.quantile_probs.size(); ++i)
        quantiles[fmt_bin(rep.quantile_probs[i])] = rep.quantiles[i];
    body.aggregates["quantiles"] = quantiles;
    json tail = json::array();
    for (const auto& pt : rep.tail)
        tail.push_back({{"event", pt.event},
                        {"s", pt.s},
                        {"empirical", pt.empirical},
                        {"bound", pt.bound},
                        {"violated", pt.violated}});
    body.aggregates["tail"] = tail;
    body.aggregates["violation_count"] = rep.violation_count;

    const int max_violations = eff.at("max_violations").get<int>();
    body.verdicts["tail_bounds_hold"] = rep.violation_count <= max_violations;

    body.csv.push_back("event,s,empirical,bound,violated");
    for (const auto& pt : rep.tail) {
        std::ostringstream row;
        row << pt.event << ',' << fmt_double(pt.s) << ',' << fmt_double(pt.empirical) << ','
            << fmt_double(pt.bound) << ',' << (pt.violated ? 1 : 0);
        body.csv.push_back(row.str());
    }
    return body;
}

}  // namespace detail

// Per-experiment defaults, including every tolerance a verdict may consult.
inline json experiment_defaults(const std::string& name) {
    if (name == "tree-unimodality")
        return {{"experiment", name}, {"n", 1000},    {"trials", 200},
                {"seed", 20250814},   {"min_pass_fraction", 1.0}};
    if (name == "tree-prefix")
        return {{"experiment", name},        {"n", 1000},
                {"trials", 200},             {"seed", 20250814},
                {"prefix_constant", 0.26543}, {"min_pass_fraction", 1.0}};
    if (name == "tree-lastthird")
        return {{"experiment", name}, {"n", 1000},    {"trials", 200},
                {"seed", 20250814},   {"min_pass_fraction", 1.0}};
    if (name == "pittel")
        return {{"experiment", name},    {"n", 1000},
                {"trials", 500},         {"seed", 20250814},
                {"mean_tolerance", 0.01}, {"variance_low", 0.019},
                {"variance_high", 0.032}};
    if (name == "er-ratio")
        return {{"experiment", name},
                {"n", 40},
                {"d", 2.0},
                {"graphs", 20},
                {"k_min", 1},
                {"k_max", 8},
                {"trials_per_cell", 4000},
                {"seed", 20250814},
                {"min_sandwich_fraction", 0.90},
                {"min_oracle_agreement_fraction", 0.90},
                {"oracle_se_multiplier", 4.0}};
    if (name == "karp-maxind")
        return {{"experiment", name},       {"n", 40},
                {"d", 2.0},                 {"trials", 200},
                {"seed", 20250814},         {"fraction_tolerance", 0.05}};
    if (name == "concentration")
        return {{"experiment", name},
                {"model", {{"family", "tree"}, {"n", 500}}},
                {"k", 100},
                {"trials", 1000},
                {"seed", 20250814},
                {"s_grid", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}},
                {"max_violations", 0}};
    throw std::invalid_argument("unknown experiment: " + name);
}

// Dispatches on config["experiment"], merges defaults, runs, and assembles the
// report.  Aggregate fields depend only on the effective config, never on
// thread count or scheduling.
inline ExperimentResult run_experiment(const json& config, int threads = 1) {
    if (!config.contains("experiment"))
        throw std::invalid_argument("config is missing \"experiment\"");
    const std::string name = config.at("experiment").get<std::string>();
    const json eff = detail::merge_config(config, experiment_defaults(name));

    const auto t0 = std::chrono::steady_clock::now();
    detail::ExperimentBody body;
    if (name == "tree-unimodality")
        body = detail::tree_shape_experiment(eff, threads, detail::TreeShapeKind::kUnimodal);
    else if (name == "tree-prefix")
        body = detail::tree_shape_experiment(eff, threads, detail::TreeShapeKind::kPrefix);
    else if (name == "tree-lastthird")
        body = detail::tree_shape_experiment(eff, threads, detail::TreeShapeKind::kLastThird);
    else if (name == "pittel")
        body = detail::pittel_experiment(eff, threads);
    else if (name == "er-ratio")
        body = detail::er_ratio_experiment(eff, threads);
    else if (name == "karp-maxind")
        body = detail::karp_maxind_experiment(eff, threads);
    else if (name == "concentration")
        body = detail::concentration_experiment(eff, threads);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ExperimentResult result;
    result.report["experiment"] = name;
    result.report["config"] = config;  // verbatim echo
    result.report["effective_config"] = eff;
    result.report["library_version"] = kVersion;
    result.report["rng_scheme"] = kRngScheme;
    result.report["aggregates"] = body.aggregates;
    result.report["verdicts"] = body.verdicts;
    result.report["pass"] = detail::all_verdicts_pass(body.verdicts);
    result.report["wall_clock_seconds"] = secs;
    result.csv_lines = std::move(body.csv);
    return result;
}

}  // namespace iset
