// Command-line front end: generation, exact counting, sequence analysis,
// constants, Monte Carlo estimation, verification, and experiment runs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iset/iset.hpp"

using nlohmann::json;

namespace {

json shape_to_json(const iset::ShapeVerdict& v) {
    return {{"unimodal", v.unimodal},
            {"mode_interval", {v.mode_low, v.mode_high}},
            {"increasing_prefix", v.increasing_prefix},
            {"decreasing_suffix_start", v.decreasing_suffix_start}};
}

iset::Sequence coeffs_from_json(const json& j) {
    const json& arr = j.is_array() ? j : j.at("coeffs");
    iset::Sequence s;
    for (const auto& c : arr) {
        if (c.is_string())
            s.emplace_back(c.get<std::string>());
        else
            s.emplace_back(static_cast<long>(c.get<long long>()));
    }
    return s;
}

iset::ModelSpec model_from_flags(const std::string& model, int n, std::optional<double> p,
                                 std::optional<double> d) {
    if (model == "tree") return iset::ModelSpec::tree(n);
    if (model == "gnp") {
        if (p) return iset::ModelSpec::gnp(n, *p);
        if (d) return iset::ModelSpec::gnp_with_degree(n, *d);
        throw CLI::ValidationError("gnp requires --p or --d");
    }
    if (model == "regular") {
        if (!d) throw CLI::ValidationError("regular requires --d");
        const int deg = static_cast<int>(*d);
        if (static_cast<double>(deg) != *d)
            throw CLI::ValidationError("regular degree must be an integer");
        return iset::ModelSpec::regular(n, deg);
    }
    throw CLI::ValidationError("unknown model: " + model);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_gen(const std::string& model, int n, std::optional<double> p, std::optional<double> d,
            std::optional<int> planted, std::uint64_t seed, const std::string& out) {
    const iset::ModelSpec spec = model_from_flags(model, n, p, d);
    iset::Rng rng(seed, 0);
    if (planted) {
        const iset::PlantedSample ps = iset::sample_planted(spec, *planted, rng);
        iset::write_graph_file(out, ps.graph, ps.sigma);
    } else {
        iset::write_graph_file(out, iset::sample_model(spec, rng));
    }
    return 0;
}

int cmd_count(const std::string& input, const std::string& format, bool padded) {
    const iset::GraphFile gf = iset::read_graph_file(input);
    iset::Sequence seq = iset::independence_sequence(gf.graph);
    const int alpha = static_cast<int>(seq.size()) - 1;
    if (padded) seq = iset::pad_sequence(seq, static_cast<std::size_t>(gf.graph.n()) + 1);
    if (format == "csv") {
        std::cout << "k,coeff\n";
        for (std::size_t k = 0; k < seq.size(); ++k)
            std::cout << k << "," << iset::to_string(seq[k]) << "\n";
    } else {
        emit({{"n", gf.graph.n()}, {"coeffs", iset::to_strings(seq)}, {"alpha", alpha}});
    }
    return 0;
}

int cmd_analyze(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open " + input);
    json j;
    in >> j;
    const iset::Sequence seq = coeffs_from_json(j);
    emit(shape_to_json(iset::analyze_shape(seq)));
    return 0;
}

int cmd_constants(const std::string& name, std::optional<double> d, std::optional<double> alpha) {
    if (name == "rho") {
        const iset::PittelConstants pc = iset::solve_rho();
        emit({{"rho", pc.rho},
              {"mean_correction", pc.mean_correction},
              {"variance_rate", pc.variance_rate},
              {"variance_rate_corrected", pc.variance_rate_corrected}});
    } else if (name == "karp") {
        if (!d) throw CLI::ValidationError("karp requires --d");
        const iset::KarpConstants kc = iset::karp_constants(*d);
        emit({{"d", *d},
              {"a", kc.a},
              {"b", kc.b},
              {"independent_fraction", kc.independent_fraction},
              {"matching_fraction", kc.matching_fraction}});
    } else if (name == "frieze") {
        if (!d) throw CLI::ValidationError("frieze requires --d");
        emit({{"d", *d}, {"beta", iset::frieze_beta(*d)}});
    } else if (name == "tree-thresholds") {
        const iset::Thresholds t = iset::tree_unimodality_thresholds();
        emit({{"alpha_increasing", t.alpha_increasing},
              {"alpha_decreasing", t.alpha_decreasing}});
    } else if (name == "er-thresholds") {
        if (!d) throw CLI::ValidationError("er-thresholds requires --d");
        const iset::Thresholds t = iset::er_low_degree_thresholds(*d);
        emit({{"d", *d},
              {"alpha_increasing", t.alpha_increasing},
              {"alpha_decreasing", t.alpha_decreasing}});
    } else if (name == "dani") {
        if (!alpha) throw CLI::ValidationError("dani requires --alpha");
        emit({{"alpha", *alpha}, {"degree_bound", iset::dani_degree_bound(*alpha)}});
    } else {
        throw CLI::ValidationError("unknown constant: " + name);
    }
    return 0;
}

int cmd_estimate(const std::string& kind, const std::string& input, int k, std::size_t trials,
                 std::uint64_t seed) {
    const iset::GraphFile gf = iset::read_graph_file(input);
    if (kind == "ratio") {
        const iset::EstimateWithError e = iset::ratio_estimate(gf.graph, k, trials, seed);
        emit({{"kind", "ratio"},
              {"k", k},
              {"estimate", e.estimate},
              {"std_error", e.std_error},
              {"trials", e.trials},
              {"seed", e.seed}});
    } else {
        const iset::SequenceEstimate e = iset::sequence_estimate(gf.graph, k, trials, seed);
        emit({{"kind", "sequence"},
              {"k_max", k},
              {"estimates", e.estimates},
              {"rel_std_error", e.rel_std_error},
              {"trials_per_ratio", e.trials_per_ratio},
              {"seed", e.seed}});
    }
    return 0;
}

json com_to_json(const iset::ChangeOfMeasureReport& r) {
    return {{"graphs_enumerated", r.graphs_enumerated},
            {"pairs_enumerated", r.pairs_enumerated},
            {"identities_ok", r.identities_ok},
            {"planted_mass_is_one", r.planted_mass_is_one},
            {"uniform_mass_matches", r.uniform_mass_matches},
            {"probes", r.probes},
            {"probes_ok", r.probes_ok},
            {"expected_xk", r.expected_xk.get_str()}};
}

json concentration_to_json(const iset::ConcentrationReport& r) {
    json tail = json::array();
    for (const auto& tp : r.tail)
        tail.push_back({{"event", tp.event},
                        {"s", tp.s},
                        {"empirical", tp.empirical},
                        {"bound", tp.bound},
                        {"violated", tp.violated}});
    return {{"model", r.model},
            {"n", r.n},
            {"k", r.k},
            {"trials", r.trials},
            {"seed", r.seed},
            {"theoretical_mean", r.theoretical_mean},
            {"empirical_mean", r.empirical_mean},
            {"empirical_stddev", r.empirical_stddev},
            {"quantile_probs", r.quantile_probs},
            {"quantiles", r.quantiles},
            {"tail", tail},
            {"violation_count", r.violation_count}};
}

int cmd_verify_counting(const std::string& input) {
    const iset::GraphFile gf = iset::read_graph_file(input);
    const bool holds = iset::counting_lemma_check(gf.graph);
    emit({{"check", "counting-lemma"}, {"n", gf.graph.n()}, {"holds", holds}});
    return holds ? 0 : 1;
}

int cmd_verify_com(const std::string& family, int n, int k, double p) {
    iset::ChangeOfMeasureReport rep;
    if (family == "gnp") {
        // Interpret p as an exact rational with denominator 1000 for clean enumeration.
        const iset::Rat pr = iset::rat_of(static_cast<long>(p * 1000.0 + 0.5), 1000L);
        rep = iset::change_of_measure_check_gnp(n, k, pr);
    } else if (family == "tree") {
        rep = iset::change_of_measure_check_tree(n, k);
    } else {
        throw CLI::ValidationError("family must be gnp or tree");
    }
    json j = com_to_json(rep);
    j["check"] = "change-of-measure";
    j["family"] = family;
    j["n"] = n;
    j["k"] = k;
    emit(j);
    const bool ok = rep.identities_ok && rep.planted_mass_is_one && rep.uniform_mass_matches &&
                    rep.probes_ok == rep.probes;
    return ok ? 0 : 1;
}

int cmd_verify_concentration(const std::string& model, int n, std::optional<double> p,
                             std::optional<double> d, int k, std::size_t trials,
                             std::uint64_t seed) {
    const iset::ModelSpec spec = model_from_flags(model, n, p, d);
    const iset::ConcentrationReport rep =
        iset::planted_concentration_experiment(spec, k, trials, seed);
    json j = concentration_to_json(rep);
    j["check"] = "concentration";
    emit(j);
    return rep.violation_count == 0 ? 0 : 1;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir, int threads) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    json config;
    in >> config;
    const iset::ExperimentResult res = iset::run_experiment(config, threads);
    emit(res.report);
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream rep(out_dir + "/report.json");
        rep << res.report.dump(2) << "\n";
        std::ofstream csv(out_dir + "/trials.csv");
        for (const auto& line : res.csv_lines) csv << line << "\n";
    }
    return res.report.at("pass").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent-set sequences of random trees and sparse random graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample a graph and write an edge list");
    std::string gen_model, gen_out;
    int gen_n = 0;
    std::optional<double> gen_p, gen_d;
    std::optional<int> gen_planted;
    std::uint64_t gen_seed = 0;
    gen->add_option("--model", gen_model, "tree|gnp|regular")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "gnp edge probability");
    gen->add_option("--d", gen_d, "expected degree (gnp) or exact degree (regular)");
    gen->add_option("--planted", gen_planted, "plant an independent set of this size");
    gen->add_option("--seed", gen_seed, "master seed")->required();
    gen->add_option("--out", gen_out, "output file")->required();

    // count
    auto* count = app.add_subcommand("count", "exact independence sequence");
    std::string count_input, count_format = "json";
    bool count_padded = false;
    count->add_option("--input", count_input, "edge-list file")->required();
    count->add_option("--format", count_format, "json|csv");
    count->add_flag("--padded", count_padded, "pad coefficients to length n+1");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "sequence shape verdict");
    std::string analyze_input;
    analyze->add_option("--input", analyze_input, "coefficients JSON")->required();

    // constants
    auto* constants = app.add_subcommand("constants", "closed-form constants");
    std::string const_name;
    std::optional<double> const_d, const_alpha;
    constants->add_option("--name", const_name, "rho|karp|frieze|tree-thresholds|er-thresholds|dani")
        ->required();
    constants->add_option("--d", const_d, "degree parameter");
    constants->add_option("--alpha", const_alpha, "density parameter");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Monte Carlo ratio/sequence estimation");
    std::string est_kind, est_input;
    int est_k = 0;
    std::size_t est_trials = 10000;
    std::uint64_t est_seed = 0;
    estimate->add_option("kind", est_kind, "ratio|sequence")->required();
    estimate->add_option("--input", est_input, "edge-list file")->required();
    estimate->add_option("--k", est_k, "set size (ratio) or k_max (sequence)")->required();
    estimate->add_option("--trials", est_trials, "trials per ratio");
    estimate->add_option("--seed", est_seed, "master seed")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "exact and statistical verifications");
    verify->require_subcommand(1);
    auto* vcl = verify->add_subcommand("counting-lemma", "exact ratio identity");
    std::string vcl_input;
    vcl->add_option("--input", vcl_input, "edge-list file")->required();
    auto* vcm = verify->add_subcommand("change-of-measure", "planted/uniform law identities");
    std::string vcm_family = "gnp";
    int vcm_n = 3, vcm_k = 2;
    double vcm_p = 0.5;
    vcm->add_option("--family", vcm_family, "gnp|tree");
    vcm->add_option("--n", vcm_n, "vertex count");
    vcm->add_option("--k", vcm_k, "planted size");
    vcm->add_option("--p", vcm_p, "gnp probability (rounded to a rational over 1000)");
    auto* vcc = verify->add_subcommand("concentration", "planted tail bounds");
    std::string vcc_model = "tree";
    int vcc_n = 500, vcc_k = 100;
    std::optional<double> vcc_p, vcc_d;
    std::size_t vcc_trials = 1000;
    std::uint64_t vcc_seed = 0;
    vcc->add_option("--model", vcc_model, "tree|gnp");
    vcc->add_option("--n", vcc_n, "vertex count");
    vcc->add_option("--p", vcc_p, "gnp probability");
    vcc->add_option("--d", vcc_d, "gnp expected degree");
    vcc->add_option("--k", vcc_k, "planted size");
    vcc->add_option("--trials", vcc_trials, "trial count");
    vcc->add_option("--seed", vcc_seed, "master seed");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a named experiment from a config");
    std::string exp_config, exp_out;
    int exp_threads = 0;
    experiment->add_option("--config", exp_config, "config JSON file")->required();
    experiment->add_option("--out", exp_out, "output directory for report.json and trials.csv");
    experiment->add_option("--threads", exp_threads, "worker count (default: ISET_THREADS or 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_model, gen_n, gen_p, gen_d, gen_planted, gen_seed, gen_out);
        if (count->parsed()) return cmd_count(count_input, count_format, count_padded);
        if (analyze->parsed()) return cmd_analyze(analyze_input);
        if (constants->parsed()) return cmd_constants(const_name, const_d, const_alpha);
        if (estimate->parsed()) return cmd_estimate(est_kind, est_input, est_k, est_trials, est_seed);
        if (verify->parsed()) {
            if (vcl->parsed()) return cmd_verify_counting(vcl_input);
            if (vcm->parsed()) return cmd_verify_com(vcm_family, vcm_n, vcm_k, vcm_p);
            if (vcc->parsed())
                return cmd_verify_concentration(vcc_model, vcc_n, vcc_p, vcc_d, vcc_k, vcc_trials,
                                                vcc_seed);
        }
        if (experiment->parsed()) {
            int threads = exp_threads;
            if (threads <= 0) {
                if (const char* env = std::getenv("ISET_THREADS")) threads = std::atoi(env);
                if (threads <= 0) threads = 1;
            }
            return cmd_experiment(exp_config, exp_out, threads);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
