#ifndef ISET_ESTIMATORS_HPP
#define ISET_ESTIMATORS_HPP

// Monte Carlo estimation built on the counting identity
//
//     sum over independent k-sets S of N_S  =  (k+1) * x_{k+1},
//
// where N_S counts the vertices outside S with no neighbor in S.  Averaging
// N_S/(k+1) over exactly uniform size-k independent sets therefore estimates
// the ratio x_{k+1}/x_k without bias, and ratios telescope into sequence
// estimates.  The same N statistic drives the planted-model concentration
// experiments.  Exact (rational) verification of the planted/uniform
// change-of-measure identities over fully enumerated families lives here too.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "iset/bigint.hpp"
#include "iset/constants.hpp"
#include "iset/exact_count.hpp"
#include "iset/generators.hpp"
#include "iset/graph.hpp"
#include "iset/rng.hpp"
#include "iset/stats.hpp"

namespace iset {

struct EstimateWithError {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

// ----------------------------------------------------------------------------
// Ratio and sequence estimation.

/// Unbiased estimate of x_{k+1}/x_k: mean of N_sigma/(k+1) over uniform size-k
// independent sets.  Streams are derived as (seed, stream_base + trial).
inline EstimateWithError ratio_estimate(const Graph& g, int k, std::size_t trials,
                                        std::uint64_t seed, std::uint64_t stream_base = 0,
                                        int component_cap = 64) {
    IndependentSetSampler sampler(g, component_cap);
    if (k < 0 || k >= static_cast<int>(sampler.sequence().size()))
        throw std::invalid_argument("ratio_estimate: x_k(g) = 0");
    RunningStat stat;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed, stream_base + t);
        const auto sigma = sampler.sample(k, rng);
        stat.push(static_cast<double>(unconnected_count(g, sigma)) / (k + 1.0));
    }
    return {stat.mean(), stat.stderror(), trials, seed};
}

struct SequenceEstimate {
    std::vector<double> estimates;     // x-hat_0 .. x-hat_{k_max}; x-hat_0 = 1
    std::vector<double> rel_std_error; // propagated relative standard errors
    std::vector<EstimateWithError> ratios;  // per-step ratio estimates
    std::size_t trials_per_ratio = 0;
    std::uint64_t seed = 0;
};

// Telescoped product x-hat_k = prod_{j<k} ratio(j), from x_0 = 1; relative
// standard errors combine in quadrature (the per-step estimates are
// independent by stream separation).
inline SequenceEstimate sequence_estimate(const Graph& g, int k_max, std::size_t trials,
                                          std::uint64_t seed, int component_cap = 64) {
    IndependentSetSampler sampler(g, component_cap);
    if (k_max < 0 || k_max >= static_cast<int>(sampler.sequence().size()))
        throw std::invalid_argument("sequence_estimate: x_k(g) = 0 for some k <= k_max");
    SequenceEstimate out;
    out.trials_per_ratio = trials;
    out.seed = seed;
    out.estimates = {1.0};
    out.rel_std_error = {0.0};
    double acc = 1.0, rel_var = 0.0;
    for (int j = 0; j < k_max; ++j) {
        const std::uint64_t stream_base = static_cast<std::uint64_t>(j) << 32;
        RunningStat stat;
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng(seed, stream_base + t);
            const auto sigma = sampler.sample(j, rng);
            stat.push(static_cast<double>(unconnected_count(g, sigma)) / (j + 1.0));
        }
        out.ratios.push_back({stat.mean(), stat.stderror(), trials, seed});
        acc *= stat.mean();
        if (stat.mean() != 0.0) {
            const double r = stat.stderror() / stat.mean();
            rel_var += r * r;
        }
        out.estimates.push_back(acc);
        out.rel_std_error.push_back(std::sqrt(rel_var));
    }
    return out;
}

// ----------------------------------------------------------------------------
// Counting Lemma verification by full enumeration.

// True iff sum over independent k-sets of N_S equals (k+1) x_{k+1} exactly,
// for every k.  Enumeration-guarded.
inline bool counting_lemma_check(const Graph& g, int guard_n = 20) {
    const Sequence xs = independence_sequence(g);
    std::vector<Nat> n_sum(xs.size() + 1, Nat(0));
    for_each_independent_set(
        g,
        [&](const std::vector<int>& s) {
            n_sum[s.size()] += Nat(static_cast<long>(unconnected_count(g, s)));
        },
        guard_n);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Nat rhs = (k + 1 < xs.size()) ? Nat(xs[k + 1] * static_cast<long>(k + 1)) : Nat(0);
        if (n_sum[k] != rhs) return false;
    }
    return true;
}

// ----------------------------------------------------------------------------
// Planted concentration experiments.

struct TailPoint {
    std::string event;   // which deviation event the bound covers
    double s = 0.0;      // grid value
    double empirical = 0.0;
    double bound = 0.0;
    bool violated = false;
};

struct ConcentrationReport {
    std::string model;
    int n = 0;
    int k = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double theoretical_mean = 0.0;  // exact finite-n planted mean
    double empirical_mean = 0.0;
    double empirical_stddev = 0.0;
    std::vector<double> quantile_probs;
    std::vector<double> quantiles;
    std::vector<TailPoint> tail;
    std::size_t violation_count = 0;
};

// Samples the planted model, records N_sigma, and compares empirical tail
// frequencies along a grid against the stated Chernoff-style bounds.  Bounds
// exist for the gnp and tree families only.
inline ConcentrationReport planted_concentration_experiment(
    const ModelSpec& model, int k, std::size_t trials, std::uint64_t seed,
    const std::vector<double>& grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    if (model.family == Family::kRegular)
        throw std::invalid_argument(
            "planted_concentration_experiment: no tail bound stated for the regular family");
    ConcentrationReport rep;
    rep.model = family_name(model.family);
    rep.n = model.n;
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;
    const double alpha = static_cast<double>(k) / model.n;
    rep.theoretical_mean =
        model.family == Family::kGnp
            ? to_double(planted_mean_gnp(model.n, k, Rat(model.p)))
            : to_double(planted_mean_tree(model.n, k));

    std::vector<double> ns;
    ns.reserve(trials);
    RunningStat stat;
    std::vector<int> sigma(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sigma[static_cast<std::size_t>(i)] = i;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        // N_sigma's law is relabelling-invariant; the prefix variant samples it.
        const Graph g = sample_planted_prefix(model, k, rng);
        const double nval = static_cast<double>(unconnected_count(g, sigma));
        ns.push_back(nval);
        stat.push(nval);
    }
    rep.empirical_mean = stat.mean();
    rep.empirical_stddev = stat.stddev();

    std::sort(ns.begin(), ns.end());
    rep.quantile_probs = {0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99};
    for (double q : rep.quantile_probs) {
        const std::size_t idx = std::min(
            ns.size() - 1, static_cast<std::size_t>(q * static_cast<double>(ns.size() - 1) + 0.5));
        rep.quantiles.push_back(ns[idx]);
    }

    const double mu = rep.theoretical_mean;
    auto freq = [&](auto&& pred) {
        std::size_t c = 0;
        for (double v : ns)
            if (pred(v)) ++c;
        return static_cast<double>(c) / static_cast<double>(trials);
    };
    for (double s : grid) {
        if (model.family == Family::kGnp) {
            TailPoint tp;
            tp.event = "abs(N - EN) >= s*EN";
            tp.s = s;
            tp.empirical = freq([&](double v) { return std::fabs(v - mu) >= s * mu; });
            tp.bound = gnp_tail_bound(s, model.n, alpha, model.p * model.n);
            tp.violated = tp.empirical > tp.bound;
            rep.tail.push_back(tp);
        } else {
            TailPoint two;
            two.event = "abs(N - EN) > s*EN + 1";
            two.s = s;
            two.empirical = freq([&](double v) { return std::fabs(v - mu) > s * mu + 1.0; });
            two.bound = tree_tail_bound_two_sided(s, model.n, alpha);
            two.violated = two.empirical > two.bound;
            rep.tail.push_back(two);
            if (s < 1.0) {
                TailPoint lo;
                lo.event = "N < (1-s)*EN - 1";
                lo.s = s;
                lo.empirical = freq([&](double v) { return v < (1.0 - s) * mu - 1.0; });
                lo.bound = tree_tail_bound_lower(s, model.n, alpha);
                lo.violated = lo.empirical > lo.bound;
                rep.tail.push_back(lo);
            }
            TailPoint hi;
            hi.event = "N > (1+s)*EN + 1";
            hi.s = s;
            hi.empirical = freq([&](double v) { return v > (1.0 + s) * mu + 1.0; });
            hi.bound = tree_tail_bound_upper(s, model.n, alpha);
            hi.violated = hi.empirical > hi.bound;
            rep.tail.push_back(hi);
        }
    }
    for (const auto& tp : rep.tail)
        if (tp.violated) ++rep.violation_count;
    return rep;
}

// ----------------------------------------------------------------------------
// Exact change-of-measure verification on fully enumerated families.
//
// For a family small enough to list every graph with its probability, the
// planted law P and the uniform law U on pairs (G, sigma) with sigma a size-k
// independent set satisfy, pair by pair,
//
//     P(G, sigma) = Pr(G) / E X_k        U(G, sigma) = Pr(G) / X_k(G),
//
// where U is a sub-probability law: its total mass is Pr(X_k >= 1), because a
// graph with no independent k-set contributes nothing.  The comparison
// inequality states, for any event A on pairs and any c > 0, with
// C = {(G, sigma) : X_k(G) >= c E X_k}:
//
//     U(A) <= (1/c) P(A and C) + U(not C).

struct WeightedPair {
    std::size_t graph_id;
    std::vector<int> sigma;
    Rat planted_mass;
    Rat uniform_mass;
    Nat x_k;  // X_k of the graph the pair came from
};

struct ChangeOfMeasureReport {
    std::size_t graphs_enumerated = 0;
    std::size_t pairs_enumerated = 0;
    bool identities_ok = false;       // both mass identities, every pair
    bool planted_mass_is_one = false;
    bool uniform_mass_matches = false;  // sum U = Pr(X_k >= 1)
    std::size_t probes = 0;
    std::size_t probes_ok = 0;
    Rat expected_xk;
};

namespace detail {

template <typename GraphProbFn>
inline ChangeOfMeasureReport change_of_measure_impl(int n, int k, GraphProbFn&& each_graph) {
    // each_graph(visit) must call visit(graph, probability) for every graph of
    // the family, probabilities summing to one.
    ChangeOfMeasureReport rep;

    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);

    Rat e_xk = 0, pr_xk_pos = 0, total_prob = 0;
    std::vector<WeightedPair> pairs;
    std::vector<Rat> graph_prob;
    std::vector<Rat> sigma_ind_prob(subsets.size(), Rat(0));  // Pr(sigma independent)

    each_graph([&](const Graph& g, const Rat& prob) {
        const std::size_t gid = graph_prob.size();
        graph_prob.push_back(prob);
        total_prob += prob;
        const Sequence xs = independence_sequence(g);
        const Nat xk = (k < static_cast<int>(xs.size())) ? xs[static_cast<std::size_t>(k)] : Nat(0);
        e_xk += Rat(xk) * prob;
        if (sgn(xk) > 0) pr_xk_pos += prob;
        for (std::size_t si = 0; si < subsets.size(); ++si) {
            if (!g.is_independent_set(subsets[si])) continue;
            sigma_ind_prob[si] += prob;
            WeightedPair wp;
            wp.graph_id = gid;
            wp.sigma = subsets[si];
            wp.planted_mass = 0;  // filled below (needs E X_k)
            wp.uniform_mass = prob / Rat(xk);
            wp.x_k = xk;
            pairs.push_back(std::move(wp));
        }
    });
    rep.graphs_enumerated = graph_prob.size();
    rep.pairs_enumerated = pairs.size();
    rep.expected_xk = e_xk;
    if (total_prob != 1) throw std::logic_error("change_of_measure: family probabilities do not sum to 1");

    // Identity route: mass = Pr(G)/E X_k.  Definition route: sigma uniform,
    // then G conditioned on sigma independent.
    const Rat n_choose_k(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
    bool ok = sgn(e_xk) > 0;
    Rat planted_total = 0, uniform_total = 0;
    for (auto& wp : pairs) {
        wp.planted_mass = graph_prob[wp.graph_id] / e_xk;
        // Definition route, no exchangeability shortcut: Pr picks this sigma
        // (1/C(n,k)) times Pr(G | sigma independent).
        const std::size_t si =
            static_cast<std::size_t>(std::find(subsets.begin(), subsets.end(), wp.sigma) -
                                     subsets.begin());
        const Rat definition_mass =
            (Rat(1) / n_choose_k) * graph_prob[wp.graph_id] / sigma_ind_prob[si];
        if (definition_mass != wp.planted_mass) ok = false;
        planted_total += wp.planted_mass;
        uniform_total += wp.uniform_mass;
    }
    rep.identities_ok = ok;
    rep.planted_mass_is_one = (planted_total == 1);
    rep.uniform_mass_matches = (uniform_total == pr_xk_pos);

    // Random-event probes of the comparison inequality.
    Rng rng(0x434f4d50ULL ^ (static_cast<std::uint64_t>(n) << 8) ^ static_cast<std::uint64_t>(k));
    const Rat cs[4] = {Rat(1, 10), Rat(1, 2), Rat(1), Rat(2)};
    rep.probes = 100;
    rep.probes_ok = 0;
    for (std::size_t probe = 0; probe < rep.probes; ++probe) {
        const Rat c = cs[rng.below(4)];
        const Rat cutoff = c * e_xk;
        Rat u_a = 0, p_ac = 0, u_not_c = 0;
        for (const auto& wp : pairs) {
            const bool in_a = rng.bernoulli(0.5);
            const bool in_c = Rat(wp.x_k) >= cutoff;
            if (in_a) u_a += wp.uniform_mass;
            if (in_a && in_c) p_ac += wp.planted_mass;
            if (!in_c) u_not_c += wp.uniform_mass;
        }
        if (u_a <= p_ac / c + u_not_c) ++rep.probes_ok;
    }
    return rep;
}

}  // namespace detail

// Enumerable families: gnp lists all 2^C(n,2) graphs with Bernoulli-p edge
// weights (p exact rational); tree lists the n^(n-2) labelled trees with
// equal weight.  Guarded to n <= 5 (gnp) / n <= 7 (tree).
inline ChangeOfMeasureReport change_of_measure_check_gnp(int n, int k, const Rat& p) {
    if (n > 5) throw std::invalid_argument("change_of_measure_check_gnp: n must be <= 5");
    const int pair_count = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    return detail::change_of_measure_impl(n, k, [&](auto&& visit) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pair_count); ++mask) {
            Graph g(n);
            Rat prob = 1;
            for (int i = 0; i < pair_count; ++i) {
                if (mask & (std::uint64_t(1) << i)) {
                    g.add_edge(all_pairs[static_cast<std::size_t>(i)].first,
                               all_pairs[static_cast<std::size_t>(i)].second);
                    prob *= p;
                } else {
                    prob *= Rat(1) - p;
                }
            }
            visit(g, prob);
        }
    });
}

inline ChangeOfMeasureReport change_of_measure_check_tree(int n, int k) {
    if (n < 2 || n > 7) throw std::invalid_argument("change_of_measure_check_tree: n must be in [2,7]");
    const Rat each =
        rat_of(Nat(1), nat_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2)));
    return detail::change_of_measure_impl(n, k, [&](auto&& visit) {
        for (const Graph& t : all_labelled_trees(n)) visit(t, each);
    });
}

}  // namespace iset

#endif  // ISET_ESTIMATORS_HPP
