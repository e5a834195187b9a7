#ifndef ISET_GENERATORS_HPP
#define ISET_GENERATORS_HPP

// Seeded samplers for the three random-graph families (uniform labelled
// trees, G(n, p), random d-regular) and their planted variants, where a
// size-k vertex set sigma is conditioned to be independent.
//
//   tree     Aldous-Broder random walk on the complete host graph; planted
//            variant walks K_n minus the clique on sigma (the conditional law
//            of a uniform tree given sigma independent is exactly the uniform
//            spanning tree of that host).
//   gnp      geometric skipping over the pair sequence; planted variant skips
//            the internal pairs of sigma (exact, no rejection).
//   regular  configuration model, rejecting pairings with loops or repeated
//            edges (exactly uniform over simple d-regular graphs); planted
//            variant rejects until sigma is independent, with an attempt cap.
//
// Every sampler takes an explicit Rng; identical inputs reproduce identical
// graphs bit-for-bit.  Planted samplers build sigma = {0..k-1} and relabel
// through a uniformly chosen k-subset, so the returned sigma is uniform as
// the planted model prescribes; *_prefix variants keep sigma fixed for tests
// that need a pinned support.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iset/graph.hpp"
#include "iset/rng.hpp"

namespace iset {

enum class Family { kTree, kGnp, kRegular };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::kTree: return "tree";
        case Family::kGnp: return "gnp";
        case Family::kRegular: return "regular";
    }
    return "?";
}

struct ModelSpec {
    Family family = Family::kTree;
    int n = 0;
    double p = 0.0;  // gnp edge probability (possibly derived from d/n)
    int degree = 0;  // regular degree

    static ModelSpec tree(int n) { return {Family::kTree, n, 0.0, 0}; }
    static ModelSpec gnp(int n, double p) { return {Family::kGnp, n, p, 0}; }
    static ModelSpec gnp_with_degree(int n, double d) { return {Family::kGnp, n, d / n, 0}; }
    static ModelSpec regular(int n, int degree) { return {Family::kRegular, n, 0.0, degree}; }

    double expected_degree() const { return family == Family::kGnp ? p * (n - 1) : 0.0; }
};

struct PlantedSample {
    Graph graph;
    std::vector<int> sigma;  // sorted
};

// ----------------------------------------------------------------------------
// G(n, p).

namespace detail {

// Iterate the admissible pair sequence by geometric skipping.  Pairs are in
// row-major order (u, v) with u < v; rows for u < skip_prefix start at v =
// skip_prefix (this drops the internal pairs of sigma = {0..skip_prefix-1}).
template <typename EdgeFn>
inline void gnp_skip_walk(int n, int skip_prefix, double p, Rng& rng, EdgeFn&& emit) {
    const double log_q = std::log1p(-p);  // log(1-p) < 0
    auto row_width = [&](int u) { return u < skip_prefix ? n - skip_prefix : n - 1 - u; };
    long long total = 0;
    for (int u = 0; u < n - 1; ++u) total += row_width(u);
    long long idx = -1;
    int row = 0;
    long long row_start = 0;  // index of the first pair in `row`
    while (true) {
        const double u01 = rng.next_double();
        const long long skip = static_cast<long long>(std::floor(std::log(1.0 - u01) / log_q));
        idx += 1 + skip;
        if (idx >= total) break;
        while (idx >= row_start + row_width(row)) {
            row_start += row_width(row);
            ++row;
        }
        const int first_v = row < skip_prefix ? skip_prefix : row + 1;
        emit(row, first_v + static_cast<int>(idx - row_start));
    }
}

// Deterministic relabel sending {0..k-1} onto sigma (order-preserving on both
// sigma and its complement).
inline Graph relabel_prefix_to(const Graph& g, const std::vector<int>& sigma) {
    const int n = g.n();
    const int k = static_cast<int>(sigma.size());
    std::vector<char> in_sigma(static_cast<std::size_t>(n), 0);
    for (int v : sigma) in_sigma[static_cast<std::size_t>(v)] = 1;
    std::vector<int> image(static_cast<std::size_t>(n));
    int next = 0;
    for (int v : sigma) image[static_cast<std::size_t>(next++)] = v;
    for (int v = 0; v < n; ++v)
        if (!in_sigma[static_cast<std::size_t>(v)]) image[static_cast<std::size_t>(next++)] = v;
    Graph h(n);
    for (const auto& [u, v] : g.edges())
        h.add_edge(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)]);
    h.sort_adjacency();
    return h;
}

// Uniform k-subset of {0..n-1}, sorted (partial Fisher-Yates).
inline std::vector<int> uniform_subset(int n, int k, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const int j = i + rng.below_int(n - i);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline Graph sample_gnp(int n, double p, Rng& rng) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("sample_gnp: need 0 < p < 1");
    if (n < 0) throw std::invalid_argument("sample_gnp: negative n");
    Graph g(n);
    detail::gnp_skip_walk(n, 0, p, rng, [&](int u, int v) { g.add_edge(u, v); });
    g.sort_adjacency();
    return g;
}

// sigma = {0..k-1} held independent, all other pairs Bernoulli(p).
inline Graph sample_planted_gnp_prefix(int n, int k, double p, Rng& rng) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("sample_planted_gnp_prefix: need 0 < p < 1");
    if (k < 0 || k > n) throw std::invalid_argument("sample_planted_gnp_prefix: need 0 <= k <= n");
    Graph g(n);
    detail::gnp_skip_walk(n, k, p, rng, [&](int u, int v) { g.add_edge(u, v); });
    g.sort_adjacency();
    return g;
}

// ----------------------------------------------------------------------------
// Uniform labelled trees (Aldous-Broder on the complete graph).

inline Graph sample_uniform_tree(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("sample_uniform_tree: need n >= 2");
    Graph t(n);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[0] = 1;
    int cur = 0, remaining = n - 1;
    while (remaining > 0) {
        int nxt = rng.below_int(n - 1);
        if (nxt >= cur) ++nxt;  // uniform over [0, n) minus cur
        if (!visited[static_cast<std::size_t>(nxt)]) {
            t.add_edge(cur, nxt);
            visited[static_cast<std::size_t>(nxt)] = 1;
            --remaining;
        }
        cur = nxt;
    }
    t.sort_adjacency();
    return t;
}

// Uniform spanning tree of K_n minus the clique on sigma = {0..k-1}: from a
// sigma vertex the walk may only move to a non-sigma vertex.
inline Graph sample_planted_tree_prefix(int n, int k, Rng& rng) {
    if (n < 2) throw std::invalid_argument("sample_planted_tree_prefix: need n >= 2");
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("sample_planted_tree_prefix: need 0 <= k <= n-1");
    Graph t(n);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    visited[0] = 1;
    int cur = 0, remaining = n - 1;
    while (remaining > 0) {
        int nxt;
        if (cur < k) {
            nxt = k + rng.below_int(n - k);
        } else {
            nxt = rng.below_int(n - 1);
            if (nxt >= cur) ++nxt;
        }
        if (!visited[static_cast<std::size_t>(nxt)]) {
            t.add_edge(cur, nxt);
            visited[static_cast<std::size_t>(nxt)] = 1;
            --remaining;
        }
        cur = nxt;
    }
    t.sort_adjacency();
    return t;
}

// ----------------------------------------------------------------------------
// Random d-regular graphs (configuration model).

namespace detail {

// One pairing attempt; returns the simple graph or nothing on loop/multi-edge.
inline bool try_configuration(int n, int d, Rng& rng, Graph& out) {
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v * d + i)] = v;
    rng.shuffle(stubs);
    Graph g(n);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const int u = stubs[i], v = stubs[i + 1];
        if (u == v || g.has_edge(u, v)) return false;
        g.add_edge(u, v);
    }
    g.sort_adjacency();
    out = std::move(g);
    return true;
}

}  // namespace detail

inline Graph sample_regular(int n, int d, Rng& rng, long max_attempts = 1000000) {
    if (d < 0 || d >= n) throw std::invalid_argument("sample_regular: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("sample_regular: n*d must be even");
    Graph g(n);
    for (long attempt = 1; attempt <= max_attempts; ++attempt)
        if (detail::try_configuration(n, d, rng, g)) return g;
    throw std::runtime_error("sample_regular: no simple pairing in " +
                             std::to_string(max_attempts) + " attempts");
}

// Rejection sampler: uniform simple d-regular conditioned on sigma = {0..k-1}
// independent.  Throws (with the attempt count) if the cap is exhausted.
inline Graph sample_planted_regular_prefix(int n, int k, int d, Rng& rng,
                                           long max_attempts = 1000000) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_planted_regular_prefix: bad k");
    if (d < 0 || d >= n) throw std::invalid_argument("sample_planted_regular_prefix: need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("sample_planted_regular_prefix: n*d must be even");
    for (long attempt = 1; attempt <= max_attempts; ++attempt) {
        Graph g(n);
        if (!detail::try_configuration(n, d, rng, g)) continue;
        bool ok = true;
        for (int v = 0; v < k && ok; ++v)
            for (int w : g.neighbors(v))
                if (w < k) {
                    ok = false;
                    break;
                }
        if (ok) return g;
    }
    throw std::runtime_error("sample_planted_regular_prefix: no admissible sample in " +
                             std::to_string(max_attempts) + " attempts");
}

// Planted pairing model: the configuration pairing (loops and multi-edges
// allowed) conditioned on no sigma-sigma pair.  Sampled directly rather than
// by rejection: sigma stubs can only pair with non-sigma stubs, so matching
// them in a fixed order, each to a uniform remaining non-sigma stub, hits
// every admissible configuration of the sigma part with the same probability
// prod_j 1/(d(n-k)-j); the leftover stubs then form a uniform pairing among
// themselves.  The returned Graph collapses parallel edges and drops loops,
// which preserves every neighborhood-based statistic (in particular N_sigma).
// This is the model under which the planted-mean product formula is exact.
inline Graph sample_planted_regular_pairing(int n, int k, int d, Rng& rng) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_planted_regular_pairing: bad k");
    if (d < 0) throw std::invalid_argument("sample_planted_regular_pairing: bad d");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("sample_planted_regular_pairing: n*d must be even");
    if (d > 0 && 2 * k > n)
        throw std::invalid_argument("sample_planted_regular_pairing: need 2k <= n");
    std::vector<int> pool;  // owners of the unmatched non-sigma stubs
    pool.reserve(static_cast<std::size_t>(n - k) * static_cast<std::size_t>(d));
    for (int v = k; v < n; ++v)
        for (int i = 0; i < d; ++i) pool.push_back(v);

    Graph g(n);
    auto connect = [&](int u, int v) {
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    };
    auto take = [&](std::size_t j) {
        const int v = pool[j];
        pool[j] = pool.back();
        pool.pop_back();
        return v;
    };
    for (int v = 0; v < k; ++v)
        for (int i = 0; i < d; ++i) connect(v, take(rng.below(pool.size())));
    while (!pool.empty()) {
        const int u = pool.back();
        pool.pop_back();
        connect(u, take(rng.below(pool.size())));
    }
    g.sort_adjacency();
    return g;
}

// ----------------------------------------------------------------------------
// Family dispatch.

inline Graph sample_model(const ModelSpec& m, Rng& rng) {
    switch (m.family) {
        case Family::kTree: return sample_uniform_tree(m.n, rng);
        case Family::kGnp: return sample_gnp(m.n, m.p, rng);
        case Family::kRegular: return sample_regular(m.n, m.degree, rng);
    }
    throw std::logic_error("sample_model: unknown family");
}

inline Graph sample_planted_prefix(const ModelSpec& m, int k, Rng& rng) {
    switch (m.family) {
        case Family::kTree: return sample_planted_tree_prefix(m.n, k, rng);
        case Family::kGnp: return sample_planted_gnp_prefix(m.n, k, m.p, rng);
        case Family::kRegular: return sample_planted_regular_prefix(m.n, k, m.degree, rng);
    }
    throw std::logic_error("sample_planted_prefix: unknown family");
}

// The planted model proper: sigma uniform among size-k subsets, graph drawn
// conditioned on sigma independent.  Implemented by prefix planting followed
// by an order-preserving relabel onto a uniform subset (valid because every
// family law is invariant under vertex relabelling).
inline PlantedSample sample_planted(const ModelSpec& m, int k, Rng& rng) {
    std::vector<int> sigma = detail::uniform_subset(m.n, k, rng);
    Graph g = sample_planted_prefix(m, k, rng);
    return {detail::relabel_prefix_to(g, sigma), std::move(sigma)};
}

}  // namespace iset

#endif  // ISET_GENERATORS_HPP
