#ifndef ISET_EXACT_COUNT_HPP
#define ISET_EXACT_COUNT_HPP

// Exact counting of independent sets and matchings.
//
// Two engines compute the independence sequence x_0..x_alpha (number of
// independent sets of each size, arbitrary precision):
//   * a two-state dynamic program over rooted trees/forests, O(n^2)
//     coefficient operations, practical to n ~ 10^5;
//   * a memoized branching recursion X(G) = X(G-v) + t*X(G-N[v]) on a
//     highest-degree pivot for general graphs, with connected-component
//     factorization; components are limited to 64 vertices (bitmask state).
//
// Both engines double as exact samplers: backtracking through the counting
// tables with big-integer weights yields an exactly uniform independent set
// of any requested size.  Matching counts use an analogous vertex-branching
// recursion.  Everything here is deterministic and thread-compatible (no
// shared mutable state across instances).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iset/bigint.hpp"
#include "iset/graph.hpp"
#include "iset/rng.hpp"

namespace iset {

// Coefficient vector by size/cardinality, index = size, trailing zeros trimmed.
using Sequence = std::vector<Nat>;

class ComponentTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------------------------
// Polynomial helpers (coefficient vectors over Nat).

inline Sequence conv(const Sequence& a, const Sequence& b) {
    if (a.empty() || b.empty()) return {};
    Sequence c(a.size() + b.size() - 1, Nat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return c;
}

inline void trim_sequence(Sequence& s) {
    while (s.size() > 1 && sgn(s.back()) == 0) s.pop_back();
}

inline Sequence pad_sequence(Sequence s, std::size_t length) {
    if (s.size() < length) s.resize(length, Nat(0));
    return s;
}

inline Rat eval_sequence(const Sequence& s, const Rat& t) {
    Rat acc = 0;
    for (std::size_t i = s.size(); i-- > 0;) acc = acc * t + Rat(s[i]);
    return acc;
}

inline bool is_forest(const Graph& g) {
    return g.m() == g.n() - static_cast<int>(g.components().size());
}

namespace detail {

// Coefficient of t (shift by one) applied to p, added into acc.
inline void add_shifted(Sequence& acc, const Sequence& p) {
    if (acc.size() < p.size() + 1) acc.resize(p.size() + 1, Nat(0));
    for (std::size_t j = 0; j < p.size(); ++j) acc[j + 1] += p[j];
}

inline Sequence add_sequences(const Sequence& a, const Sequence& b) {
    Sequence c = a;
    if (c.size() < b.size()) c.resize(b.size(), Nat(0));
    for (std::size_t j = 0; j < b.size(); ++j) c[j] += b[j];
    return c;
}

// Weighted choice with exact big-integer weights; returns the chosen index.
inline std::size_t weighted_pick(Rng& rng, const std::vector<Nat>& weights) {
    Nat total = 0;
    for (const auto& w : weights) total += w;
    if (sgn(total) <= 0) throw std::logic_error("weighted_pick: no positive weight");
    Nat r = uniform_nat_below(rng, total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    throw std::logic_error("weighted_pick: fell off the end");
}

inline Nat coeff(const Sequence& s, long k) {
    if (k < 0 || k >= static_cast<long>(s.size())) return Nat(0);
    return s[static_cast<std::size_t>(k)];
}

// ----------------------------------------------------------------------------
// Rooted-tree tables for one connected tree component.
//
// A[v]: independence sequence of the subtree at v with v excluded;
// B[v]: with v included (so B[v] has no constant term);
// S[v] = A[v] + B[v].  Children are merged left to right by convolution, and
// the partial products (prefix tables) are retained so a sampler can walk the
// merge backwards and split a size budget among children with exact weights.

struct TreeTables {
    std::vector<int> verts;                   // local index -> original vertex
    std::vector<std::vector<int>> children;   // local indices
    std::vector<int> order;                   // children precede parents
    std::vector<Sequence> A, B, S;
    std::vector<std::vector<Sequence>> pref_a;  // pref_a[v][j] = conv of A over first j children
    std::vector<std::vector<Sequence>> pref_s;  // pref_s[v][j] = conv of S over first j children

    int root() const { return 0; }
};

inline TreeTables build_tree_tables(const Graph& g, const std::vector<int>& comp) {
    const int sz = static_cast<int>(comp.size());
    TreeTables t;
    t.verts = comp;
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < sz; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;

    // Breadth-first orientation away from the root (local vertex 0).
    t.children.assign(static_cast<std::size_t>(sz), {});
    std::vector<int> parent(static_cast<std::size_t>(sz), -1);
    std::vector<int> bfs = {0};
    parent[0] = 0;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const int v = bfs[head];
        for (int w_orig : g.neighbors(t.verts[static_cast<std::size_t>(v)])) {
            const int w = local[static_cast<std::size_t>(w_orig)];
            if (w < 0 || parent[static_cast<std::size_t>(w)] != -1) continue;
            parent[static_cast<std::size_t>(w)] = v;
            t.children[static_cast<std::size_t>(v)].push_back(w);
            bfs.push_back(w);
        }
    }
    if (static_cast<int>(bfs.size()) != sz)
        throw std::invalid_argument("build_tree_tables: component is not connected");

    t.order.assign(bfs.rbegin(), bfs.rend());
    t.A.assign(static_cast<std::size_t>(sz), {});
    t.B.assign(static_cast<std::size_t>(sz), {});
    t.S.assign(static_cast<std::size_t>(sz), {});
    t.pref_a.assign(static_cast<std::size_t>(sz), {});
    t.pref_s.assign(static_cast<std::size_t>(sz), {});

    for (int v : t.order) {
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        auto& pa = t.pref_a[static_cast<std::size_t>(v)];
        auto& ps = t.pref_s[static_cast<std::size_t>(v)];
        pa.reserve(ch.size() + 1);
        ps.reserve(ch.size() + 1);
        pa.push_back({Nat(1)});
        ps.push_back({Nat(1)});
        for (int c : ch) {
            pa.push_back(conv(pa.back(), t.A[static_cast<std::size_t>(c)]));
            ps.push_back(conv(ps.back(), t.S[static_cast<std::size_t>(c)]));
        }
        t.A[static_cast<std::size_t>(v)] = ps.back();
        Sequence b(pa.back().size() + 1, Nat(0));
        for (std::size_t j = 0; j < pa.back().size(); ++j) b[j + 1] = pa.back()[j];
        t.B[static_cast<std::size_t>(v)] = std::move(b);
        t.S[static_cast<std::size_t>(v)] =
            add_sequences(t.A[static_cast<std::size_t>(v)], t.B[static_cast<std::size_t>(v)]);
    }
    return t;
}

}  // namespace detail

// ----------------------------------------------------------------------------
// Tree/forest engine.

inline Sequence independence_sequence_tree(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("independence_sequence_tree: input has a cycle");
    Sequence result = {Nat(1)};
    for (const auto& comp : g.components()) {
        auto tables = detail::build_tree_tables(g, comp);
        result = conv(result, tables.S[static_cast<std::size_t>(tables.root())]);
    }
    trim_sequence(result);
    return result;
}

// Independence number of a forest by the linear two-state size DP.
inline int alpha_tree(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("alpha_tree: input has a cycle");
    int total = 0;
    for (const auto& comp : g.components()) {
        // Orient away from comp[0] without building the polynomial tables.
        const int sz = static_cast<int>(comp.size());
        std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
        for (int i = 0; i < sz; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
        std::vector<int> parent(static_cast<std::size_t>(sz), -1), bfs = {0};
        parent[0] = 0;
        for (std::size_t head = 0; head < bfs.size(); ++head)
            for (int w_orig : g.neighbors(comp[static_cast<std::size_t>(bfs[head])])) {
                const int w = local[static_cast<std::size_t>(w_orig)];
                if (parent[static_cast<std::size_t>(w)] == -1) {
                    parent[static_cast<std::size_t>(w)] = bfs[head];
                    bfs.push_back(w);
                }
            }
        std::vector<int> ex(static_cast<std::size_t>(sz), 0), in(static_cast<std::size_t>(sz), 1);
        for (std::size_t i = bfs.size(); i-- > 1;) {
            const int v = bfs[i], p = parent[static_cast<std::size_t>(v)];
            ex[static_cast<std::size_t>(p)] +=
                std::max(ex[static_cast<std::size_t>(v)], in[static_cast<std::size_t>(v)]);
            in[static_cast<std::size_t>(p)] += ex[static_cast<std::size_t>(v)];
        }
        total += std::max(ex[0], in[0]);
    }
    return total;
}

// ----------------------------------------------------------------------------
// Branching engine for general graphs (per-component bitmask state, <= 64).

class ComponentCounter {
public:
    ComponentCounter(const Graph& g, const std::vector<int>& comp) : verts_(comp) {
        const int sz = static_cast<int>(comp.size());
        if (sz > 64)
            throw ComponentTooLargeError("component has " + std::to_string(sz) +
                                         " vertices; branching engine caps at 64");
        std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
        for (int i = 0; i < sz; ++i) local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
        nbr_.assign(static_cast<std::size_t>(sz), 0);
        for (int i = 0; i < sz; ++i)
            for (int w : g.neighbors(comp[static_cast<std::size_t>(i)])) {
                const int j = local[static_cast<std::size_t>(w)];
                if (j >= 0) nbr_[static_cast<std::size_t>(i)] |= bit(j);
            }
        full_ = (sz == 64) ? ~std::uint64_t(0) : (bit(sz) - 1);
    }

    const Sequence& sequence() { return poly(full_); }

    // Appends an exactly uniform independent set of size k (original vertex
    // ids) to out.  Requires x_k > 0 for this component restriction.
    void sample(std::uint64_t mask, int k, Rng& rng, std::vector<int>& out) {
        if (mask == 0) {
            if (k != 0) throw std::logic_error("ComponentCounter::sample: budget left over");
            return;
        }
        const auto parts = split_parts(mask);
        if (parts.size() > 1) {
            sample_over_parts(parts, k, rng, out);
            return;
        }
        const int v = pivot(mask);
        const std::uint64_t m_ex = mask & ~bit(v);
        const std::uint64_t m_in = mask & ~(nbr_[static_cast<std::size_t>(v)] | bit(v));
        const Nat w_ex = detail::coeff(poly(m_ex), k);
        const Nat w_in = detail::coeff(poly(m_in), k - 1);
        const auto choice = detail::weighted_pick(rng, {w_ex, w_in});
        if (choice == 0) {
            sample(m_ex, k, rng, out);
        } else {
            out.push_back(verts_[static_cast<std::size_t>(v)]);
            sample(m_in, k - 1, rng, out);
        }
    }

    std::uint64_t full_mask() const { return full_; }

private:
    static std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

    // Connected parts of the induced subgraph on mask, as sub-masks.
    std::vector<std::uint64_t> split_parts(std::uint64_t mask) const {
        std::vector<std::uint64_t> parts;
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t comp = rest & (~rest + 1);
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t nxt = 0;
                for (std::uint64_t f = frontier; f;) {
                    const int v = __builtin_ctzll(f);
                    f &= f - 1;
                    nxt |= nbr_[static_cast<std::size_t>(v)] & mask;
                }
                frontier = nxt & ~comp;
                comp |= frontier;
            }
            parts.push_back(comp);
            rest &= ~comp;
        }
        return parts;
    }

    // Highest degree within mask, ties to the lowest index.
    int pivot(std::uint64_t mask) const {
        int best = -1, best_deg = -1;
        for (std::uint64_t m = mask; m;) {
            const int v = __builtin_ctzll(m);
            m &= m - 1;
            const int deg = __builtin_popcountll(nbr_[static_cast<std::size_t>(v)] & mask);
            if (deg > best_deg) {
                best_deg = deg;
                best = v;
            }
        }
        return best;
    }

    const Sequence& poly(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Sequence result;
        if (mask == 0) {
            result = {Nat(1)};
        } else {
            const auto parts = split_parts(mask);
            if (parts.size() > 1) {
                result = {Nat(1)};
                for (std::uint64_t p : parts) result = conv(result, poly(p));
            } else {
                const int v = pivot(mask);
                result = poly(mask & ~bit(v));  // copy: recursion below may rehash
                const Sequence with_v = poly(mask & ~(nbr_[static_cast<std::size_t>(v)] | bit(v)));
                detail::add_shifted(result, with_v);
            }
            trim_sequence(result);
        }
        return memo_.emplace(mask, std::move(result)).first->second;
    }

    void sample_over_parts(const std::vector<std::uint64_t>& parts, int k, Rng& rng,
                           std::vector<int>& out) {
        // Suffix products let each part's share be drawn with exact weights.
        const std::size_t r = parts.size();
        std::vector<Sequence> polys(r);
        for (std::size_t i = 0; i < r; ++i) polys[i] = poly(parts[i]);
        std::vector<Sequence> suffix(r + 1);
        suffix[r] = {Nat(1)};
        for (std::size_t i = r; i-- > 0;) suffix[i] = conv(polys[i], suffix[i + 1]);
        int budget = k;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Nat> weights(static_cast<std::size_t>(budget) + 1);
            for (int s = 0; s <= budget; ++s)
                weights[static_cast<std::size_t>(s)] =
                    detail::coeff(polys[i], s) * detail::coeff(suffix[i + 1], budget - s);
            const int s = static_cast<int>(detail::weighted_pick(rng, weights));
            sample(parts[i], s, rng, out);
            budget -= s;
        }
        if (budget != 0) throw std::logic_error("sample_over_parts: budget not exhausted");
    }

    std::vector<int> verts_;
    std::vector<std::uint64_t> nbr_;
    std::uint64_t full_ = 0;
    std::unordered_map<std::uint64_t, Sequence> memo_;
};

class BranchingCounter {
public:
    explicit BranchingCounter(const Graph& g, int component_cap = 64) {
        if (component_cap > 64) component_cap = 64;
        for (const auto& comp : g.components()) {
            if (static_cast<int>(comp.size()) > component_cap)
                throw ComponentTooLargeError("component has " + std::to_string(comp.size()) +
                                             " vertices; cap is " + std::to_string(component_cap));
            comps_.emplace_back(g, comp);
        }
        seq_ = {Nat(1)};
        for (auto& c : comps_) seq_ = conv(seq_, c.sequence());
        trim_sequence(seq_);
    }

    const Sequence& sequence() const { return seq_; }

    std::vector<int> sample(int k, Rng& rng) {
        if (k < 0 || k >= static_cast<int>(seq_.size()) || sgn(seq_[static_cast<std::size_t>(k)]) == 0)
            throw std::invalid_argument("BranchingCounter::sample: no independent set of size " +
                                        std::to_string(k));
        std::vector<int> out;
        const std::size_t r = comps_.size();
        std::vector<Sequence> suffix(r + 1);
        suffix[r] = {Nat(1)};
        for (std::size_t i = r; i-- > 0;) suffix[i] = conv(comps_[i].sequence(), suffix[i + 1]);
        int budget = k;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<Nat> weights(static_cast<std::size_t>(budget) + 1);
            for (int s = 0; s <= budget; ++s)
                weights[static_cast<std::size_t>(s)] =
                    detail::coeff(comps_[i].sequence(), s) * detail::coeff(suffix[i + 1], budget - s);
            const int s = static_cast<int>(detail::weighted_pick(rng, weights));
            comps_[i].sample(comps_[i].full_mask(), s, rng, out);
            budget -= s;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<ComponentCounter> comps_;
    Sequence seq_;
};

inline Sequence independence_sequence_branching(const Graph& g, int component_cap = 64) {
    return BranchingCounter(g, component_cap).sequence();
}

// Route forests to the tree DP (any n), everything else to branching.
inline Sequence independence_sequence(const Graph& g, int component_cap = 64) {
    if (is_forest(g)) return independence_sequence_tree(g);
    return independence_sequence_branching(g, component_cap);
}

inline int max_independent_set_size(const Graph& g, int component_cap = 64) {
    if (is_forest(g)) return alpha_tree(g);
    return static_cast<int>(independence_sequence_branching(g, component_cap).size()) - 1;
}

// ----------------------------------------------------------------------------
// Exact uniform sampling of independent sets by size.

class TreeSetSampler {
public:
    explicit TreeSetSampler(const Graph& g) {
        if (!is_forest(g)) throw std::invalid_argument("TreeSetSampler: input has a cycle");
        for (const auto& comp : g.components()) comps_.push_back(detail::build_tree_tables(g, comp));
        suffix_.assign(comps_.size() + 1, {});
        suffix_[comps_.size()] = {Nat(1)};
        for (std::size_t i = comps_.size(); i-- > 0;)
            suffix_[i] = conv(comps_[i].S[static_cast<std::size_t>(comps_[i].root())], suffix_[i + 1]);
        seq_ = suffix_[0];
        trim_sequence(seq_);
    }

    const Sequence& sequence() const { return seq_; }

    std::vector<int> sample(int k, Rng& rng) const {
        if (k < 0 || k >= static_cast<int>(seq_.size()) || sgn(seq_[static_cast<std::size_t>(k)]) == 0)
            throw std::invalid_argument("TreeSetSampler::sample: no independent set of size " +
                                        std::to_string(k));
        std::vector<int> out;
        int budget = k;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const auto& root_s = comps_[i].S[static_cast<std::size_t>(comps_[i].root())];
            std::vector<Nat> weights(static_cast<std::size_t>(budget) + 1);
            for (int s = 0; s <= budget; ++s)
                weights[static_cast<std::size_t>(s)] =
                    detail::coeff(root_s, s) * detail::coeff(suffix_[i + 1], budget - s);
            const int s = static_cast<int>(detail::weighted_pick(rng, weights));
            assign_any(comps_[i], comps_[i].root(), s, rng, out);
            budget -= s;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Subtree at v receives budget a; v's inclusion not yet decided.
    static void assign_any(const detail::TreeTables& t, int v, int a, Rng& rng,
                           std::vector<int>& out) {
        const Nat w_ex = detail::coeff(t.A[static_cast<std::size_t>(v)], a);
        const Nat w_in = detail::coeff(t.B[static_cast<std::size_t>(v)], a);
        if (detail::weighted_pick(rng, {w_ex, w_in}) == 0)
            assign_excluded(t, v, a, rng, out);
        else
            assign_included(t, v, a, rng, out);
    }

    // v excluded: split a among children, each child then free.
    static void assign_excluded(const detail::TreeTables& t, int v, int a, Rng& rng,
                                std::vector<int>& out) {
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        const auto& ps = t.pref_s[static_cast<std::size_t>(v)];
        int rem = a;
        for (std::size_t j = ch.size(); j-- > 0;) {
            const auto& child_s = t.S[static_cast<std::size_t>(ch[j])];
            std::vector<Nat> weights(static_cast<std::size_t>(rem) + 1);
            for (int s = 0; s <= rem; ++s)
                weights[static_cast<std::size_t>(s)] =
                    detail::coeff(child_s, s) * detail::coeff(ps[j], rem - s);
            const int s = static_cast<int>(detail::weighted_pick(rng, weights));
            assign_any(t, ch[j], s, rng, out);
            rem -= s;
        }
        if (rem != 0) throw std::logic_error("assign_excluded: budget not exhausted");
    }

    // v included: children must exclude their roots; split a-1 among them.
    static void assign_included(const detail::TreeTables& t, int v, int a, Rng& rng,
                                std::vector<int>& out) {
        out.push_back(t.verts[static_cast<std::size_t>(v)]);
        const auto& ch = t.children[static_cast<std::size_t>(v)];
        const auto& pa = t.pref_a[static_cast<std::size_t>(v)];
        int rem = a - 1;
        for (std::size_t j = ch.size(); j-- > 0;) {
            const auto& child_a = t.A[static_cast<std::size_t>(ch[j])];
            std::vector<Nat> weights(static_cast<std::size_t>(rem) + 1);
            for (int s = 0; s <= rem; ++s)
                weights[static_cast<std::size_t>(s)] =
                    detail::coeff(child_a, s) * detail::coeff(pa[j], rem - s);
            const int s = static_cast<int>(detail::weighted_pick(rng, weights));
            assign_excluded(t, ch[j], s, rng, out);
            rem -= s;
        }
        if (rem != 0) throw std::logic_error("assign_included: budget not exhausted");
    }

    std::vector<detail::TreeTables> comps_;
    std::vector<Sequence> suffix_;
    Sequence seq_;
};

// Facade choosing the right engine: forests use the tree tables (any size),
// other graphs the branching engine (components <= cap).
class IndependentSetSampler {
public:
    explicit IndependentSetSampler(const Graph& g, int component_cap = 64) {
        if (is_forest(g))
            tree_.emplace(g);
        else
            branching_.emplace(g, component_cap);
    }

    const Sequence& sequence() const { return tree_ ? tree_->sequence() : branching_->sequence(); }
    int alpha() const { return static_cast<int>(sequence().size()) - 1; }

    std::vector<int> sample(int k, Rng& rng) {
        return tree_ ? tree_->sample(k, rng) : branching_->sample(k, rng);
    }

private:
    std::optional<TreeSetSampler> tree_;
    std::optional<BranchingCounter> branching_;
};

inline std::vector<int> sample_uniform_independent_set(const Graph& g, int k, Rng& rng,
                                                       int component_cap = 64) {
    return IndependentSetSampler(g, component_cap).sample(k, rng);
}

// ----------------------------------------------------------------------------
// Matching counts m_0..m_nu (by edge count) via memoized vertex branching:
// either the lowest-index vertex v is unmatched, or it is matched to one of
// its neighbors.  Disjoint parts factor as products.

class MatchingCounter {
public:
    explicit MatchingCounter(const Graph& g, int component_cap = 64) {
        if (component_cap > 64) component_cap = 64;
        seq_ = {Nat(1)};
        for (const auto& comp : g.components()) {
            if (static_cast<int>(comp.size()) > component_cap)
                throw ComponentTooLargeError("component has " + std::to_string(comp.size()) +
                                             " vertices; cap is " + std::to_string(component_cap));
            const int sz = static_cast<int>(comp.size());
            std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
            for (int i = 0; i < sz; ++i)
                local[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] = i;
            nbr_.assign(static_cast<std::size_t>(sz), 0);
            for (int i = 0; i < sz; ++i)
                for (int w : g.neighbors(comp[static_cast<std::size_t>(i)])) {
                    const int j = local[static_cast<std::size_t>(w)];
                    if (j >= 0) nbr_[static_cast<std::size_t>(i)] |= std::uint64_t(1) << j;
                }
            memo_.clear();
            const std::uint64_t full = (sz == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << sz) - 1);
            seq_ = conv(seq_, poly(full));
        }
        trim_sequence(seq_);
    }

    const Sequence& sequence() const { return seq_; }

private:
    const Sequence& poly(std::uint64_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Sequence result;
        if (mask == 0) {
            result = {Nat(1)};
        } else {
            const int v = __builtin_ctzll(mask);
            result = poly(mask & ~(std::uint64_t(1) << v));  // v unmatched (copy)
            for (std::uint64_t m = nbr_[static_cast<std::size_t>(v)] & mask; m;) {
                const int u = __builtin_ctzll(m);
                m &= m - 1;
                const Sequence rest =
                    poly(mask & ~((std::uint64_t(1) << v) | (std::uint64_t(1) << u)));
                detail::add_shifted(result, rest);
            }
            trim_sequence(result);
        }
        return memo_.emplace(mask, std::move(result)).first->second;
    }

    std::vector<std::uint64_t> nbr_;
    std::unordered_map<std::uint64_t, Sequence> memo_;
    Sequence seq_;
};

inline Sequence matching_sequence(const Graph& g, int component_cap = 64) {
    return MatchingCounter(g, component_cap).sequence();
}

inline int matching_number(const Graph& g, int component_cap = 64) {
    return static_cast<int>(matching_sequence(g, component_cap).size()) - 1;
}

// Signed matching polynomial mu(t) = sum_k (-1)^k m_k t^(n-2k), coefficients
// ascending by degree, length n+1 (integers, may be negative).
inline std::vector<Nat> matching_polynomial_signed(const Graph& g, int component_cap = 64) {
    const auto m = matching_sequence(g, component_cap);
    std::vector<Nat> coeffs(static_cast<std::size_t>(g.n()) + 1, Nat(0));
    for (std::size_t k = 0; k < m.size(); ++k) {
        const std::size_t deg = static_cast<std::size_t>(g.n()) - 2 * k;
        coeffs[deg] = (k % 2 == 0) ? m[k] : Nat(-m[k]);
    }
    return coeffs;
}

// ----------------------------------------------------------------------------
// Enumeration oracles.

// Visit every independent set of g (including the empty set), each exactly
// once, in lexicographic order of the vertex list.  Guarded to n <= 24: the
// visit count can be exponential.
template <typename F>
inline void for_each_independent_set(const Graph& g, F&& visit, int guard_n = 24) {
    if (g.n() > guard_n)
        throw std::invalid_argument("for_each_independent_set: n = " + std::to_string(g.n()) +
                                    " exceeds the enumeration guard of " +
                                    std::to_string(guard_n) + " vertices");
    std::vector<int> cur;
    std::vector<int> blocked(static_cast<std::size_t>(g.n()), 0);
    auto rec = [&](auto&& self, int start) -> void {
        visit(static_cast<const std::vector<int>&>(cur));
        for (int v = start; v < g.n(); ++v) {
            if (blocked[static_cast<std::size_t>(v)] > 0) continue;
            cur.push_back(v);
            for (int w : g.neighbors(v)) ++blocked[static_cast<std::size_t>(w)];
            self(self, v + 1);
            for (int w : g.neighbors(v)) --blocked[static_cast<std::size_t>(w)];
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Labelled trees on n vertices via Prufer codes; guarded to 2 <= n <= 9.
inline std::vector<Graph> enumerate_labelled_trees(int n) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("enumerate_labelled_trees: n must be in [2, 9]");
    return all_labelled_trees(n);
}

// Number of labelled trees on n vertices whose first k vertices form an
// independent set: (n-k)^(k-1) * n^(n-k-1).  Requires 1 <= k < n.
inline Nat count_trees_with_independent_prefix(int n, int k) {
    if (k < 1 || k >= n)
        throw std::invalid_argument("count_trees_with_independent_prefix: need 1 <= k < n");
    return nat_pow(static_cast<unsigned long>(n - k), static_cast<unsigned long>(k - 1)) *
           nat_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n - k - 1));
}

}  // namespace iset

#endif  // ISET_EXACT_COUNT_HPP
