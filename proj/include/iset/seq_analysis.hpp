#ifndef ISET_SEQ_ANALYSIS_HPP
#define ISET_SEQ_ANALYSIS_HPP

// Shape analysis of nonnegative integer sequences (unimodality, log-
// concavity, Newton normalization) and exact real-rootedness certification
// of integer polynomials via Sturm chains over rational arithmetic.  All
// verdicts are exact: no floating point is involved anywhere in this header.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "iset/bigint.hpp"
#include "iset/exact_count.hpp"

namespace iset {

// ----------------------------------------------------------------------------
// Sequence shape.

struct ShapeVerdict {
    bool unimodal = false;
    // Maximal plateau: [mode_low, mode_high] is the contiguous run of the
    // first occurrence of the maximum value.
    std::size_t mode_low = 0;
    std::size_t mode_high = 0;
    // Largest m with x_0 < x_1 < ... < x_m (strict).
    std::size_t increasing_prefix = 0;
    // Smallest j with x_j >= x_{j+1} >= ... >= x_last (weak).
    std::size_t decreasing_suffix_start = 0;
};

inline ShapeVerdict analyze_shape(const Sequence& s) {
    if (s.empty()) throw std::invalid_argument("analyze_shape: empty sequence");
    ShapeVerdict v;
    const std::size_t last = s.size() - 1;

    std::size_t peak = 0;
    for (std::size_t i = 1; i <= last; ++i)
        if (s[i] > s[peak]) peak = i;
    v.mode_low = peak;
    v.mode_high = peak;
    while (v.mode_high < last && s[v.mode_high + 1] == s[peak]) ++v.mode_high;

    v.increasing_prefix = 0;
    while (v.increasing_prefix < last && s[v.increasing_prefix] < s[v.increasing_prefix + 1])
        ++v.increasing_prefix;

    v.decreasing_suffix_start = last;
    while (v.decreasing_suffix_start > 0 &&
           s[v.decreasing_suffix_start - 1] >= s[v.decreasing_suffix_start])
        --v.decreasing_suffix_start;

    // Weakly rises to some index, weakly falls afterwards: equivalent to
    // "never strictly rises again after the first strict fall".
    std::size_t i = 0;
    while (i < last && s[i] <= s[i + 1]) ++i;
    while (i < last && s[i] >= s[i + 1]) ++i;
    v.unimodal = (i == last);
    return v;
}

inline bool is_unimodal(const Sequence& s) { return analyze_shape(s).unimodal; }

// x_k^2 >= x_{k-1} x_{k+1} at every interior index (big-integer exact).
inline bool is_log_concave(const Sequence& s) {
    for (std::size_t k = 1; k + 1 < s.size(); ++k)
        if (s[k] * s[k] < s[k - 1] * s[k + 1]) return false;
    return true;
}

inline bool is_log_concave_rational(const std::vector<Rat>& s) {
    for (std::size_t k = 1; k + 1 < s.size(); ++k)
        if (s[k] * s[k] < s[k - 1] * s[k + 1]) return false;
    return true;
}

// a_k / C(n, k) as exact rationals; n is the ambient vertex count.
inline std::vector<Rat> newton_normalize(const Sequence& s, int n) {
    if (static_cast<int>(s.size()) > n + 1)
        throw std::invalid_argument("newton_normalize: sequence longer than n+1");
    std::vector<Rat> out;
    out.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        out.emplace_back(Rat(s[k]) / Rat(binomial(static_cast<unsigned long>(n),
                                                  static_cast<unsigned long>(k))));
    return out;
}

// Strict increase x_0 < x_1 < ... < x_m (all steps up to index m).
inline bool strictly_increasing_through(const Sequence& s, std::size_t m) {
    if (m >= s.size()) return false;
    for (std::size_t k = 0; k < m; ++k)
        if (!(s[k] < s[k + 1])) return false;
    return true;
}

/// First index of the guaranteed non-increasing tail for trees:
// ceil((2*alpha - 1) / 3).
inline std::size_t last_third_start(std::size_t alpha) {
    return alpha == 0 ? 0 : (2 * alpha + 1) / 3;
}

inline bool non_increasing_from(const Sequence& s, std::size_t j0) {
    for (std::size_t k = j0; k + 1 < s.size(); ++k)
        if (s[k] < s[k + 1]) return false;
    return true;
}

// ----------------------------------------------------------------------------
// Exact real-root counting (Sturm chains over Rat).

using RatPoly = std::vector<Rat>;  // ascending coefficients; empty = zero poly

namespace detail {

inline void poly_normalize(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int poly_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly poly_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    poly_normalize(d);
    return d;
}

inline Rat poly_eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// Remainder of a by b (b nonzero), standard long division.
inline RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    poly_normalize(a);
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
        const Rat factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        poly_normalize(a);
    }
    return a;
}

// Monic gcd via Euclid; keeps coefficients small-ish by re-scaling each step.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    poly_normalize(a);
    poly_normalize(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            const Rat lead = b.back();
            for (auto& c : b) c /= lead;
        }
    }
    if (!a.empty()) {
        const Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline std::vector<RatPoly> sturm_chain(RatPoly p) {
    poly_normalize(p);
    std::vector<RatPoly> chain;
    if (p.empty()) return chain;
    chain.push_back(p);
    RatPoly d = poly_derivative(p);
    if (d.empty()) return chain;
    chain.push_back(std::move(d));
    while (true) {
        RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Sign variations of the chain at a finite point, or at +/-infinity.
enum class AtInfinity { kMinus, kPlus };

inline int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        const int s = sgn(poly_eval(q, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

inline int sign_variations(const std::vector<RatPoly>& chain, AtInfinity where) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q.back());
        if (where == AtInfinity::kMinus && poly_degree(q) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace detail

// Number of distinct real roots of p on the whole line.  Valid for arbitrary
// (not necessarily square-free) nonzero p.
inline int count_distinct_real_roots(const RatPoly& p) {
    const auto chain = detail::sturm_chain(p);
    if (chain.empty()) throw std::invalid_argument("count_distinct_real_roots: zero polynomial");
    return detail::sign_variations(chain, detail::AtInfinity::kMinus) -
           detail::sign_variations(chain, detail::AtInfinity::kPlus);
}

// Number of distinct real roots in the half-open interval (a, b].  Requires
// p(a) != 0 and p(b) != 0 for the classical Sturm statement; callers nudge
// endpoints as needed.
inline int count_distinct_real_roots_in(const RatPoly& p, const Rat& a, const Rat& b) {
    const auto chain = detail::sturm_chain(p);
    if (chain.empty()) throw std::invalid_argument("count_distinct_real_roots_in: zero polynomial");
    return detail::sign_variations(chain, a) - detail::sign_variations(chain, b);
}

// Real roots counted with multiplicity: distinct roots of p plus (recursively)
// the multiplicity-reduced roots of gcd(p, p').
inline int count_real_roots_with_multiplicity(RatPoly p) {
    detail::poly_normalize(p);
    if (p.empty()) throw std::invalid_argument("count_real_roots_with_multiplicity: zero polynomial");
    int total = 0;
    while (detail::poly_degree(p) >= 1) {
        total += count_distinct_real_roots(p);
        p = detail::poly_gcd(p, detail::poly_derivative(p));
    }
    return total;
}

struct RootCertificate {
    bool all_real = false;
    int real_root_count = 0;  // with multiplicity
    int degree = 0;
    std::string method = "sturm-chain/rational";
};

inline RatPoly to_rat_poly(const std::vector<Nat>& coeffs) {
    RatPoly p;
    p.reserve(coeffs.size());
    for (const auto& c : coeffs) p.emplace_back(c);
    detail::poly_normalize(p);
    return p;
}

inline RootCertificate certify_real_rooted(const std::vector<Nat>& coeffs) {
    RatPoly p = to_rat_poly(coeffs);
    if (p.empty()) throw std::invalid_argument("certify_real_rooted: zero polynomial");
    RootCertificate cert;
    cert.degree = detail::poly_degree(p);
    cert.real_root_count = cert.degree == 0 ? 0 : count_real_roots_with_multiplicity(p);
    cert.all_real = (cert.real_root_count == cert.degree);
    return cert;
}

// True iff every real root of p lies in [-bound, bound].  The bound is nudged
// upward until it is not itself a root, which cannot skip roots outside.
inline bool real_roots_within(const std::vector<Nat>& coeffs, Rat bound) {
    RatPoly p = to_rat_poly(coeffs);
    if (p.empty()) throw std::invalid_argument("real_roots_within: zero polynomial");
    if (detail::poly_degree(p) == 0) return true;
    while (sgn(detail::poly_eval(p, bound)) == 0 || sgn(detail::poly_eval(p, -bound)) == 0)
        bound += Rat(1, 1000);
    const int total = count_distinct_real_roots(p);
    const int inside = count_distinct_real_roots_in(p, -bound, bound);
    return inside == total;
}

}  // namespace iset

#endif  // ISET_SEQ_ANALYSIS_HPP
