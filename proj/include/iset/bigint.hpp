#ifndef ISET_BIGINT_HPP
#define ISET_BIGINT_HPP

// Thin aliases and helpers over GMP's C++ bindings.  All exact counting in
// this library runs on arbitrary-precision integers (Nat) and rationals (Rat);
// doubles only appear at the reporting boundary.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "iset/rng.hpp"

namespace iset {

using Nat = mpz_class;
using Rat = mpq_class;

inline Nat binomial(unsigned long n, unsigned long k) {
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Nat nat_pow(unsigned long base, unsigned long exp) {
    Nat r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Nat factorial(unsigned long n) {
    Nat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Natural log of a positive big integer, accurate to double precision even
// when the value itself overflows double range.
inline double log_nat(const Nat& x) {
    if (sgn(x) <= 0) throw std::domain_error("log_nat: argument must be positive");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline double to_double(const Nat& x) { return x.get_d(); }
inline double to_double(const Rat& x) { return x.get_d(); }

// mpq_class's two-argument constructor does not canonicalize; this one does.
inline Rat rat_of(const Nat& num, const Nat& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_of(long num, long den) { return rat_of(Nat(num), Nat(den)); }

// Uniform big integer in [0, bound): draw ceil(bits/64) 64-bit blocks, mask
// the top block to the bit-length of bound-1, reject values >= bound.  The
// acceptance probability is > 1/2 per attempt.
inline Nat uniform_nat_below(Rng& rng, const Nat& bound) {
    if (sgn(bound) <= 0) throw std::invalid_argument("uniform_nat_below: bound must be positive");
    if (bound == 1) return Nat(0);
    const Nat top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t blocks = (bits + 63) / 64;
    const unsigned top_bits = static_cast<unsigned>(bits - 64 * (blocks - 1));
    while (true) {
        Nat x = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            std::uint64_t w = rng.next_u64();
            // Block 0 is the most significant; truncate it to the leading bits.
            if (b == 0 && top_bits < 64) w &= (std::uint64_t(1) << top_bits) - 1;
            Nat word;
            mpz_import(word.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
            x <<= 64;
            x += word;
        }
        if (x < bound) return x;
    }
}

// Decimal strings for JSON output (counts routinely exceed 2^64).
inline std::string to_string(const Nat& x) { return x.get_str(); }

inline std::vector<std::string> to_strings(const std::vector<Nat>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace iset

#endif  // ISET_BIGINT_HPP
