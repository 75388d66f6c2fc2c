// Exact rational coefficients.  Rat is GMP's canonical mpq_class: always in
// lowest terms, denominator positive, zero stored as 0/1 — exactly the
// invariants the rest of the library relies on.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "folinv/errors.hpp"

namespace folinv {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_from_parts(const Int& num, const Int& den) {
    if (den == 0) throw InvalidInput("zero denominator in rational");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, std::uint32_t e) {
    Rat acc(1);
    Rat b = base;
    std::uint32_t n = e;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Exact n-th root of an integer, if one exists.
inline bool int_nth_root(const Int& v, std::uint32_t n, Int& root) {
    if (n == 0) throw InvalidInput("zeroth root");
    if (v < 0 && n % 2 == 0) return false;
    Int a = abs(v);
    Int r;
    int exactp = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
    if (!exactp) return false;
    root = (v < 0) ? Int(-r) : r;
    return true;
}

// Exact n-th root of a rational, if one exists.
inline bool rat_nth_root(const Rat& v, std::uint32_t n, Rat& root) {
    Int num, den;
    if (!int_nth_root(v.get_num(), n, num)) return false;
    if (!int_nth_root(v.get_den(), n, den)) return false;
    root = rat_from_parts(num, den);
    return true;
}

} // namespace folinv
