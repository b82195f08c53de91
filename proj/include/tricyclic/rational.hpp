#pragma once

#include <gmpxx.h>

#include <string>

namespace tricyclic {

/// Exact rational number, always kept in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace tricyclic
