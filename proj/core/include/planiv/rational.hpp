#pragma once

#include <gmpxx.h>

#include <string>

#include "planiv/errors.hpp"

namespace planiv {

/// Exact rational coordinate. All interval endpoints in this library are
/// arbitrary-precision rationals; nothing is ever rounded.
using Rational = mpq_class;

/// Renders in lowest terms as "p/q", or plain "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

/// Parses "p" or "p/q" (optionally signed). Rejects zero denominators.
inline Rational rational_from_string(const std::string& text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw ParseError("malformed rational '" + text + "'");
    if (v.get_den() == 0)
        throw ParseError("zero denominator in rational '" + text + "'");
    v.canonicalize();
    return v;
}

inline Rational rational_midpoint(const Rational& a, const Rational& b) {
    return (a + b) / 2;
}

}  // namespace planiv
