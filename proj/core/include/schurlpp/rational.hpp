#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "schurlpp/errors.hpp"

namespace schurlpp {

/// Arbitrary-precision rational. Every probability in the exact pipeline is
/// one of these; doubles only appear in Monte Carlo summaries.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) throw InputError("rat_pow: negative exponent");
    Rat acc = 1;
    Rat b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        if (k > 1) b *= b;
    }
    return acc;
}

/// Parses "p/q" or "p" (optional leading '-'); throws InputError on junk or q == 0.
Rat parse_rat(const std::string& text);

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string format_rat(const Rat& r);

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace schurlpp
