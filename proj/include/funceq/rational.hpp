#pragma once

#include <string>

#include <boost/rational.hpp>

namespace funceq {

/// Exact rational scalar; all grid arithmetic uses this, never floating point.
using Rat = boost::rational<long long>;

/// Parses "7", "-3/4", "0/8" (whitespace-free). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical rendering: "n" for integers, "n/d" otherwise, d > 0.
std::string format_rational(const Rat& r);

inline Rat rat_abs(const Rat& r) {
    return r < Rat(0) ? -r : r;
}

} // namespace funceq
