#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cplc {

/// Exact resolution values and relative overlaps, e.g. 4/9.
using Fraction = boost::rational<std::int64_t>;

/// "num/den", or just "num" for integers.
std::string to_string(const Fraction& f);

double to_double(const Fraction& f);

/// Accepts "4/9", "1", or a finite decimal such as "0.25" (converted exactly).
Fraction parse_fraction(std::string_view text);

}  // namespace cplc
