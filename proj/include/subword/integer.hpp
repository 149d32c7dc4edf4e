#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace subword {

/// Arbitrary-precision integer used for series and generating-function coefficients.
using Integer = boost::multiprecision::cpp_int;

} // namespace subword
