#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polyplateau {

// Exact arbitrary-precision integer. Every count and series coefficient in
// this library is one of these; geometry stays in machine ints.
using Integer = boost::multiprecision::cpp_int;

}  // namespace polyplateau
