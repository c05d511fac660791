#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wordlat {

using bigint = boost::multiprecision::cpp_int;

// Binomial coefficient, zero whenever the usual conventions make it so
// (k < 0, k > n, or n < 0).
bigint binomial(long long n, long long k);

}  // namespace wordlat
