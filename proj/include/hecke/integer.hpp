#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace hecke {

/// Arbitrary-precision signed integer used for every exact coefficient.
using Integer = boost::multiprecision::cpp_int;

inline bool fits_int64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(const Integer& v) { return v.str(); }

// (-1)^e
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline Integer pow2(unsigned e) { return Integer(1) << e; }

}  // namespace hecke
