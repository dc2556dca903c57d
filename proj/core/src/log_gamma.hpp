#pragma once

#include <cmath>

namespace nlcs::detail {

/// Thread-safe ln Gamma for strictly positive arguments.
inline double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

}  // namespace nlcs::detail
