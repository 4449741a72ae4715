#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace subchains {

/// Exact unbounded integer. Every count in the library is one of these.
using BigCount = mpz_class;

inline BigCount big(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
  return BigCount(static_cast<long>(v));
}

inline std::string to_decimal(const BigCount& v) { return v.get_str(10); }

}  // namespace subchains
