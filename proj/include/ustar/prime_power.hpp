#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ustar/errors.hpp"

namespace ustar {

/// Exact power of a fixed prime, kept as (base, exponent) so that group
/// orders like 3^6560 never overflow machine integers.
struct PrimePower {
  std::int64_t base = 0;
  std::int64_t exponent = 0;

  bool is_one() const { return exponent == 0; }

  /// "3^8"
  std::string str() const {
    return std::to_string(base) + "^" + std::to_string(exponent);
  }

  /// Numeric value when it fits in a signed 64-bit integer.
  std::optional<std::int64_t> small_value() const {
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
      if (v > (std::int64_t{1} << 62) / base) return std::nullopt;
      v *= base;
    }
    return v;
  }

  friend PrimePower operator*(const PrimePower& a, const PrimePower& b) {
    if (a.base != b.base)
      throw ConsistencyFailure("prime power product with mismatched bases");
    return {a.base, a.exponent + b.exponent};
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

}  // namespace ustar
