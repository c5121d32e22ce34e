#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sparsat {

/// A polynomial with nonnegative integer coefficients, coefficients[i]
/// multiplying n^i. Used for declared census bounds, reduction stretch
/// bounds and decider time bounds. Evaluation is monotone nondecreasing on
/// nonnegative arguments and throws std::overflow_error when the value
/// exceeds the 64-bit range.
class PolyBound {
 public:
  explicit PolyBound(std::vector<std::uint64_t> coefficients);

  static PolyBound constant(std::uint64_t c);
  /// c1*n + c0
  static PolyBound linear(std::uint64_t c1, std::uint64_t c0 = 0);

  std::uint64_t eval(std::uint64_t n) const;

  const std::vector<std::uint64_t>& coefficients() const noexcept { return coefficients_; }

  /// Same polynomial with every coefficient multiplied by factor.
  PolyBound scaled(std::uint64_t factor) const;

  /// Human-readable form, e.g. "2n^2 + n + 3".
  std::string str() const;

 private:
  std::vector<std::uint64_t> coefficients_;
};

}  // namespace sparsat
