#include "sparsat/poly_bound.hpp"

#include <stdexcept>

namespace sparsat {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial bound overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial bound overflow");
  return r;
}

}  // namespace

PolyBound::PolyBound(std::vector<std::uint64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw std::invalid_argument("polynomial bound needs at least one coefficient");
}

PolyBound PolyBound::constant(std::uint64_t c) { return PolyBound({c}); }

PolyBound PolyBound::linear(std::uint64_t c1, std::uint64_t c0) { return PolyBound({c0, c1}); }

std::uint64_t PolyBound::eval(std::uint64_t n) const {
  // Horner, highest coefficient first.
  std::uint64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = checked_add(checked_mul(acc, n), *it);
  return acc;
}

PolyBound PolyBound::scaled(std::uint64_t factor) const {
  std::vector<std::uint64_t> scaled;
  scaled.reserve(coefficients_.size());
  for (std::uint64_t c : coefficients_) scaled.push_back(checked_mul(c, factor));
  return PolyBound(std::move(scaled));
}

std::string PolyBound::str() const {
  std::string out;
  for (std::size_t d = coefficients_.size(); d-- > 0;) {
    std::uint64_t c = coefficients_[d];
    if (c == 0 && !(d == 0 && out.empty())) continue;
    if (!out.empty()) out += " + ";
    if (d == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "n";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace sparsat
