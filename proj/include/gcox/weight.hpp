#ifndef GCOX_WEIGHT_HPP_
#define GCOX_WEIGHT_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>

#include "gcox/errors.hpp"

namespace gcox {

  // A weight is a natural number >= 1 or infinity. Infinity sits at the top
  // of the divisibility lattice: every natural number divides it, and it
  // divides only itself.
  class Weight {
   public:
    constexpr Weight() noexcept : _value(1) {}

    constexpr explicit Weight(std::uint64_t value) : _value(value) {
      if (value == 0) {
        throw Error(ErrorKind::invalid_argument,
                    "weight must be a natural number >= 1");
      }
    }

    static constexpr Weight infinity() noexcept {
      Weight w;
      w._value = 0;
      return w;
    }

    constexpr bool is_infinite() const noexcept { return _value == 0; }
    constexpr bool is_finite() const noexcept { return _value != 0; }

    // Throws if infinite.
    constexpr std::uint64_t value() const {
      if (is_infinite()) {
        throw Error(ErrorKind::invalid_argument,
                    "infinite weight has no numeric value");
      }
      return _value;
    }

    std::string to_string() const {
      return is_infinite() ? std::string("inf") : std::to_string(_value);
    }

    // Total order used for canonical sorting only: naturals ascending,
    // infinity last.
    friend constexpr std::strong_ordering operator<=>(Weight a,
                                                      Weight b) noexcept {
      if (a._value == b._value) {
        return std::strong_ordering::equal;
      }
      if (a.is_infinite()) {
        return std::strong_ordering::greater;
      }
      if (b.is_infinite()) {
        return std::strong_ordering::less;
      }
      return a._value <=> b._value;
    }

    friend constexpr bool operator==(Weight a, Weight b) noexcept {
      return a._value == b._value;
    }

   private:
    std::uint64_t _value;  // 0 encodes infinity
  };

  // True iff m is divisible by d.
  constexpr bool divides(Weight d, Weight m) noexcept {
    if (m.is_infinite()) {
      return true;
    }
    if (d.is_infinite()) {
      return false;
    }
    return m.value() % d.value() == 0;
  }

  inline Weight weight_gcd(Weight a, Weight b) {
    if (a.is_infinite()) {
      return b;
    }
    if (b.is_infinite()) {
      return a;
    }
    return Weight(std::gcd(a.value(), b.value()));
  }

  inline Weight weight_lcm(Weight a, Weight b) {
    if (a.is_infinite() || b.is_infinite()) {
      return Weight::infinity();
    }
    std::uint64_t const g = std::gcd(a.value(), b.value());
    std::uint64_t const q = a.value() / g;
    std::uint64_t result  = 0;
    if (__builtin_mul_overflow(q, b.value(), &result)) {
      throw Error(ErrorKind::invalid_argument, "weight lcm overflows");
    }
    return Weight(result);
  }

  inline Weight weight_gcd(std::span<Weight const> ws) {
    if (ws.empty()) {
      throw Error(ErrorKind::invalid_argument, "gcd of an empty weight set");
    }
    Weight acc = Weight::infinity();
    for (Weight w : ws) {
      acc = weight_gcd(acc, w);
    }
    return acc;
  }

  inline Weight weight_lcm(std::span<Weight const> ws) {
    if (ws.empty()) {
      throw Error(ErrorKind::invalid_argument, "lcm of an empty weight set");
    }
    Weight acc(1);
    for (Weight w : ws) {
      acc = weight_lcm(acc, w);
    }
    return acc;
  }

  // Parses "inf" or a decimal natural number; nullopt on anything else,
  // including 0.
  inline std::optional<Weight> parse_weight(std::string const& text) {
    if (text == "inf") {
      return Weight::infinity();
    }
    if (text.empty() || text.size() > 19) {
      return std::nullopt;
    }
    std::uint64_t v = 0;
    for (char c : text) {
      if (c < '0' || c > '9') {
        return std::nullopt;
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (v == 0) {
      return std::nullopt;
    }
    return Weight(v);
  }

}  // namespace gcox

#endif  // GCOX_WEIGHT_HPP_
