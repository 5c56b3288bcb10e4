#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "powfree/word.hpp"

namespace powfree {

/// Positive rational, always stored in lowest terms so that equal values
/// compare equal structurally.
class Exponent {
 public:
  Exponent(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  // Floor of the value.
  std::int64_t whole() const noexcept { return num_ / den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  // Exponent of a repetition of `length` letters with period `period`.
  static Exponent of_length(std::size_t length, std::size_t period);

  // "p" or "p/q".
  static Exponent parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator*(const Exponent& a, const Exponent& b);

/// "α-power free" (plain) forbids factor exponents >= threshold; the plus
/// form forbids exponents > threshold.
struct PowerBound {
  Exponent threshold{2};
  bool plus = false;

  bool violated_by(const Exponent& e) const noexcept { return plus ? e > threshold : e >= threshold; }

  // True when every word free for *this is also free for `weaker`.
  bool implies(const PowerBound& weaker) const noexcept;

  // Shortest repetition length with period p that violates the bound.
  std::size_t min_violating_length(std::size_t period) const;

  // "5", "7/2", "2+".
  static PowerBound parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const PowerBound&, const PowerBound&) = default;
};

/// r repeated floor(a) times followed by the prefix of r completing a·|r|
/// letters. Rejects empty r and non-integral lengths.
Word fractional_power(const Word& r, const Exponent& a);

}  // namespace powfree
