#include "powfree/exponent.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "powfree/errors.hpp"

namespace powfree {
namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InvalidInput("exponent arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Exponent make(__int128 num, __int128 den) {
  // Reduce in 128 bits before narrowing so intermediate products fit.
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return Exponent(narrow(num / a), narrow(den / a));
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw InvalidInput("not an integer: \"" + std::string(text) + "\"");
  return v;
}

}  // namespace

Exponent::Exponent(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (num <= 0 || den <= 0) throw InvalidInput("exponent must be a positive fraction");
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Exponent Exponent::of_length(std::size_t length, std::size_t period) {
  return Exponent(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
}

Exponent Exponent::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Exponent(parse_int(text));
  return Exponent(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Exponent::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  const __int128 lhs = static_cast<__int128>(a.num()) * b.den();
  const __int128 rhs = static_cast<__int128>(b.num()) * a.den();
  return lhs <=> rhs;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  return make(static_cast<__int128>(a.num()) * b.den() + static_cast<__int128>(b.num()) * a.den(),
              static_cast<__int128>(a.den()) * b.den());
}

Exponent operator*(const Exponent& a, const Exponent& b) {
  return make(static_cast<__int128>(a.num()) * b.num(), static_cast<__int128>(a.den()) * b.den());
}

bool PowerBound::implies(const PowerBound& weaker) const noexcept {
  // *this admits exponents < t (plain) or <= t (plus); weaker must admit them all.
  if (plus && !weaker.plus) return threshold < weaker.threshold;
  return threshold <= weaker.threshold;
}

std::size_t PowerBound::min_violating_length(std::size_t period) const {
  // Plain: ceil(t * p). Plus: floor(t * p) + 1.
  const __int128 scaled = static_cast<__int128>(threshold.num()) * static_cast<__int128>(period);
  const __int128 den = threshold.den();
  // Exponents below 1 are never reported, so a bound under 1 still needs p letters.
  const auto length = static_cast<std::size_t>(plus ? scaled / den + 1 : (scaled + den - 1) / den);
  return std::max(length, period);
}

PowerBound PowerBound::parse(std::string_view text) {
  PowerBound b;
  if (!text.empty() && text.back() == '+') {
    b.plus = true;
    text.remove_suffix(1);
  }
  b.threshold = Exponent::parse(text);
  return b;
}

std::string PowerBound::to_string() const { return threshold.to_string() + (plus ? "+" : ""); }

Word fractional_power(const Word& r, const Exponent& a) {
  if (r.empty()) throw InvalidInput("fractional_power: empty base word");
  const __int128 scaled = static_cast<__int128>(a.num()) * static_cast<__int128>(r.size());
  if (scaled % a.den() != 0)
    throw InvalidInput("fractional_power: " + a.to_string() + " * " + std::to_string(r.size()) +
                       " is not an integer length");
  const auto length = static_cast<std::size_t>(scaled / a.den());
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(r[i % r.size()]);
  return out;
}

}  // namespace powfree
