#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powfree/exponent.hpp"
#include "powfree/word.hpp"

namespace powfree {

/// A periodic factor w[start, end) with period `period_len`; its exponent is
/// (end - start) / period_len and `period_word` is w[start, start + period_len).
struct Repetition {
  std::size_t period_len = 1;
  std::size_t start = 0;
  std::size_t end = 1;
  Exponent exponent{1};
  Word period_word;

  std::size_t length() const noexcept { return end - start; }
  friend bool operator==(const Repetition&, const Repetition&) = default;
};

// Builds the repetition record for w[start, end) with the given period.
Repetition make_repetition(const Word& w, std::size_t start, std::size_t end, std::size_t period);

// Checks w[i] == w[i + p] across the span and the exponent/length identity.
bool revalidates(const Repetition& rep, const Word& w);

// "β r=WORD [start,end)".
std::string format_repetition(const Repetition& rep, const Alphabet& alphabet);

struct Verdict {
  bool free = true;
  std::optional<Repetition> witness;
};

struct CriticalExponent {
  Exponent exponent{1};
  Repetition witness;
};

/// Largest exponent over all factor repetitions (never below 1). Ties pick
/// the smallest period, then the smallest start. Runs in O(n log^2 n) using
/// a suffix array and small-to-large merging of LCP groups.
CriticalExponent max_exponent(const Word& w);

Verdict is_power_free(const Word& w, const PowerBound& bound);

/// Repetitions ending at |w| whose length is at most max_power_len, one per
/// period with its maximal exponent (clipped to max_power_len), that violate
/// the bound. Sorted by decreasing length, then increasing period.
std::vector<Repetition> suffix_violations(const Word& w, const PowerBound& bound, std::size_t max_power_len);

namespace detail {

// Suffix array by prefix doubling with radix passes.
std::vector<std::size_t> suffix_array(std::span<const Letter> w);

// lcp[i] = LCP of suffixes sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::size_t> lcp_array(std::span<const Letter> w, const std::vector<std::size_t>& sa);

// z[i] = LCP(w, w[i..]); z[0] = |w|.
std::vector<std::size_t> z_function(std::span<const Letter> w);

}  // namespace detail

}  // namespace powfree
