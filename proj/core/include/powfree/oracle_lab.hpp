#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powfree/delta_machine.hpp"
#include "powfree/power_check.hpp"

namespace powfree {

inline constexpr std::size_t kBruteForceMaxLength = 500;

/// Cubic reference for max_exponent: every (start, period) pair, extended
/// letter by letter. Same tie-break. Throws InvalidInput above 500 letters.
CriticalExponent brute_max_exponent(const Word& w);

struct EnumerationOptions {
  // Search nodes (words visited) across all workers.
  std::uint64_t budget = 200'000'000;
  bool store_words = false;
  // 0 picks one worker per first letter.
  std::size_t workers = 1;
};

struct EnumerationResult {
  std::size_t k = 0;
  PowerBound bound;
  std::size_t max_len = 0;
  // counts[n] = number of free words of length n; counts[0] = 1.
  std::vector<std::uint64_t> counts;
  // Sorted per length when requested.
  std::optional<std::vector<std::vector<Word>>> words;
  std::uint64_t nodes = 0;
};

/// Depth-first, prefix-pruned count of bound-free words over k letters.
/// Throws BudgetExceeded when the node budget runs out.
EnumerationResult enumerate_power_free(std::size_t k, const PowerBound& bound, std::size_t n,
                                       const EnumerationOptions& options = {});

// "length<TAB>count" per line, lengths 1..max_len.
std::string format_counts(const EnumerationResult& result);

struct LemmaFixture {
  DeltaTuple tuple;
  Letter y = 0;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  // Antecedent false; counted as a pass in all_passed().
  std::size_t vacuous = 0;
};

struct LemmaReport {
  std::size_t instances_tested = 0;
  std::size_t rejected = 0;
  std::size_t violations_checked = 0;
  std::size_t case_a = 0;
  std::size_t case_b = 0;
  CheckTally xuy_suffix;        // x.u.y is a suffix of r
  CheckTally short_contained;   // |r| <= |w|, |u| <= |w| => violation inside eta.x.u.y
  CheckTally tail_suffixes;     // r^(b-1) suffix of w.eta.x.u.y, r^(b-2) suffix of eta.x.u.y
  CheckTally shrink_exists;     // shrink succeeds and the new tuple is valid
  CheckTally ratio_a;           // 5|eta_bar| >= 3|eta|
  CheckTally ratio_b;           // 5|eta_bar| > |eta|
  std::optional<std::string> first_counterexample;

  bool all_passed() const noexcept;
};

/// Runs every lemma check on each fixture whose tuple passes delta_check;
/// invalid fixtures only bump `rejected`.
LemmaReport verify_fixtures(const std::vector<LemmaFixture>& fixtures);

/// `count` valid fixtures with violations built as z.r^beta shapes, half of
/// them overrunning into w, all derived from `seed`.
std::vector<LemmaFixture> generate_lemma_fixtures(std::uint64_t seed, std::size_t count);

LemmaReport verify_lemmas(std::uint64_t seed, std::size_t count);

std::string format_lemma_report(const LemmaReport& report);

}  // namespace powfree
