#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powfree/delta_machine.hpp"
#include "powfree/streams.hpp"

namespace powfree {

enum class RecurrenceSide { right, left, both, none };

std::string_view to_string(RecurrenceSide side);
RecurrenceSide parse_recurrence_side(std::string_view text);

// Trusted input: recurrence cannot be inferred from a finite window.
struct RecurrenceDeclaration {
  Letter letter = 0;
  RecurrenceSide side = RecurrenceSide::none;
  std::string provenance;
};

struct AssemblyConfig {
  Exponent alpha{5};
  std::size_t k = 3;
  // Inspection radius into v, and the depth of s kept in every check.
  std::size_t window = 1024;
  // Filler search for extend_left_avoiding.
  std::size_t max_depth = 8;
  std::size_t max_expansions = 200000;
  std::size_t glue_steps = 2048;
  // Allows (k, alpha) outside k >= 3, alpha >= 5.
  bool unsafe = false;
};

inline constexpr std::int64_t kMinSafeAlpha = 5;

// Throws InvalidInput unless (k, alpha) is in the supported region or unsafe is set.
void validate(const AssemblyConfig& cfg);

/// Finds u such that s·u ends with z and its window stays alpha-free, by
/// depth-first search over fillers m with u = m·z. Throws SearchExhausted
/// when the configured limits are hit.
Word extend_left_avoiding(const Word& z, const LeftInfiniteWord& s, const AssemblyConfig& cfg);

/// Valid tuple (s, sigma, w, eta, x, empty) cut out of v around an occurrence
/// of w, with x a declared right-recurrent letter of w.
DeltaTuple build_delta(const BiInfiniteWord& v, const Word& w, const std::vector<RecurrenceDeclaration>& decls,
                       const AssemblyConfig& cfg);

enum class NonrecurCase { declared_nonrecurrent, glue, reversed_glue };

std::string_view to_string(NonrecurCase c);

struct NonrecurReport {
  NonrecurCase case_taken = NonrecurCase::declared_nonrecurrent;
  Letter x = 0;
  std::int64_t w_position = 0;
  std::optional<std::int64_t> marked_x_position;
  Window window;
  // Occurrences of x strictly beyond the mark on the glued side.
  std::size_t x_beyond_mark = 0;
  bool w_in_window = false;
  bool free = false;

  std::size_t window_checked_len() const noexcept { return window.word.size(); }
  bool certified() const noexcept { return w_in_window && free && x_beyond_mark == 0; }
};

// "key: value" lines.
std::string format_report(const NonrecurReport& report, const Alphabet& alphabet);

struct NonrecurResult {
  BiInfiniteWord v_hat;
  Letter x = 0;
  NonrecurReport report;
  std::optional<GlueResult> glue;
};

/// Returns a bi-infinite word containing w in which x occurs only finitely
/// often, certified on the window [-2W, 2W).
NonrecurResult nonrecur(const BiInfiniteWord& v, const Word& w, const std::vector<RecurrenceDeclaration>& decls,
                        const AssemblyConfig& cfg);

}  // namespace powfree
