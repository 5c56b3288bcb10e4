#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powfree/exponent.hpp"
#include "powfree/power_check.hpp"
#include "powfree/streams.hpp"
#include "powfree/word.hpp"

namespace powfree {

// Length condition tying |eta| to |w| and |u|.
struct GammaTriple {
  Word w;
  Word eta;
  Word u;
  Exponent alpha{5};
};

/// True iff |u| > |w| or |eta| >= (alpha + 1) * alpha^(|w| - |u|) * |w|,
/// evaluated exactly.
bool gamma_holds(const GammaTriple& g);
bool gamma_holds(const Exponent& alpha, std::size_t w_len, std::size_t eta_len, std::size_t u_len);

/// Smallest |eta| satisfying the condition, or nullopt when |u| > |w| makes it
/// vacuous. Saturates at SIZE_MAX for astronomically large bounds.
std::optional<std::size_t> gamma_min_eta_length(const Exponent& alpha, std::size_t w_len, std::size_t u_len);

/// Construction state s · sigma · w · eta · x · u, with s left-infinite and
/// every property verified on the last `window` letters.
struct DeltaTuple {
  LeftInfiniteWord s;
  Word sigma;
  Word w;
  Word eta;
  Letter x = 0;
  Word u;
  Exponent alpha{5};
  std::size_t window = 0;

  // sigma · w · eta · x · u
  Word finite_part() const;
  std::size_t finite_length() const noexcept { return sigma.size() + w.size() + eta.size() + 1 + u.size(); }
  // Letters of s inside the window.
  std::size_t left_depth() const noexcept { return window - finite_length(); }
  // Last `window` letters of s · sigma · w · eta · x · u.
  Word window_word() const;
  PowerBound bound() const { return PowerBound{alpha, false}; }
};

// |sigma w eta x u| + 2 * num(alpha) * max(|w|, |u|, 1).
std::size_t min_window(const DeltaTuple& t);

enum class DeltaStatus { valid, violated, window_exhausted };

struct DeltaVerdict {
  DeltaStatus status = DeltaStatus::valid;
  int item = 0;  // 1..5 when violated or exhausted
  std::optional<Repetition> witness;
  std::string detail;

  bool ok() const noexcept { return status == DeltaStatus::valid; }
};

/// Checks the five defining properties on the window and reports the first
/// failing one. Throws InvalidInput when the window is below min_window.
DeltaVerdict delta_check(const DeltaTuple& t);

/// Suffix-anchored violations of s·sigma·w·eta·x·u·y inside the window
/// extended by y, sorted longest first. Positions are relative to that
/// extended window. Requires a valid tuple, y != x and u·y free.
std::vector<Repetition> pi_set(const DeltaTuple& t, Letter y);

enum class ShrinkCase { A, B };

char shrink_case_tag(ShrinkCase c);

struct ShrinkOutcome {
  Word eta_bar;
  ShrinkCase case_tag = ShrinkCase::A;
  Repetition chosen;
  std::size_t z_len = 0;
};

/// Replaces eta by a prefix so that the tuple with u := u·y is valid again.
/// Case A: the violation fits in eta·x·u·y = z·r^beta, eta_bar = z·r^(beta-2)·r_bar.
/// Case B: it overruns, z·r^(beta-1) = w·eta·x·u·y and w·eta_bar·x·u·y = z·r^(beta-2).
/// Here r is the period block ending the violation, r = r_bar·x·u·y.
/// Throws InternalInconsistency if a structural identity fails.
ShrinkOutcome shrink_eta(const DeltaTuple& t, Letter y, const Repetition& violation);

struct TraceRecord {
  std::size_t step = 0;
  Letter y = 0;
  std::size_t pi_size = 0;
  std::optional<ShrinkCase> shrink;
  std::size_t eta_len_before = 0;
  std::size_t eta_len_after = 0;
  std::optional<Repetition> chosen;
  bool post_shrink_valid = true;
};

// One "key=value" record per step.
std::string format_trace_record(const TraceRecord& r, const Alphabet& alphabet);

struct GlueResult {
  Word eta_hat;
  std::size_t stabilized_at = 0;  // last step that shrank eta; 0 if none
  std::vector<TraceRecord> trace;
  // Distinct values of omega(j) in order, starting with the input eta.
  std::vector<Word> chain;
  // Window of s·sigma·w·eta_hat·x·t[0, N); position 0 is the marked x.
  Window final_window;
  DeltaTuple final_tuple;
  std::size_t shrinks = 0;
};

struct GlueOptions {
  // Run delta_check before and after every shrink.
  bool verify_shrinks = true;
};

/// Appends t[0], ..., t[steps-1] after x, shrinking eta whenever the new
/// suffix creates a violation, and returns the stabilized eta.
GlueResult glue(const DeltaTuple& t0, const RightInfiniteWord& t, std::size_t steps, const GlueOptions& options = {});

}  // namespace powfree
