#include "powfree/assembly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "powfree/errors.hpp"

namespace powfree {
namespace {

PowerBound plain(const Exponent& alpha) { return PowerBound{alpha, false}; }

// The two smallest letters of the alphabet other than x.
std::pair<Letter, Letter> tail_letters(Letter x, std::size_t k) {
  std::vector<Letter> picks;
  for (Letter c = 0; c < k && picks.size() < 2; ++c)
    if (c != x) picks.push_back(c);
  if (picks.size() < 2) throw InvalidInput("need at least two letters besides x for the Thue-Morse tail");
  return {picks[0], picks[1]};
}

// v restricted to (-inf, pos) as a left-infinite word.
LeftInfiniteWord left_of(const BiInfiniteWord& v, std::int64_t pos) {
  if (pos <= 0) return v.left.drop_back(static_cast<std::uint64_t>(-pos));
  return concat_left(v.left, v.right.prefix(static_cast<std::size_t>(pos)));
}

DeltaTuple finish_tuple(DeltaTuple t, const AssemblyConfig& cfg) {
  const std::size_t span = std::max(t.w.size(), std::size_t{1});
  t.window = t.finite_length() + std::max(cfg.window, 2 * static_cast<std::size_t>(t.alpha.num()) * span);
  const auto verdict = delta_check(t);
  if (verdict.status == DeltaStatus::window_exhausted) throw WindowExhausted("build_delta: " + verdict.detail);
  if (!verdict.ok())
    throw InvalidInput("build_delta: constructed tuple violates item " + std::to_string(verdict.item) + ": " +
                       verdict.detail);
  return t;
}

DeltaTuple build_delta_for(const BiInfiniteWord& v, const Word& w, Letter x, bool left_recurrent,
                           const AssemblyConfig& cfg) {
  const auto radius = static_cast<std::int64_t>(cfg.window);
  const Window inspected = window(v, -radius, radius);
  const Word& seen = inspected.word;

  const std::size_t eta_min = *gamma_min_eta_length(cfg.alpha, w.size(), 0);
  if (eta_min >= seen.size())
    throw InvalidInput("build_delta: the eta length bound " + std::to_string(eta_min) +
                       " does not fit in the inspected window; increase the window");

  const auto occ = occurrences(seen, w);
  if (occ.count == 0) throw InvalidInput("build_delta: w does not occur in the inspected window");
  const std::size_t first = occ.positions.front();

  // The marked x: first occurrence far enough right that |eta| meets the bound.
  std::size_t marked = first + w.size() + eta_min;
  while (marked < seen.size() && seen[marked] != x) ++marked;
  if (marked >= seen.size())
    throw InvalidInput("build_delta: no occurrence of x at least " + std::to_string(eta_min) +
                       " letters right of w inside the window; increase the window");

  DeltaTuple t{.s = v.left, .alpha = cfg.alpha};
  t.w = w;
  t.x = x;
  if (!left_recurrent) {
    // x is not recurrent to the left: cut s before the leftmost inspected x.
    // Every occurrence of w contains x, so the leftmost one is the only
    // occurrence in s.sigma.w.
    const auto leftmost_x = static_cast<std::size_t>(std::find(seen.begin(), seen.end(), x) - seen.begin());
    const std::size_t s_end = std::min(leftmost_x, first);
    t.s = left_of(v, static_cast<std::int64_t>(s_end) - radius);
    t.sigma = seen.substr(s_end, first - s_end);
    t.eta = seen.substr(first + w.size(), marked - first - w.size());
    return finish_tuple(std::move(t), cfg);
  }

  // x recurs on both sides: restart the left part from a mirrored Thue-Morse
  // word avoiding x, extended until it ends with w.eta.x.
  const auto [a, b] = tail_letters(x, cfg.k);
  const LeftInfiniteWord seed = reverse(thue_morse(a, b));
  const Word target = seen.substr(first, marked + 1 - first);
  const Word u = extend_left_avoiding(target, seed, cfg);

  // Leftmost occurrence of w in seed.u, possibly straddling the junction.
  const std::size_t lookback = w.size() - 1;
  const Word joined = seed.suffix(lookback) + u;
  const auto joined_occ = occurrences(joined, w);
  const auto rel = static_cast<std::int64_t>(joined_occ.positions.front()) - static_cast<std::int64_t>(lookback);
  if (rel < 0) {
    t.s = seed.drop_back(static_cast<std::uint64_t>(-rel));
  } else {
    t.s = seed;
    t.sigma = u.prefix(static_cast<std::size_t>(rel));
  }
  const auto eta_from = static_cast<std::size_t>(rel + static_cast<std::int64_t>(w.size()));
  t.eta = u.substr(eta_from, u.size() - 1 - eta_from);
  return finish_tuple(std::move(t), cfg);
}

struct LetterChoice {
  Letter x = 0;
  RecurrenceSide side = RecurrenceSide::none;
};

std::map<Letter, RecurrenceSide> side_table(const std::vector<RecurrenceDeclaration>& decls, std::size_t k) {
  std::map<Letter, RecurrenceSide> sides;
  for (const auto& d : decls) {
    if (d.letter >= k) throw InvalidInput("recurrence declaration for a letter outside the alphabet");
    if (auto [it, inserted] = sides.emplace(d.letter, d.side); !inserted && it->second != d.side)
      throw InvalidInput("conflicting recurrence declarations for letter " + std::to_string(d.letter));
  }
  return sides;
}

// Preference: right-only, then left-only (handled on the reversal), then both.
std::optional<LetterChoice> choose_letter(const Word& w, const std::map<Letter, RecurrenceSide>& sides) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  for (RecurrenceSide want : {RecurrenceSide::right, RecurrenceSide::left, RecurrenceSide::both})
    for (Letter c : letters)
      if (auto it = sides.find(c); it != sides.end() && it->second == want) return LetterChoice{c, want};
  return std::nullopt;
}

void fill_certificate(NonrecurReport& report, const BiInfiniteWord& v_hat, const Word& w, Letter x,
                      const AssemblyConfig& cfg) {
  const auto radius = 2 * static_cast<std::int64_t>(cfg.window);
  report.window = window(v_hat, -radius, radius);
  report.free = is_power_free(report.window.word, plain(cfg.alpha)).free;
  report.w_in_window = is_factor(w, report.window.word);
  report.x_beyond_mark = 0;
  if (!report.marked_x_position) return;
  const std::int64_t mark = *report.marked_x_position;
  for (std::int64_t i = report.window.from; i < report.window.to; ++i) {
    const bool beyond = report.case_taken == NonrecurCase::reversed_glue ? i < mark : i > mark;
    if (beyond && report.window.word[static_cast<std::size_t>(i - report.window.from)] == x) ++report.x_beyond_mark;
  }
}

}  // namespace

std::string_view to_string(RecurrenceSide side) {
  switch (side) {
    case RecurrenceSide::right: return "right";
    case RecurrenceSide::left: return "left";
    case RecurrenceSide::both: return "both";
    case RecurrenceSide::none: return "none";
  }
  return "none";
}

RecurrenceSide parse_recurrence_side(std::string_view text) {
  for (auto side : {RecurrenceSide::right, RecurrenceSide::left, RecurrenceSide::both, RecurrenceSide::none})
    if (to_string(side) == text) return side;
  throw InvalidInput("unknown recurrence side \"" + std::string(text) + "\"");
}

std::string_view to_string(NonrecurCase c) {
  switch (c) {
    case NonrecurCase::declared_nonrecurrent: return "declared-nonrecurrent";
    case NonrecurCase::glue: return "glue";
    case NonrecurCase::reversed_glue: return "reversed-glue";
  }
  return "glue";
}

void validate(const AssemblyConfig& cfg) {
  if (cfg.k == 0) throw InvalidInput("alphabet size must be positive");
  if (cfg.window == 0) throw InvalidInput("window must be positive");
  if (cfg.unsafe) return;
  if (cfg.k < 3 || cfg.alpha < Exponent(kMinSafeAlpha))
    throw InvalidInput("(k, alpha) = (" + std::to_string(cfg.k) + ", " + cfg.alpha.to_string() +
                       ") is outside k >= 3, alpha >= " + std::to_string(kMinSafeAlpha) + "; set unsafe to override");
}

Word extend_left_avoiding(const Word& z, const LeftInfiniteWord& s, const AssemblyConfig& cfg) {
  const PowerBound bound = plain(cfg.alpha);
  const auto& meta = s.metadata();
  if (!meta.bound || !meta.bound->implies(bound))
    throw InvalidInput("extend_left_avoiding: s must declare a bound at least as strong as " + bound.to_string());
  bool avoids_some = false;
  for (Letter c = 0; c < cfg.k; ++c) avoids_some = avoids_some || meta.avoids(c);
  if (!avoids_some) throw InvalidInput("extend_left_avoiding: s must declare a letter it avoids");
  if (!is_power_free(z, bound).free) throw InvalidInput("extend_left_avoiding: z is not " + bound.to_string() + "-power free");
  if (z.empty()) return {};

  Word current = s.suffix(cfg.window);
  if (is_suffix(z, current)) return {};
  const std::size_t base = current.size();

  std::size_t expansions = 0;
  auto push = [&](Letter c) {
    if (++expansions > cfg.max_expansions)
      throw SearchExhausted("extend_left_avoiding: expansion limit " + std::to_string(cfg.max_expansions) + " reached");
    current.push_back(c);
    if (suffix_violations(current, bound, current.size()).empty()) return true;
    current.pop_back();
    return false;
  };
  auto try_target = [&] {
    std::size_t pushed = 0;
    for (Letter c : z) {
      if (!push(c)) break;
      ++pushed;
    }
    if (pushed == z.size()) return true;
    for (; pushed > 0; --pushed) current.pop_back();
    return false;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t remaining) {
    if (remaining == 0) return try_target();
    for (Letter c = 0; c < cfg.k; ++c) {
      if (!push(c)) continue;
      if (search(remaining - 1)) return true;
      current.pop_back();
    }
    return false;
  };

  for (std::size_t depth = 0; depth <= cfg.max_depth; ++depth) {
    if (search(depth)) {
      if (!is_power_free(current, bound).free) throw InternalInconsistency("extend_left_avoiding: result not free");
      return current.substr(base);
    }
  }
  throw SearchExhausted("extend_left_avoiding: no filler up to length " + std::to_string(cfg.max_depth));
}

DeltaTuple build_delta(const BiInfiniteWord& v, const Word& w, const std::vector<RecurrenceDeclaration>& decls,
                       const AssemblyConfig& cfg) {
  validate(cfg);
  if (w.empty()) throw InvalidInput("build_delta: w must be nonempty");
  const auto sides = side_table(decls, cfg.k);
  std::optional<LetterChoice> pick;
  std::vector<Letter> letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  for (RecurrenceSide want : {RecurrenceSide::right, RecurrenceSide::both}) {
    for (Letter c : letters)
      if (auto it = sides.find(c); !pick && it != sides.end() && it->second == want) pick = LetterChoice{c, want};
  }
  if (!pick) throw InvalidInput("build_delta: no letter of w is declared on-right-side recurrent");
  return build_delta_for(v, w, pick->x, pick->side == RecurrenceSide::both, cfg);
}

NonrecurResult nonrecur(const BiInfiniteWord& v, const Word& w, const std::vector<RecurrenceDeclaration>& decls,
                        const AssemblyConfig& cfg) {
  validate(cfg);
  if (w.empty()) throw InvalidInput("nonrecur: w must be nonempty");
  const auto radius = static_cast<std::int64_t>(cfg.window);
  const Window inspected = window(v, -radius, radius);
  const auto occ = occurrences(inspected.word, w);
  if (occ.count == 0) throw InvalidInput("nonrecur: w does not occur in the inspected window");

  const auto sides = side_table(decls, cfg.k);
  for (const auto& [letter, side] : sides) {
    if (side != RecurrenceSide::none) continue;
    NonrecurResult out{.v_hat = v, .x = letter};
    out.report.case_taken = NonrecurCase::declared_nonrecurrent;
    out.report.x = letter;
    out.report.w_position = inspected.from + static_cast<std::int64_t>(occ.positions.front());
    fill_certificate(out.report, v, w, letter, cfg);
    return out;
  }

  const auto choice = choose_letter(w, sides);
  if (!choice) throw InvalidInput("nonrecur: no letter of w has a recurrence declaration");

  if (choice->side == RecurrenceSide::left) {
    std::vector<RecurrenceDeclaration> mirrored = decls;
    for (auto& d : mirrored) {
      if (d.side == RecurrenceSide::left) d.side = RecurrenceSide::right;
      else if (d.side == RecurrenceSide::right) d.side = RecurrenceSide::left;
    }
    NonrecurResult inner = nonrecur(reverse(v), reverse(w), mirrored, cfg);
    NonrecurResult out{.v_hat = reverse(inner.v_hat), .x = inner.x, .glue = std::move(inner.glue)};
    out.report.case_taken = NonrecurCase::reversed_glue;
    out.report.x = inner.x;
    // Position i of the inner word lands at -1 - i.
    out.report.w_position = -inner.report.w_position - static_cast<std::int64_t>(w.size());
    out.report.marked_x_position = -1 - *inner.report.marked_x_position;
    fill_certificate(out.report, out.v_hat, w, out.x, cfg);
    return out;
  }

  const Letter x = choice->x;
  DeltaTuple tuple = build_delta_for(v, w, x, choice->side == RecurrenceSide::both, cfg);
  const auto [a, b] = tail_letters(x, cfg.k);
  const RightInfiniteWord tail = thue_morse(a, b);
  GlueResult glued = glue(tuple, tail, std::max(cfg.glue_steps, 2 * cfg.window));

  const DeltaTuple& fin = glued.final_tuple;
  BiInfiniteWord v_hat{concat_left(fin.s, fin.sigma + fin.w + fin.eta), tail.prepend(Word{x})};
  const auto w_position = -static_cast<std::int64_t>(fin.w.size() + fin.eta.size());
  NonrecurResult out{.v_hat = v_hat, .x = x, .glue = std::move(glued)};
  out.report.case_taken = NonrecurCase::glue;
  out.report.x = x;
  out.report.w_position = w_position;
  out.report.marked_x_position = 0;
  fill_certificate(out.report, out.v_hat, w, x, cfg);
  return out;
}

std::string format_report(const NonrecurReport& report, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "case_taken: " << to_string(report.case_taken) << '\n'
     << "x: " << alphabet.symbol(report.x) << '\n'
     << "w_position: " << report.w_position << '\n'
     << "marked_x_position: " << (report.marked_x_position ? std::to_string(*report.marked_x_position) : "-") << '\n'
     << "window_from: " << report.window.from << '\n'
     << "window_checked_len: " << report.window_checked_len() << '\n'
     << "w_in_window: " << (report.w_in_window ? "yes" : "no") << '\n'
     << "x_beyond_mark: " << report.x_beyond_mark << '\n'
     << "verdict: " << (report.certified() ? "free" : "not-free") << '\n';
  return os.str();
}

}  // namespace powfree
