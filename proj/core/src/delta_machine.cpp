#include "powfree/delta_machine.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "powfree/errors.hpp"

namespace powfree {
namespace {

using boost::multiprecision::cpp_int;

// Numerator and denominator of (alpha + 1) * alpha^m * w_len.
std::pair<cpp_int, cpp_int> gamma_bound(const Exponent& alpha, std::size_t w_len, std::size_t m) {
  const cpp_int p = alpha.num();
  const cpp_int q = alpha.den();
  cpp_int num = (p + q) * cpp_int(w_len);
  cpp_int den = q;
  for (std::size_t i = 0; i < m; ++i) {
    num *= p;
    den *= q;
  }
  return {num, den};
}

// m letters of the periodic extension of r that ends with r itself.
Word end_aligned_power(const Word& r, std::size_t m) {
  const std::size_t p = r.size();
  Word out;
  out.reserve(m);
  const std::size_t shift = (p - m % p) % p;
  for (std::size_t i = 0; i < m; ++i) out.push_back(r[(i + shift) % p]);
  return out;
}

Word extended_window(const DeltaTuple& t, Letter y) { return t.window_word() + y; }

std::vector<Repetition> violations_after(const DeltaTuple& t, Letter y) {
  const Word ext = extended_window(t, y);
  auto out = suffix_violations(ext, t.bound(), ext.size());
  for (const auto& rep : out)
    if (rep.start == 0)
      throw WindowExhausted("suffix violation with period " + std::to_string(rep.period_len) +
                            " reaches the left edge of a " + std::to_string(ext.size()) + "-letter window");
  return out;
}

bool word_has_suffix_violation(const Word& w, const PowerBound& bound) {
  return !w.empty() && !suffix_violations(w, bound, w.size()).empty();
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InternalInconsistency(what);
}

}  // namespace

bool gamma_holds(const Exponent& alpha, std::size_t w_len, std::size_t eta_len, std::size_t u_len) {
  if (u_len > w_len) return true;
  const auto [num, den] = gamma_bound(alpha, w_len, w_len - u_len);
  return cpp_int(eta_len) * den >= num;
}

bool gamma_holds(const GammaTriple& g) {
  if (g.w.empty()) throw InvalidInput("gamma_holds: w must be nonempty");
  return gamma_holds(g.alpha, g.w.size(), g.eta.size(), g.u.size());
}

std::optional<std::size_t> gamma_min_eta_length(const Exponent& alpha, std::size_t w_len, std::size_t u_len) {
  if (u_len > w_len) return std::nullopt;
  const auto [num, den] = gamma_bound(alpha, w_len, w_len - u_len);
  const cpp_int ceil = (num + den - 1) / den;
  if (ceil > cpp_int(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(ceil);
}

Word DeltaTuple::finite_part() const {
  Word out;
  out.reserve(finite_length());
  out.append(sigma).append(w).append(eta);
  out.push_back(x);
  out.append(u);
  return out;
}

Word DeltaTuple::window_word() const {
  if (window < finite_length()) throw InvalidInput("delta tuple window is shorter than its finite part");
  return s.suffix(left_depth()) + finite_part();
}

std::size_t min_window(const DeltaTuple& t) {
  const std::size_t span = std::max({t.w.size(), t.u.size(), std::size_t{1}});
  return t.finite_length() + 2 * static_cast<std::size_t>(t.alpha.num()) * span;
}

DeltaVerdict delta_check(const DeltaTuple& t) {
  if (t.window < min_window(t))
    throw InvalidInput("delta_check: window " + std::to_string(t.window) + " below the required " +
                       std::to_string(min_window(t)));
  DeltaVerdict v;
  auto fail = [&](int item, std::string detail) {
    v.status = DeltaStatus::violated;
    v.item = item;
    v.detail = std::move(detail);
    return v;
  };

  if (t.w.empty()) return fail(1, "w must be nonempty");

  const Word win = t.window_word();
  const std::size_t depth = t.left_depth();
  if (auto free = is_power_free(win, t.bound()); !free.free) {
    v.witness = free.witness;
    if (free.witness->start == 0) {
      v.status = DeltaStatus::window_exhausted;
      v.item = 2;
      v.detail = "violating repetition touches the left window edge";
      return v;
    }
    return fail(2, "window is not " + t.bound().to_string() + "-power free");
  }

  if (!gamma_holds(t.alpha, t.w.size(), t.eta.size(), t.u.size()))
    return fail(3, "|eta| = " + std::to_string(t.eta.size()) + " is below the bound " +
                       std::to_string(*gamma_min_eta_length(t.alpha, t.w.size(), t.u.size())));

  const std::size_t w_end = depth + t.sigma.size() + t.w.size();
  const auto occ = occurrences(win.prefix(w_end), t.w);
  if (occ.count != 1 || occ.positions.front() != w_end - t.w.size())
    return fail(4, "w occurs " + std::to_string(occ.count) + " times in the window of s.sigma.w");

  const auto has_x = [&](std::span<const Letter> part) { return std::find(part.begin(), part.end(), t.x) != part.end(); };
  if (has_x(t.u.view())) return fail(5, "x occurs in u");
  if (has_x(win.view().first(depth))) return fail(5, "x occurs in the window of s");
  return v;
}

std::vector<Repetition> pi_set(const DeltaTuple& t, Letter y) {
  if (y == t.x) throw InvalidInput("pi_set: y must differ from x");
  const auto check = delta_check(t);
  if (check.status == DeltaStatus::window_exhausted) throw WindowExhausted("pi_set: " + check.detail);
  if (!check.ok()) throw InvalidInput("pi_set: tuple violates item " + std::to_string(check.item) + ": " + check.detail);
  if (!is_power_free(t.u + y, t.bound()).free) throw InvalidInput("pi_set: u.y is not free");
  return violations_after(t, y);
}

char shrink_case_tag(ShrinkCase c) { return c == ShrinkCase::A ? 'A' : 'B'; }

ShrinkOutcome shrink_eta(const DeltaTuple& t, Letter y, const Repetition& violation) {
  const Word ext = extended_window(t, y);
  if (violation.end != ext.size() || !revalidates(violation, ext))
    throw InvalidInput("shrink_eta: repetition is not a suffix of the extended window");
  if (!t.bound().violated_by(violation.exponent)) throw InvalidInput("shrink_eta: repetition does not violate the bound");

  const std::size_t p = violation.period_len;
  const std::size_t len = violation.length();
  const std::size_t xuy_len = t.u.size() + 2;
  const std::size_t tail_len = t.eta.size() + xuy_len;  // eta x u y

  // Period block ending the violation; it must end with x u y.
  const Word r = ext.suffix(p);
  const Word xuy = Word{t.x} + t.u + y;
  require(p >= xuy_len && is_suffix(xuy, r), "xuy is not a suffix of the period block r");
  const Word r_bar = r.prefix(p - xuy_len);
  require(len >= 2 * p, "violation shorter than two periods");

  ShrinkOutcome out;
  out.chosen = violation;
  if (len <= tail_len) {
    out.case_tag = ShrinkCase::A;
    const Word tail = ext.suffix(tail_len);
    const Word z = tail.prefix(tail_len - len);
    require(z + end_aligned_power(r, len) == tail, "eta.x.u.y != z.r^beta");
    out.eta_bar = z + end_aligned_power(r, len - 2 * p) + r_bar;
    require(out.eta_bar.size() == z.size() + (len - 2 * p) + r_bar.size(), "case A length identity");
    out.z_len = z.size();
  } else {
    out.case_tag = ShrinkCase::B;
    const std::size_t wtail_len = t.w.size() + tail_len;  // w eta x u y
    require(p > t.w.size(), "overrunning violation with |r| <= |w|");
    require(len - p <= wtail_len, "r^(beta-1) is not a suffix of w.eta.x.u.y");
    require(len - 2 * p <= tail_len, "r^(beta-2) is not a suffix of eta.x.u.y");
    const Word wtail = ext.suffix(wtail_len);
    const Word z = wtail.prefix(wtail_len - (len - p));
    require(z + end_aligned_power(r, len - p) == wtail, "z.r^(beta-1) != w.eta.x.u.y");
    const Word shrunk = z + end_aligned_power(r, len - 2 * p);  // = w eta_bar x u y
    require(shrunk.size() >= t.w.size() + xuy_len, "z.r^(beta-2) shorter than w.x.u.y");
    require(is_prefix(t.w, shrunk) && is_suffix(xuy, shrunk), "z.r^(beta-2) is not of the form w.eta_bar.x.u.y");
    out.eta_bar = shrunk.substr(t.w.size(), shrunk.size() - t.w.size() - xuy_len);
    out.z_len = z.size();
  }
  require(is_prefix(out.eta_bar, t.eta), "eta_bar is not a prefix of eta");
  require(out.eta_bar.size() + p == t.eta.size(), "eta_bar must drop exactly one period from eta");
  return out;
}

std::string format_trace_record(const TraceRecord& r, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "j=" << r.step << " y=" << alphabet.symbol(r.y) << " pi_size=" << r.pi_size << " case="
     << (r.shrink ? std::string(1, shrink_case_tag(*r.shrink)) : "-") << " eta_len_before=" << r.eta_len_before
     << " eta_len_after=" << r.eta_len_after;
  if (r.chosen) {
    os << " chosen_period_len=" << r.chosen->period_len << " chosen_exponent_num=" << r.chosen->exponent.num()
       << " chosen_exponent_den=" << r.chosen->exponent.den();
  } else {
    os << " chosen_period_len=- chosen_exponent_num=- chosen_exponent_den=-";
  }
  return os.str();
}

GlueResult glue(const DeltaTuple& t0, const RightInfiniteWord& t, std::size_t steps, const GlueOptions& options) {
  if (steps == 0) throw InvalidInput("glue: steps must be positive");
  if (!t0.u.empty()) throw InvalidInput("glue: the initial tuple must have u = empty");
  const auto& meta = t.metadata();
  if (!meta.avoids(t0.x)) throw InvalidInput("glue: t must declare that it avoids x");
  if (!meta.bound || !meta.bound->implies(t0.bound()))
    throw InvalidInput("glue: t must declare a bound at least as strong as " + t0.bound().to_string());

  const auto initial = delta_check(t0);
  if (initial.status == DeltaStatus::window_exhausted) throw WindowExhausted("glue: " + initial.detail);
  if (!initial.ok())
    throw InvalidInput("glue: initial tuple violates item " + std::to_string(initial.item) + ": " + initial.detail);

  GlueResult result{.final_tuple = t0};
  DeltaTuple& state = result.final_tuple;
  result.chain.push_back(state.eta);
  const std::size_t margin_scale = 2 * static_cast<std::size_t>(state.alpha.num());

  for (std::size_t j = 1; j <= steps; ++j) {
    const Letter y = t.letter_at(j - 1);
    if (y == state.x) throw InvalidInput("glue: t contains x at index " + std::to_string(j - 1));
    if (word_has_suffix_violation(state.u + y, state.bound()))
      throw InvalidInput("glue: t violates " + state.bound().to_string() + " within its first " + std::to_string(j) +
                         " letters");

    // Keep the window large enough for the tuple after appending y.
    const std::size_t span = std::max({state.w.size(), state.u.size() + 1, std::size_t{1}});
    state.window = std::max(state.window, state.finite_length() + margin_scale * span);

    TraceRecord rec;
    rec.step = j;
    rec.y = y;
    rec.eta_len_before = state.eta.size();
    const auto pi = violations_after(state, y);
    rec.pi_size = pi.size();
    if (!pi.empty()) {
      if (options.verify_shrinks) {
        const auto before = delta_check(state);
        if (!before.ok()) throw InternalInconsistency("glue: tuple invalid before shrink at step " + std::to_string(j));
      }
      auto outcome = shrink_eta(state, y, pi.front());
      if (!gamma_holds(state.alpha, state.w.size(), outcome.eta_bar.size(), state.u.size() + 1))
        throw ConstructionFailure("glue: eta shrank below the length bound at step " + std::to_string(j));
      state.eta = std::move(outcome.eta_bar);
      rec.shrink = outcome.case_tag;
      rec.chosen = outcome.chosen;
      result.stabilized_at = j;
      ++result.shrinks;
      result.chain.push_back(state.eta);
    }
    state.u.push_back(y);
    state.window += 1;
    rec.eta_len_after = state.eta.size();

    if (rec.shrink && options.verify_shrinks) {
      const auto after = delta_check(state);
      rec.post_shrink_valid = after.ok();
      if (after.status == DeltaStatus::window_exhausted) throw WindowExhausted("glue: " + after.detail);
      if (!after.ok())
        throw InternalInconsistency("glue: tuple invalid after shrink at step " + std::to_string(j) + " (item " +
                                    std::to_string(after.item) + ")");
    }
    result.trace.push_back(std::move(rec));
  }

  result.eta_hat = state.eta;
  const Word win = state.window_word();
  const auto verdict = is_power_free(win, state.bound());
  if (!verdict.free) {
    if (verdict.witness->start == 0) throw WindowExhausted("glue: final window violation touches the left edge");
    throw InternalInconsistency("glue: final window is not " + state.bound().to_string() + "-power free");
  }
  const auto before_x = static_cast<std::int64_t>(state.left_depth() + state.sigma.size() + state.w.size() +
                                                  state.eta.size());
  result.final_window = Window{win, -before_x, static_cast<std::int64_t>(win.size()) - before_x};
  return result;
}

}  // namespace powfree
