#include "powfree/oracle_lab.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <random>
#include <sstream>

#include "powfree/errors.hpp"
#include "powfree/fixture_io.hpp"

namespace powfree {

CriticalExponent brute_max_exponent(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw InvalidInput("brute_max_exponent: empty word");
  if (n > kBruteForceMaxLength)
    throw InvalidInput("brute_max_exponent: length " + std::to_string(n) + " exceeds the cubic guard of " +
                       std::to_string(kBruteForceMaxLength));
  std::size_t best_len = 1, best_period = 1, best_start = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    for (std::size_t i = 0; i + p <= n; ++i) {
      std::size_t len = p;
      while (i + len < n && w[i + len] == w[i + len - p]) ++len;
      // len / p > best_len / best_period
      if (len * best_period > best_len * p) {
        best_len = len;
        best_period = p;
        best_start = i;
      }
    }
  }
  const Repetition rep = make_repetition(w, best_start, best_start + best_len, best_period);
  return {rep.exponent, rep};
}

namespace {

struct WorkerState {
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<Word>> words;
};

class Enumerator {
 public:
  Enumerator(std::size_t k, const PowerBound& bound, std::size_t n, const EnumerationOptions& options,
             std::atomic<std::uint64_t>& nodes)
      : k_(k), bound_(bound), n_(n), options_(options), nodes_(nodes) {}

  WorkerState run(Letter first) {
    WorkerState state;
    state.counts.assign(n_ + 1, 0);
    if (options_.store_words) state.words.resize(n_ + 1);
    Word current;
    current.reserve(n_);
    visit(current, first, state);
    return state;
  }

 private:
  void visit(Word& current, Letter c, WorkerState& state) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= options_.budget)
      throw BudgetExceeded("enumerate: node budget of " + std::to_string(options_.budget) + " exceeded");
    current.push_back(c);
    if (suffix_violations(current, bound_, current.size()).empty()) {
      ++state.counts[current.size()];
      if (options_.store_words) state.words[current.size()].push_back(current);
      if (current.size() < n_)
        for (Letter next = 0; next < k_; ++next) visit(current, next, state);
    }
    current.pop_back();
  }

  std::size_t k_;
  PowerBound bound_;
  std::size_t n_;
  const EnumerationOptions& options_;
  std::atomic<std::uint64_t>& nodes_;
};

}  // namespace

EnumerationResult enumerate_power_free(std::size_t k, const PowerBound& bound, std::size_t n,
                                       const EnumerationOptions& options) {
  if (k == 0) throw InvalidInput("enumerate: alphabet size must be positive");
  EnumerationResult result{.k = k, .bound = bound, .max_len = n};
  result.counts.assign(n + 1, 0);
  result.counts[0] = 1;
  if (options.store_words) result.words.emplace(n + 1).front().push_back(Word{});
  if (n == 0) return result;

  std::atomic<std::uint64_t> nodes{0};
  std::vector<WorkerState> parts;
  const bool parallel = options.workers != 1 && k > 1;
  if (parallel) {
    std::vector<std::future<WorkerState>> futures;
    for (Letter first = 0; first < k; ++first)
      futures.push_back(std::async(std::launch::async, [&, first] {
        return Enumerator(k, bound, n, options, nodes).run(first);
      }));
    for (auto& f : futures) parts.push_back(f.get());
  } else {
    Enumerator enumerator(k, bound, n, options, nodes);
    for (Letter first = 0; first < k; ++first) parts.push_back(enumerator.run(first));
  }

  for (auto& part : parts) {
    for (std::size_t len = 1; len <= n; ++len) {
      result.counts[len] += part.counts[len];
      if (result.words) {
        auto& bucket = (*result.words)[len];
        bucket.insert(bucket.end(), part.words[len].begin(), part.words[len].end());
      }
    }
  }
  if (result.words)
    for (auto& bucket : *result.words) std::sort(bucket.begin(), bucket.end());
  result.nodes = nodes.load();
  return result;
}

std::string format_counts(const EnumerationResult& result) {
  std::ostringstream os;
  for (std::size_t len = 1; len <= result.max_len; ++len) os << len << '\t' << result.counts[len] << '\n';
  return os.str();
}

bool LemmaReport::all_passed() const noexcept {
  for (const CheckTally* t : {&xuy_suffix, &short_contained, &tail_suffixes, &shrink_exists, &ratio_a, &ratio_b})
    if (t->fail != 0) return false;
  return instances_tested > 0;
}

namespace {

void tally(CheckTally& t, bool ok) { ok ? ++t.pass : ++t.fail; }

}  // namespace

LemmaReport verify_fixtures(const std::vector<LemmaFixture>& fixtures) {
  LemmaReport report;
  for (const auto& fx : fixtures) {
    const DeltaTuple& t = fx.tuple;
    std::vector<Repetition> pi;
    try {
      if (fx.y == t.x || !delta_check(t).ok() || !is_power_free(t.u + fx.y, t.bound()).free) {
        ++report.rejected;
        continue;
      }
      pi = pi_set(t, fx.y);
    } catch (const std::exception&) {
      ++report.rejected;
      continue;
    }
    ++report.instances_tested;

    const Word ext = t.window_word() + fx.y;
    const Word xuy = Word{t.x} + t.u + fx.y;
    const Word tail = t.eta + xuy;
    const Word wtail = t.w + tail;
    for (const auto& rep : pi) {
      ++report.violations_checked;
      const std::size_t p = rep.period_len;
      const std::size_t len = rep.length();
      bool ok = true;
      std::string failed;
      auto check = [&](CheckTally& tally_to, bool cond, const char* name) {
        tally(tally_to, cond);
        if (!cond && ok) {
          ok = false;
          failed = name;
        }
      };

      check(report.xuy_suffix, is_suffix(xuy, ext.suffix(p)), "xuy-suffix-of-r");
      if (p <= t.w.size() && t.u.size() <= t.w.size())
        check(report.short_contained, len <= tail.size(), "short-r-contained");
      else
        ++report.short_contained.vacuous;
      check(report.tail_suffixes,
            len - p <= wtail.size() && len - std::min(len, 2 * p) <= tail.size() &&
                is_suffix(ext.suffix(len - p), wtail),
            "tail-suffixes");

      try {
        const ShrinkOutcome out = shrink_eta(t, fx.y, rep);
        DeltaTuple next = t;
        next.eta = out.eta_bar;
        next.u.push_back(fx.y);
        next.window += 1;
        check(report.shrink_exists, delta_check(next).ok(), "post-shrink-valid");
        if (out.case_tag == ShrinkCase::A) {
          ++report.case_a;
          check(report.ratio_a, 5 * out.eta_bar.size() >= 3 * t.eta.size(), "ratio-a");
        } else {
          ++report.case_b;
          check(report.ratio_b, 5 * out.eta_bar.size() > t.eta.size(), "ratio-b");
        }
      } catch (const std::exception& e) {
        check(report.shrink_exists, false, "shrink-identity");
        failed += std::string(" (") + e.what() + ")";
      }

      if (!ok && !report.first_counterexample) {
        const Alphabet alphabet = Alphabet::standard(std::max<std::size_t>(3, t.x + 1));
        report.first_counterexample = "# failed: " + failed + " period=" + std::to_string(p) + " length=" +
                                      std::to_string(len) + "\n" + format_delta_fixture(t, fx.y, alphabet);
      }
    }
  }
  return report;
}

namespace {

constexpr Letter kX = 0;

// Thue-Morse over {1, 2} from `offset`, x-free by construction.
Word tm_segment(std::uint64_t offset, std::size_t len) {
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(std::popcount(offset + i) % 2 == 0 ? 1 : 2);
  return out;
}

// len letters of the periodic extension of r ending with r.
Word end_aligned(const Word& r, std::size_t len) {
  const std::size_t p = r.size();
  const std::size_t shift = (p - len % p) % p;
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(r[(i + shift) % p]);
  return out;
}

Letter letter_before(const Word& r, std::size_t len) {
  const std::size_t p = r.size();
  return r[((p - len % p) % p + p - 1) % p];
}

class FixtureGenerator {
 public:
  explicit FixtureGenerator(std::uint64_t seed) : rng_(seed) {}

  LemmaFixture next(bool overrun) {
    static const Exponent alphas[] = {Exponent(5), Exponent(11, 2), Exponent(6), Exponent(7)};
    const Exponent alpha = alphas[pick(4)];
    const PowerBound bound{alpha, false};

    const Word u = tm_segment(rng_(), pick(4));
    const Letter y = pick(2) == 0 ? 1 : 2;
    const Word xuy = Word{kX} + u + y;

    DeltaTuple t{.s = reverse(thue_morse(1, 2)).drop_back(pick(64)), .alpha = alpha};
    t.sigma = tm_segment(rng_(), pick(4));
    t.x = kX;
    t.u = u;

    if (!overrun) {
      // eta.x.u.y = z.r^beta with r = r_bar.x.u.y.
      const std::size_t w_len = 1 + pick(2);
      t.w = Word{kX} + tm_segment(rng_(), w_len - 1);
      // An empty r_bar with |w| = 2 and empty u gives |r| <= |w|.
      const std::size_t r_bar_len = (w_len == 2 && u.empty() && pick(2) == 0) ? 0 : 1 + pick(12);
      const Word r = tm_segment(rng_(), r_bar_len) + xuy;
      const std::size_t len = bound.min_violating_length(r.size());
      const std::size_t core = len - xuy.size();
      const std::size_t need = std::max(gamma_min_eta_length(alpha, w_len, u.size()).value_or(0),
                                        gamma_min_eta_length(alpha, w_len, u.size() + 1).value_or(0) + r.size());
      const std::size_t z_len = (need > core ? need - core : 0) + pick(16);
      Word z = tm_segment(rng_(), z_len);
      if (!z.empty() && z.back() == letter_before(r, len)) z[z.size() - 1] = 3 - z.back();
      t.eta = z + end_aligned(r, len).prefix(core);
    } else {
      // The power starts at the second letter of w = x.c and runs to y.
      const std::size_t gmin = gamma_min_eta_length(alpha, 2, u.size()).value_or(0);
      const std::size_t need = gmin + 1 + xuy.size();
      const auto num = static_cast<std::size_t>(alpha.num()), den = static_cast<std::size_t>(alpha.den());
      const std::size_t p = std::max(xuy.size() + 3, (need * den + num - 1) / num) + pick(8);
      Word r, power;
      std::size_t len = 0;
      for (int attempt = 0; attempt < 64; ++attempt) {
        r = tm_segment(rng_(), p - xuy.size()) + xuy;
        len = bound.min_violating_length(p);
        power = end_aligned(r, len);
        if (power[0] != kX && letter_before(r, len) != kX) break;
      }
      t.w = Word{kX, power[0]};
      t.eta = power.substr(1, len - 1 - xuy.size());
    }
    t.window = min_window(t) + 16 + pick(64);
    return {t, y};
  }

 private:
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::mt19937_64 rng_;
};

}  // namespace

std::vector<LemmaFixture> generate_lemma_fixtures(std::uint64_t seed, std::size_t count) {
  FixtureGenerator gen(seed);
  std::vector<LemmaFixture> out;
  out.reserve(count);
  // Candidates that fail delta_check are redrawn; the cap only guards a broken generator.
  const std::size_t max_draws = 50 * count + 100;
  for (std::size_t draws = 0; out.size() < count && draws < max_draws; ++draws) {
    LemmaFixture fx = gen.next(out.size() % 2 == 1);
    if (delta_check(fx.tuple).ok()) out.push_back(std::move(fx));
  }
  return out;
}

LemmaReport verify_lemmas(std::uint64_t seed, std::size_t count) {
  return verify_fixtures(generate_lemma_fixtures(seed, count));
}

std::string format_lemma_report(const LemmaReport& report) {
  std::ostringstream os;
  auto line = [&](const char* name, const CheckTally& t) {
    os << name << " pass=" << t.pass << " fail=" << t.fail << " vacuous=" << t.vacuous << '\n';
  };
  os << "instances_tested=" << report.instances_tested << " rejected=" << report.rejected
     << " violations=" << report.violations_checked << " case_a=" << report.case_a << " case_b=" << report.case_b
     << '\n';
  line("xuy_suffix_of_r", report.xuy_suffix);
  line("short_r_contained", report.short_contained);
  line("tail_suffixes", report.tail_suffixes);
  line("shrink_valid", report.shrink_exists);
  line("ratio_a", report.ratio_a);
  line("ratio_b", report.ratio_b);
  os << "verdict: " << (report.all_passed() ? "pass" : "fail") << '\n';
  if (report.first_counterexample) os << "counterexample:\n" << *report.first_counterexample;
  return os.str();
}

}  // namespace powfree
