#include "powfree/power_check.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "powfree/errors.hpp"

namespace powfree {

namespace detail {

std::vector<std::size_t> suffix_array(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n), count;
  if (n == 0) return sa;

  // Compress letters to dense ranks.
  std::vector<Letter> letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::size_t>(std::lower_bound(letters.begin(), letters.end(), w[i]) - letters.begin());
  std::size_t classes = letters.size();

  count.assign(classes, 0);
  for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
  std::partial_sum(count.begin(), count.end(), count.begin());
  for (std::size_t i = n; i-- > 0;) sa[--count[rank[i]]] = i;

  std::vector<std::size_t> second(n);
  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes shorter than k come first.
    std::size_t pos = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) second[pos++] = i;
    for (std::size_t i = 0; i < n; ++i)
      if (sa[i] >= k) second[pos++] = sa[i] - k;

    // Stable counting sort by first key.
    count.assign(classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    std::partial_sum(count.begin(), count.end(), count.begin());
    for (std::size_t i = n; i-- > 0;) sa[--count[rank[second[i]]]] = second[i];

    tmp[sa[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t a = sa[i - 1], b = sa[i];
      const bool same = rank[a] == rank[b] && (a + k < n ? (b + k < n && rank[a + k] == rank[b + k]) : b + k >= n);
      if (!same) ++classes;
      tmp[b] = classes - 1;
    }
    rank.swap(tmp);
  }
  return sa;
}

std::vector<std::size_t> lcp_array(std::span<const Letter> w, const std::vector<std::size_t>& sa) {
  const std::size_t n = w.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && w[i + h] == w[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

std::vector<std::size_t> z_function(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && w[z[i]] == w[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

}  // namespace detail

Repetition make_repetition(const Word& w, std::size_t start, std::size_t end, std::size_t period) {
  Repetition rep;
  rep.period_len = period;
  rep.start = start;
  rep.end = end;
  rep.exponent = Exponent::of_length(end - start, period);
  rep.period_word = w.substr(start, period);
  return rep;
}

bool revalidates(const Repetition& rep, const Word& w) {
  if (rep.period_len == 0 || rep.start > rep.end || rep.end > w.size()) return false;
  if (rep.end - rep.start < rep.period_len) return false;
  if (rep.exponent != Exponent::of_length(rep.end - rep.start, rep.period_len)) return false;
  if (rep.period_word != w.substr(rep.start, rep.period_len)) return false;
  for (std::size_t i = rep.start; i + rep.period_len < rep.end; ++i)
    if (w[i] != w[i + rep.period_len]) return false;
  return true;
}

std::string format_repetition(const Repetition& rep, const Alphabet& alphabet) {
  return rep.exponent.to_string() + " r=" + alphabet.format(rep.period_word) + " [" + std::to_string(rep.start) +
         "," + std::to_string(rep.end) + ")";
}

namespace {

// Best pair inside an LCP group: smallest gap between two text positions,
// ties broken by the smaller left position.
struct Pair {
  std::size_t gap = static_cast<std::size_t>(-1);
  std::size_t start = 0;
  bool operator<(const Pair& o) const { return gap != o.gap ? gap < o.gap : start < o.start; }
};

class Groups {
 public:
  explicit Groups(const std::vector<std::size_t>& sa) : parent_(sa.size()), sets_(sa.size()), best_(sa.size()) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    for (std::size_t i = 0; i < sa.size(); ++i) sets_[i].insert(sa[i]);
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // Merges the groups of a and b; returns the root.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (sets_[a].size() < sets_[b].size()) std::swap(a, b);
    auto& big = sets_[a];
    Pair best = std::min(best_[a], best_[b]);
    for (std::size_t x : sets_[b]) {
      const auto it = big.insert(x).first;
      if (it != big.begin()) best = std::min(best, Pair{x - *std::prev(it), *std::prev(it)});
      if (auto next = std::next(it); next != big.end()) best = std::min(best, Pair{*next - x, x});
    }
    std::set<std::size_t>().swap(sets_[b]);
    best_[a] = best;
    parent_[b] = a;
    return a;
  }

  const Pair& best(std::size_t root) const { return best_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::set<std::size_t>> sets_;
  std::vector<Pair> best_;
};

}  // namespace

CriticalExponent max_exponent(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) throw InvalidInput("max_exponent: empty word");

  // The critical exponent is 1 + max LCE(i, j) / (j - i) over i < j. For a
  // pair with LCE d, the groups of suffixes sharing a d-prefix merge when the
  // LCP scan reaches level d, and that group's minimum-gap pair is optimal.
  const auto sa = detail::suffix_array(w.view());
  const auto lcp = detail::lcp_array(w.view(), sa);

  std::vector<std::size_t> order(n > 0 ? n - 1 : 0);
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lcp[a] > lcp[b]; });

  std::size_t best_depth = 0;
  Pair best{1, 0};
  Groups groups(sa);
  for (std::size_t i : order) {
    const std::size_t depth = lcp[i];
    if (depth == 0) break;
    const Pair& cand = groups.best(groups.unite(i - 1, i));
    // Compare depth / gap ratios exactly.
    const auto lhs = static_cast<unsigned __int128>(depth) * best.gap;
    const auto rhs = static_cast<unsigned __int128>(best_depth) * cand.gap;
    if (lhs > rhs || (lhs == rhs && cand < best)) {
      best = cand;
      best_depth = depth;
    }
  }

  std::size_t extension = 0;
  if (best_depth > 0) {
    while (best.start + best.gap + extension < n && w[best.start + extension] == w[best.start + best.gap + extension])
      ++extension;
    if (extension != best_depth) throw InternalInconsistency("max_exponent: LCE disagrees with LCP grouping");
  }
  CriticalExponent out;
  out.witness = make_repetition(w, best.start, best.start + best.gap + extension, best.gap);
  out.exponent = out.witness.exponent;
  return out;
}

Verdict is_power_free(const Word& w, const PowerBound& bound) {
  Verdict v;
  if (w.empty()) return v;
  auto crit = max_exponent(w);
  if (bound.violated_by(crit.exponent)) {
    v.free = false;
    v.witness = std::move(crit.witness);
  }
  return v;
}

std::vector<Repetition> suffix_violations(const Word& w, const PowerBound& bound, std::size_t max_power_len) {
  const std::size_t n = w.size();
  if (max_power_len > n) throw InvalidInput("suffix_violations: max_power_len exceeds the word length");
  std::vector<Repetition> out;
  if (n == 0) return out;

  // z[p] on the reversed word is the common suffix of w and w[0, n - p).
  const Word rev = reverse(w);
  const auto z = detail::z_function(rev.view());
  for (std::size_t p = 1; p <= max_power_len; ++p) {
    const std::size_t common = p < n ? z[p] : 0;
    const std::size_t length = std::min(p + common, max_power_len);
    if (length < bound.min_violating_length(p)) continue;
    out.push_back(make_repetition(w, n - length, n, p));
  }
  std::sort(out.begin(), out.end(), [](const Repetition& a, const Repetition& b) {
    return a.length() != b.length() ? a.length() > b.length() : a.period_len < b.period_len;
  });
  return out;
}

}  // namespace powfree
