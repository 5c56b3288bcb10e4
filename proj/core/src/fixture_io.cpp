#include "powfree/fixture_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "powfree/errors.hpp"

namespace powfree {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view text, std::string_view key) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInput("fixture key '" + std::string(key) + "': expected a non-negative integer");
  return value;
}

Letter parse_letter(const Alphabet& alphabet, std::string_view text, std::string_view key) {
  if (text.size() != 1) throw InvalidInput("fixture key '" + std::string(key) + "': expected a single letter");
  return alphabet.letter(text.front());
}

using Entries = std::multimap<std::string, std::string, std::less<>>;

Entries parse_entries(std::string_view text) {
  Entries out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw InvalidInput("fixture line " + std::to_string(line_no) + ": expected 'key: value'");
    out.emplace(std::string(trim(line.substr(0, colon))), std::string(trim(line.substr(colon + 1))));
  }
  return out;
}

std::optional<std::string> single(const Entries& e, std::string_view key) {
  const auto [lo, hi] = e.equal_range(key);
  if (lo == hi) return std::nullopt;
  if (std::next(lo) != hi) throw InvalidInput("fixture key '" + std::string(key) + "' appears more than once");
  return lo->second;
}

std::string required(const Entries& e, std::string_view key) {
  auto v = single(e, key);
  if (!v) throw InvalidInput("fixture is missing key '" + std::string(key) + "'");
  return *v;
}

void reject_unknown(const Entries& e, std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : e) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) throw InvalidInput("fixture has unknown key '" + key + "'");
  }
}

std::size_t alphabet_size(const Entries& e) {
  const auto k = parse_size(required(e, "alphabet"), "alphabet");
  if (k == 0 || k > Alphabet::kDefaultSymbols.size())
    throw InvalidInput("fixture alphabet size must be in 1.." + std::to_string(Alphabet::kDefaultSymbols.size()));
  return k;
}

}  // namespace

DeltaFixture parse_delta_fixture(std::string_view text) {
  const Entries e = parse_entries(text);
  reject_unknown(e, {"alphabet", "alpha", "s", "sigma", "w", "eta", "x", "u", "window", "y"});
  const std::size_t k = alphabet_size(e);
  const Alphabet alphabet = Alphabet::standard(k);
  DeltaTuple t{.s = parse_left_stream(required(e, "s"), alphabet)};
  t.alpha = Exponent::parse(required(e, "alpha"));
  t.sigma = alphabet.parse(single(e, "sigma").value_or(""));
  t.w = alphabet.parse(required(e, "w"));
  t.eta = alphabet.parse(single(e, "eta").value_or(""));
  t.x = parse_letter(alphabet, required(e, "x"), "x");
  t.u = alphabet.parse(single(e, "u").value_or(""));
  const auto window = single(e, "window");
  t.window = window ? parse_size(*window, "window") : min_window(t);
  std::optional<Letter> y;
  if (auto text = single(e, "y")) y = parse_letter(alphabet, *text, "y");
  return DeltaFixture{k, std::move(t), y};
}

std::string format_delta_fixture(const DeltaTuple& t, std::optional<Letter> y, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "alphabet: " << alphabet.size() << '\n'
     << "alpha: " << t.alpha.to_string() << '\n'
     << "s: " << t.s.describe(alphabet) << '\n'
     << "sigma: " << alphabet.format(t.sigma) << '\n'
     << "w: " << alphabet.format(t.w) << '\n'
     << "eta: " << alphabet.format(t.eta) << '\n'
     << "x: " << alphabet.symbol(t.x) << '\n'
     << "u: " << alphabet.format(t.u) << '\n'
     << "window: " << t.window << '\n';
  if (y) os << "y: " << alphabet.symbol(*y) << '\n';
  return os.str();
}

BiInfiniteSpec parse_bi_infinite_spec(std::string_view text) {
  const Entries e = parse_entries(text);
  reject_unknown(e, {"alphabet", "left", "right", "recurrent", "w", "alpha"});
  const std::size_t k = alphabet_size(e);
  const Alphabet alphabet = Alphabet::standard(k);
  BiInfiniteSpec out{.k = k,
                     .v = BiInfiniteWord{parse_left_stream(required(e, "left"), alphabet),
                                         parse_right_stream(required(e, "right"), alphabet)}};
  const auto [lo, hi] = e.equal_range(std::string_view("recurrent"));
  for (auto it = lo; it != hi; ++it) {
    std::istringstream fields(it->second);
    std::string letter, side, extra;
    if (!(fields >> letter >> side) || (fields >> extra))
      throw InvalidInput("fixture key 'recurrent': expected 'LETTER SIDE'");
    out.declarations.push_back(
        {parse_letter(alphabet, letter, "recurrent"), parse_recurrence_side(side), "declared: recurrent " + it->second});
  }
  if (auto w = single(e, "w")) out.w = alphabet.parse(*w);
  if (auto a = single(e, "alpha")) out.alpha = Exponent::parse(*a);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace powfree
