#include "powfree/word.hpp"

#include <algorithm>

#include "powfree/errors.hpp"

namespace powfree {

Word& Word::append(const Word& other) { return append(other.view()); }

Word& Word::append(std::span<const Letter> other) {
  letters_.insert(letters_.end(), other.begin(), other.end());
  return *this;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  len = std::min(len, letters_.size() - pos);
  return Word(std::span<const Letter>(letters_).subspan(pos, len));
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, letters_.size());
  return substr(letters_.size() - n, n);
}

Word operator+(Word a, const Word& b) {
  a.append(b);
  return a;
}

Word operator+(Word a, Letter c) {
  a.push_back(c);
  return a;
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

Occurrences occurrences(const Word& haystack, const Word& needle) {
  if (needle.empty()) throw InvalidInput("occurrences: empty needle");
  // Knuth-Morris-Pratt with the failure function of the needle.
  const std::size_t m = needle.size();
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  Occurrences out;
  for (std::size_t i = 0, k = 0; i < haystack.size(); ++i) {
    while (k > 0 && haystack[i] != needle[k]) k = fail[k - 1];
    if (haystack[i] == needle[k]) ++k;
    if (k == m) {
      out.positions.push_back(i + 1 - m);
      k = fail[k - 1];
    }
  }
  out.count = out.positions.size();
  return out;
}

bool is_prefix(const Word& part, const Word& whole) {
  return part.size() <= whole.size() && std::equal(part.begin(), part.end(), whole.begin());
}

bool is_suffix(const Word& part, const Word& whole) {
  return part.size() <= whole.size() &&
         std::equal(part.begin(), part.end(), whole.end() - static_cast<std::ptrdiff_t>(part.size()));
}

bool is_factor(const Word& part, const Word& whole) {
  if (part.empty()) return true;
  return std::search(whole.begin(), whole.end(), part.begin(), part.end()) != whole.end();
}

Alphabet Alphabet::standard(std::size_t k) {
  if (k == 0 || k > kDefaultSymbols.size())
    throw InvalidInput("alphabet size must be in 1.." + std::to_string(kDefaultSymbols.size()));
  return Alphabet(std::string(kDefaultSymbols.substr(0, k)));
}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidInput("alphabet needs at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
      throw InvalidInput(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
}

Letter Alphabet::letter(char symbol) const {
  const auto pos = symbols_.find(symbol);
  if (pos == std::string::npos)
    throw InvalidInput(std::string("symbol '") + symbol + "' is not in alphabet \"" + symbols_ + "\"");
  return static_cast<Letter>(pos);
}

char Alphabet::symbol(Letter c) const {
  if (c >= symbols_.size()) throw InvalidInput("letter index " + std::to_string(c) + " outside alphabet");
  return symbols_[c];
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char ch : text) w.push_back(letter(ch));
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(symbol(c));
  return out;
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter c) { return c < symbols_.size(); });
}

Word parse_word(std::string_view text) {
  static const Alphabet table(std::string(Alphabet::kDefaultSymbols));
  return table.parse(text);
}

std::string format_word(const Word& w) {
  static const Alphabet table(std::string(Alphabet::kDefaultSymbols));
  return table.format(w);
}

std::size_t required_alphabet_size(std::initializer_list<const Word*> words) {
  std::size_t k = 1;
  for (const Word* w : words)
    for (Letter c : *w) k = std::max<std::size_t>(k, c + 1);
  return k;
}

}  // namespace powfree
