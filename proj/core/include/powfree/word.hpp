#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace powfree {

using Letter = std::uint32_t;

/// Finite word over letter indices. The empty word is allowed.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> view() const noexcept { return letters_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter c) { letters_.push_back(c); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }
  Word& append(const Word& other);
  Word& append(std::span<const Letter> other);

  // Factor [pos, pos + len), clamped to the word.
  Word substr(std::size_t pos, std::size_t len = static_cast<std::size_t>(-1)) const;
  Word prefix(std::size_t n) const { return substr(0, n); }
  Word suffix(std::size_t n) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word operator+(Word a, const Word& b);
Word operator+(Word a, Letter c);

struct Occurrences {
  std::size_t count = 0;
  std::vector<std::size_t> positions;
};

Word reverse(const Word& w);

/// All start positions of needle in haystack, overlapping ones included.
/// Throws InvalidInput on an empty needle.
Occurrences occurrences(const Word& haystack, const Word& needle);

bool is_prefix(const Word& part, const Word& whole);
bool is_suffix(const Word& part, const Word& whole);
bool is_factor(const Word& part, const Word& whole);

// Text boundary: letters are indices, symbols are for I/O only.
class Alphabet {
 public:
  static constexpr std::string_view kDefaultSymbols = "0123456789abcdefghijklmnopqrstuvwxyz";

  // First k symbols of kDefaultSymbols.
  static Alphabet standard(std::size_t k);
  explicit Alphabet(std::string symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }

  Letter letter(char symbol) const;
  char symbol(Letter c) const;
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  bool contains(const Word& w) const;

 private:
  std::string symbols_;
};

// Parse with the 36-symbol default table; handy for literals in tests and tools.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

// Smallest k such that every letter of every word is < k (at least 1).
std::size_t required_alphabet_size(std::initializer_list<const Word*> words);

}  // namespace powfree
