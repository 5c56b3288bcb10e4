#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "powfree/exponent.hpp"
#include "powfree/word.hpp"

namespace powfree {

/// Declared, not proven, properties of an infinite word. Consumers re-check
/// windows; nothing here is trusted silently.
struct StreamMetadata {
  std::optional<PowerBound> bound;
  // Letters that may occur; nullopt means unknown.
  std::optional<std::vector<Letter>> support;
  std::vector<Letter> recurrent;

  bool avoids(Letter c) const;
};

// Deterministic, thread-safe letter generator over indices 0, 1, 2, ...
class LetterSource {
 public:
  virtual ~LetterSource() = default;
  virtual Letter at(std::uint64_t index) const = 0;
  // Spec string in the stream grammar ("tm:a,b", "periodic:w").
  virtual std::string describe(const Alphabet& alphabet) const = 0;
};

class RightInfiniteWord {
 public:
  RightInfiniteWord(std::shared_ptr<const LetterSource> source, StreamMetadata metadata = {});

  Letter letter_at(std::uint64_t index) const;
  Word prefix(std::size_t n) const;
  const StreamMetadata& metadata() const noexcept { return metadata_; }

  // head · this; metadata is cleared.
  RightInfiniteWord prepend(const Word& head) const;
  // The suffix starting at index n; declarations are inherited (factor-closed).
  RightInfiniteWord drop(std::uint64_t n) const;

  std::string describe(const Alphabet& alphabet) const;

 private:
  Word head_;
  std::shared_ptr<const LetterSource> source_;
  std::uint64_t offset_ = 0;
  StreamMetadata metadata_;

  friend class LeftInfiniteWord;
};

/// ... w_{-2} w_{-1}: indices are negative, letter_at(-i) reads the mirror at i - 1.
class LeftInfiniteWord {
 public:
  explicit LeftInfiniteWord(RightInfiniteWord mirror) : mirror_(std::move(mirror)) {}

  Letter letter_at(std::int64_t index) const;
  // Last n letters.
  Word suffix(std::size_t n) const;
  const RightInfiniteWord& mirror() const noexcept { return mirror_; }
  const StreamMetadata& metadata() const noexcept { return mirror_.metadata(); }

  // Removes the last n letters.
  LeftInfiniteWord drop_back(std::uint64_t n) const { return LeftInfiniteWord(mirror_.drop(n)); }

  std::string describe(const Alphabet& alphabet) const;

 private:
  RightInfiniteWord mirror_;
};

/// Position 0 is the first letter of `right`; negative positions read `left`.
struct BiInfiniteWord {
  LeftInfiniteWord left;
  RightInfiniteWord right;

  Letter letter_at(std::int64_t index) const { return index >= 0 ? right.letter_at(index) : left.letter_at(index); }
};

struct Window {
  Word word;
  std::int64_t from = 0;
  std::int64_t to = 0;
};

RightInfiniteWord thue_morse(Letter a, Letter b);
// Test fixture stream: w w w ...
RightInfiniteWord periodic(const Word& w);

LeftInfiniteWord reverse(const RightInfiniteWord& v);
RightInfiniteWord reverse(const LeftInfiniteWord& v);
BiInfiniteWord reverse(const BiInfiniteWord& v);

// s · tail; metadata is cleared.
LeftInfiniteWord concat_left(const LeftInfiniteWord& s, const Word& tail);

// Finite views. Ranges on the undefined side of one-sided streams throw InvalidInput.
Window window(const RightInfiniteWord& v, std::int64_t from, std::int64_t to);
Window window(const LeftInfiniteWord& v, std::int64_t from, std::int64_t to);
Window window(const BiInfiniteWord& v, std::int64_t from, std::int64_t to);

using AnyStream = std::variant<LeftInfiniteWord, RightInfiniteWord>;

/// Grammar: "tm:a,b" | "periodic:WORD" | "rev(SPEC)" | "drop:N(SPEC)" | SPEC "+" WORD,
/// where "+" appends a finite word to a left-infinite stream.
AnyStream parse_stream(std::string_view spec, const Alphabet& alphabet);
RightInfiniteWord parse_right_stream(std::string_view spec, const Alphabet& alphabet);
LeftInfiniteWord parse_left_stream(std::string_view spec, const Alphabet& alphabet);

}  // namespace powfree
