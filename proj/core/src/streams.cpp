#include "powfree/streams.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "powfree/errors.hpp"

namespace powfree {
namespace {

class ThueMorseSource final : public LetterSource {
 public:
  ThueMorseSource(Letter a, Letter b) : a_(a), b_(b) {}
  Letter at(std::uint64_t index) const override { return std::popcount(index) % 2 == 0 ? a_ : b_; }
  std::string describe(const Alphabet& alphabet) const override {
    return std::string("tm:") + alphabet.symbol(a_) + "," + alphabet.symbol(b_);
  }

 private:
  Letter a_, b_;
};

class PeriodicSource final : public LetterSource {
 public:
  explicit PeriodicSource(Word block) : block_(std::move(block)) {}
  Letter at(std::uint64_t index) const override { return block_[index % block_.size()]; }
  std::string describe(const Alphabet& alphabet) const override { return "periodic:" + alphabet.format(block_); }

 private:
  Word block_;
};

std::vector<Letter> distinct_letters(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool StreamMetadata::avoids(Letter c) const {
  return support && std::find(support->begin(), support->end(), c) == support->end();
}

RightInfiniteWord::RightInfiniteWord(std::shared_ptr<const LetterSource> source, StreamMetadata metadata)
    : source_(std::move(source)), metadata_(std::move(metadata)) {
  if (!source_) throw InvalidInput("stream needs a letter source");
}

Letter RightInfiniteWord::letter_at(std::uint64_t index) const {
  if (index < head_.size()) return head_[index];
  return source_->at(index - head_.size() + offset_);
}

Word RightInfiniteWord::prefix(std::size_t n) const {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter_at(i));
  return out;
}

RightInfiniteWord RightInfiniteWord::prepend(const Word& head) const {
  RightInfiniteWord out = *this;
  out.head_ = head + head_;
  out.metadata_ = {};
  return out;
}

RightInfiniteWord RightInfiniteWord::drop(std::uint64_t n) const {
  RightInfiniteWord out = *this;
  if (n <= head_.size()) {
    out.head_ = head_.substr(n);
  } else {
    out.offset_ += n - head_.size();
    out.head_ = {};
  }
  return out;
}

std::string RightInfiniteWord::describe(const Alphabet& alphabet) const {
  std::string base = source_->describe(alphabet);
  if (offset_ > 0) base = "drop:" + std::to_string(offset_) + "(" + base + ")";
  if (head_.empty()) return base;
  return "rev(rev(" + base + ")+" + alphabet.format(reverse(head_)) + ")";
}

Letter LeftInfiniteWord::letter_at(std::int64_t index) const {
  if (index >= 0) throw InvalidInput("left-infinite word is indexed by negative positions");
  return mirror_.letter_at(static_cast<std::uint64_t>(-(index + 1)));
}

Word LeftInfiniteWord::suffix(std::size_t n) const {
  Word out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) out.push_back(mirror_.letter_at(i - 1));
  return out;
}

std::string LeftInfiniteWord::describe(const Alphabet& alphabet) const {
  if (mirror_.head_.empty()) {
    RightInfiniteWord bare = mirror_;
    return "rev(" + bare.describe(alphabet) + ")";
  }
  RightInfiniteWord bare = mirror_;
  bare.head_ = {};
  return LeftInfiniteWord(bare).describe(alphabet) + "+" + alphabet.format(reverse(mirror_.head_));
}

RightInfiniteWord thue_morse(Letter a, Letter b) {
  if (a == b) throw InvalidInput("thue_morse: the two letters must differ");
  StreamMetadata meta;
  meta.bound = PowerBound{Exponent(2), true};
  meta.support = std::vector<Letter>{std::min(a, b), std::max(a, b)};
  meta.recurrent = *meta.support;
  return RightInfiniteWord(std::make_shared<ThueMorseSource>(a, b), std::move(meta));
}

RightInfiniteWord periodic(const Word& w) {
  if (w.empty()) throw InvalidInput("periodic: empty block");
  StreamMetadata meta;
  meta.support = distinct_letters(w);
  meta.recurrent = *meta.support;
  return RightInfiniteWord(std::make_shared<PeriodicSource>(w), std::move(meta));
}

LeftInfiniteWord reverse(const RightInfiniteWord& v) { return LeftInfiniteWord(v); }

RightInfiniteWord reverse(const LeftInfiniteWord& v) { return v.mirror(); }

BiInfiniteWord reverse(const BiInfiniteWord& v) {
  return BiInfiniteWord{LeftInfiniteWord(v.right), v.left.mirror()};
}

LeftInfiniteWord concat_left(const LeftInfiniteWord& s, const Word& tail) {
  if (tail.empty()) return s;
  return LeftInfiniteWord(s.mirror().prepend(reverse(tail)));
}

Window window(const RightInfiniteWord& v, std::int64_t from, std::int64_t to) {
  if (from > to) throw InvalidInput("window: from > to");
  if (from < 0) throw InvalidInput("window: right-infinite word has no negative positions");
  Window out{{}, from, to};
  out.word.reserve(static_cast<std::size_t>(to - from));
  for (std::int64_t i = from; i < to; ++i) out.word.push_back(v.letter_at(static_cast<std::uint64_t>(i)));
  return out;
}

Window window(const LeftInfiniteWord& v, std::int64_t from, std::int64_t to) {
  if (from > to) throw InvalidInput("window: from > to");
  if (to > 0) throw InvalidInput("window: left-infinite word has no positions >= 0");
  Window out{{}, from, to};
  out.word.reserve(static_cast<std::size_t>(to - from));
  for (std::int64_t i = from; i < to; ++i) out.word.push_back(v.letter_at(i));
  return out;
}

Window window(const BiInfiniteWord& v, std::int64_t from, std::int64_t to) {
  if (from > to) throw InvalidInput("window: from > to");
  Window out{{}, from, to};
  out.word.reserve(static_cast<std::size_t>(to - from));
  for (std::int64_t i = from; i < to; ++i) out.word.push_back(v.letter_at(i));
  return out;
}

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, const Alphabet& alphabet) : alphabet_(alphabet), full_(text) {}

  AnyStream parse(std::string_view spec) const {
    if (spec.empty()) fail("empty stream spec");
    // Left-concatenation binds loosest; split at the last top-level '+'.
    int depth = 0;
    for (std::size_t i = spec.size(); i-- > 0;) {
      if (spec[i] == ')') ++depth;
      if (spec[i] == '(') --depth;
      if (depth == 0 && spec[i] == '+') {
        AnyStream base = parse(spec.substr(0, i));
        const auto* left = std::get_if<LeftInfiniteWord>(&base);
        if (!left) fail("'+WORD' needs a left-infinite stream on its left");
        return concat_left(*left, alphabet_.parse(spec.substr(i + 1)));
      }
    }
    return parse_term(spec);
  }

 private:
  AnyStream parse_term(std::string_view spec) const {
    if (spec.starts_with("rev(")) {
      AnyStream inner = parse(inner_parens(spec, 3));
      if (auto* right = std::get_if<RightInfiniteWord>(&inner)) return reverse(*right);
      return reverse(std::get<LeftInfiniteWord>(inner));
    }
    if (spec.starts_with("drop:")) {
      const auto open = spec.find('(');
      if (open == std::string_view::npos) fail("drop needs '(SPEC)'");
      const auto digits = spec.substr(5, open - 5);
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) fail("bad drop count");
      AnyStream inner = parse(inner_parens(spec, open));
      const auto* right = std::get_if<RightInfiniteWord>(&inner);
      if (!right) fail("drop applies to right-infinite streams");
      return right->drop(n);
    }
    if (spec.starts_with("tm:")) {
      const auto rest = spec.substr(3);
      if (rest.size() != 3 || rest[1] != ',') fail("expected tm:a,b");
      return thue_morse(alphabet_.letter(rest[0]), alphabet_.letter(rest[2]));
    }
    if (spec.starts_with("periodic:")) return periodic(alphabet_.parse(spec.substr(9)));
    fail("unknown stream term \"" + std::string(spec) + "\"");
  }

  // Contents of the parenthesised group opening at `open`, which must close at the end.
  std::string_view inner_parens(std::string_view spec, std::size_t open) const {
    if (open >= spec.size() || spec[open] != '(' || spec.back() != ')') fail("unbalanced parentheses");
    int depth = 0;
    for (std::size_t i = open; i < spec.size(); ++i) {
      if (spec[i] == '(') ++depth;
      if (spec[i] == ')' && --depth == 0 && i + 1 != spec.size()) fail("unexpected text after ')'");
    }
    if (depth != 0) fail("unbalanced parentheses");
    return spec.substr(open + 1, spec.size() - open - 2);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("stream spec \"" + full_ + "\": " + why);
  }

  const Alphabet& alphabet_;
  std::string full_;
};

}  // namespace

AnyStream parse_stream(std::string_view spec, const Alphabet& alphabet) {
  return SpecParser(spec, alphabet).parse(spec);
}

RightInfiniteWord parse_right_stream(std::string_view spec, const Alphabet& alphabet) {
  AnyStream s = parse_stream(spec, alphabet);
  if (auto* right = std::get_if<RightInfiniteWord>(&s)) return *right;
  throw InvalidInput("stream spec \"" + std::string(spec) + "\" is left-infinite; expected right-infinite");
}

LeftInfiniteWord parse_left_stream(std::string_view spec, const Alphabet& alphabet) {
  AnyStream s = parse_stream(spec, alphabet);
  if (auto* left = std::get_if<LeftInfiniteWord>(&s)) return *left;
  throw InvalidInput("stream spec \"" + std::string(spec) + "\" is right-infinite; expected left-infinite");
}

}  // namespace powfree
