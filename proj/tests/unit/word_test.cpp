#include <gtest/gtest.h>

#include "powfree/errors.hpp"
#include "powfree/exponent.hpp"
#include "powfree/word.hpp"

using namespace powfree;

TEST(Word, FractionalPowerFromTheDefinition) {
  EXPECT_EQ(format_word(fractional_power(parse_word("1234"), Exponent(3))), "123412341234");
  EXPECT_EQ(format_word(fractional_power(parse_word("1234"), Exponent(7, 4))), "1234123");
  EXPECT_EQ(format_word(fractional_power(parse_word("ab"), Exponent(1))), "ab");
}

TEST(Word, FractionalPowerRejectsBadInput) {
  EXPECT_THROW(fractional_power(Word{}, Exponent(2)), InvalidInput);
  EXPECT_THROW(fractional_power(parse_word("abc"), Exponent(3, 2)), InvalidInput);
}

TEST(Word, OccurrencesOverlap) {
  auto occ = occurrences(parse_word("aaa"), parse_word("aa"));
  EXPECT_EQ(occ.count, 2u);
  EXPECT_EQ(occ.positions, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(occurrences(parse_word("abcabc"), parse_word("abc")).positions, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(occurrences(parse_word("ababa"), parse_word("aba")).positions, (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(occurrences(parse_word("abc"), Word{}), InvalidInput);
}

TEST(Word, Reverse) {
  EXPECT_TRUE(reverse(Word{}).empty());
  EXPECT_EQ(format_word(reverse(parse_word("abc"))), "cba");
  EXPECT_EQ(reverse(reverse(parse_word("0120021"))), parse_word("0120021"));
}

TEST(Word, PrefixSuffixFactor) {
  const Word abc = parse_word("abc");
  EXPECT_TRUE(is_prefix(Word{}, abc));
  EXPECT_TRUE(is_suffix(Word{}, abc));
  EXPECT_TRUE(is_factor(Word{}, abc));
  EXPECT_TRUE(is_suffix(parse_word("bc"), abc));
  EXPECT_FALSE(is_prefix(parse_word("bc"), abc));
  EXPECT_FALSE(is_factor(parse_word("ca"), abc));
}

TEST(Word, SubstrClamps) {
  const Word w = parse_word("01234");
  EXPECT_EQ(format_word(w.substr(3, 10)), "34");
  EXPECT_TRUE(w.substr(9).empty());
  EXPECT_EQ(format_word(w.suffix(2)), "34");
}

TEST(Alphabet, RoundTripAndErrors) {
  const Alphabet a = Alphabet::standard(3);
  EXPECT_EQ(a.format(a.parse("0120")), "0120");
  EXPECT_THROW(a.parse("013"), InvalidInput);
  EXPECT_EQ(required_alphabet_size({}), 1u);
  const Word w = parse_word("02");
  EXPECT_EQ(required_alphabet_size({&w}), 3u);
}
