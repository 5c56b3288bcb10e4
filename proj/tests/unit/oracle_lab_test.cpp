#include <gtest/gtest.h>

#include "powfree/errors.hpp"
#include "powfree/fixture_io.hpp"
#include "powfree/oracle_lab.hpp"

using namespace powfree;

TEST(BruteMaxExponent, Examples) {
  EXPECT_EQ(brute_max_exponent(parse_word("aa")).exponent, Exponent(2));
  EXPECT_EQ(brute_max_exponent(parse_word("abcab")).exponent, Exponent(5, 3));
  EXPECT_EQ(format_word(brute_max_exponent(parse_word("abcab")).witness.period_word), "abc");
  EXPECT_THROW(brute_max_exponent(Word{}), InvalidInput);
  EXPECT_THROW(brute_max_exponent(Word(std::vector<Letter>(501, 0))), InvalidInput);
}

TEST(BruteMaxExponent, AgreesOnAllTernaryWordsUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Word w;
      for (std::size_t c = code, i = 0; i < n; ++i, c /= 3) w.push_back(static_cast<Letter>(c % 3));
      ASSERT_EQ(brute_max_exponent(w).exponent, max_exponent(w).exponent) << format_word(w);
    }
  }
}

TEST(Enumerate, Examples) {
  const auto sq = enumerate_power_free(3, PowerBound::parse("2"), 5);
  EXPECT_EQ(sq.counts, (std::vector<std::uint64_t>{1, 3, 6, 12, 18, 30}));
  EXPECT_EQ(enumerate_power_free(1, PowerBound::parse("2"), 2).counts[2], 0u);
  EXPECT_EQ(enumerate_power_free(3, PowerBound::parse("5"), 4).counts, (std::vector<std::uint64_t>{1, 3, 9, 27, 81}));
  EXPECT_EQ(format_counts(sq), "1\t3\n2\t6\n3\t12\n4\t18\n5\t30\n");
}

TEST(Enumerate, ParallelMatchesSequentialAndWordsAreClosedUnderReversal) {
  EnumerationOptions seq;
  seq.store_words = true;
  EnumerationOptions par = seq;
  par.workers = 0;
  const auto a = enumerate_power_free(3, PowerBound::parse("2"), 9, seq);
  const auto b = enumerate_power_free(3, PowerBound::parse("2"), 9, par);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(*a.words, *b.words);
  for (std::size_t n = 0; n <= 9; ++n) {
    const auto& bucket = (*a.words)[n];
    EXPECT_EQ(bucket.size(), a.counts[n]);
    for (const auto& w : bucket) EXPECT_TRUE(std::binary_search(bucket.begin(), bucket.end(), reverse(w)));
  }
}

TEST(Enumerate, MonotoneInTheBound) {
  const auto strict = enumerate_power_free(2, PowerBound::parse("2+"), 12);
  const auto loose = enumerate_power_free(2, PowerBound::parse("3"), 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_LE(strict.counts[n], loose.counts[n]);
    if (n > 0) EXPECT_LE(strict.counts[n], 2 * strict.counts[n - 1]);
  }
}

TEST(Enumerate, Budget) {
  EnumerationOptions options;
  options.budget = 100;
  EXPECT_THROW(enumerate_power_free(3, PowerBound::parse("2"), 12, options), BudgetExceeded);
}

TEST(VerifyLemmas, SeededInstancesPass) {
  const LemmaReport r = verify_lemmas(1, 100);
  EXPECT_EQ(r.instances_tested, 100u);
  EXPECT_TRUE(r.all_passed()) << format_lemma_report(r);
  EXPECT_GT(r.case_a, 0u);
  EXPECT_GT(r.case_b, 0u);
  EXPECT_GT(r.short_contained.vacuous, 0u);
}

TEST(VerifyLemmas, Deterministic) {
  EXPECT_EQ(format_lemma_report(verify_lemmas(9, 20)), format_lemma_report(verify_lemmas(9, 20)));
}

TEST(VerifyLemmas, CorruptedItemFourIsRejected) {
  auto fixtures = generate_lemma_fixtures(3, 2);
  ASSERT_EQ(fixtures.size(), 2u);
  // A second x-led copy of w directly before it.
  fixtures[0].tuple.sigma = fixtures[0].tuple.w;
  fixtures[0].tuple.window += fixtures[0].tuple.w.size();
  const LemmaReport r = verify_fixtures(fixtures);
  EXPECT_EQ(r.rejected, 1u);
  EXPECT_EQ(r.instances_tested, 1u);
}

TEST(VerifyLemmas, FixtureTextRoundTrips) {
  auto fixtures = generate_lemma_fixtures(4, 1);
  const std::string text = format_delta_fixture(fixtures[0].tuple, fixtures[0].y, Alphabet::standard(3));
  const DeltaFixture back = parse_delta_fixture(text);
  EXPECT_EQ(back.tuple.window_word(), fixtures[0].tuple.window_word());
  EXPECT_EQ(back.y, fixtures[0].y);
}
