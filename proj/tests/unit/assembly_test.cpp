#include <gtest/gtest.h>

#include "powfree/assembly.hpp"
#include "powfree/errors.hpp"
#include "powfree/fixture_io.hpp"

using namespace powfree;

namespace {

BiInfiniteSpec load(const char* name) {
  return parse_bi_infinite_spec(read_text_file(std::string(POWFREE_FIXTURE_DIR) + "/" + name));
}

AssemblyConfig config() {
  AssemblyConfig cfg;
  cfg.alpha = Exponent(5);
  cfg.k = 3;
  cfg.window = 512;
  return cfg;
}

}  // namespace

TEST(Validate, ThresholdRegion) {
  AssemblyConfig cfg = config();
  EXPECT_NO_THROW(validate(cfg));
  cfg.alpha = Exponent(9, 2);
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg.unsafe = true;
  EXPECT_NO_THROW(validate(cfg));
  cfg = config();
  cfg.k = 2;
  EXPECT_THROW(validate(cfg), InvalidInput);
}

TEST(ExtendLeftAvoiding, TrivialCases) {
  const auto s = reverse(thue_morse(1, 2));
  EXPECT_TRUE(extend_left_avoiding(Word{}, s, config()).empty());
  EXPECT_TRUE(extend_left_avoiding(s.suffix(3), s, config()).empty());
}

TEST(ExtendLeftAvoiding, FindsFreeExtension) {
  const auto s = reverse(thue_morse(1, 2));
  const AssemblyConfig cfg = config();
  const Word u = extend_left_avoiding(Word{0}, s, cfg);
  ASSERT_FALSE(u.empty());
  EXPECT_EQ(u.back(), 0u);
  EXPECT_TRUE(is_power_free(s.suffix(cfg.window) + u, PowerBound{cfg.alpha, false}).free);

  const Word z{0, 1, 1, 2, 0};
  const Word longer = extend_left_avoiding(z, s, cfg);
  EXPECT_TRUE(is_suffix(z, longer));
  EXPECT_TRUE(is_power_free(s.suffix(cfg.window) + longer, PowerBound{cfg.alpha, false}).free);
}

TEST(ExtendLeftAvoiding, Preconditions) {
  const AssemblyConfig cfg = config();
  EXPECT_THROW(extend_left_avoiding(Word{0}, concat_left(reverse(thue_morse(1, 2)), Word{1}), cfg), InvalidInput);
  EXPECT_THROW(extend_left_avoiding(Word{0, 0, 0, 0, 0}, reverse(thue_morse(1, 2)), cfg), InvalidInput);
}

TEST(ExtendLeftAvoiding, LimitsRaiseSearchExhausted) {
  AssemblyConfig cfg = config();
  cfg.max_expansions = 3;
  // Three expansions cannot even place z.
  const auto s = reverse(thue_morse(1, 2));
  EXPECT_THROW(extend_left_avoiding(Word{0, 1, 2, 0, 1, 2, 0}, s, cfg), SearchExhausted);
}

TEST(BuildDelta, FromFixture) {
  const auto spec = load("nonrecur.bi");
  const DeltaTuple t = build_delta(spec.v, Word{0}, spec.declarations, config());
  EXPECT_TRUE(delta_check(t).ok());
  EXPECT_EQ(t.x, 0u);
  EXPECT_GE(t.eta.size(), 30u);
  EXPECT_TRUE(t.u.empty());
}

TEST(BuildDelta, LetterDeclaredOnBothSides) {
  const auto spec = load("nonrecur.bi");
  const DeltaTuple t = build_delta(spec.v, Word{1}, spec.declarations, config());
  EXPECT_TRUE(delta_check(t).ok());
  EXPECT_EQ(t.x, 1u);
}

TEST(BuildDelta, Errors) {
  const auto spec = load("nonrecur.bi");
  // 000 is a cube, absent from both halves.
  EXPECT_THROW(build_delta(spec.v, Word{0, 0, 0}, spec.declarations, config()), InvalidInput);
  EXPECT_THROW(build_delta(spec.v, Word{2}, spec.declarations, config()), InvalidInput);
  EXPECT_THROW(build_delta(spec.v, Word{}, spec.declarations, config()), InvalidInput);
}

TEST(Nonrecur, DeclaredNonRecurrentLetter) {
  auto spec = load("nonrecur.bi");
  spec.declarations.push_back({2, RecurrenceSide::none, "test"});
  spec.declarations.erase(spec.declarations.begin() + 2);
  const auto result = nonrecur(spec.v, Word{0, 1}, spec.declarations, config());
  EXPECT_EQ(result.report.case_taken, NonrecurCase::declared_nonrecurrent);
  EXPECT_EQ(result.x, 2u);
  EXPECT_EQ(window(result.v_hat, -20, 20).word, window(spec.v, -20, 20).word);
  EXPECT_FALSE(result.glue);
}

TEST(Nonrecur, GlueBranch) {
  const auto spec = load("nonrecur.bi");
  const AssemblyConfig cfg = config();
  const auto result = nonrecur(spec.v, *spec.w, spec.declarations, cfg);
  const auto& rep = result.report;
  EXPECT_EQ(rep.case_taken, NonrecurCase::glue);
  EXPECT_EQ(rep.window_checked_len(), 4 * cfg.window);
  EXPECT_TRUE(rep.certified());
  const Word at = window(result.v_hat, rep.w_position, rep.w_position + 2).word;
  EXPECT_EQ(at, *spec.w);
  EXPECT_EQ(result.v_hat.letter_at(0), result.x);
  const std::string text = format_report(rep, Alphabet::standard(3));
  EXPECT_NE(text.find("case_taken: glue\n"), std::string::npos);
  EXPECT_NE(text.find("verdict: free\n"), std::string::npos);
}

TEST(Nonrecur, MirroredInputIsExactReverse) {
  const auto direct = load("nonrecur.bi");
  const auto mirrored = load("nonrecur_mirrored.bi");
  const auto a = nonrecur(direct.v, *direct.w, direct.declarations, config());
  const auto b = nonrecur(mirrored.v, *mirrored.w, mirrored.declarations, config());
  EXPECT_EQ(b.report.case_taken, NonrecurCase::reversed_glue);
  EXPECT_TRUE(b.report.certified());
  EXPECT_EQ(reverse(a.report.window.word), b.report.window.word);
  EXPECT_EQ(b.report.marked_x_position, -1);
  EXPECT_EQ(b.report.w_position, -a.report.w_position - 2);
  for (std::int64_t i = -300; i < 300; ++i) EXPECT_EQ(b.v_hat.letter_at(i), a.v_hat.letter_at(-1 - i));
}
