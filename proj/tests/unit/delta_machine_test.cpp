#include <gtest/gtest.h>

#include "powfree/delta_machine.hpp"
#include "powfree/errors.hpp"
#include "powfree/fixture_io.hpp"

using namespace powfree;

namespace {

DeltaTuple g1() {
  return parse_delta_fixture(read_text_file(std::string(POWFREE_FIXTURE_DIR) + "/g1.delta")).tuple;
}

Word tm12(std::size_t offset, std::size_t n) {
  return thue_morse(1, 2).drop(offset).prefix(n);
}

}  // namespace

TEST(Gamma, Bound) {
  EXPECT_TRUE(gamma_holds(Exponent(5), 1, 30, 0));
  EXPECT_FALSE(gamma_holds(Exponent(5), 1, 29, 0));
  EXPECT_TRUE(gamma_holds(Exponent(5), 1, 0, 2));
  EXPECT_EQ(gamma_min_eta_length(Exponent(5), 1, 0), 30u);
  EXPECT_EQ(gamma_min_eta_length(Exponent(5), 2, 0), 300u);
  EXPECT_EQ(gamma_min_eta_length(Exponent(11, 2), 1, 0), 36u);
  EXPECT_EQ(gamma_min_eta_length(Exponent(5), 1, 2), std::nullopt);
  EXPECT_EQ(gamma_min_eta_length(Exponent(5), 200, 0), std::numeric_limits<std::size_t>::max());
}

TEST(DeltaCheck, G1FixtureAndItsCorruptions) {
  const DeltaTuple t = g1();
  EXPECT_EQ(t.eta.size(), 30u);
  EXPECT_TRUE(delta_check(t).ok());

  DeltaTuple short_eta = t;
  short_eta.eta.pop_back();
  const auto v3 = delta_check(short_eta);
  EXPECT_EQ(v3.status, DeltaStatus::violated);
  EXPECT_EQ(v3.item, 3);

  DeltaTuple with_x = t;
  with_x.u = Word{0};
  with_x.window += 1;
  const auto v5 = delta_check(with_x);
  EXPECT_EQ(v5.status, DeltaStatus::violated);
  EXPECT_EQ(v5.item, 5);

  DeltaTuple tiny = t;
  tiny.window = t.finite_length();
  EXPECT_THROW(delta_check(tiny), InvalidInput);
}

TEST(DeltaCheck, SecondOccurrenceOfWFailsItemFour) {
  DeltaTuple t = g1();
  t.sigma = Word{0, 1};
  t.window = min_window(t) + 20;
  const auto v = delta_check(t);
  EXPECT_EQ(v.status, DeltaStatus::violated);
  EXPECT_EQ(v.item, 4);
}

TEST(DeltaCheck, PowerAtTheLeftEdgeIsWindowExhausted) {
  DeltaTuple t = g1();
  t.s = parse_left_stream("rev(periodic:1)", Alphabet::standard(3));
  const auto v = delta_check(t);
  EXPECT_EQ(v.status, DeltaStatus::window_exhausted);
}

TEST(PiSet, EmptyWhenNothingForms) {
  const DeltaTuple t = g1();
  EXPECT_TRUE(pi_set(t, 1).empty());
  EXPECT_THROW(pi_set(t, 0), InvalidInput);
}

namespace {

// eta.x.u.y = z.r^6 with r = r_bar.x.u.y, alpha = 6.
struct SixthPower {
  DeltaTuple t;
  Letter y;
  Word z, r, r_bar;
};

SixthPower sixth_power() {
  const Word u{1};
  const Letter y = 2;
  const Word r_bar = tm12(5, 3);
  const Word r = r_bar + Word{0} + u + y;
  const Word z = tm12(40, 60);
  Word power;
  for (int i = 0; i < 6; ++i) power.append(r);
  const Word tail = z + power;
  DeltaTuple t{.s = reverse(thue_morse(1, 2)), .alpha = Exponent(6)};
  t.w = Word{0};
  t.x = 0;
  t.u = u;
  t.eta = tail.prefix(tail.size() - 3);
  t.window = min_window(t) + 40;
  return {t, y, z, r, r_bar};
}

}  // namespace

TEST(PiSet, EngineeredSixthPower) {
  const auto f = sixth_power();
  ASSERT_TRUE(delta_check(f.t).ok());
  const auto pi = pi_set(f.t, f.y);
  ASSERT_EQ(pi.size(), 1u);
  EXPECT_EQ(pi[0].exponent, Exponent(6));
  EXPECT_EQ(pi[0].period_word, f.r);
}

TEST(ShrinkEta, CaseAWithIntegerExponent) {
  const auto f = sixth_power();
  const auto pi = pi_set(f.t, f.y);
  const auto out = shrink_eta(f.t, f.y, pi[0]);
  EXPECT_EQ(out.case_tag, ShrinkCase::A);
  Word expected = f.z;
  for (int i = 0; i < 4; ++i) expected.append(f.r);
  expected.append(f.r_bar);
  EXPECT_EQ(out.eta_bar, expected);
  EXPECT_EQ(out.eta_bar.size(), f.z.size() + 4 * f.r.size() + f.r_bar.size());
  EXPECT_TRUE(is_prefix(out.eta_bar, f.t.eta));

  DeltaTuple next = f.t;
  next.eta = out.eta_bar;
  next.u.push_back(f.y);
  next.window += 1;
  EXPECT_TRUE(delta_check(next).ok());
}

TEST(ShrinkEta, RejectsNonSuffixRepetition) {
  const auto f = sixth_power();
  auto rep = pi_set(f.t, f.y)[0];
  rep.end -= 1;
  EXPECT_THROW(shrink_eta(f.t, f.y, rep), InvalidInput);
}

TEST(Glue, G1EndToEnd) {
  const DeltaTuple t0 = g1();
  const GlueResult g = glue(t0, thue_morse(1, 2), 2000);
  EXPECT_EQ(g.trace.size(), 2000u);
  EXPECT_GE(g.final_window.word.size(), 2300u);
  EXPECT_TRUE(is_power_free(g.final_window.word, t0.bound()).free);
  ASSERT_GE(g.chain.size(), 2u);
  for (std::size_t i = 1; i < g.chain.size(); ++i) EXPECT_TRUE(is_prefix(g.chain[i], g.chain[i - 1]));
  EXPECT_EQ(g.eta_hat, g.chain.back());
  EXPECT_GT(g.stabilized_at, 0u);
  for (const auto& rec : g.trace) {
    EXPECT_TRUE(rec.post_shrink_valid);
    if (rec.step > g.stabilized_at) EXPECT_FALSE(rec.shrink);
  }
  const Alphabet a = Alphabet::standard(3);
  EXPECT_EQ(format_trace_record(g.trace[0], a),
            "j=1 y=1 pi_size=0 case=- eta_len_before=30 eta_len_after=30 chosen_period_len=- "
            "chosen_exponent_num=- chosen_exponent_den=-");
  // x occurs at the mark and nowhere to its right.
  const auto& win = g.final_window;
  EXPECT_EQ(win.word[static_cast<std::size_t>(-win.from)], t0.x);
  for (std::int64_t i = 1; i < win.to; ++i) EXPECT_NE(win.word[static_cast<std::size_t>(i - win.from)], t0.x);
}

TEST(Glue, Preconditions) {
  const DeltaTuple t0 = g1();
  EXPECT_THROW(glue(t0, thue_morse(1, 2), 0), InvalidInput);
  EXPECT_THROW(glue(t0, thue_morse(0, 1), 10), InvalidInput);
  EXPECT_THROW(glue(t0, periodic(Word{1, 2}), 10), InvalidInput);
  DeltaTuple with_u = t0;
  with_u.u = Word{1};
  with_u.window += 1;
  EXPECT_THROW(glue(with_u, thue_morse(1, 2), 10), InvalidInput);
}
