#include <gtest/gtest.h>

#include <cmath>

#include "abtess/algebra.hpp"
#include "support.hpp"

using namespace abtess;
using abtess::test::Rng;
using abtess::test::struct_mul;

namespace {

void expect_tess(const Tessarine& got, const Tessarine& want, double tol = 1e-12) {
  EXPECT_NEAR(got.a, want.a, tol);
  EXPECT_NEAR(got.b, want.b, tol);
  EXPECT_NEAR(got.c, want.c, tol);
  EXPECT_NEAR(got.d, want.d, tol);
}

const Params kNeg(-2.0, 3.0);
const Params kPos(3.0, 2.0);

}  // namespace

TEST(Params, RejectsBadValues) {
  EXPECT_THROW(Params(0.0, 1.0), InvalidArgument);
  EXPECT_THROW(Params(1.0, 0.0), InvalidArgument);
  EXPECT_THROW(Params(1.0, -2.0), InvalidArgument);
  EXPECT_EQ(Params(2.0, 1.0).n(), 1);
  EXPECT_EQ(Params(-2.0, 1.0).n(), 2);
}

TEST(SpecialUnits, BetaOne) {
  auto [w1, w2] = special_units(Params(-1.0, 1.0));
  expect_tess(w1, {0.5, 0, 0.5, 0});
  expect_tess(w2, {0.5, 0, -0.5, 0});
}

TEST(SpecialUnits, IdempotentSplit) {
  for (double beta : {0.3, 1.0, 2.0, 14.0})
    for (double alpha : {-3.0, 2.0}) {
      Params p(alpha, beta);
      auto [w1, w2] = special_units(p);
      expect_tess(w1 + w2, Tessarine::real(1));
      expect_tess(tess_mul(w1, w2, p), {});
      expect_tess(tess_mul(w1, w1, p), w1);
      expect_tess(tess_mul(w2, w2, p), w2);
    }
}

TEST(TessMul, Table) {
  Params p(-5.0, 7.0);
  expect_tess(tess_mul({0, 1, 0, 0}, {0, 0, 1, 0}, p), {0, 0, 0, 1});
  expect_tess(tess_mul({1, 1, 0, 0}, {1, 0, 1, 0}, p), {1, 1, 1, 1});
  expect_tess(tess_mul({1, 1, 0, 0}, {1, -1, 0, 0}, Params(-1, 1)), Tessarine::real(2));
  expect_tess(tess_mul({0, 0, 0, 1}, {0, 0, 0, 1}, p), Tessarine::real(-35));
  expect_tess(tess_mul({0, 1, 0, 0}, {0, 0, 0, 1}, p), {0, 0, -5, 0});
  expect_tess(tess_mul({0, 0, 1, 0}, {0, 0, 0, 1}, p), {0, 7, 0, 0});
}

TEST(TessMul, MatchesStructureConstants) {
  Rng r(11);
  for (int t = 0; t < 2000; ++t) {
    Params p = r.params(t % 2 == 0);
    Tessarine x = r.tess(), y = r.tess(), z = r.tess();
    expect_tess(tess_mul(x, y, p), struct_mul(x, y, p.alpha(), p.beta()));
    expect_tess(tess_mul(x, y, p), tess_mul(y, x, p));
    expect_tess(tess_mul(tess_mul(x, y, p), z, p), tess_mul(x, tess_mul(y, z, p), p), 1e-11);
    expect_tess(tess_mul(x, y + z, p), tess_mul(x, y, p) + tess_mul(x, z, p));
  }
}

TEST(Conjugate, SignPatterns) {
  Tessarine x{1, 2, 3, 4};
  expect_tess(conjugate(x, Axis::i), {1, 2, -3, -4});
  expect_tess(conjugate(x, Axis::j), {1, -2, 3, -4});
  expect_tess(conjugate(x, Axis::k), {1, -2, -3, 4});
  for (Axis ax : {Axis::i, Axis::j, Axis::k}) expect_tess(conjugate(conjugate(x, ax), ax), x);
  expect_tess(x + conjugate(x, Axis::i) + conjugate(x, Axis::j) + conjugate(x, Axis::k), Tessarine::real(4));
}

TEST(Conjugate, ProductAndNormIdentity) {
  Rng r(12);
  for (int t = 0; t < 1000; ++t) {
    Params p = r.params(t % 2 == 0);
    Tessarine x = r.tess(), y = r.tess();
    for (Axis ax : {Axis::i, Axis::j, Axis::k})
      expect_tess(conjugate(tess_mul(x, y, p), ax), tess_mul(conjugate(x, ax), conjugate(y, ax), p));
    Tessarine xi = tess_mul(x, conjugate(x, Axis::i), p);
    Tessarine all = tess_mul(tess_mul(xi, conjugate(x, Axis::j), p), conjugate(x, Axis::k), p);
    expect_tess(all, Tessarine::real(xi.a * xi.a - p.alpha() * xi.b * xi.b));
  }
}

TEST(ThetaTau, Examples) {
  Tessarine x{1, 2, 3, 4};
  expect_tess(theta_tau(x, 1, 1), x);
  expect_tess(theta_tau(x, -1, 1), {1, -2, 3, -4});
  expect_tess(theta_tau(x, 2, 4), {1, 1, 0.75, 0.5});
  EXPECT_THROW(theta_tau(x, 0, 1), InvalidArgument);
  EXPECT_THROW(theta_tau(x, 1, 0), InvalidArgument);
  expect_tess(regime_conj(x, kNeg), {1, -2, 3, -4});
  expect_tess(regime_conj(x, kPos), x);
}

TEST(SSum, Examples) {
  EXPECT_EQ(s_sum({1, 2, 3, 4}), 10);
  EXPECT_EQ(s_sum({}), 0);
  EXPECT_EQ(s_sum(conjugate({1, 2, 3, 4}, Axis::i)), -4);
}

TEST(Channels, Examples) {
  Params p(-1.0, 4.0);
  ChannelSet ch = to_channels({0, 0, 1, 0}, p);
  ASSERT_EQ(ch.regime, Regime::TwoComplex);
  EXPECT_NEAR(std::abs(ch.ch_s - cplx(2, 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(ch.ch_d - cplx(-2, 0)), 0, 1e-15);
  for (const Params& q : {kNeg, kPos}) {
    auto v = channel_values(Tessarine::real(1), q);
    for (int n = 0; n < q.channel_count(); ++n) EXPECT_NEAR(std::abs(v[n] - 1.0), 0, 1e-15);
  }
  ChannelSet four;
  four.regime = Regime::FourReal;
  four.ch = {1, 1, 1, 1};
  expect_tess(from_channels(four, kPos), Tessarine::real(1));
  four.ch = {1, -1, 1, -1};
  expect_tess(from_channels(four, kPos), {0, 1 / std::sqrt(3.0), 0, 0});
  EXPECT_THROW(from_channels(four, kNeg), InvalidArgument);
}

TEST(Channels, ExplicitFourRealFormula) {
  Params p(14.0, 2.0);
  Tessarine x{0.3, -1.2, 0.7, 2.5};
  double sa = std::sqrt(14.0), sb = std::sqrt(2.0), sab = std::sqrt(28.0);
  ChannelSet ch = to_channels(x, p);
  EXPECT_NEAR(ch.ch[0], x.a + sa * x.b + sb * x.c + sab * x.d, 1e-12);
  EXPECT_NEAR(ch.ch[1], x.a - sa * x.b + sb * x.c - sab * x.d, 1e-12);
  EXPECT_NEAR(ch.ch[2], x.a + sa * x.b - sb * x.c - sab * x.d, 1e-12);
  EXPECT_NEAR(ch.ch[3], x.a - sa * x.b - sb * x.c + sab * x.d, 1e-12);
}

TEST(Channels, HomomorphismAndRoundTrip) {
  Rng r(13);
  for (int t = 0; t < 1000; ++t) {
    Params p = r.params(t % 2 == 0);
    Tessarine x = r.tess(), y = r.tess();
    auto cx = channel_values(x, p), cy = channel_values(y, p);
    auto cxy = channel_values(struct_mul(x, y, p.alpha(), p.beta()), p);
    for (int n = 0; n < p.channel_count(); ++n) EXPECT_LT(std::abs(cxy[n] - cx[n] * cy[n]), 1e-12);
    expect_tess(from_channels(to_channels(x, p), p), x, 1e-14);
  }
}

TEST(Associated, Examples) {
  expect_tess(associated_tessarine({3, 0, 1, 0}, Params(-1, 1)), {4, 0, 2, 0});
  expect_tess(associated_tessarine(Tessarine::real(1), kPos), {1, 1, 1, 1});
  EXPECT_THROW(associated_tessarine({1, 1, 0, 0}, kNeg), DomainError);
  Rng r(14);
  for (int t = 0; t < 200; ++t) {
    Tessarine x = r.tess(), y = r.tess();
    Tessarine ax = associated_tessarine(x, kPos), ay = associated_tessarine(y, kPos);
    expect_tess(associated_tessarine(tess_mul(x, y, kPos), kPos), {ax.a * ay.a, ax.b * ay.b, ax.c * ay.c, ax.d * ay.d},
                1e-11);
  }
}

TEST(Ordering, Examples) {
  Params p(-1, 1);
  EXPECT_TRUE(tess_leq({}, Tessarine::real(1), p));
  EXPECT_FALSE(tess_leq({0, 0, 1, 0}, {}, p));
  EXPECT_FALSE(tess_leq({}, {0, 0, 1, 0}, p));
  Rng r(15);
  for (int t = 0; t < 50; ++t) {
    Tessarine x = r.tess();
    EXPECT_TRUE(tess_leq(x, x, kPos));
  }
  EXPECT_THROW(is_semipositive({0, 1, 0, 0}, kNeg), DomainError);
}

TEST(Inverse, Examples) {
  Params p(-1, 1);
  expect_tess(tess_inverse(Tessarine::real(2), p), Tessarine::real(0.5));
  expect_tess(tess_inverse({3, 0, 1, 0}, p), {0.375, 0, -0.125, 0});
  auto [w1, w2] = special_units(kPos);
  EXPECT_THROW(tess_inverse(w1, kPos), ZeroDivisor);
  try {
    tess_inverse(special_units(kNeg).second, kNeg);
    FAIL();
  } catch (const ZeroDivisor& e) {
    EXPECT_EQ(e.channel(), "ch_s");
  }
  Rng r(16);
  for (int t = 0; t < 500; ++t) {
    Params p2 = r.params(t % 2 == 0);
    Tessarine x = r.tess();
    expect_tess(struct_mul(x, tess_inverse(x, p2), p2.alpha(), p2.beta()), Tessarine::real(1), 1e-9);
  }
}

TEST(Sqrt, Examples) {
  GTessarine r = tess_sqrt(Tessarine::real(4), kPos);
  expect_tess(r.x1, Tessarine::real(2));
  expect_tess(r.x2, {});
  GTessarine e = tess_sqrt(Tessarine::real(-1), kPos);
  expect_tess(e.x1, {});
  expect_tess(e.x2, Tessarine::real(1));
  Params p(5.0, 1.0);
  ChannelSet ch;
  ch.regime = Regime::FourReal;
  ch.ch = {4, 1, 9, 16};
  GTessarine s = tess_sqrt(from_channels(ch, p), p);
  expect_tess(s.x2, {});
  ChannelSet sc = to_channels(s.x1, p);
  for (int n = 0; n < 4; ++n) EXPECT_NEAR(sc.ch[n], std::sqrt(ch.ch[n]), 1e-12);
}

TEST(Sqrt, SquaresBack) {
  Rng r(17);
  for (int t = 0; t < 1000; ++t) {
    Tessarine x = r.tess();
    GTessarine s = tess_sqrt(x, kPos);
    GTessarine sq = g_mul(s, s, kPos);
    expect_tess(sq.x1, x);
    expect_tess(sq.x2, {});
    GTessarine n = tess_sqrt(x, kNeg);
    EXPECT_EQ(n.x2, Tessarine{});
    expect_tess(tess_mul(n.x1, n.x1, kNeg), x);
  }
}

TEST(Generalized, Products) {
  GTessarine eps{{}, Tessarine::real(1)};
  GTessarine ee = g_mul(eps, eps, kPos);
  expect_tess(ee.x1, Tessarine::real(-1));
  expect_tess(ee.x2, {});
  GTessarine ei = g_mul(eps, {{0, 1, 0, 0}, {}}, kPos);
  expect_tess(ei.x1, {});
  expect_tess(ei.x2, {0, 1, 0, 0});
  EXPECT_THROW(g_mul(eps, eps, kNeg), DomainError);
  Rng r(18);
  for (int t = 0; t < 500; ++t) {
    Tessarine x = r.tess(), y = r.tess();
    GTessarine xy = g_mul({x, {}}, {y, {}}, kPos);
    expect_tess(xy.x1, tess_mul(x, y, kPos));
    expect_tess(xy.x2, {});
    GTessarine gx{r.tess(), r.tess()}, gy{r.tess(), r.tess()};
    GTessarine want{struct_mul(gx.x1, gy.x1, 3, 2) - struct_mul(gx.x2, gy.x2, 3, 2),
                    struct_mul(gx.x1, gy.x2, 3, 2) + struct_mul(gx.x2, gy.x1, 3, 2)};
    GTessarine got = g_mul(gx, gy, kPos);
    expect_tess(got.x1, want.x1);
    expect_tess(got.x2, want.x2);
  }
}

TEST(Generalized, Inverse) {
  GTessarine half = g_inverse({Tessarine::real(2), {}}, kPos);
  expect_tess(half.x1, Tessarine::real(0.5));
  GTessarine ie = g_inverse({{}, Tessarine::real(1)}, kPos);
  expect_tess(ie.x1, {});
  expect_tess(ie.x2, Tessarine::real(-1));
  Rng r(19);
  for (int t = 0; t < 500; ++t) {
    GTessarine x{r.tess(), r.tess()};
    GTessarine one = g_mul(x, g_inverse(x, kPos), kPos);
    expect_tess(one.x1, Tessarine::real(1), 1e-9);
    expect_tess(one.x2, {}, 1e-9);
  }
  EXPECT_THROW(collapse({Tessarine::real(1), Tessarine::real(1e-3)}), DomainError);
}

TEST(Equiv, Homomorphism) {
  expect_tess(equiv_tessarine({1, 1, 0, 0}), {1, 1, 0, 0});
  expect_tess(equiv_tessarine({1, 0, 0, 0}), Tessarine::real(1));
  Rng r(20);
  for (int t = 0; t < 1000; ++t) {
    double alpha = r.uni(0.5, 5.0);
    EpsHyper h1{r.uni(), r.uni(), r.uni(), r.uni()}, h2{r.uni(), r.uni(), r.uni(), r.uni()};
    // (1, e, i, e i) with e^2 = -1, i^2 = alpha, expanded by hand.
    EpsHyper prod{h1.a * h2.a - h1.b * h2.b + alpha * (h1.c * h2.c - h1.d * h2.d),
                  h1.a * h2.b + h1.b * h2.a + alpha * (h1.c * h2.d + h1.d * h2.c),
                  h1.a * h2.c + h1.c * h2.a - (h1.b * h2.d + h1.d * h2.b),
                  h1.a * h2.d + h1.d * h2.a + h1.b * h2.c + h1.c * h2.b};
    Params q = equiv_params(Params(alpha, 1.0));
    expect_tess(tess_mul(equiv_tessarine(h1), equiv_tessarine(h2), q), equiv_tessarine(prod));
    EpsHyper back = from_equiv_tessarine(equiv_tessarine(h1));
    EXPECT_EQ(back.a, h1.a);
    EXPECT_EQ(back.d, h1.d);
  }
}

TEST(Norm, ChannelMean) {
  Params p(-1.0, 2.0);
  // j has channels +-sqrt(2).
  EXPECT_NEAR(norm2_sq({0, 0, 1, 0}, p), 2.0, 1e-14);
}
