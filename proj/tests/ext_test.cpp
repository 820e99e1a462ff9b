#include "cquiver/ext.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

namespace cquiver {
namespace {

TEST(HomExt, IntervalExamples) {
  const auto w = QuiverSpec::linear(0, 1);
  const auto i01 = interval_to_rep(w, {0, 1});
  EXPECT_EQ(hom_ext_dims(i01, i01), (HomExt{1, 0}));
  const auto s0 = interval_to_rep(w, {0, 0});
  const auto s1 = interval_to_rep(w, {1, 1});
  EXPECT_EQ(hom_ext_dims(s0, s1), (HomExt{0, 1}));
  EXPECT_EQ(hom_ext_dims(s1, s0), (HomExt{0, 0}));
}

TEST(HomExt, Errors) {
  const auto a = interval_to_rep(QuiverSpec::linear(0, 1), {0, 0});
  const auto b = interval_to_rep(QuiverSpec::linear(0, 2), {0, 0});
  try {
    hom_ext_dims(a, b);
    FAIL() << "expected quiver mismatch";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("quiver mismatch"), std::string::npos);
  }
  auto broken = a;
  broken.mats[0] = FpMatrix(2, 2, 2);
  try {
    hom_ext_dims(broken, a);
    FAIL() << "expected malformed representation";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("malformed representation"), std::string::npos);
  }
}

TEST(EulerForm, Examples) {
  const auto q = QuiverSpec::linear(0, 2);
  const std::vector<int> dm = {1, 1, 0}, dn = {0, 1, 1}, s = {1, 0, 0};
  EXPECT_EQ(euler_form(q, dm, dn), -1);
  EXPECT_EQ(euler_form(q, s, s), 1);
  const std::vector<int> one = {1};
  EXPECT_EQ(euler_form(QuiverSpec::cyclic(1), one, one), 0);
  EXPECT_THROW(euler_form(q, one, one), std::invalid_argument);
}

TEST(IntervalToRep, Examples) {
  const auto w = QuiverSpec::linear(0, 3);
  const auto mid = interval_to_rep(w, {1, 2});
  EXPECT_EQ(mid.dims, (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(mid.mats[1], FpMatrix::identity(1, 2));
  EXPECT_EQ(mid.mats[0].rows(), 1);
  EXPECT_EQ(mid.mats[0].cols(), 0);
  const auto whole = interval_to_rep(w, {DiscreteInterval::kNegInf, DiscreteInterval::kPosInf});
  EXPECT_EQ(whole.dims, (std::vector<int>{1, 1, 1, 1}));
  for (const auto& m : whole.mats) EXPECT_EQ(m, FpMatrix::identity(1, 2));
  const auto empty = interval_to_rep(w, {5, 9});
  EXPECT_EQ(empty.dims, (std::vector<int>{0, 0, 0, 0}));
}

TEST(IntervalExt, Examples) {
  EXPECT_EQ(interval_ext({0, 0}, {1, 1}), 1);
  EXPECT_EQ(interval_ext({0, 1}, {1, 1}), 0);
  EXPECT_EQ(interval_ext(DiscreteInterval::left_ray(-1), {0, 3}), 1);
  for (std::int64_t lo = -3; lo <= 3; ++lo) {
    for (std::int64_t hi = lo; hi <= 3; ++hi) {
      EXPECT_EQ(interval_ext(DiscreteInterval::right_ray(0), {lo, hi}), 0);
    }
    EXPECT_EQ(interval_ext(DiscreteInterval::right_ray(0), DiscreteInterval::left_ray(lo)), 0);
    EXPECT_EQ(interval_ext(DiscreteInterval::right_ray(0), DiscreteInterval::right_ray(lo)), 0);
  }
}

// The closed form agrees with the matrix computation for every pair of
// finite intervals in [-5, 5] (the acceptance binary sweeps [-8, 8]).
TEST(IntervalExt, MatchesMatrixOracleOnSmallWindow) {
  const auto window = QuiverSpec::linear(-7, 7);
  std::vector<DiscreteInterval> all;
  for (std::int64_t lo = -5; lo <= 5; ++lo) {
    for (std::int64_t hi = lo; hi <= 5; ++hi) all.emplace_back(lo, hi);
  }
  std::vector<RepSpec> reps;
  for (const auto& iv : all) reps.push_back(interval_to_rep(window, iv));
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < all.size(); ++b) {
      ASSERT_EQ(interval_ext(all[a], all[b]), hom_ext_dims(reps[a], reps[b]).ext)
          << all[a].str() << " " << all[b].str();
    }
  }
}

TEST(IntervalExt, RayStabilization) {
  std::vector<DiscreteInterval> shapes;
  for (std::int64_t a = -2; a <= 2; ++a) {
    shapes.push_back(DiscreteInterval::left_ray(a));
    shapes.push_back(DiscreteInterval::right_ray(a));
    for (std::int64_t b = a; b <= 2; ++b) shapes.emplace_back(a, b);
  }
  int checked = 0;
  for (const auto& i : shapes) {
    for (const auto& j : shapes) {
      if (i.finite() && j.finite()) continue;
      const auto [lo, hi] = testing::finite_extent(i, j);
      const std::int64_t span = hi - lo;
      const int expected = interval_ext(i, j);
      int previous = -1;
      for (std::int64_t w = span + 2; w <= span + 6; ++w) {
        const int got = testing::windowed_ext(i, j, lo - w, hi + w);
        EXPECT_EQ(got, expected) << i.str() << " " << j.str() << " margin " << w;
        if (previous >= 0) EXPECT_EQ(got, previous);
        previous = got;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(HomExtProperties, EulerIdentityOnRandomReps) {
  std::mt19937_64 rng(7);
  const std::vector<QuiverSpec> quivers = {QuiverSpec::linear(0, 3), QuiverSpec::linear(-2, 2),
                                           QuiverSpec::cyclic(1), QuiverSpec::cyclic(3)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& q = quivers[trial % quivers.size()];
    const int p = trial % 2 == 0 ? 2 : 3;
    const auto m = testing::random_rep(q, p, 3, rng);
    const auto n = testing::random_rep(q, p, 3, rng);
    const auto he = hom_ext_dims(m, n);
    EXPECT_EQ(he.hom - he.ext, euler_form(q, m.dims, n.dims));
    EXPECT_GE(he.hom, 0);
    EXPECT_GE(he.ext, 0);
  }
}

TEST(HomExtProperties, AdditivityOverDirectSums) {
  const auto w = QuiverSpec::linear(0, 4);
  const std::vector<DiscreteInterval> a = {{0, 1}, {2, 3}}, b = {{1, 2}, {3, 4}, {0, 0}};
  RepSpec sa = interval_to_rep(w, a[0]);
  for (std::size_t i = 1; i < a.size(); ++i) sa = direct_sum(sa, interval_to_rep(w, a[i]));
  RepSpec sb = interval_to_rep(w, b[0]);
  for (std::size_t i = 1; i < b.size(); ++i) sb = direct_sum(sb, interval_to_rep(w, b[i]));
  int ext_sum = 0, hom_sum = 0;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const auto he = hom_ext_dims(interval_to_rep(w, x), interval_to_rep(w, y));
      ext_sum += he.ext;
      hom_sum += he.hom;
    }
  }
  EXPECT_EQ(hom_ext_dims(sa, sb), (HomExt{hom_sum, ext_sum}));
}

TEST(HomExtProperties, FieldIndependenceOnIntervals) {
  const auto w = QuiverSpec::linear(-3, 3);
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = a; b <= 3; ++b) {
      for (std::int64_t c = -3; c <= 3; ++c) {
        for (std::int64_t d = c; d <= 3; ++d) {
          const auto m2 = interval_to_rep(w, {a, b}, 2), n2 = interval_to_rep(w, {c, d}, 2);
          EXPECT_EQ(hom_ext_dims(m2, n2), hom_ext_dims(m2.with_prime(3), n2.with_prime(3)));
        }
      }
    }
  }
}

TEST(RankModP, Basics) {
  FpMatrix m(2, 2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 1);  // row 2 = 2 * row 1 mod 3
  EXPECT_EQ(rank_mod_p(m), 1);
  FpMatrix n(2, 2, 2);
  n.set(0, 0, 1);
  n.set(0, 1, 1);
  n.set(1, 0, 1);
  n.set(1, 1, 3);
  EXPECT_EQ(rank_mod_p(n), 1);
  EXPECT_EQ(rank_mod_p(FpMatrix::identity(4, 5)), 4);
  EXPECT_THROW(FpMatrix(1, 1, 4), std::invalid_argument);
}

}  // namespace
}  // namespace cquiver
