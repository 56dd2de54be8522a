#include "chaoseed/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "chaoseed/error.hpp"
#include "chaoseed/logistic.hpp"
#include "chaoseed/mt19937.hpp"
#include "oracles.hpp"

namespace chaoseed {
namespace {

using Values = std::vector<double>;

std::size_t distinct_at(std::vector<double> v, double resolution) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.empty() ? 0 : 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] - v[i - 1] > resolution) ++n;
  }
  return n;
}

TEST(StdDev, Basics) {
  EXPECT_EQ(std_dev(Values{0.5, 0.5, 0.5}), 0.0);
  EXPECT_DOUBLE_EQ(std_dev(Values{0.0, 1.0}), 0.5);
  EXPECT_THROW(std_dev(Values{}), Error);
  EXPECT_THROW(mean(Values{}), Error);
}

TEST(StdDev, MatchesTwoPassOracle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> len(1, 500);
  for (int trial = 0; trial < 1000; ++trial) {
    Values v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = u(rng);
    const double expected = testing::two_pass_std(v);
    if (expected == 0.0) {
      EXPECT_EQ(std_dev(v), 0.0);
    } else {
      EXPECT_NEAR(std_dev(v) / expected, 1.0, 1e-12);
    }
  }
}

TEST(StdDev, LogisticExceedsUniform) {
  const auto logistic = generate_sequence(ChaoticSeed::make(0.25, 3.995), 1000);
  MtState s = mt_init(624);
  Values uniform(1000);
  for (auto& x : uniform) x = mt_next_real(s);
  EXPECT_NEAR(std_dev(logistic.view()), 0.3364, 0.02);
  EXPECT_GT(std_dev(logistic.view()), std_dev(uniform));
}

TEST(Lsrl, FlatLine) {
  const auto fit = lsrl(Values{0.5, 0.5});
  EXPECT_DOUBLE_EQ(fit.intercept, 0.5);
  EXPECT_DOUBLE_EQ(fit.slope, 0.0);
  EXPECT_THROW(lsrl(Values{0.5}), Error);
}

TEST(Lsrl, RecoversAffineInput) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<int> len(2, 2000);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = coef(rng);
    const double b = coef(rng) * 1e-2;
    Values y(static_cast<std::size_t>(len(rng)));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = a + b * static_cast<double>(i + 1);
    const auto fit = lsrl(y);
    EXPECT_NEAR(fit.intercept, a, 1e-9 * std::max(1.0, std::abs(a)));
    EXPECT_NEAR(fit.slope, b, 1e-9 * std::max(1e-3, std::abs(b)));
  }
}

TEST(Lsrl, NormalEquationsOracle) {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Values y(777);
  for (auto& v : y) v = u(rng);
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<long double>(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const long double x = static_cast<long double>(i + 1);
    sx += x;
    sy += y[i];
    sxx += x * x;
    sxy += x * y[i];
  }
  const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const long double intercept = (sy - slope * sx) / n;
  const auto fit = lsrl(y);
  EXPECT_NEAR(fit.slope, static_cast<double>(slope), 1e-12);
  EXPECT_NEAR(fit.intercept, static_cast<double>(intercept), 1e-12);
}

TEST(Histogram, Basics) {
  const auto h = histogram(Values{0.05, 0.15});
  ASSERT_EQ(h.size(), 10u);
  EXPECT_EQ(h[0].count, 1u);
  EXPECT_EQ(h[1].count, 1u);
  for (std::size_t i = 2; i < 10; ++i) EXPECT_EQ(h[i].count, 0u);
  EXPECT_DOUBLE_EQ(h[0].lo, 0.0);
  EXPECT_DOUBLE_EQ(h[9].hi, 1.0);

  const auto last = histogram(Values{1.0, 0.0}, 4);
  EXPECT_EQ(last[3].count, 1u);
  EXPECT_EQ(last[0].count, 1u);

  EXPECT_THROW(histogram(Values{0.5}, 0), Error);
  EXPECT_THROW(histogram(Values{1.5}), Error);
}

TEST(Histogram, ConservesCountAndPartitions) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> bins(1, 64);
  for (int trial = 0; trial < 200; ++trial) {
    Values v(static_cast<std::size_t>(trial * 7 + 1));
    for (auto& x : v) x = u(rng);
    const auto b = static_cast<std::size_t>(bins(rng));
    const auto h = histogram(v, b);
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      total += h[i].count;
      if (i > 0) ASSERT_EQ(h[i].lo, h[i - 1].hi);
    }
    ASSERT_EQ(total, v.size());
    ASSERT_EQ(h.front().lo, 0.0);
    ASSERT_EQ(h.back().hi, 1.0);
  }
}

TEST(Histogram, LogisticPilesUpAtTheEdges) {
  const auto seq = generate_sequence(ChaoticSeed::make(0.25, 3.995), 10000);
  const auto h = histogram(seq.view());
  EXPECT_GT(h.front().count + h.back().count, 2 * h[5].count);
}

TEST(Histogram, UniformIsFlat) {
  MtState s = mt_init(624);
  Values v(10000);
  for (auto& x : v) x = mt_next_real(s);
  for (const auto& bin : histogram(v)) {
    EXPECT_GE(bin.count, 850u);
    EXPECT_LE(bin.count, 1150u);
  }
}

TEST(Correlation, Extremes) {
  const auto seq = generate_sequence(ChaoticSeed::make(0.3, 3.97), 500);
  Values flipped(seq.values);
  for (auto& v : flipped) v = 1.0 - v;
  EXPECT_NEAR(correlation(seq.view(), seq.view()), 1.0, 1e-12);
  EXPECT_NEAR(correlation(seq.view(), flipped), -1.0, 1e-12);
}

TEST(Correlation, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse;
  };
  EXPECT_EQ(code([] { correlation(Values{0.1, 0.2}, Values{0.1}); }), Errc::length_mismatch);
  EXPECT_EQ(code([] { correlation(Values{0.1}, Values{0.1}); }), Errc::out_of_range);
  EXPECT_EQ(code([] { correlation(Values{0.3, 0.3}, Values{0.1, 0.2}); }), Errc::zero_variance);
}

TEST(Correlation, BoundedUnderFuzz) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::uniform_int_distribution<int> len(2, 50);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = static_cast<std::size_t>(len(rng));
    Values a(n), b(n);
    for (auto& x : a) x = u(rng);
    for (std::size_t i = 0; i < n; ++i) b[i] = (trial % 3 == 0) ? 3.0 * a[i] + 1.0 : u(rng);
    const double rho = correlation(a, b);
    ASSERT_GE(rho, -1.0);
    ASSERT_LE(rho, 1.0);
  }
}

TEST(Summarize, AgreesWithParts) {
  const auto seq = generate_sequence(ChaoticSeed::make(0.25, 3.995), 1000);
  const auto report = summarize(seq.view());
  EXPECT_EQ(report.count, 1000u);
  EXPECT_EQ(report.std_dev, std_dev(seq.view()));
  EXPECT_EQ(report.lsrl_slope, lsrl(seq.view()).slope);
  EXPECT_EQ(report.histogram, histogram(seq.view()));
}

TEST(Bifurcation, FixedPointRegime) {
  const auto p = bifurcation_point(2.5, 500, 200);
  ASSERT_EQ(p.attractor_samples.size(), 200u);
  for (const double x : p.attractor_samples) EXPECT_NEAR(x, 0.6, 1e-6);
}

TEST(Bifurcation, PeriodTwoRegime) {
  const double r = 3.2;
  // Nontrivial roots of f(f(x)) = x.
  const double disc = std::sqrt((r - 3.0) * (r + 1.0));
  const double lo = (r + 1.0 - disc) / (2.0 * r);
  const double hi = (r + 1.0 + disc) / (2.0 * r);
  EXPECT_NEAR(lo, 0.5130, 1e-4);
  EXPECT_NEAR(hi, 0.7995, 1e-4);

  const auto p = bifurcation_point(r, 500, 200);
  for (const double x : p.attractor_samples) {
    EXPECT_LT(std::min(std::abs(x - lo), std::abs(x - hi)), 1e-6);
  }
  EXPECT_EQ(distinct_at(p.attractor_samples, 1e-3), 2u);
}

TEST(Bifurcation, ChaoticBandIsDense) {
  const auto p = bifurcation_point(3.99, 500, 200);
  EXPECT_GE(distinct_at(p.attractor_samples, 1e-6), 150u);
}

TEST(Bifurcation, GridOfParameters) {
  const auto pts = bifurcation_data({2.5, 4.0, 4, 100, 10, 0.5});
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_DOUBLE_EQ(pts[0].r, 2.5);
  EXPECT_DOUBLE_EQ(pts[1].r, 3.0);
  EXPECT_DOUBLE_EQ(pts[3].r, 4.0);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i - 1].r, pts[i].r);
  for (const auto& p : pts) {
    EXPECT_EQ(p.attractor_samples.size(), 10u);
    for (const double x : p.attractor_samples) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
  EXPECT_EQ(bifurcation_data({3.0, 3.5, 1, 10, 3, 0.5}).front().r, 3.0);
  EXPECT_THROW(bifurcation_data({3.5, 3.5, 2, 10, 3, 0.5}), Error);
  EXPECT_THROW(bifurcation_data({3.0, 4.5, 2, 10, 3, 0.5}), Error);
  EXPECT_THROW(bifurcation_data({3.0, 3.5, 0, 10, 3, 0.5}), Error);
}

TEST(Csv, StatsLayout) {
  StatsReport a = summarize(Values{0.1, 0.9, 0.5});
  StatsReport b = summarize(Values{0.2, 0.4});
  const auto csv = stats_csv({{"left", a}, {"right", b}});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "metric,left,right");
  EXPECT_NE(csv.find("\ncount,3,2\n"), std::string::npos);
  EXPECT_NE(csv.find("\nstd_dev,"), std::string::npos);
  // header + 5 scalar metrics + 10 histogram rows
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 16);
}

TEST(Csv, BifurcationRows) {
  const auto csv = bifurcation_csv({bifurcation_point(2.5, 10, 2)});
  EXPECT_EQ(csv.substr(0, 4), "r,x\n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

}  // namespace
}  // namespace chaoseed
