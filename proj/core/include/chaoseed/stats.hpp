#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chaoseed {

inline constexpr std::size_t kDefaultHistogramBins = 10;

struct HistogramBin {
  double lo;
  double hi;
  std::size_t count;

  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

/// Least-squares line y = intercept + slope * i over 1-based sample index i.
struct LinearFit {
  double intercept;
  double slope;
};

struct StatsReport {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  std::vector<HistogramBin> histogram;
  double lsrl_intercept = 0.0;
  double lsrl_slope = 0.0;
};

/// Throws Error(Errc::empty_input) when values is empty.
double mean(std::span<const double> values);

/// Population standard deviation, sqrt(sum((x - mu)^2) / N).
/// Throws Error(Errc::empty_input) when values is empty.
double std_dev(std::span<const double> values);

/// Throws Error(Errc::out_of_range) for fewer than two samples.
LinearFit lsrl(std::span<const double> values);

/// Equal-width bins over [0,1]; 1.0 falls into the last bin. Throws
/// Error(Errc::out_of_range) for bins == 0 or a value outside [0,1].
std::vector<HistogramBin> histogram(std::span<const double> values,
                                    std::size_t bins = kDefaultHistogramBins);

/// Pearson correlation, clamped to [-1, 1].
/// Errors: Errc::length_mismatch, Errc::out_of_range (fewer than two
/// samples), Errc::zero_variance.
double correlation(std::span<const double> a, std::span<const double> b);

/// All of the above for one sequence (needs at least two samples).
StatsReport summarize(std::span<const double> values,
                      std::size_t bins = kDefaultHistogramBins);

struct BifurcationConfig {
  double r_min = 2.5;
  double r_max = 4.0;
  std::size_t r_steps = 1000;
  std::size_t settle = 500;
  std::size_t samples = 200;
  double x0 = 0.5;
};

struct BifurcationPoint {
  double r;
  std::vector<double> attractor_samples;
};

/// Attractor samples at a single parameter value: iterate `settle` times
/// from x0, then record `samples` further iterates.
BifurcationPoint bifurcation_point(double r, std::size_t settle, std::size_t samples,
                                   double x0 = 0.5);

/// bifurcation_point over r_steps equally spaced values from r_min to r_max
/// inclusive (r_min alone when r_steps == 1). Output is ordered by r.
std::vector<BifurcationPoint> bifurcation_data(const BifurcationConfig& config);

/// Comparison report, one metric per row and one column per named report.
std::string stats_csv(const std::vector<std::pair<std::string, StatsReport>>& columns);

/// "r,x" rows, one per attractor sample.
std::string bifurcation_csv(const std::vector<BifurcationPoint>& points);

}  // namespace chaoseed
