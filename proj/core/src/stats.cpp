#include "chaoseed/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "chaoseed/error.hpp"
#include "chaoseed/logistic.hpp"

namespace chaoseed {

namespace {

struct Moments {
  double mean;
  double sum_sq;  // sum of squared deviations from the mean
};

// Two-pass with the usual correction term for the residual of the first pass.
Moments central_moments(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mu = sum / n;

  double sq = 0.0;
  double residual = 0.0;
  for (const double v : values) {
    const double d = v - mu;
    sq += d * d;
    residual += d;
  }
  return {mu, std::max(0.0, sq - residual * residual / n)};
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double mean(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::empty_input, "mean of an empty sequence");
  return central_moments(values).mean;
}

double std_dev(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::empty_input, "std_dev of an empty sequence");
  const auto m = central_moments(values);
  return std::sqrt(m.sum_sq / static_cast<double>(values.size()));
}

LinearFit lsrl(std::span<const double> values) {
  if (values.size() < 2) throw Error(Errc::out_of_range, "LSRL needs at least 2 samples");
  const auto n = static_cast<double>(values.size());
  const double x_mean = (n + 1.0) / 2.0;
  // Sum of squared deviations of 1..n from their mean.
  const double sxx = n * (n * n - 1.0) / 12.0;
  const double y_mean = central_moments(values).mean;

  double sxy = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sxy += (static_cast<double>(i + 1) - x_mean) * (values[i] - y_mean);
  }
  const double slope = sxy / sxx;
  return LinearFit{y_mean - slope * x_mean, slope};
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins) {
  if (bins == 0) throw Error(Errc::out_of_range, "histogram needs at least one bin");
  const auto width = static_cast<double>(bins);
  std::vector<HistogramBin> out(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    out[i] = {static_cast<double>(i) / width, static_cast<double>(i + 1) / width, 0};
  }
  for (const double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) throw Error(Errc::out_of_range, "histogram value outside [0,1]");
    const auto bin = std::min(static_cast<std::size_t>(v * width), bins - 1);
    ++out[bin].count;
  }
  return out;
}

double correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(Errc::length_mismatch, "sequence lengths differ");
  if (a.size() < 2) throw Error(Errc::out_of_range, "correlation needs at least 2 samples");

  const double ma = central_moments(a).mean;
  const double mb = central_moments(b).mean;
  double saa = 0.0;
  double sbb = 0.0;
  double sab = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw Error(Errc::zero_variance, "sequence has zero variance");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

StatsReport summarize(std::span<const double> values, std::size_t bins) {
  const auto fit = lsrl(values);
  const auto m = central_moments(values);
  StatsReport report;
  report.count = values.size();
  report.mean = m.mean;
  report.std_dev = std::sqrt(m.sum_sq / static_cast<double>(values.size()));
  report.histogram = histogram(values, bins);
  report.lsrl_intercept = fit.intercept;
  report.lsrl_slope = fit.slope;
  return report;
}

BifurcationPoint bifurcation_point(double r, std::size_t settle, std::size_t samples, double x0) {
  if (!(r >= 0.0 && r <= 4.0)) throw Error(Errc::out_of_range, "r out of [0,4]");
  if (!(x0 >= 0.0 && x0 <= 1.0)) throw Error(Errc::out_of_range, "x0 out of [0,1]");
  double x = x0;
  for (std::size_t i = 0; i < settle; ++i) x = detail::logistic_step_unchecked(x, r);
  BifurcationPoint point{r, std::vector<double>(samples)};
  for (auto& s : point.attractor_samples) {
    x = detail::logistic_step_unchecked(x, r);
    s = x;
  }
  return point;
}

std::vector<BifurcationPoint> bifurcation_data(const BifurcationConfig& config) {
  if (!(config.r_min >= 0.0 && config.r_min < config.r_max && config.r_max <= 4.0)) {
    throw Error(Errc::out_of_range, "require 0 <= r_min < r_max <= 4");
  }
  if (config.r_steps == 0) throw Error(Errc::out_of_range, "r_steps must be >= 1");

  std::vector<BifurcationPoint> points;
  points.reserve(config.r_steps);
  const double span = config.r_max - config.r_min;
  for (std::size_t i = 0; i < config.r_steps; ++i) {
    const double r = config.r_steps == 1
                         ? config.r_min
                         : config.r_min + span * static_cast<double>(i) /
                                              static_cast<double>(config.r_steps - 1);
    points.push_back(bifurcation_point(std::min(r, config.r_max), config.settle,
                                       config.samples, config.x0));
  }
  return points;
}

std::string stats_csv(const std::vector<std::pair<std::string, StatsReport>>& columns) {
  std::string out = "metric";
  for (const auto& [name, report] : columns) out += "," + name;
  out += "\n";

  auto row = [&](const std::string& metric, auto&& field) {
    out += metric;
    for (const auto& [name, report] : columns) out += "," + field(report);
    out += "\n";
  };
  row("count", [](const StatsReport& s) { return std::to_string(s.count); });
  row("mean", [](const StatsReport& s) { return format_real(s.mean); });
  row("std_dev", [](const StatsReport& s) { return format_real(s.std_dev); });
  row("lsrl_intercept", [](const StatsReport& s) { return format_real(s.lsrl_intercept); });
  row("lsrl_slope", [](const StatsReport& s) { return format_real(s.lsrl_slope); });

  const std::size_t bins = columns.empty() ? 0 : columns.front().second.histogram.size();
  for (std::size_t b = 0; b < bins; ++b) {
    const auto& ref = columns.front().second.histogram[b];
    char label[64];
    std::snprintf(label, sizeof label, "hist_%g_%g", ref.lo, ref.hi);
    row(label, [b](const StatsReport& s) {
      return b < s.histogram.size() ? std::to_string(s.histogram[b].count) : std::string{};
    });
  }
  return out;
}

std::string bifurcation_csv(const std::vector<BifurcationPoint>& points) {
  std::string out = "r,x\n";
  for (const auto& p : points) {
    const std::string r = format_real(p.r);
    for (const double x : p.attractor_samples) out += r + "," + format_real(x) + "\n";
  }
  return out;
}

}  // namespace chaoseed
