#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chaoseed {

/// Lower and upper bounds of the parameter range where the map is chaotic.
inline constexpr double kChaoticRMin = 3.57;
inline constexpr double kChaoticRMax = 4.0;

/// Iterations discarded before a sequence starts emitting values.
inline constexpr std::size_t kDefaultBurnIn = 50;

/// Magnitude of the casual-play perturbation applied to x0.
inline constexpr double kDefaultNoiseScale = 1e-12;

/// Draws tried by perturb_seed before giving up.
inline constexpr int kPerturbRetries = 16;

/// The reproducibility key of a chaotic sequence: initial state x0 and
/// logistic parameter r. Only constructible through make(), so every live
/// value satisfies 0 < x0 < 1, 3.57 <= r <= 4 and x0 != 1 - 1/r.
class ChaoticSeed {
 public:
  /// Throws Error(Errc::invalid_seed) with a one-line diagnostic.
  static ChaoticSeed make(double x0, double r);

  /// Returns the diagnostic make() would throw, or nullopt for a valid pair.
  static std::optional<std::string> check(double x0, double r);

  [[nodiscard]] double x0() const noexcept { return x0_; }
  [[nodiscard]] double r() const noexcept { return r_; }

  friend bool operator==(const ChaoticSeed&, const ChaoticSeed&) = default;

 private:
  ChaoticSeed(double x0, double r) noexcept : x0_(x0), r_(r) {}

  double x0_;
  double r_;
};

/// Values emitted by generate_sequence plus the inputs that reproduce them.
struct RandomSequence {
  std::vector<double> values;
  ChaoticSeed seed;
  std::size_t burn_in;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] std::span<const double> view() const noexcept { return values; }
};

/// One application of x -> r*x*(1-x). The product is evaluated as (r*x)*(1-x)
/// in binary64; this order is part of the reproducibility contract.
/// Throws Error(Errc::domain) unless 0 <= x <= 1 and 0 <= r <= 4.
double logistic_step(double x, double r);

namespace detail {
// Unchecked form used in hot loops once inputs are known to be in range.
[[nodiscard]] inline double logistic_step_unchecked(double x, double r) noexcept {
  const double rx = r * x;
  return rx * (1.0 - x);
}
}  // namespace detail

/// Iterates the map burn_in times from seed.x0 discarding outputs, then
/// returns the next `length` iterates. Throws Error(Errc::degenerate_orbit)
/// if any iterate is exactly 0 or 1, Error(Errc::out_of_range) if length == 0.
RandomSequence generate_sequence(const ChaoticSeed& seed, std::size_t length,
                                 std::size_t burn_in = kDefaultBurnIn);

/// Source of 64 uniformly random bits per call.
using EntropySource = std::function<std::uint64_t()>;

/// Entropy backed by std::random_device. Calls throw
/// Error(Errc::entropy_unavailable) if the device fails.
EntropySource system_entropy();

/// Maps 64 random bits to a real uniformly spaced on [-1, 1).
double entropy_to_signed_unit(std::uint64_t bits) noexcept;

/// Casual-play seed: x0' = x0 + u * noise_scale with u uniform on [-1, 1),
/// r unchanged. Invalid candidates are redrawn up to kPerturbRetries times,
/// then Error(Errc::validation_exhausted) is thrown.
ChaoticSeed perturb_seed(const ChaoticSeed& seed, const EntropySource& entropy,
                         double noise_scale = kDefaultNoiseScale);

/// |S_a[i] - S_b[i]| for the two sequences generated with the same burn-in.
std::vector<double> divergence_profile(const ChaoticSeed& a, const ChaoticSeed& b,
                                       std::size_t length,
                                       std::size_t burn_in = kDefaultBurnIn);

}  // namespace chaoseed
