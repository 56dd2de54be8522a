#include "chaoseed/logistic.hpp"

#include <cmath>
#include <exception>
#include <random>

#include "chaoseed/error.hpp"

namespace chaoseed {

std::optional<std::string> ChaoticSeed::check(double x0, double r) {
  // Negated comparisons so NaN is rejected too.
  if (!(x0 > 0.0 && x0 < 1.0)) return "x0 out of (0,1)";
  if (!(r >= kChaoticRMin && r <= kChaoticRMax)) return "r out of [3.57,4]";
  if (x0 == 1.0 - 1.0 / r) return "x0 is the fixed point 1-1/r";
  return std::nullopt;
}

ChaoticSeed ChaoticSeed::make(double x0, double r) {
  if (auto why = check(x0, r)) throw Error(Errc::invalid_seed, *why);
  return ChaoticSeed{x0, r};
}

double logistic_step(double x, double r) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(Errc::domain, "x out of [0,1]");
  if (!(r >= 0.0 && r <= 4.0)) throw Error(Errc::domain, "r out of [0,4]");
  return detail::logistic_step_unchecked(x, r);
}

RandomSequence generate_sequence(const ChaoticSeed& seed, std::size_t length,
                                 std::size_t burn_in) {
  if (length == 0) throw Error(Errc::out_of_range, "length must be >= 1");

  const double r = seed.r();
  double x = seed.x0();
  for (std::size_t i = 0; i < burn_in; ++i) {
    x = detail::logistic_step_unchecked(x, r);
    if (x == 0.0 || x == 1.0) {
      throw Error(Errc::degenerate_orbit, "orbit collapsed during burn-in");
    }
  }

  std::vector<double> values(length);
  for (auto& v : values) {
    x = detail::logistic_step_unchecked(x, r);
    if (x == 0.0 || x == 1.0) throw Error(Errc::degenerate_orbit, "orbit collapsed");
    v = x;
  }
  return RandomSequence{std::move(values), seed, burn_in};
}

EntropySource system_entropy() {
  return [] {
    try {
      thread_local std::random_device device;
      const auto hi = static_cast<std::uint64_t>(device());
      const auto lo = static_cast<std::uint64_t>(device());
      return (hi << 32) | lo;
    } catch (const std::exception& e) {
      throw Error(Errc::entropy_unavailable, std::string("entropy unavailable: ") + e.what());
    }
  };
}

double entropy_to_signed_unit(std::uint64_t bits) noexcept {
  constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  const double unit = static_cast<double>(bits >> 11) * kInv53;  // [0, 1)
  return 2.0 * unit - 1.0;
}

ChaoticSeed perturb_seed(const ChaoticSeed& seed, const EntropySource& entropy,
                         double noise_scale) {
  if (!entropy) throw Error(Errc::entropy_unavailable, "no entropy source");
  if (!(noise_scale >= 0.0) || !std::isfinite(noise_scale)) {
    throw Error(Errc::out_of_range, "noise scale must be finite and >= 0");
  }
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    const double u = entropy_to_signed_unit(entropy());
    const double x0 = seed.x0() + u * noise_scale;
    if (!ChaoticSeed::check(x0, seed.r())) return ChaoticSeed::make(x0, seed.r());
  }
  throw Error(Errc::validation_exhausted, "no valid perturbed seed after retries");
}

std::vector<double> divergence_profile(const ChaoticSeed& a, const ChaoticSeed& b,
                                       std::size_t length, std::size_t burn_in) {
  const auto sa = generate_sequence(a, length, burn_in);
  const auto sb = generate_sequence(b, length, burn_in);
  std::vector<double> diff(length);
  for (std::size_t i = 0; i < length; ++i) diff[i] = std::abs(sa.values[i] - sb.values[i]);
  return diff;
}

}  // namespace chaoseed
