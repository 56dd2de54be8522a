#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace chaoseed {

/// 32-bit Mersenne Twister state: 624 words plus the read cursor.
/// cursor == kMtStateWords means the next draw twists first. A
/// default-constructed state is uninitialized and rejects draws.
struct MtState {
  static constexpr std::size_t kMtStateWords = 624;

  std::array<std::uint32_t, kMtStateWords> words{};
  std::size_t cursor = kMtStateWords;

  friend bool operator==(const MtState&, const MtState&) = default;
};

/// Scalar seeding (init_genrand).
MtState mt_init(std::uint32_t seed) noexcept;

/// Next tempered output. Throws Error(Errc::uninitialized) on an all-zero state.
std::uint32_t mt_next_u32(MtState& state);

/// Real in [0,1) with 53-bit resolution from two consecutive u32 draws.
double mt_next_real(MtState& state);

/// MtState as a UniformRandomBitGenerator, for use with <random> and <algorithm>.
class Mt19937 {
 public:
  using result_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultSeed = 5489u;

  explicit Mt19937(std::uint32_t seed = kDefaultSeed) noexcept : state_(mt_init(seed)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mt_next_u32(state_); }
  double next_real() { return mt_next_real(state_); }

  [[nodiscard]] const MtState& state() const noexcept { return state_; }

 private:
  MtState state_;
};

}  // namespace chaoseed
