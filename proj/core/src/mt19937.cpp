#include "chaoseed/mt19937.hpp"

#include <algorithm>

#include "chaoseed/error.hpp"

namespace chaoseed {

namespace {

constexpr std::size_t kN = MtState::kMtStateWords;
constexpr std::size_t kM = 397;
constexpr std::uint32_t kMatrixA = 0x9908B0DFu;
constexpr std::uint32_t kUpperMask = 0x80000000u;
constexpr std::uint32_t kLowerMask = 0x7FFFFFFFu;

inline std::uint32_t twist_word(std::uint32_t upper, std::uint32_t lower, std::uint32_t far) {
  const std::uint32_t y = (upper & kUpperMask) | (lower & kLowerMask);
  return far ^ (y >> 1) ^ ((y & 1u) ? kMatrixA : 0u);
}

void twist(MtState& s) {
  auto& w = s.words;
  std::size_t i = 0;
  for (; i < kN - kM; ++i) w[i] = twist_word(w[i], w[i + 1], w[i + kM]);
  for (; i < kN - 1; ++i) w[i] = twist_word(w[i], w[i + 1], w[i + kM - kN]);
  w[kN - 1] = twist_word(w[kN - 1], w[0], w[kM - 1]);
  s.cursor = 0;
}

}  // namespace

MtState mt_init(std::uint32_t seed) noexcept {
  MtState s;
  s.words[0] = seed;
  for (std::size_t i = 1; i < kN; ++i) {
    const std::uint32_t prev = s.words[i - 1];
    s.words[i] = 1812433253u * (prev ^ (prev >> 30)) + static_cast<std::uint32_t>(i);
  }
  s.cursor = kN;
  return s;
}

std::uint32_t mt_next_u32(MtState& state) {
  if (state.cursor >= kN) {
    // Seeding never yields all zeros, so this only catches unseeded states.
    if (std::all_of(state.words.begin(), state.words.end(),
                    [](std::uint32_t w) { return w == 0; })) {
      throw Error(Errc::uninitialized, "MT19937 state is not initialized");
    }
    twist(state);
  }
  std::uint32_t y = state.words[state.cursor++];
  y ^= y >> 11;
  y ^= (y << 7) & 0x9D2C5680u;
  y ^= (y << 15) & 0xEFC60000u;
  y ^= y >> 18;
  return y;
}

double mt_next_real(MtState& state) {
  const std::uint32_t a = mt_next_u32(state) >> 5;
  const std::uint32_t b = mt_next_u32(state) >> 6;
  return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) *
         (1.0 / 9007199254740992.0);
}

}  // namespace chaoseed
