#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaoseed {

enum class Errc {
  invalid_seed,          // seed bounds or fixed-point rejection
  domain,                // logistic_step input outside [0,1] x [0,4]
  degenerate_orbit,      // orbit hit an absorbing value (0 or 1)
  entropy_unavailable,
  validation_exhausted,  // perturbation retries used up
  out_of_range,
  invalid_grid,
  grid_too_large,
  empty_input,
  length_mismatch,
  zero_variance,
  uninitialized,
  parse,
};

std::string_view to_string(Errc code) noexcept;

// Every library failure is reported through this type. what() is a short,
// user-facing diagnostic (the CLI and HTTP layer forward it verbatim).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chaoseed
