#include "chaoseed/error.hpp"

namespace chaoseed {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_seed: return "invalid_seed";
    case Errc::domain: return "domain";
    case Errc::degenerate_orbit: return "degenerate_orbit";
    case Errc::entropy_unavailable: return "entropy_unavailable";
    case Errc::validation_exhausted: return "validation_exhausted";
    case Errc::out_of_range: return "out_of_range";
    case Errc::invalid_grid: return "invalid_grid";
    case Errc::grid_too_large: return "grid_too_large";
    case Errc::empty_input: return "empty_input";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::zero_variance: return "zero_variance";
    case Errc::uninitialized: return "uninitialized";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

}  // namespace chaoseed
