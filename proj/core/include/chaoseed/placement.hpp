#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chaoseed/logistic.hpp"

namespace chaoseed {

/// Default cap on width * height; overridable per call.
inline constexpr std::size_t kDefaultMaxCells = 1'000'000;

/// M x N playing field. M is cells per row, N is the number of rows.
class GridSpec {
 public:
  /// Throws Error(Errc::invalid_grid) unless width, height >= 1 and
  /// width * height >= 2; Error(Errc::grid_too_large) above max_cells.
  static GridSpec make(std::int64_t width, std::int64_t height,
                       std::size_t max_cells = kDefaultMaxCells);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t height() const noexcept { return height_; }
  [[nodiscard]] std::size_t cells() const noexcept { return width_ * height_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  GridSpec(std::size_t width, std::size_t height) noexcept : width_(width), height_(height) {}

  std::size_t width_;
  std::size_t height_;
};

/// Cell coordinate; (0,0) is the top-left, x grows rightwards, y downwards.
struct Cell {
  std::size_t x;
  std::size_t y;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Permutation of {0, ..., L-1}: entry i is the position in the source
/// sequence of its i-th smallest value.
using IndexPermutation = std::vector<std::size_t>;

enum class PlacementMode { competition, casual };

std::string_view to_string(PlacementMode mode) noexcept;
std::optional<PlacementMode> parse_mode(std::string_view text) noexcept;

/// Full ordering of grid cells for successive game objects.
struct PlacementSequence {
  std::vector<Cell> coords;
  ChaoticSeed seed_used;
  GridSpec grid;
  PlacementMode mode;
  std::size_t burn_in;

  friend bool operator==(const PlacementSequence&, const PlacementSequence&) = default;
};

/// Ascending stable argsort; equal values keep their original order.
/// Throws Error(Errc::empty_input) for an empty sequence.
IndexPermutation argsort(std::span<const double> values);

/// Row-major decomposition: x = z mod M, y = floor(z / M).
/// Throws Error(Errc::out_of_range) if z >= M * N.
Cell index_to_xy(std::size_t z, const GridSpec& grid);

/// Algorithm behind reproducible object placement. Competition mode uses the
/// seed verbatim; casual mode first perturbs x0 using `entropy`. The sequence
/// length is the number of grid cells, so the result visits every cell once.
PlacementSequence placements(const ChaoticSeed& seed, const GridSpec& grid,
                             PlacementMode mode, std::size_t burn_in = kDefaultBurnIn,
                             const EntropySource& entropy = system_entropy());

}  // namespace chaoseed
