#include "chaoseed/placement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chaoseed/error.hpp"

namespace chaoseed {

GridSpec GridSpec::make(std::int64_t width, std::int64_t height, std::size_t max_cells) {
  if (width < 1) throw Error(Errc::invalid_grid, "width must be >= 1");
  if (height < 1) throw Error(Errc::invalid_grid, "height must be >= 1");
  const auto w = static_cast<std::size_t>(width);
  const auto h = static_cast<std::size_t>(height);
  // Compare via division so the product cannot overflow.
  if (w > max_cells / h) {
    throw Error(Errc::grid_too_large,
                "grid exceeds the maximum of " + std::to_string(max_cells) + " cells");
  }
  if (w * h < 2) throw Error(Errc::invalid_grid, "grid must have at least 2 cells");
  return GridSpec{w, h};
}

std::string_view to_string(PlacementMode mode) noexcept {
  return mode == PlacementMode::competition ? "competition" : "casual";
}

std::optional<PlacementMode> parse_mode(std::string_view text) noexcept {
  if (text == "competition") return PlacementMode::competition;
  if (text == "casual") return PlacementMode::casual;
  return std::nullopt;
}

IndexPermutation argsort(std::span<const double> values) {
  if (values.empty()) throw Error(Errc::empty_input, "cannot argsort an empty sequence");
  IndexPermutation order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return order;
}

Cell index_to_xy(std::size_t z, const GridSpec& grid) {
  if (z >= grid.cells()) throw Error(Errc::out_of_range, "cell index out of range");
  return Cell{z % grid.width(), z / grid.width()};
}

PlacementSequence placements(const ChaoticSeed& seed, const GridSpec& grid,
                             PlacementMode mode, std::size_t burn_in,
                             const EntropySource& entropy) {
  const ChaoticSeed used =
      mode == PlacementMode::competition ? seed : perturb_seed(seed, entropy);

  const auto sequence = generate_sequence(used, grid.cells(), burn_in);
  const auto order = argsort(sequence.view());

  std::vector<Cell> coords;
  coords.reserve(order.size());
  for (const std::size_t z : order) coords.push_back(index_to_xy(z, grid));
  return PlacementSequence{std::move(coords), used, grid, mode, burn_in};
}

}  // namespace chaoseed
