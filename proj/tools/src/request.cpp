#include "chaoseed/cli/request.hpp"

#include <charconv>
#include <cstdlib>

#include "chaoseed/error.hpp"
#include "chaoseed/wire.hpp"

namespace chaoseed::cli {

std::size_t max_cells_from_env() {
  const char* raw = std::getenv("CHAOS_SEED_MAX_CELLS");
  if (raw == nullptr) return kDefaultMaxCells;
  std::size_t value = 0;
  const std::string_view text{raw};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return kDefaultMaxCells;
  }
  return value;
}

ChaoticSeed parse_seed(std::string_view x0, std::string_view r) {
  const auto x = parse_decimal(x0);
  if (!x) throw Error(Errc::parse, "x0 is not a decimal number");
  const auto p = parse_decimal(r);
  if (!p) throw Error(Errc::parse, "r is not a decimal number");
  return ChaoticSeed::make(*x, *p);
}

std::int64_t parse_integer(std::string_view text, std::string_view field) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::parse, std::string(field) + " is not an integer");
  }
  return value;
}

namespace {

const std::string& require(const std::optional<std::string>& field, const char* name) {
  if (!field) throw Error(Errc::parse, std::string("missing parameter ") + name);
  return *field;
}

}  // namespace

PlaceParams validate(const PlaceRequest& request, std::size_t max_cells) {
  // x0 is checked on its own first so its diagnostic wins over a missing r.
  const auto x0 = parse_decimal(require(request.x0, "x0"));
  if (!x0) throw Error(Errc::parse, "x0 is not a decimal number");
  if (!(*x0 > 0.0 && *x0 < 1.0)) throw Error(Errc::invalid_seed, "x0 out of (0,1)");
  const auto seed = parse_seed(*request.x0, require(request.r, "r"));

  const auto grid = GridSpec::make(parse_integer(require(request.width, "width"), "width"),
                                   parse_integer(require(request.height, "height"), "height"),
                                   max_cells);

  auto mode = PlacementMode::competition;
  if (request.mode) {
    const auto parsed = parse_mode(*request.mode);
    if (!parsed) throw Error(Errc::parse, "mode must be competition or casual");
    mode = *parsed;
  }

  std::optional<std::size_t> count;
  if (request.count) {
    const auto k = parse_integer(*request.count, "count");
    if (k < 0) throw Error(Errc::out_of_range, "count must be >= 0");
    count = static_cast<std::size_t>(k);
  }

  std::size_t burn_in = kDefaultBurnIn;
  if (request.burn_in) {
    const auto b = parse_integer(*request.burn_in, "burn_in");
    if (b < 0) throw Error(Errc::out_of_range, "burn_in must be >= 0");
    burn_in = static_cast<std::size_t>(b);
  }
  return PlaceParams{seed, grid, mode, count, burn_in};
}

std::string render_place(const PlaceParams& params, const EntropySource& entropy) {
  const auto seq = placements(params.seed, params.grid, params.mode, params.burn_in, entropy);
  return placement_to_json(seq, params.count);
}

}  // namespace chaoseed::cli
