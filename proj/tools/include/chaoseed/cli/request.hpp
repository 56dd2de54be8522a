#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chaoseed/logistic.hpp"
#include "chaoseed/placement.hpp"

namespace chaoseed::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitInvalid = 2,
  kExitPortInUse = 3,
};

/// Grid-size cap, from CHAOS_SEED_MAX_CELLS when set to a positive integer.
std::size_t max_cells_from_env();

/// Parses decimal-string seed parameters. Throws Error(Errc::parse) for
/// non-numeric text and Error(Errc::invalid_seed) for out-of-range values.
ChaoticSeed parse_seed(std::string_view x0, std::string_view r);

/// Strict integer parse; throws Error(Errc::parse) naming `field`.
std::int64_t parse_integer(std::string_view text, std::string_view field);

/// Unvalidated placement parameters as they arrive from flags or a query
/// string. Both front ends go through validate() so they fail identically.
struct PlaceRequest {
  std::optional<std::string> x0;
  std::optional<std::string> r;
  std::optional<std::string> width;
  std::optional<std::string> height;
  std::optional<std::string> mode;
  std::optional<std::string> count;
  std::optional<std::string> burn_in;
};

struct PlaceParams {
  ChaoticSeed seed;
  GridSpec grid;
  PlacementMode mode;
  std::optional<std::size_t> count;
  std::size_t burn_in;
};

/// Checks fields in order x0, r, width, height, mode, count, burn_in and
/// throws on the first failure. Missing mode means competition.
PlaceParams validate(const PlaceRequest& request, std::size_t max_cells);

/// Placement JSON document for validated parameters.
std::string render_place(const PlaceParams& params,
                         const EntropySource& entropy = system_entropy());

}  // namespace chaoseed::cli
