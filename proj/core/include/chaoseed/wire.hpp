#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoseed/logistic.hpp"
#include "chaoseed/placement.hpp"
#include "chaoseed/stats.hpp"

namespace chaoseed {

/// Seed value as a decimal string with exactly 17 significant digits
/// (trailing zeros kept), e.g. 0.25 -> "0.25000000000000000". Parsing the
/// result gives back the identical binary64 value.
std::string format_decimal17(double value);

/// Strict decimal parse: the whole string must be a finite number.
std::optional<double> parse_decimal(std::string_view text);

/// PlacementSequence document:
///   {"seed":{"x0":"..","r":".."},"grid":{"width":M,"height":N},
///    "mode":"competition"|"casual","burn_in":B,"coords":[[x,y],...]}
/// `count` keeps only the first k placements. Output is compact JSON
/// terminated by a newline and is byte-stable for equal inputs.
std::string placement_to_json(const PlacementSequence& placement,
                              std::optional<std::size_t> count = std::nullopt);

/// Inverse of placement_to_json. Throws Error(Errc::parse) on malformed
/// documents and re-validates seed and grid.
PlacementSequence placement_from_json(std::string_view text,
                                      std::size_t max_cells = kDefaultMaxCells);

std::string sequence_to_json(const RandomSequence& sequence);

/// "index,value" rows preceded by a "# x0=..,r=..,burn_in=.." provenance line.
std::string sequence_to_csv(const RandomSequence& sequence);

std::string stats_to_json(const std::vector<std::pair<std::string, StatsReport>>& columns);

std::string bifurcation_to_json(const std::vector<BifurcationPoint>& points);

}  // namespace chaoseed
