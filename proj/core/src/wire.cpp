#include "chaoseed/wire.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "chaoseed/error.hpp"

namespace chaoseed {

using Json = nlohmann::ordered_json;

std::string format_decimal17(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%#.17g", value);
  return buf;
}

std::optional<double> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

namespace {

Json seed_json(const ChaoticSeed& seed) {
  return Json{{"x0", format_decimal17(seed.x0())}, {"r", format_decimal17(seed.r())}};
}

Json report_json(const StatsReport& s) {
  Json bins = Json::array();
  for (const auto& b : s.histogram) bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  return Json{{"count", s.count},
              {"mean", s.mean},
              {"std_dev", s.std_dev},
              {"lsrl_intercept", s.lsrl_intercept},
              {"lsrl_slope", s.lsrl_slope},
              {"histogram", std::move(bins)}};
}

double seed_field(const Json& seed, const char* key) {
  if (!seed.contains(key) || !seed[key].is_string()) {
    throw Error(Errc::parse, std::string("seed.") + key + " must be a decimal string");
  }
  const auto value = parse_decimal(seed[key].get<std::string>());
  if (!value) throw Error(Errc::parse, std::string("seed.") + key + " is not a decimal number");
  return *value;
}

}  // namespace

std::string placement_to_json(const PlacementSequence& placement,
                              std::optional<std::size_t> count) {
  const std::size_t n = std::min(count.value_or(placement.coords.size()), placement.coords.size());
  Json coords = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    coords.push_back(Json::array({placement.coords[i].x, placement.coords[i].y}));
  }
  const Json doc{{"seed", seed_json(placement.seed_used)},
                 {"grid", {{"width", placement.grid.width()}, {"height", placement.grid.height()}}},
                 {"mode", to_string(placement.mode)},
                 {"burn_in", placement.burn_in},
                 {"coords", std::move(coords)}};
  return doc.dump() + "\n";
}

PlacementSequence placement_from_json(std::string_view text, std::size_t max_cells) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(Errc::parse, std::string("malformed placement JSON: ") + e.what());
  }
  try {
    const auto& seed = doc.at("seed");
    auto chaotic = ChaoticSeed::make(seed_field(seed, "x0"), seed_field(seed, "r"));
    const auto& grid_json = doc.at("grid");
    auto grid = GridSpec::make(grid_json.at("width").get<std::int64_t>(),
                               grid_json.at("height").get<std::int64_t>(), max_cells);
    const auto mode = parse_mode(doc.at("mode").get<std::string>());
    if (!mode) throw Error(Errc::parse, "mode must be competition or casual");
    const auto burn_in = doc.contains("burn_in") ? doc["burn_in"].get<std::size_t>() : kDefaultBurnIn;

    std::vector<Cell> coords;
    for (const auto& c : doc.at("coords")) {
      const auto cell = Cell{c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>()};
      if (cell.x >= grid.width() || cell.y >= grid.height()) {
        throw Error(Errc::parse, "coordinate outside the grid");
      }
      coords.push_back(cell);
    }
    return PlacementSequence{std::move(coords), chaotic, grid, *mode, burn_in};
  } catch (const Json::exception& e) {
    throw Error(Errc::parse, std::string("invalid placement document: ") + e.what());
  }
}

std::string sequence_to_json(const RandomSequence& sequence) {
  const Json doc{{"seed", seed_json(sequence.seed)},
                 {"burn_in", sequence.burn_in},
                 {"length", sequence.size()},
                 {"values", sequence.values}};
  return doc.dump() + "\n";
}

std::string sequence_to_csv(const RandomSequence& sequence) {
  std::string out = "# x0=" + format_decimal17(sequence.seed.x0()) +
                    ",r=" + format_decimal17(sequence.seed.r()) +
                    ",burn_in=" + std::to_string(sequence.burn_in) + "\n";
  out += "index,value\n";
  char buf[48];
  for (std::size_t i = 0; i < sequence.values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, sequence.values[i]);
    out += buf;
  }
  return out;
}

std::string stats_to_json(const std::vector<std::pair<std::string, StatsReport>>& columns) {
  Json doc = Json::object();
  for (const auto& [name, report] : columns) doc[name] = report_json(report);
  return doc.dump() + "\n";
}

std::string bifurcation_to_json(const std::vector<BifurcationPoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back({{"r", p.r}, {"samples", p.attractor_samples}});
  return arr.dump() + "\n";
}

}  // namespace chaoseed
