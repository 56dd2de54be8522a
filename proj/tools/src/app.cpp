#include "chaoseed/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "chaoseed/chaoseed.hpp"
#include "chaoseed/cli/request.hpp"
#include "chaoseed/cli/server.hpp"

namespace chaoseed::cli {

namespace {

struct OutputOptions {
  std::string format = "json";
  std::string out;
};

void add_output_options(CLI::App& cmd, OutputOptions& opts, const std::string& default_format) {
  opts.format = default_format;
  cmd.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--out", opts.out, "Write to this file instead of stdout");
}

// Writes `text` to --out or to `out`. Returns an exit code.
int emit(const OutputOptions& opts, const std::string& text, std::ostream& out, std::ostream& err) {
  if (opts.out.empty()) {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << opts.out << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::size_t non_negative(std::int64_t value, const char* field) {
  if (value < 0) throw Error(Errc::out_of_range, std::string(field) + " must be >= 0");
  return static_cast<std::size_t>(value);
}

struct GenArgs {
  std::string x0;
  std::string r;
  std::int64_t length = 1000;
  std::int64_t burn_in = static_cast<std::int64_t>(kDefaultBurnIn);
  OutputOptions output;
};

std::string run_gen(const GenArgs& args) {
  const auto seed = parse_seed(args.x0, args.r);
  if (args.length < 1) throw Error(Errc::out_of_range, "length must be >= 1");
  const auto seq = generate_sequence(seed, static_cast<std::size_t>(args.length),
                                     non_negative(args.burn_in, "burn_in"));
  return args.output.format == "csv" ? sequence_to_csv(seq) : sequence_to_json(seq);
}

struct PlaceArgs {
  std::string x0;
  std::string r;
  std::string width;
  std::string height;
  std::string mode = "competition";
  std::optional<std::string> count;
  std::optional<std::string> burn_in;
  OutputOptions output;
};

std::string run_place(const PlaceArgs& args) {
  PlaceRequest request{args.x0, args.r, args.width, args.height, args.mode, args.count, args.burn_in};
  return render_place(validate(request, max_cells_from_env()));
}

struct StatsArgs {
  std::string x0 = "0.25";
  std::string r = "3.995";
  std::uint32_t mt_seed = 624;
  std::int64_t n = 1000;
  std::int64_t bins = static_cast<std::int64_t>(kDefaultHistogramBins);
  std::int64_t burn_in = static_cast<std::int64_t>(kDefaultBurnIn);
  OutputOptions output;
};

std::string run_stats(const StatsArgs& args) {
  const auto seed = parse_seed(args.x0, args.r);
  if (args.n < 2) throw Error(Errc::out_of_range, "LSRL needs at least 2 samples");
  if (args.bins < 1) throw Error(Errc::out_of_range, "bins must be >= 1");
  const auto n = static_cast<std::size_t>(args.n);
  const auto bins = static_cast<std::size_t>(args.bins);

  const auto logistic = generate_sequence(seed, n, non_negative(args.burn_in, "burn_in"));
  MtState mt = mt_init(args.mt_seed);
  std::vector<double> uniform(n);
  for (auto& v : uniform) v = mt_next_real(mt);

  const std::vector<std::pair<std::string, StatsReport>> columns{
      {"logistic", summarize(logistic.view(), bins)},
      {"mt19937", summarize(uniform, bins)},
  };
  return args.output.format == "csv" ? stats_csv(columns) : stats_to_json(columns);
}

struct BifurcateArgs {
  BifurcationConfig config;
  std::int64_t steps = 1000;
  std::int64_t settle = 500;
  std::int64_t samples = 200;
  OutputOptions output;
};

std::string run_bifurcate(BifurcateArgs args) {
  if (args.steps < 1) throw Error(Errc::out_of_range, "steps must be >= 1");
  args.config.r_steps = static_cast<std::size_t>(args.steps);
  args.config.settle = non_negative(args.settle, "settle");
  args.config.samples = non_negative(args.samples, "samples");
  const auto points = bifurcation_data(args.config);
  return args.output.format == "csv" ? bifurcation_csv(points) : bifurcation_to_json(points);
}

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
};

int run_serve(const ServeArgs& args, std::ostream& err) {
  PlacementServer server(max_cells_from_env());
  if (!server.bind(args.host, args.port)) {
    err << "error: cannot listen on " << args.host << ":" << args.port << "\n";
    return kExitPortInUse;
  }
  err << "listening on http://" << args.host << ":" << server.port() << "\n";
  err.flush();
  server.listen();
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reproducible pseudorandom sequences and grid placements from the logistic map",
               "chaoseed"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a logistic-map sequence");
  gen_cmd->add_option("--x0", gen.x0, "Initial state in (0,1), decimal string")->required();
  gen_cmd->add_option("--r", gen.r, "Parameter in [3.57,4], decimal string")->required();
  gen_cmd->add_option("--len", gen.length, "Number of values")->capture_default_str();
  gen_cmd->add_option("--burn-in", gen.burn_in, "Discarded leading iterates")->capture_default_str();
  add_output_options(*gen_cmd, gen.output, "json");

  PlaceArgs place;
  auto* place_cmd = app.add_subcommand("place", "Random permutation of grid cells");
  place_cmd->add_option("--x0", place.x0, "Initial state in (0,1), decimal string")->required();
  place_cmd->add_option("--r", place.r, "Parameter in [3.57,4], decimal string")->required();
  place_cmd->add_option("--width", place.width, "Cells per row")->required();
  place_cmd->add_option("--height", place.height, "Number of rows")->required();
  place_cmd->add_option("--mode", place.mode, "competition or casual")->capture_default_str();
  place_cmd->add_option("--count", place.count, "Emit only the first k placements");
  place_cmd->add_option("--burn-in", place.burn_in, "Discarded leading iterates");
  place_cmd->add_option("--out", place.output.out, "Write to this file instead of stdout");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Compare logistic and MT19937 statistics");
  stats_cmd->add_option("--x0", stats.x0, "Logistic initial state")->capture_default_str();
  stats_cmd->add_option("--r", stats.r, "Logistic parameter")->capture_default_str();
  stats_cmd->add_option("--mt-seed", stats.mt_seed, "MT19937 seed")->capture_default_str();
  stats_cmd->add_option("--n", stats.n, "Sample count")->capture_default_str();
  stats_cmd->add_option("--bins", stats.bins, "Histogram bins")->capture_default_str();
  stats_cmd->add_option("--burn-in", stats.burn_in, "Logistic burn-in")->capture_default_str();
  add_output_options(*stats_cmd, stats.output, "json");

  BifurcateArgs bif;
  auto* bif_cmd = app.add_subcommand("bifurcate", "Export bifurcation diagram data");
  bif_cmd->add_option("--r-min", bif.config.r_min, "Lowest r")->capture_default_str();
  bif_cmd->add_option("--r-max", bif.config.r_max, "Highest r")->capture_default_str();
  bif_cmd->add_option("--steps", bif.steps, "Number of r values")->capture_default_str();
  bif_cmd->add_option("--settle", bif.settle, "Transient iterates per r")->capture_default_str();
  bif_cmd->add_option("--samples", bif.samples, "Recorded iterates per r")->capture_default_str();
  bif_cmd->add_option("--x0", bif.config.x0, "Starting state for every r")->capture_default_str();
  add_output_options(*bif_cmd, bif.output, "csv");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve placements over HTTP");
  serve_cmd->add_option("--host", serve.host, "Listen address")->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "Listen port")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*gen_cmd) return emit(gen.output, run_gen(gen), out, err);
    if (*place_cmd) return emit(place.output, run_place(place), out, err);
    if (*stats_cmd) return emit(stats.output, run_stats(stats), out, err);
    if (*bif_cmd) return emit(bif.output, run_bifurcate(bif), out, err);
    if (*serve_cmd) return run_serve(serve, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace chaoseed::cli
