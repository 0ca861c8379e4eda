// portload command line: synthetic data, ingestion summaries, arrival
// profiles, and scenario demand runs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "portload/ingest.hpp"
#include "portload/numeric.hpp"
#include "portload/profiles.hpp"
#include "portload/report.hpp"
#include "portload/scenario.hpp"
#include "portload/synthgen.hpp"
#include "portload/version.hpp"

namespace {

using namespace portload;
namespace fs = std::filesystem;

struct FilterFlags {
  std::string window_start = "2019-01-01";
  std::string window_end = "2019-12-31";
  double max_length = 25.0;
  std::uint32_t min_freq = 500;
};

FilterConfig make_filter_config(const FilterFlags& flags) {
  const auto start = parse_date(flags.window_start);
  const auto end = parse_date(flags.window_end);
  if (!start) throw std::runtime_error("bad --window-start '" + flags.window_start + "', expected YYYY-MM-DD");
  if (!end) throw std::runtime_error("bad --window-end '" + flags.window_end + "', expected YYYY-MM-DD");
  FilterConfig cfg{{*start, *end}, flags.max_length, flags.min_freq};
  if (!cfg.ok()) throw std::runtime_error("window start is after window end");
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << bytes;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

ParseResult parse_input(const std::string& csv_bytes) {
  std::istringstream in(csv_bytes);
  auto result = parse_port_calls(in);
  if (!result.errors.empty()) {
    const auto& first = result.errors.front();
    std::cerr << "warning: " << result.errors.size()
              << " malformed row(s) skipped (first at line " << first.line
              << ": " << first.message << ")\n";
  }
  return result;
}

int cmd_synth(std::uint64_t seed, std::uint32_t filler,
              const std::string& out_path, const FilterFlags& flags) {
  auto spec = default_synth_spec();
  spec.seed = seed;
  spec.filler = filler;
  const auto calls = generate(spec);

  std::ostringstream csv;
  serialize_port_calls(calls, csv);
  write_file(out_path, csv.str());
  std::cout << "wrote " << out_path << " (" << calls.size() << " calls)\n";

  const auto filtered = filter_calls(calls, make_filter_config(flags));
  std::cout << "class frequencies after filtering:\n";
  write_frequency_table(filtered.table, std::cout);
  return 0;
}

int cmd_summary(const std::string& input, const FilterFlags& flags) {
  const auto cfg = make_filter_config(flags);
  const auto parsed = parse_input(read_file(input));

  FilterConfig window_only = cfg;
  window_only.max_length_m = std::numeric_limits<double>::infinity();
  window_only.min_type_frequency = 0;
  FilterConfig no_freq = cfg;
  no_freq.min_type_frequency = 0;

  const auto in_window = filter_calls(parsed.calls, window_only);
  const auto under_length = filter_calls(parsed.calls, no_freq);
  const auto final = filter_calls(parsed.calls, cfg);

  std::cout << "parsed rows:     " << parsed.calls.size() + parsed.errors.size()
            << "\n";
  std::cout << "malformed rows:  " << parsed.errors.size() << "\n";
  std::cout << "in window:       " << in_window.calls.size() << "\n";
  std::cout << "under length:    " << under_length.calls.size() << "\n";
  std::cout << "classes seen:    " << under_length.table.size() << "\n";
  std::cout << "classes kept:    " << final.table.size() << "\n";
  std::cout << "calls kept:      " << final.calls.size() << "\n\n";
  write_frequency_table(final.table, std::cout);
  return 0;
}

int cmd_profile(const std::string& input, const std::string& vessel_class,
                const std::string& aggregation_label,
                const std::string& out_path, bool allow_empty,
                const FilterFlags& flags) {
  const auto cfg = make_filter_config(flags);
  const auto aggregation = Aggregation::from_label(aggregation_label);
  if (!aggregation) {
    throw std::runtime_error("bad --aggregation '" + aggregation_label +
                             "', expected alldays|mon|...|sun");
  }
  const auto parsed = parse_input(read_file(input));
  const auto filtered = filter_calls(parsed.calls, cfg);

  ArrivalProfile profile;
  try {
    profile = build_arrival_profile(filtered.calls, vessel_class, cfg.window,
                                    allow_empty);
  } catch (const UnknownClassError&) {
    std::cerr << "error: no calls for vessel class '" << vessel_class
              << "'\navailable classes:\n";
    for (const auto& row : filtered.table) {
      std::cerr << "  " << row.vessel_class << "\n";
    }
    return 1;
  }

  std::ostringstream csv;
  write_profile_csv(profile, csv);
  write_file(out_path, csv.str());

  std::uint64_t total = 0;
  for (const auto& row : profile.counts)
    for (const auto cell : row) total += cell;
  const auto vec = daily_arrival_vector(profile, *aggregation);
  const auto [top, slots] = peak(vec.mean_arrivals);
  std::cout << vessel_class << ": " << total << " calls, busiest hour "
            << slots.front() << " (" << aggregation->label() << ")\n";
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_demand(const std::string& input, const std::string& scenario_path,
               const std::string& out_dir, bool svg,
               const FilterFlags& flags) {
  const auto cfg = make_filter_config(flags);
  const auto input_bytes = read_file(input);
  const auto parsed = parse_input(input_bytes);
  const auto filtered = filter_calls(parsed.calls, cfg);

  std::ifstream scenario_in(scenario_path);
  if (!scenario_in) {
    throw std::runtime_error("cannot open scenario '" + scenario_path + "'");
  }
  const auto spec = parse_scenario(scenario_in);

  std::vector<std::string> classes;
  for (const auto& row : filtered.table) classes.push_back(row.vessel_class);
  const auto scenario_cfg = make_scenario_config(spec, classes);

  for (const auto& [label, fraction] : scenario_cfg.adoption) {
    if (std::find(classes.begin(), classes.end(), label) == classes.end()) {
      std::cerr << "error: scenario class '" << label
                << "' is not in the filtered dataset\navailable classes:\n";
      for (const auto& c : classes) std::cerr << "  " << c << "\n";
      return 1;
    }
  }
  if (scenario_cfg.adoption.empty()) {
    std::cerr << "warning: no classes to simulate, writing zero curves\n";
  }

  std::map<std::string, DailyArrivalVector> vectors;
  for (const auto& [label, fraction] : scenario_cfg.adoption) {
    const auto profile =
        build_arrival_profile(filtered.calls, label, cfg.window, true);
    vectors[label] = daily_arrival_vector(profile, scenario_cfg.aggregation);
  }
  const auto curve = total_demand(scenario_cfg, vectors);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output dir '" + out_dir +
                             "': " + ec.message());
  }

  RunManifest manifest;
  manifest.version = std::string(version);
  manifest.input_path = input;
  char checksum[32];
  std::snprintf(checksum, sizeof checksum, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(input_bytes)));
  manifest.input_checksum = checksum;
  manifest.filter = cfg;
  manifest.scenario_path = scenario_path;
  manifest.aggregation = scenario_cfg.aggregation.label();
  manifest.output_dir = out_dir;

  const auto csv_path = (fs::path(out_dir) / "demand.csv").string();
  std::ostringstream csv;
  write_demand_csv(curve, csv);
  write_file(csv_path, csv.str());
  manifest.outputs.push_back("demand.csv");

  if (svg) {
    const auto title = fs::path(scenario_path).stem().string() + " (" +
                       scenario_cfg.aggregation.label() + ")";
    write_file((fs::path(out_dir) / "demand.svg").string(),
               render_demand_svg(curve, title));
    manifest.outputs.push_back("demand.svg");
  }

  std::ostringstream manifest_text;
  write_manifest(manifest, manifest_text);
  write_file((fs::path(out_dir) / "manifest.json").string(),
             manifest_text.str());

  std::cout << "peak " << format_double(curve.peak_kw) << " kW (";
  char mw[32];
  std::snprintf(mw, sizeof mw, "%.4g", curve.peak_kw / 1000.0);
  std::cout << mw << " MW) at slot";
  if (curve.peak_slots.size() > 1) std::cout << 's';
  for (const int slot : curve.peak_slots) std::cout << ' ' << slot;
  std::cout << "\nwrote " << csv_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"electric-vessel charging demand from historical port calls"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);
  app.fallthrough();

  FilterFlags flags;
  app.add_option("--window-start", flags.window_start,
                 "filter window start date (inclusive)")
      ->capture_default_str();
  app.add_option("--window-end", flags.window_end,
                 "filter window end date (inclusive)")
      ->capture_default_str();
  app.add_option("--max-length", flags.max_length,
                 "keep vessels strictly shorter than this (m)")
      ->capture_default_str();
  app.add_option("--min-freq", flags.min_freq,
                 "keep classes with at least this many calls")
      ->capture_default_str();

  auto* synth = app.add_subcommand("synth", "write a synthetic port-call CSV");
  std::uint64_t seed = 42;
  std::uint32_t filler = default_synth_spec().filler;
  std::string synth_out;
  synth->add_option("--seed", seed, "generator seed")->capture_default_str();
  synth->add_option("--filler", filler, "number of filler calls the filters remove")
      ->capture_default_str();
  synth->add_option("-o,--output", synth_out, "output CSV path")->required();

  auto* summary = app.add_subcommand("summary", "ingestion and filter summary");
  std::string summary_in;
  summary->add_option("-i,--input", summary_in, "port-call CSV")->required();

  auto* profile = app.add_subcommand("profile", "export a class arrival profile");
  std::string profile_in, profile_class, profile_out;
  std::string profile_aggregation = "alldays";
  bool allow_empty = false;
  profile->add_option("-i,--input", profile_in, "port-call CSV")->required();
  profile->add_option("--class", profile_class, "vessel class label")->required();
  profile->add_option("--aggregation", profile_aggregation,
                      "alldays or mon..sun")
      ->capture_default_str();
  profile->add_option("-o,--output", profile_out, "profile CSV path")->required();
  profile->add_flag("--allow-empty", allow_empty,
                    "permit a class with zero calls");

  auto* demand = app.add_subcommand("demand", "run a charging demand scenario");
  std::string demand_in, demand_scenario, demand_out;
  bool demand_svg = false;
  demand->add_option("-i,--input", demand_in, "port-call CSV")->required();
  demand->add_option("-s,--scenario", demand_scenario, "scenario file")->required();
  demand->add_option("-O,--out-dir", demand_out, "output directory")->required();
  demand->add_flag("--svg", demand_svg, "also render demand.svg");

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) return cmd_synth(seed, filler, synth_out, flags);
    if (summary->parsed()) return cmd_summary(summary_in, flags);
    if (profile->parsed()) {
      return cmd_profile(profile_in, profile_class, profile_aggregation,
                         profile_out, allow_empty, flags);
    }
    if (demand->parsed()) {
      return cmd_demand(demand_in, demand_scenario, demand_out, demand_svg,
                        flags);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
