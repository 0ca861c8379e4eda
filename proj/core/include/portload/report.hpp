#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "portload/ingest.hpp"
#include "portload/scenario.hpp"

namespace portload {

/// demand.csv: header "hour,<class1>,...,total_kw", 24 rows, values printed
/// in shortest round-trip form. Byte-identical for identical curves.
void write_demand_csv(const DemandCurve& curve, std::ostream& out);

/// Step-curve rendering of per-class and total demand over hours 0-23.
/// Informative output only; not covered by byte-exactness guarantees.
std::string render_demand_svg(const DemandCurve& curve,
                              std::string_view title);

/// Aligned "class  count" text table.
void write_frequency_table(const TypeFrequencyTable& table, std::ostream& out);

/// FNV-1a, used to fingerprint input files in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);

/// Everything needed to reproduce a demand run; rerunning with an identical
/// manifest reproduces byte-identical CSV outputs.
struct RunManifest {
  std::string version;
  std::string input_path;
  std::string input_checksum;  // "fnv1a64:<hex>"
  FilterConfig filter;
  std::string scenario_path;
  std::string aggregation;
  std::string output_dir;
  std::vector<std::string> outputs;
};

void write_manifest(const RunManifest& manifest, std::ostream& out);

}  // namespace portload
