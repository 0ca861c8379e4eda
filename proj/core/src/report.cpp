#include "portload/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "portload/numeric.hpp"
#include "portload/version.hpp"

namespace portload {

void write_demand_csv(const DemandCurve& curve, std::ostream& out) {
  out << "hour";
  for (const auto& [label, values] : curve.per_class) out << ',' << label;
  out << ",total_kw\n";
  for (int h = 0; h < 24; ++h) {
    out << h;
    for (const auto& [label, values] : curve.per_class) {
      out << ',' << format_double(values[h]);
    }
    out << ',' << format_double(curve.total[h]) << '\n';
  }
}

void write_frequency_table(const TypeFrequencyTable& table, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& row : table) width = std::max(width, row.vessel_class.size());
  for (const auto& row : table) {
    out << row.vessel_class
        << std::string(width - row.vessel_class.size() + 2, ' ') << row.count
        << '\n';
  }
}

namespace {

constexpr const char* svg_palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                       "#d62728", "#9467bd", "#8c564b",
                                       "#e377c2", "#7f7f7f"};

// y-axis step of 1/2/5 * 10^k close to raw
double nice_step(double raw) {
  if (!(raw > 0.0)) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double unit = raw / mag;
  if (unit < 1.5) return mag;
  if (unit < 3.5) return 2.0 * mag;
  if (unit < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

std::string fmt(double v) {
  // cosmetic rounding for coordinates and tick labels
  std::ostringstream ss;
  ss << std::fixed;
  ss.precision(2);
  ss << v;
  auto s = ss.str();
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string render_demand_svg(const DemandCurve& curve,
                              std::string_view title) {
  const double width = 960, height = 560;
  const double left = 70, right = 180, top = 50, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  const double y_step = nice_step(std::max(curve.peak_kw, 1e-9) / 5.0);
  const double y_max = std::max(y_step * std::ceil(std::max(curve.peak_kw, 1e-9) / y_step),
                                y_step);
  const auto x_of = [&](double hour) { return left + plot_w * hour / 24.0; };
  const auto y_of = [&](double kw) {
    return top + plot_h * (1.0 - kw / y_max);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << left << "\" y=\"28\" font-family=\"sans-serif\" "
         "font-size=\"16\" font-weight=\"bold\">"
      << title << "</text>\n";

  // gridlines + y labels
  for (double y = 0.0; y <= y_max + y_step / 2.0; y += y_step) {
    svg << "<line x1=\"" << left << "\" y1=\"" << fmt(y_of(y)) << "\" x2=\""
        << left + plot_w << "\" y2=\"" << fmt(y_of(y))
        << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << fmt(y_of(y) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"end\">"
        << fmt(y) << "</text>\n";
  }
  // x ticks every 2 hours
  for (int h = 0; h <= 24; h += 2) {
    svg << "<line x1=\"" << fmt(x_of(h)) << "\" y1=\"" << top + plot_h
        << "\" x2=\"" << fmt(x_of(h)) << "\" y2=\"" << top + plot_h + 5
        << "\" stroke=\"black\"/>\n";
    if (h < 24) {
      svg << "<text x=\"" << fmt(x_of(h)) << "\" y=\"" << top + plot_h + 18
          << "\" font-family=\"sans-serif\" font-size=\"11\" "
             "text-anchor=\"middle\">"
          << h << "</text>\n";
    }
  }
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
      << left + plot_w << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 12
      << "\" font-family=\"sans-serif\" font-size=\"12\" "
         "text-anchor=\"middle\">hour of day (UTC)</text>\n";
  svg << "<text x=\"18\" y=\"" << top + plot_h / 2
      << "\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 18 "
      << top + plot_h / 2 << ")\" text-anchor=\"middle\">average demand "
         "(kW)</text>\n";

  // step curves: one horizontal segment per hour slot
  const auto step_points = [&](const std::array<double, 24>& values) {
    std::ostringstream pts;
    for (int h = 0; h < 24; ++h) {
      pts << fmt(x_of(h)) << ',' << fmt(y_of(values[h])) << ' '
          << fmt(x_of(h + 1)) << ',' << fmt(y_of(values[h]));
      if (h != 23) pts << ' ';
    }
    return pts.str();
  };

  std::size_t color = 0;
  double legend_y = top + 10;
  for (const auto& [label, values] : curve.per_class) {
    const char* stroke = svg_palette[color++ % std::size(svg_palette)];
    svg << "<polyline fill=\"none\" stroke=\"" << stroke
        << "\" stroke-width=\"1.5\" points=\"" << step_points(values)
        << "\"/>\n";
    svg << "<rect x=\"" << left + plot_w + 14 << "\" y=\"" << legend_y - 9
        << "\" width=\"12\" height=\"12\" fill=\"" << stroke << "\"/>\n";
    svg << "<text x=\"" << left + plot_w + 31 << "\" y=\"" << legend_y + 1
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << label
        << "</text>\n";
    legend_y += 18;
  }
  svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2.5\" "
         "points=\""
      << step_points(curve.total) << "\"/>\n";
  svg << "<rect x=\"" << left + plot_w + 14 << "\" y=\"" << legend_y - 9
      << "\" width=\"12\" height=\"12\" fill=\"black\"/>\n";
  svg << "<text x=\"" << left + plot_w + 31 << "\" y=\"" << legend_y + 1
      << "\" font-family=\"sans-serif\" font-size=\"11\">total</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

void write_manifest(const RunManifest& manifest, std::ostream& out) {
  nlohmann::json j;
  j["tool"] = "portload";
  j["version"] = manifest.version.empty() ? std::string(version)
                                          : manifest.version;
  j["input"]["path"] = manifest.input_path;
  j["input"]["checksum"] = manifest.input_checksum;
  j["filter"]["window_start"] = format_date(manifest.filter.window.first);
  j["filter"]["window_end"] = format_date(manifest.filter.window.last);
  j["filter"]["max_length_m"] = manifest.filter.max_length_m;
  j["filter"]["min_type_frequency"] = manifest.filter.min_type_frequency;
  j["scenario"] = manifest.scenario_path;
  j["aggregation"] = manifest.aggregation;
  j["output_dir"] = manifest.output_dir;
  j["outputs"] = manifest.outputs;
  out << j.dump(2) << '\n';
}

}  // namespace portload
