#include "sensnet/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "sensnet/version.hpp"

namespace sensnet {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::ordered_json provenance_json(const std::string& command, const Config& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "sensnet";
  j["version"] = kVersion;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  nlohmann::ordered_json settings = nlohmann::ordered_json::object();
  for (const auto& [k, v] : cfg.entries()) {
    // Keys that cannot change any computed value stay out of the record, so
    // reruns that differ only in them produce identical bytes.
    const bool out_key = k.size() > 4 && k.compare(k.size() - 4, 4, "_out") == 0;
    if (k == "threads" || k == "out" || out_key) continue;
    settings[k] = v;
  }
  j["settings"] = settings;
  return j;
}

void write_json(const nlohmann::ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_json: cannot open " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write_json: write failed for " + path);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("write_csv: row width does not match header");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << fmt17(row[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

void write_svg_subnet(const SubnetGraph& sg, const Window& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_svg_subnet: cannot open " + path);
  const double margin = 1.0;
  const double x0 = w.x_min - margin, y0 = w.y_min - margin;
  const double width = w.x_max - w.x_min + 2 * margin;
  const double height = w.y_max - w.y_min + 2 * margin;
  // Flip y so larger coordinates render upward.
  const auto X = [&](double x) { return x - x0; };
  const auto Y = [&](double y) { return height - (y - y0); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt17(width) << ' '
      << fmt17(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Tile boundaries sit half a side off the tile centres.
  const double side = sg.geom.side;
  if (side > 0.0) {
    const auto line = [&](double ax, double ay, double bx, double by) {
      out << "<line stroke=\"#dddddd\" stroke-width=\"0.03\" x1=\"" << fmt17(X(ax)) << "\" y1=\""
          << fmt17(Y(ay)) << "\" x2=\"" << fmt17(X(bx)) << "\" y2=\"" << fmt17(Y(by)) << "\"/>\n";
    };
    const long long i0 = static_cast<long long>(std::ceil((w.x_min + side / 2) / side));
    for (long long i = i0; i * side - side / 2 <= w.x_max; ++i)
      line(i * side - side / 2, w.y_min, i * side - side / 2, w.y_max);
    const long long j0 = static_cast<long long>(std::ceil((w.y_min + side / 2) / side));
    for (long long j = j0; j * side - side / 2 <= w.y_max; ++j)
      line(w.x_min, j * side - side / 2, w.x_max, j * side - side / 2);
  }
  for (std::size_t ui = 0; ui < sg.members.size(); ++ui) {
    for (int vb : sg.adj[ui]) {
      if (vb <= sg.members[ui]) continue;  // draw each link once
      const int vi = sg.index_of(vb);
      if (vi < 0) continue;
      out << "<polyline fill=\"none\" stroke=\"#3366aa\" stroke-width=\"0.08\" points=\""
          << fmt17(X(sg.pos[ui].x)) << ',' << fmt17(Y(sg.pos[ui].y)) << ' '
          << fmt17(X(sg.pos[static_cast<std::size_t>(vi)].x)) << ','
          << fmt17(Y(sg.pos[static_cast<std::size_t>(vi)].y)) << "\"/>\n";
    }
  }
  for (std::size_t ui = 0; ui < sg.members.size(); ++ui) {
    const bool rep = sg.roles[ui] == Role::Representative || sg.roles[ui] == Role::Both;
    out << "<circle cx=\"" << fmt17(X(sg.pos[ui].x)) << "\" cy=\"" << fmt17(Y(sg.pos[ui].y))
        << "\" r=\"" << (rep ? "0.16" : "0.10") << "\" fill=\"" << (rep ? "#aa3322" : "#222222")
        << "\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write_svg_subnet: write failed for " + path);
}

}  // namespace sensnet
