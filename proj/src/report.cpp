// Copyright 2026 The pecsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pecsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pecsim {

namespace {

std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? g12(*v) : std::string(); }

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_csv(const TimeSeries& series) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : series.rows) {
    out += std::to_string(r.step) + ',' + g12(r.time) + ',' + g12(r.ideal) + ',' + opt(r.reference) + ',' +
           opt(r.mc_mean) + ',' + opt(r.mc_stderr) + ',' + g12(r.fidelity) + '\n';
  }
  return out;
}

std::string format_svg(const TimeSeries& series, const std::string& title) {
  constexpr double W = 640, H = 400, L = 60, R = 20, T = 40, B = 50;
  double tmax = 0.0, ymin = 0.0, ymax = 1.0;
  for (const auto& r : series.rows) {
    tmax = std::max(tmax, r.time);
    for (const auto& v : {std::optional<double>(r.ideal), r.reference}) {
      if (!v) continue;
      ymin = std::min(ymin, *v);
      ymax = std::max(ymax, *v);
    }
    if (r.mc_mean) {
      const double e = r.mc_stderr.value_or(0.0);
      ymin = std::min(ymin, *r.mc_mean - e);
      ymax = std::max(ymax, *r.mc_mean + e);
    }
  }
  if (tmax <= 0.0) tmax = 1.0;
  auto px = [&](double t) { return L + (W - L - R) * t / tmax; };
  auto py = [&](double y) { return H - B - (H - T - B) * (y - ymin) / (ymax - ymin); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">" << escape_xml(title)
    << "</text>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = ymin + (ymax - ymin) * i / 4.0;
    const double t = tmax * i / 4.0;
    s << "<text x=\"" << L - 6 << "\" y=\"" << f2(py(y) + 4) << "\" text-anchor=\"end\" font-size=\"11\">" << f2(y)
      << "</text>\n";
    s << "<text x=\"" << f2(px(t)) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
      << f2(t) << "</text>\n";
  }
  s << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">t</text>\n";
  s << "<text x=\"16\" y=\"" << H / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 " << H / 2
    << ")\" text-anchor=\"middle\">&lt;1|rho|1&gt;</text>\n";

  auto polyline = [&](auto value, const char* color, const char* dash) {
    std::string pts;
    for (const auto& r : series.rows) {
      const std::optional<double> v = value(r);
      if (!v) continue;
      pts += f2(px(r.time)) + "," + f2(py(*v)) + " ";
    }
    if (pts.empty()) return;
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash << " points=\"" << pts
      << "\"/>\n";
  };
  polyline([](const TimeSeriesRow& r) { return std::optional<double>(r.ideal); }, "darkorange", " stroke-dasharray=\"6,3\"");
  polyline([](const TimeSeriesRow& r) { return r.reference; }, "green", " stroke-dasharray=\"2,3\"");
  for (const auto& r : series.rows) {
    if (!r.mc_mean) continue;
    const double e = r.mc_stderr.value_or(0.0);
    s << "<line x1=\"" << f2(px(r.time)) << "\" y1=\"" << f2(py(*r.mc_mean - e)) << "\" x2=\"" << f2(px(r.time))
      << "\" y2=\"" << f2(py(*r.mc_mean + e)) << "\" stroke=\"steelblue\"/>\n";
    s << "<circle cx=\"" << f2(px(r.time)) << "\" cy=\"" << f2(py(*r.mc_mean)) << "\" r=\"2.5\" fill=\"steelblue\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["artifact_version"] = artifact_version;
  j["seed"] = seed;
  j["samples"] = samples;
  j["wall_clock_seconds"] = wall_clock_seconds;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["config"] = e.config_text;
    je["outputs"] = e.outputs;
    je["warnings"] = e.warnings;
    j["entries"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace pecsim
