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

#include "pecsim/config.hpp"

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <type_traits>

namespace pecsim {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  const std::string buf(s);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Shortest %g form that parses back to the same double.
std::string fmt17(double v) {
  char buf[40];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

struct RawEntry {
  std::string value;
  int line = 0;
};

// Collected values before they are turned into a ScenarioConfig.
class Assembler {
 public:
  explicit Assembler(std::string source) : source_(std::move(source)) {}

  void set(std::string key, std::string value, int line) {
    if (entries_.count(key) != 0) fail(line, key, "duplicate key (first set on line " + std::to_string(entries_[key].line) + ")");
    entries_[std::move(key)] = {std::move(value), line};
  }

  void apply(ScenarioConfig& cfg) {
    static const char* const known[] = {"hardware", "target", "target_rates", "device_lambda", "device_kappa",
                                        "mitigation", "omega", "beta", "dt", "steps", "samples", "seed", "bias",
                                        "reference"};
    for (const auto& [key, e] : entries_) {
      bool ok = false;
      for (const char* k : known) ok = ok || key == k;
      if (!ok) fail(e.line, key, "unknown key");
    }

    if (auto* e = find("hardware")) cfg.hardware = wrap(*e, "hardware", [&] { return parse_hardware(e->value); });
    if (auto* e = find("mitigation")) cfg.mitigation = wrap(*e, "mitigation", [&] { return parse_mitigation(e->value); });
    if (auto* e = find("reference")) cfg.reference = wrap(*e, "reference", [&] { return parse_reference_kind(e->value); });
    if (auto* e = find("omega")) cfg.omega = number(*e, "omega");
    if (auto* e = find("beta")) cfg.beta = wrap(*e, "beta", [&] { return parse_angle(e->value); });
    if (auto* e = find("dt")) cfg.dt = number(*e, "dt");
    if (auto* e = find("steps")) cfg.steps = static_cast<int>(integer(*e, "steps", 1));
    if (auto* e = find("samples")) cfg.samples = static_cast<std::size_t>(integer(*e, "samples", 0));
    if (auto* e = find("seed")) cfg.seed = static_cast<std::uint64_t>(integer(*e, "seed", 0));
    if (auto* e = find("bias")) {
      if (trim(e->value) == "none") {
        cfg.bias.reset();
      } else {
        cfg.bias = number(*e, "bias");
      }
    }

    const RawEntry* target = find("target");
    const RawEntry* rates = find("target_rates");
    if (target != nullptr) {
      const auto v = trim(target->value);
      if (v == "closed") {
        if (rates != nullptr) fail(rates->line, "target_rates", "given but target = closed");
        cfg.target.reset();
      } else if (v == "open") {
        if (rates == nullptr && !cfg.target) fail(target->line, "target", "open dynamics need target_rates");
      } else {
        fail(target->line, "target", "expected closed or open");
      }
    }
    if (rates != nullptr) {
      const auto r = triple(*rates, "target_rates");
      cfg.target = PauliRates{r[0], r[1], r[2]};
    }

    const RawEntry* lambda = find("device_lambda");
    const RawEntry* kappa = find("device_kappa");
    if (lambda != nullptr && kappa != nullptr) fail(kappa->line, "device_kappa", "conflicts with device_lambda");
    if (lambda != nullptr) {
      const auto l = triple(*lambda, "device_lambda");
      cfg.device = PauliChannelParams{l[0], l[1], l[2]};
    } else if (kappa != nullptr) {
      const auto k = triple(*kappa, "device_kappa");
      cfg.device = PauliRates{k[0], k[1], k[2]};
    } else if (find("hardware") != nullptr) {
      // Switching hardware without restating the noise keeps a zero device of the right kind.
      const bool digital_noise = std::holds_alternative<PauliChannelParams>(cfg.device);
      if (digital_noise != (cfg.hardware == Hardware::digital)) {
        if (cfg.hardware == Hardware::digital) {
          cfg.device = PauliChannelParams{};
        } else {
          cfg.device = PauliRates{};
        }
      }
    }

    const bool digital_noise = std::holds_alternative<PauliChannelParams>(cfg.device);
    if (digital_noise != (cfg.hardware == Hardware::digital)) {
      if (lambda != nullptr) fail(lambda->line, "device_lambda", "analog hardware takes device_kappa");
      if (kappa != nullptr) fail(kappa->line, "device_kappa", "digital hardware takes device_lambda");
      fail(0, "hardware", "device noise does not match the hardware");
    }

    try {
      cfg.validate();
    } catch (const std::invalid_argument& ex) {
      fail(0, "config", ex.what());
    }
  }

 private:
  [[noreturn]] void fail(int line, const std::string& field, const std::string& message) const {
    throw ConfigError(source_, line, field, message);
  }

  const RawEntry* find(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  template <typename F>
  std::invoke_result_t<F&> wrap(const RawEntry& e, const std::string& field, F&& f) const {
    try {
      return f();
    } catch (const std::invalid_argument& ex) {
      fail(e.line, field, ex.what());
    }
  }

  double number(const RawEntry& e, const std::string& field) const {
    const auto v = to_double(e.value);
    if (!v) fail(e.line, field, "expected a number, got '" + e.value + "'");
    return *v;
  }

  long long integer(const RawEntry& e, const std::string& field, long long min) const {
    const std::string s(trim(e.value));
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
      fail(e.line, field, "expected an integer, got '" + e.value + "'");
    }
    if (v < min) fail(e.line, field, "must be >= " + std::to_string(min));
    return v;
  }

  std::array<double, 3> triple(const RawEntry& e, const std::string& field) const {
    std::array<double, 3> out{};
    std::string_view rest = e.value;
    for (int i = 0; i < 3; ++i) {
      const auto comma = rest.find(',');
      const std::string_view item = i < 2 ? rest.substr(0, comma) : rest;
      if ((i < 2 && comma == std::string_view::npos) || (i == 2 && rest.find(',') != std::string_view::npos)) {
        fail(e.line, field, "expected 3 comma-separated numbers, got '" + e.value + "'");
      }
      const auto v = to_double(item);
      if (!v) fail(e.line, field + "[" + std::to_string(i) + "]", "expected a number, got '" + std::string(trim(item)) + "'");
      out[i] = *v;
      if (i < 2) rest = rest.substr(comma + 1);
    }
    return out;
  }

  std::string source_;
  std::map<std::string, RawEntry> entries_;
};

void parse_into(Assembler& a, std::string_view text, const std::string& source) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(source, line_no, std::string(line), "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError(source, line_no, "<empty>", "missing key");
    if (value.empty()) throw ConfigError(source, line_no, key, "missing value");
    a.set(key, value, line_no);
  }
}

}  // namespace

ConfigError::ConfigError(std::string source, int line, std::string field, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + field + ": " +
                         message),
      field_(std::move(field)),
      line_(line) {}

double parse_angle(std::string_view s) {
  s = trim(s);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) {
    const auto v = to_double(s);
    if (!v) throw std::invalid_argument("expected a number or a multiple of pi, got '" + std::string(s) + "'");
    return *v;
  }
  double factor = 1.0;
  std::string_view head = trim(s.substr(0, pi_at));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    const auto v = to_double(head);
    if (!v) throw std::invalid_argument("bad multiplier in '" + std::string(s) + "'");
    factor = *v;
  }
  std::string_view tail = trim(s.substr(pi_at + 2));
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("expected '/divisor' after pi in '" + std::string(s) + "'");
    const auto d = to_double(tail.substr(1));
    if (!d || *d == 0.0) throw std::invalid_argument("bad divisor in '" + std::string(s) + "'");
    factor /= *d;
  }
  return factor * std::numbers::pi;
}

ScenarioConfig parse_config(std::string_view text, const std::string& source) {
  Assembler a(source);
  parse_into(a, text, source);
  ScenarioConfig cfg;
  a.apply(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "file", "cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

void apply_override(ScenarioConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError("--set", 0, std::string(assignment), "expected key=value");
  Assembler a("--set");
  a.set(std::string(trim(assignment.substr(0, eq))), std::string(trim(assignment.substr(eq + 1))), 0);
  a.apply(cfg);
}

std::string format_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  auto triple = [](double a, double b, double c) { return fmt17(a) + ", " + fmt17(b) + ", " + fmt17(c); };
  out << "hardware = " << to_string(cfg.hardware) << '\n';
  if (cfg.target) {
    out << "target = open\n";
    out << "target_rates = " << triple(cfg.target->x, cfg.target->y, cfg.target->z) << '\n';
  } else {
    out << "target = closed\n";
  }
  if (const auto* l = std::get_if<PauliChannelParams>(&cfg.device)) {
    out << "device_lambda = " << triple(l->lx, l->ly, l->lz) << '\n';
  } else {
    const auto& k = std::get<PauliRates>(cfg.device);
    out << "device_kappa = " << triple(k.x, k.y, k.z) << '\n';
  }
  out << "mitigation = " << to_string(cfg.mitigation) << '\n';
  out << "omega = " << fmt17(cfg.omega) << '\n';
  out << "beta = " << fmt17(cfg.beta) << '\n';
  out << "dt = " << fmt17(cfg.dt) << '\n';
  out << "steps = " << cfg.steps << '\n';
  out << "samples = " << cfg.samples << '\n';
  out << "seed = " << cfg.seed << '\n';
  if (cfg.bias) out << "bias = " << fmt17(*cfg.bias) << '\n';
  out << "reference = " << to_string(cfg.reference) << '\n';
  return out.str();
}

}  // namespace pecsim
