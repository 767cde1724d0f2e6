#include "trtlb/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace trtlb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double plain_number(const std::string& text, bool* ok) {
  const std::string t = trim(text);
  if (t.empty()) {
    *ok = false;
    return 0.0;
  }
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  *ok = end == t.c_str() + t.size();
  return v;
}

}  // namespace

double KeyValueConfig::parse_number(const std::string& text, bool* ok) {
  const std::string t = trim(text);
  const std::size_t slash = t.find('/');
  if (slash != std::string::npos) {
    bool okn = false, okd = false;
    const double num = plain_number(t.substr(0, slash), &okn);
    const double den = plain_number(t.substr(slash + 1), &okd);
    *ok = okn && okd && den != 0.0;
    return *ok ? num / den : 0.0;
  }
  return plain_number(t, ok);
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path, "", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

KeyValueConfig KeyValueConfig::parse_string(const std::string& text,
                                            const std::string& origin) {
  KeyValueConfig cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                            ": expected key = value",
                        "", lineno);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key",
                        "", lineno);
    for (char c : key) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' &&
          c != '-')
        throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": invalid character in key '" + key + "'",
                          key, lineno);
    }
    if (cfg.entries_.count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                            ": duplicate key '" + key + "' (first at line " +
                            std::to_string(cfg.entries_[key].line) + ")",
                        key, lineno);
    cfg.entries_[key] = Entry{value, lineno, false};
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it != entries_.end()) it->second.read = true;
  return it != entries_.end();
}

int KeyValueConfig::line_of(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second.line;
}

const KeyValueConfig::Entry& KeyValueConfig::fetch(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end())
    throw ConfigError(origin_ + ": missing required key '" + key + "'", key, 0);
  it->second.read = true;
  return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key) const {
  return fetch(key).value;
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       const std::string& fallback) const {
  return has(key) ? fetch(key).value : fallback;
}

double KeyValueConfig::get_number(const std::string& key) const {
  const Entry& e = fetch(key);
  bool ok = false;
  const double v = parse_number(e.value, &ok);
  if (!ok)
    throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key '" + key +
                          "' is not a number: '" + e.value + "'",
                      key, e.line);
  return v;
}

double KeyValueConfig::get_number(const std::string& key, double fallback) const {
  return has(key) ? get_number(key) : fallback;
}

std::int64_t KeyValueConfig::get_integer(const std::string& key) const {
  const Entry& e = fetch(key);
  const double v = get_number(key);
  const double r = std::round(v);
  if (std::fabs(v - r) > 1e-9)
    throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key '" + key +
                          "' is not an integer: '" + e.value + "'",
                      key, e.line);
  return static_cast<std::int64_t>(r);
}

std::int64_t KeyValueConfig::get_integer(const std::string& key,
                                         std::int64_t fallback) const {
  return has(key) ? get_integer(key) : fallback;
}

bool KeyValueConfig::get_flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const Entry& e = fetch(key);
  std::string v = e.value;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key '" + key +
                        "' is not a flag: '" + e.value + "'",
                    key, e.line);
}

std::vector<double> KeyValueConfig::get_number_list(const std::string& key) const {
  const Entry& e = fetch(key);
  std::vector<double> out;
  for (const std::string& item : split(e.value, ',')) {
    bool ok = false;
    const double v = parse_number(item, &ok);
    if (!ok)
      throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key '" +
                            key + "' has a non-numeric item: '" + item + "'",
                        key, e.line);
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> KeyValueConfig::get_integer_list(
    const std::string& key) const {
  const Entry& e = fetch(key);
  std::vector<std::int64_t> out;
  for (double v : get_number_list(key)) {
    const double r = std::round(v);
    if (std::fabs(v - r) > 1e-9)
      throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key '" +
                            key + "' has a non-integer item",
                        key, e.line);
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

std::vector<std::string> KeyValueConfig::get_string_list(
    const std::string& key) const {
  return split(fetch(key).value, ',');
}

std::vector<std::string> KeyValueConfig::unread_keys() const {
  std::vector<std::string> out;
  for (const auto& [key, entry] : entries_)
    if (!entry.read) out.push_back(key);
  return out;
}

RelaxChoice parse_relax_token(const std::string& token) {
  const std::string t = trim(token);
  const std::size_t colon = t.find(':');
  if (colon == std::string::npos)
    throw ConfigError("relaxation token '" + t +
                          "' must look like bgk:W, magic:WA or pair:WS:WA",
                      "", 0);
  const std::string kind = t.substr(0, colon);
  const std::string rest = t.substr(colon + 1);
  bool ok = false;
  RelaxChoice choice;
  if (kind == "bgk") {
    const double w = KeyValueConfig::parse_number(rest, &ok);
    if (!ok) throw ConfigError("bad number in relaxation token '" + t + "'", "", 0);
    choice.pair = make_bgk(w);
  } else if (kind == "magic") {
    const double wa = KeyValueConfig::parse_number(rest, &ok);
    if (!ok) throw ConfigError("bad number in relaxation token '" + t + "'", "", 0);
    choice.pair = make_magic_pair(wa);
  } else if (kind == "pair") {
    const std::size_t second = rest.find(':');
    if (second == std::string::npos)
      throw ConfigError("pair token '" + t + "' needs two numbers", "", 0);
    bool ok2 = false;
    choice.pair.omega_s = KeyValueConfig::parse_number(rest.substr(0, second), &ok);
    choice.pair.omega_a =
        KeyValueConfig::parse_number(rest.substr(second + 1), &ok2);
    if (!ok || !ok2)
      throw ConfigError("bad number in relaxation token '" + t + "'", "", 0);
  } else {
    throw ConfigError("unknown relaxation kind '" + kind + "' in token '" + t +
                          "'",
                      "", 0);
  }
  choice.label = t;
  return choice;
}

namespace {

void check_flux_normalization(const FluxModel& flux, double m,
                              const std::string& origin) {
  if (flux_origin_residual(flux) > 1e-14)
    throw ConfigError(origin + ": flux components must vanish at u = 0", "flux.name",
                      0);
  if (flux_derivative_residual(flux, -std::max(m, 1.0), std::max(m, 1.0), 100,
                               0x5eed5eedULL) > 1e-6)
    throw ConfigError(origin + ": flux derivatives disagree with the components",
                      "flux.name", 0);
}

}  // namespace

InitialDatum datum_by_name(const std::string& name, int grid_d) {
  InitialDatum datum;
  int datum_d = 1;
  if (name == "indicator") {
    datum = make_indicator_datum();
  } else if (name == "hat") {
    datum = make_hat_datum();
  } else if (name == "indicator-double") {
    datum = make_double_indicator_datum();
  } else if (name == "indicator-radial") {
    datum = make_radial_indicator_datum();
    datum_d = 2;
  } else {
    throw ConfigError("unknown datum name '" + name + "'", "datum.name", 0);
  }
  if (datum_d != grid_d)
    throw ConfigError("datum '" + name + "' does not fit dimension " +
                          std::to_string(grid_d),
                      "datum.name", 0);
  return datum;
}

ExperimentConfig expand_config(const KeyValueConfig& raw) {
  ExperimentConfig cfg;
  const std::string origin = raw.origin();

  // Scheme.
  cfg.scheme_preset = raw.get_string("scheme.preset", "d1q3");
  const double lambda = raw.get_number("scheme.lambda", 2.0);
  if (cfg.scheme_preset == "d1q3") {
    cfg.eps2 = raw.get_number("scheme.eps2", 12.0 / 25.0);
    cfg.eps4 = 0.0;
    cfg.scheme = make_d1q3(cfg.eps2, lambda);
    cfg.grid_d = 1;
  } else if (cfg.scheme_preset == "d2q5") {
    if (!raw.has("scheme.eps2"))
      throw ConfigError(origin + ": scheme.eps2 is required for the d2q5 preset",
                        "scheme.eps2", 0);
    cfg.eps2 = raw.get_number("scheme.eps2");
    cfg.eps4 = raw.get_number("scheme.eps4", cfg.eps2);
    cfg.scheme = make_d2q5(cfg.eps2, cfg.eps4, lambda);
    cfg.grid_d = 2;
  } else {
    throw ConfigError(origin + ": unknown scheme.preset '" + cfg.scheme_preset +
                          "' (expected d1q3 or d2q5)",
                      "scheme.preset", raw.line_of("scheme.preset"));
  }
  {
    const std::vector<SchemeViolation> violations = validate(cfg.scheme);
    if (!violations.empty())
      throw ConfigError(origin + ": invalid scheme: " + violations[0].what,
                        "scheme.preset", 0);
  }

  // Flux.
  const std::string flux_name = raw.get_string("flux.name", "burgers");
  if (flux_name == "burgers") {
    cfg.flux = make_burgers_flux();
  } else if (flux_name == "rotated-burgers") {
    cfg.flux_theta = raw.get_number("flux.theta", std::atan(1.0));
    cfg.flux = make_rotated_burgers_flux(cfg.flux_theta);
  } else if (flux_name == "advection") {
    cfg.flux_speed = raw.get_number_list("flux.speed");
    cfg.flux = make_advection_flux(cfg.flux_speed);
  } else {
    throw ConfigError(origin + ": unknown flux.name '" + flux_name + "'",
                      "flux.name", raw.line_of("flux.name"));
  }
  if (cfg.flux.d != cfg.scheme.d)
    throw ConfigError(origin + ": flux dimension " + std::to_string(cfg.flux.d) +
                          " does not match the scheme dimension " +
                          std::to_string(cfg.scheme.d),
                      "flux.name", 0);

  // Datum.
  cfg.datum_name = raw.get_string("datum.name", "indicator");
  if (cfg.datum_name == "constant") {
    cfg.datum = make_constant_datum(raw.get_number("datum.value"), cfg.grid_d);
  } else {
    try {
      cfg.datum = datum_by_name(cfg.datum_name, cfg.grid_d);
    } catch (const ConfigError& err) {
      throw ConfigError(origin + ": " + err.what(), "datum.name",
                        raw.line_of("datum.name"));
    }
  }
  if (raw.has("datum.list")) {
    cfg.datum_list = raw.get_string_list("datum.list");
    for (const std::string& name : cfg.datum_list) {
      try {
        datum_by_name(name, cfg.grid_d);
      } catch (const ConfigError& err) {
        throw ConfigError(origin + ": " + err.what(), "datum.list",
                          raw.line_of("datum.list"));
      }
    }
  }
  cfg.m = raw.get_number("datum.m", cfg.datum.m);
  if (!(cfg.m >= 0.0))
    throw ConfigError(origin + ": datum.m must be nonnegative", "datum.m",
                      raw.line_of("datum.m"));
  cfg.datum.m = cfg.m;
  check_flux_normalization(cfg.flux, cfg.m, origin);

  // Grid.
  std::vector<double> dom = {-1.0, 1.0};
  if (raw.has("grid.domain")) dom = raw.get_number_list("grid.domain");
  cfg.domain.clear();
  if (static_cast<int>(dom.size()) == 2) {
    for (int a = 0; a < cfg.grid_d; ++a) cfg.domain.push_back({dom[0], dom[1]});
  } else if (static_cast<int>(dom.size()) == 2 * cfg.grid_d) {
    for (int a = 0; a < cfg.grid_d; ++a)
      cfg.domain.push_back({dom[2 * a], dom[2 * a + 1]});
  } else {
    throw ConfigError(origin + ": grid.domain needs 2 or 2*d numbers",
                      "grid.domain", raw.line_of("grid.domain"));
  }
  cfg.n = raw.get_integer("grid.n", 0);
  if (cfg.n < 0 || (raw.has("grid.n") && cfg.n < 1))
    throw ConfigError(origin + ": grid.n must be positive", "grid.n",
                      raw.line_of("grid.n"));
  if (raw.has("grid.n_list")) cfg.n_list = raw.get_integer_list("grid.n_list");
  for (std::int64_t n : cfg.n_list)
    if (n < 1)
      throw ConfigError(origin + ": grid.n_list entries must be positive",
                        "grid.n_list", raw.line_of("grid.n_list"));

  // Relaxation.
  if (raw.has("relax.value") && raw.has("relax.list"))
    throw ConfigError(origin + ": give relax.value or relax.list, not both",
                      "relax.value", raw.line_of("relax.value"));
  if (raw.has("relax.list")) {
    for (const std::string& tok : raw.get_string_list("relax.list"))
      cfg.relax.push_back(parse_relax_token(tok));
  } else if (raw.has("relax.value")) {
    cfg.relax.push_back(parse_relax_token(raw.get_string("relax.value")));
  }
  cfg.scan_line = raw.get_string("relax.line", "");
  if (!cfg.scan_line.empty()) {
    if (cfg.scan_line != "bgk" && cfg.scan_line != "magic")
      throw ConfigError(origin + ": relax.line must be bgk or magic",
                        "relax.line", raw.line_of("relax.line"));
    cfg.scan_from = raw.get_number("relax.from");
    cfg.scan_to = raw.get_number("relax.to");
    cfg.scan_step = raw.get_number("relax.step");
    if (!(cfg.scan_step > 0.0) || cfg.scan_to < cfg.scan_from)
      throw ConfigError(origin + ": relax scan needs from <= to and step > 0",
                        "relax.step", raw.line_of("relax.step"));
  }

  // Run control.
  cfg.T = raw.get_number("run.T", 0.0);
  if (cfg.T < 0.0)
    throw ConfigError(origin + ": run.T must be nonnegative", "run.T",
                      raw.line_of("run.T"));
  cfg.cadence = raw.get_integer("run.cadence", 1);
  if (cfg.cadence < 1)
    throw ConfigError(origin + ": run.cadence must be positive", "run.cadence",
                      raw.line_of("run.cadence"));
  cfg.with_oracle = raw.get_flag("run.oracle", false);
  cfg.oracle_refine = static_cast<int>(raw.get_integer("run.oracle_refine", 32));
  if (cfg.oracle_refine < 1)
    throw ConfigError(origin + ": run.oracle_refine must be positive",
                      "run.oracle_refine", raw.line_of("run.oracle_refine"));
  cfg.oracle_store_stride = raw.get_integer("run.oracle_store_stride", 1);
  if (cfg.oracle_store_stride < 1)
    throw ConfigError(origin + ": run.oracle_store_stride must be positive",
                      "run.oracle_store_stride",
                      raw.line_of("run.oracle_store_stride"));
  cfg.region_resolution =
      static_cast<int>(raw.get_integer("run.region_resolution", 512));
  if (cfg.region_resolution < 1)
    throw ConfigError(origin + ": run.region_resolution must be positive",
                      "run.region_resolution",
                      raw.line_of("run.region_resolution"));
  cfg.average_subsamples =
      static_cast<int>(raw.get_integer("run.average_subsamples", 64));
  if (cfg.average_subsamples < 1)
    throw ConfigError(origin + ": run.average_subsamples must be positive",
                      "run.average_subsamples",
                      raw.line_of("run.average_subsamples"));
  cfg.derivative_samples =
      static_cast<int>(raw.get_integer("run.derivative_samples", 100001));
  if (cfg.derivative_samples < 2)
    throw ConfigError(origin + ": run.derivative_samples must be at least 2",
                      "run.derivative_samples",
                      raw.line_of("run.derivative_samples"));

  // Output.
  cfg.out_dir = raw.get_string("output.dir", "out");
  cfg.write_pgm = raw.get_flag("output.pgm", true);

  const std::vector<std::string> unread = raw.unread_keys();
  if (!unread.empty())
    throw ConfigError(origin + ":" + std::to_string(raw.line_of(unread[0])) +
                          ": unknown key '" + unread[0] + "'",
                      unread[0], raw.line_of(unread[0]));
  return cfg;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string ExperimentConfig::manifest() const {
  std::ostringstream out;
  if (!datum_list.empty()) {
    out << "datum.list = ";
    for (std::size_t i = 0; i < datum_list.size(); ++i)
      out << (i ? "," : "") << datum_list[i];
    out << "\n";
  }
  out << "datum.m = " << num(m) << "\n";
  out << "datum.name = " << datum_name << "\n";
  if (datum_name == "constant") {
    // Constant data carry their value through the bound; reconstruct it.
    out << "datum.value = " << num(datum.pointwise(nullptr)) << "\n";
  }
  out << "flux.name = " << flux.name << "\n";
  if (flux.name == "advection") {
    out << "flux.speed = ";
    for (std::size_t i = 0; i < flux_speed.size(); ++i)
      out << (i ? "," : "") << num(flux_speed[i]);
    out << "\n";
  }
  if (flux.name == "rotated-burgers")
    out << "flux.theta = " << num(flux_theta) << "\n";
  out << "grid.domain = ";
  for (int a = 0; a < grid_d; ++a)
    out << (a ? "," : "") << num(domain[a][0]) << "," << num(domain[a][1]);
  out << "\n";
  if (n > 0) out << "grid.n = " << n << "\n";
  if (!n_list.empty()) {
    out << "grid.n_list = ";
    for (std::size_t i = 0; i < n_list.size(); ++i)
      out << (i ? "," : "") << n_list[i];
    out << "\n";
  }
  out << "output.dir = " << out_dir << "\n";
  out << "output.pgm = " << (write_pgm ? "true" : "false") << "\n";
  if (!scan_line.empty()) {
    out << "relax.from = " << num(scan_from) << "\n";
    out << "relax.line = " << scan_line << "\n";
    out << "relax.step = " << num(scan_step) << "\n";
    out << "relax.to = " << num(scan_to) << "\n";
  }
  if (relax.size() == 1) {
    out << "relax.value = " << relax[0].label << "\n";
  } else if (relax.size() > 1) {
    out << "relax.list = ";
    for (std::size_t i = 0; i < relax.size(); ++i)
      out << (i ? "," : "") << relax[i].label;
    out << "\n";
  }
  out << "run.T = " << num(T) << "\n";
  out << "run.average_subsamples = " << average_subsamples << "\n";
  out << "run.cadence = " << cadence << "\n";
  out << "run.derivative_samples = " << derivative_samples << "\n";
  out << "run.oracle = " << (with_oracle ? "true" : "false") << "\n";
  out << "run.oracle_refine = " << oracle_refine << "\n";
  out << "run.oracle_store_stride = " << oracle_store_stride << "\n";
  out << "run.region_resolution = " << region_resolution << "\n";
  out << "scheme.eps2 = " << num(eps2) << "\n";
  if (scheme_preset == "d2q5") out << "scheme.eps4 = " << num(eps4) << "\n";
  out << "scheme.lambda = " << num(scheme.lambda) << "\n";
  out << "scheme.preset = " << scheme_preset << "\n";
  return out.str();
}

}  // namespace trtlb
