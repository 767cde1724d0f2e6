// Flat typed key-value experiment configuration.
//
// Syntax: one `key = value` per line, `#` starts a comment, blank lines are
// ignored.  Keys are dotted (scheme.*, flux.*, datum.*, grid.*, relax.*,
// run.*, output.*).  Numeric values accept plain literals and exact fractions
// like 96/73.  Lists are comma separated.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trtlb/datum.hpp"
#include "trtlb/flux.hpp"
#include "trtlb/scheme.hpp"

namespace trtlb {

// Parse or validation failure; carries the offending location.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& msg, const std::string& key_in, int line_in)
      : std::runtime_error(msg), key(key_in), line(line_in) {}
  std::string key;
  int line = 0;  // 0 when the failure is not tied to a source line
};

class KeyValueConfig {
 public:
  [[nodiscard]] static KeyValueConfig parse_file(const std::string& path);
  [[nodiscard]] static KeyValueConfig parse_string(const std::string& text,
                                                   const std::string& origin = "<string>");

  bool has(const std::string& key) const;
  int line_of(const std::string& key) const;
  const std::string& origin() const { return origin_; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_number(const std::string& key) const;
  double get_number(const std::string& key, double fallback) const;
  std::int64_t get_integer(const std::string& key) const;
  std::int64_t get_integer(const std::string& key, std::int64_t fallback) const;
  bool get_flag(const std::string& key, bool fallback) const;
  std::vector<double> get_number_list(const std::string& key) const;
  std::vector<std::int64_t> get_integer_list(const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& key) const;

  // Keys never read by any accessor; used to reject misspelled keys.
  std::vector<std::string> unread_keys() const;

  // Exact fraction-aware numeric conversion, shared with value parsing.
  static double parse_number(const std::string& text, bool* ok);

 private:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool read = false;
  };
  std::map<std::string, Entry> entries_;
  std::string origin_;
  const Entry& fetch(const std::string& key) const;
};

// A single relaxation choice with its config spelling.
struct RelaxChoice {
  RelaxPair pair;
  std::string label;  // canonical token: bgk:..., magic:..., pair:...,...
};

// Parses "bgk:W", "magic:WA" or "pair:WS:WA" (numbers may be fractions).
RelaxChoice parse_relax_token(const std::string& token);

// Named datum factory for indicator, hat, indicator-double and
// indicator-radial; throws ConfigError for other names or a dimension
// mismatch.
InitialDatum datum_by_name(const std::string& name, int grid_d);

// Fully expanded experiment description shared by all drivers.
struct ExperimentConfig {
  SchemeSpec scheme;
  std::string scheme_preset;           // d1q3 or d2q5
  double eps2 = 0.0, eps4 = 0.0;

  FluxModel flux;
  double flux_theta = 0.0;             // rotated-burgers only
  std::vector<double> flux_speed;      // advection only

  InitialDatum datum;
  std::string datum_name;
  std::vector<std::string> datum_list; // extra data for multi-datum studies
  double m = 0.0;                      // data bound used by the analysis

  int grid_d = 1;
  std::vector<std::array<double, 2>> domain;
  std::int64_t n = 0;                  // single-run resolution
  std::vector<std::int64_t> n_list;    // ladder resolutions (convergence, eqdist)

  std::vector<RelaxChoice> relax;      // one or more settings
  std::string scan_line;               // "bgk" or "magic" for parameter scans
  double scan_from = 0.0, scan_to = 0.0, scan_step = 0.0;

  double T = 0.0;
  std::int64_t cadence = 1;
  bool with_oracle = false;            // attach the reference probe in cmd run
  int oracle_refine = 32;
  std::int64_t oracle_store_stride = 1;
  int region_resolution = 512;
  int average_subsamples = 64;
  int derivative_samples = 100001;

  std::string out_dir;
  bool write_pgm = true;

  // Canonical echo of every expanded key; reparsing it reproduces this
  // configuration (and therefore the same manifest bytes).
  std::string manifest() const;
};

// Expands presets and named values, applying defaults and validating the
// scheme; throws ConfigError with key/line information on any failure,
// including unknown keys.
ExperimentConfig expand_config(const KeyValueConfig& raw);

}  // namespace trtlb
