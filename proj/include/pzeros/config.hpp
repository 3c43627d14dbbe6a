#pragma once

// Run configuration shared by the config file and the command-line flags.
//
// File format: UTF-8 text, one `key = value` per line under `[section]`
// headers; `#` and `;` start comment lines. Keys are addressed as
// section.key. Every value goes through RunConfig::set, so the file and the
// flags are validated identically; unknown keys are a ValidationError.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pzeros/export.hpp"

namespace pzeros {

struct RunConfig {
  // [family]
  std::string family_kind = "all-parts";  // all-parts | odd | residue | quadratic-units | explicit
  long family_a = 1;
  long family_p = 2;
  std::vector<long> family_parts;
  // [precision]
  Bits bits = kDefaultBits;
  std::string tol = "1e-25";
  double boundary_tol = kDefaultBoundaryTol;
  // [grid]
  int resolution = 100;
  int max_resolution = kMaxGridResolution;
  // [run]
  long n = 100;
  long max_n = 200;
  bool through = false;  // gen-poly writes F_1 .. F_n instead of F_n alone
  std::vector<long> weights = {100, 200, 400};
  std::vector<std::complex<double>> points = {{0.5, 0.0}, std::polar(0.3, M_PI / 8)};
  unsigned threads = 1;
  unsigned seed = 20240611;
  // [trace]
  std::string trace_pair;  // e.g. "(1,1)|(1,2)"; empty traces every attractor curve
  std::optional<double> trace_t_lo;
  std::optional<double> trace_t_hi;
  // [dilog]
  std::string dilog_function = "dilog";  // dilog | clausen | root-dilog | catalan
  double dilog_re = 0.0;
  double dilog_im = 0.0;
  std::string dilog_t = "0";
  int dilog_k = 1;
  // [output]
  std::string output_dir;
  Format format = Format::Json;
  bool format_set = false;
  int digits = 30;

  // Assigns one fully qualified key ("run.n", "output.format", ...).
  void set(std::string_view key, std::string_view value);
  // Parses config-file text; `source` names it in error messages.
  void load_text(std::string_view text, std::string_view source = "config");
  void load_file(const std::string& path);
  // Cross-field checks run once every value is in place.
  void validate() const;

  ExponentSequence family() const;
  PrecisionPolicy policy() const;

  static const std::vector<std::string>& known_keys();
};

// Thread count from ATTRACTOR_THREADS, if set; ValidationError when malformed.
std::optional<unsigned> threads_from_environment();

}  // namespace pzeros
