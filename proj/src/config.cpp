#include "pzeros/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pzeros/errors.hpp"

namespace pzeros {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string quoted(std::string_view key) { return "'" + std::string(key) + "'"; }

long parse_long(std::string_view key, std::string_view v) {
  long out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ValidationError(quoted(key) + " expects an integer, got '" + std::string(v) + "'");
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size() || !std::isfinite(out))
    throw ValidationError(quoted(key) + " expects a number, got '" + std::string(v) + "'");
  return out;
}

long parse_positive(std::string_view key, std::string_view v) {
  const long x = parse_long(key, v);
  if (x < 1) throw ValidationError(quoted(key) + " must be positive");
  return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<long> parse_long_list(std::string_view key, std::string_view v) {
  std::vector<long> out;
  for (auto item : split(v, ',')) out.push_back(parse_positive(key, item));
  if (out.empty()) throw ValidationError(quoted(key) + " must not be empty");
  return out;
}

// "re,im; re,im; ..."
std::vector<std::complex<double>> parse_points(std::string_view key, std::string_view v) {
  std::vector<std::complex<double>> out;
  for (auto item : split(v, ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2) throw ValidationError(quoted(key) + " expects points as re,im separated by ';'");
    out.emplace_back(parse_double(key, xy[0]), parse_double(key, xy[1]));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& RunConfig::known_keys() {
  static const std::vector<std::string> keys = {
      "family.kind",      "family.a",         "family.p",       "family.parts",   "precision.bits",
      "precision.tol",    "precision.boundary_tol",             "grid.resolution", "grid.max_resolution",
      "run.n",            "run.max_n",        "run.through",        "run.weights",    "run.points",     "run.threads",
      "run.seed",         "trace.pair",       "trace.t_lo",     "trace.t_hi",     "dilog.function",
      "dilog.re",         "dilog.im",         "dilog.t",        "dilog.k",        "output.dir",
      "output.format",    "output.digits"};
  return keys;
}

void RunConfig::set(std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "family.kind") {
    static const std::vector<std::string> kinds = {"all-parts", "odd", "residue", "quadratic-units", "explicit"};
    std::string k(v);
    if (k == "all") k = "all-parts";
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end())
      throw ValidationError("unknown family '" + k + "' (all-parts, odd, residue, quadratic-units, explicit)");
    family_kind = k;
  } else if (key == "family.a") {
    family_a = parse_positive(key, v);
  } else if (key == "family.p") {
    family_p = parse_positive(key, v);
  } else if (key == "family.parts") {
    family_parts = parse_long_list(key, v);
  } else if (key == "precision.bits") {
    bits = parse_long(key, v);
    if (bits < 53 || bits > 1 << 20) throw ValidationError("'precision.bits' must lie in [53, 1048576]");
  } else if (key == "precision.tol") {
    if (parse_double(key, v) <= 0.0) throw ValidationError("'precision.tol' must be positive");
    tol = std::string(v);
  } else if (key == "precision.boundary_tol") {
    boundary_tol = parse_double(key, v);
    if (boundary_tol <= 0.0) throw ValidationError("'precision.boundary_tol' must be positive");
  } else if (key == "grid.resolution") {
    resolution = static_cast<int>(parse_positive(key, v));
  } else if (key == "grid.max_resolution") {
    max_resolution = static_cast<int>(parse_positive(key, v));
  } else if (key == "run.n") {
    n = parse_positive(key, v);
  } else if (key == "run.max_n") {
    max_n = parse_positive(key, v);
  } else if (key == "run.through") {
    if (v == "true" || v == "1") through = true;
    else if (v == "false" || v == "0") through = false;
    else throw ValidationError("'run.through' expects true or false");
  } else if (key == "run.weights") {
    weights = parse_long_list(key, v);
  } else if (key == "run.points") {
    points = parse_points(key, v);
  } else if (key == "run.threads") {
    const long t = parse_positive(key, v);
    if (t > 1024) throw ValidationError("'run.threads' must be at most 1024");
    threads = static_cast<unsigned>(t);
  } else if (key == "run.seed") {
    const long s = parse_long(key, v);
    if (s < 0 || s > 0xffffffffL) throw ValidationError("'run.seed' must fit in 32 bits");
    seed = static_cast<unsigned>(s);
  } else if (key == "trace.pair") {
    trace_pair = std::string(v);
  } else if (key == "trace.t_lo") {
    trace_t_lo = parse_double(key, v);
  } else if (key == "trace.t_hi") {
    trace_t_hi = parse_double(key, v);
  } else if (key == "dilog.function") {
    if (v != "dilog" && v != "clausen" && v != "root-dilog" && v != "catalan")
      throw ValidationError("'dilog.function' must be dilog, clausen, root-dilog or catalan");
    dilog_function = std::string(v);
  } else if (key == "dilog.re") {
    dilog_re = parse_double(key, v);
  } else if (key == "dilog.im") {
    dilog_im = parse_double(key, v);
  } else if (key == "dilog.t") {
    parse_double(key, v);
    dilog_t = std::string(v);
  } else if (key == "dilog.k") {
    dilog_k = static_cast<int>(parse_positive(key, v));
  } else if (key == "output.dir") {
    output_dir = std::string(v);
  } else if (key == "output.format") {
    format = parse_format(v);
    format_set = true;
  } else if (key == "output.digits") {
    digits = static_cast<int>(parse_positive(key, v));
    if (digits > 10000) throw ValidationError("'output.digits' must be at most 10000");
  } else {
    throw ValidationError("unknown configuration key " + quoted(key));
  }
}

void RunConfig::load_text(std::string_view text, std::string_view source) {
  std::string section;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view line =
        trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(where + "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) throw ValidationError(where + "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ValidationError(where + "expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ValidationError(where + "missing key");
    if (section.empty()) throw ValidationError(where + "key " + quoted(key) + " outside any section");
    try {
      set(section + "." + std::string(key), line.substr(eq + 1));
    } catch (const ValidationError& e) {
      std::string_view msg = e.what();
      constexpr std::string_view prefix = "ValidationError: ";
      if (msg.substr(0, prefix.size()) == prefix) msg.remove_prefix(prefix.size());
      throw ValidationError(where + std::string(msg));
    }
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

void RunConfig::validate() const {
  policy().validate();
  family();
  for (std::size_t i = 1; i < weights.size(); ++i)
    if (weights[i] <= weights[i - 1]) throw ValidationError("'run.weights' must be strictly increasing");
  if (trace_t_lo.has_value() != trace_t_hi.has_value())
    throw ValidationError("'trace.t_lo' and 'trace.t_hi' must be given together");
  if (trace_t_lo && trace_pair.empty()) throw ValidationError("a seed bracket needs 'trace.pair'");
}

ExponentSequence RunConfig::family() const {
  if (family_kind == "all-parts") return ExponentSequence::all_parts();
  if (family_kind == "odd") return ExponentSequence::odd_parts();
  if (family_kind == "residue") return ExponentSequence::residue(family_a, family_p);
  if (family_kind == "quadratic-units") return ExponentSequence::quadratic_units(family_p);
  if (family_parts.empty()) throw ValidationError("the explicit family needs 'family.parts'");
  return ExponentSequence::explicit_parts(family_parts);
}

PrecisionPolicy RunConfig::policy() const { return PrecisionPolicy(bits, BigFloat::parse(tol, bits)); }

std::optional<unsigned> threads_from_environment() {
  const char* env = std::getenv("ATTRACTOR_THREADS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  const std::string_view v = trim(env);
  long t = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), t);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size() || t < 1 || t > 1024)
    throw ValidationError("ATTRACTOR_THREADS must be an integer in [1, 1024], got '" + std::string(env) + "'");
  return static_cast<unsigned>(t);
}

}  // namespace pzeros
