#include "pzeros/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <new>

#include "CLI11.hpp"
#include "json.hpp"
#include "pzeros/config.hpp"
#include "pzeros/errors.hpp"
#include "pzeros/parallel.hpp"

namespace pzeros {

namespace {

struct FlagSpec {
  const char* name;
  const char* key;
  const char* help;
};

const FlagSpec kFlags[] = {
    {"--family", "family.kind", "all-parts, odd, residue, quadratic-units or explicit"},
    {"--a", "family.a", "residue class a"},
    {"--p", "family.p", "modulus p"},
    {"--parts", "family.parts", "comma-separated allowed parts for the explicit family"},
    {"--bits", "precision.bits", "working precision in bits"},
    {"--tol", "precision.tol", "absolute tolerance"},
    {"--boundary-tol", "precision.boundary_tol", "margin below which two phases tie"},
    {"--resolution", "grid.resolution", "phase-map samples per polar axis"},
    {"--max-resolution", "grid.max_resolution", "upper limit for --resolution"},
    {"--n", "run.n", "weight n of F_n"},
    {"--max-n", "run.max_n", "largest weight used by verify"},
    {"--weights", "run.weights", "comma-separated increasing weights for asymptotics"},
    {"--points", "run.points", "asymptotics points as re,im;re,im"},
    {"--threads", "run.threads", "worker threads (default: ATTRACTOR_THREADS or 1)"},
    {"--seed", "run.seed", "seed for sampled checks"},
    {"--pair", "trace.pair", "candidate pair such as (1,1)|(1,2)"},
    {"--t-lo", "trace.t_lo", "lower end of the seed bracket on the unit circle"},
    {"--t-hi", "trace.t_hi", "upper end of the seed bracket on the unit circle"},
    {"--function", "dilog.function", "dilog, clausen, root-dilog or catalan"},
    {"--re", "dilog.re", "real part of the argument"},
    {"--im", "dilog.im", "imaginary part of the argument"},
    {"--t", "dilog.t", "angle for clausen"},
    {"--k", "dilog.k", "index k for root-dilog"},
    {"--out-dir", "output.dir", "directory for artifacts with default names"},
    {"--format", "output.format", "csv or json"},
    {"--digits", "output.digits", "significant digits for multiprecision values"},
};

struct Artifact {
  std::string payload;
  std::string name;  // default file stem
  int exit_code = kExitOk;
};

CurvePair parse_pair(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  long h1 = 0, k1 = 0, h2 = 0, k2 = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "(%ld,%ld)|(%ld,%ld)%c", &h1, &k1, &h2, &k2, &tail) != 4)
    throw ValidationError("pair must look like (h,k)|(h,k), got '" + text + "'");
  if (k1 < 1 || k2 < 1 || h1 < 1 || h2 < 1) throw ValidationError("pair indices must be positive");
  return {{h1, k1}, {h2, k2}};
}

bool same_pair(const CurvePair& a, const CurvePair& b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

Artifact gen_poly(const RunConfig& c) {
  const auto seq = c.family();
  std::vector<PartitionPolynomial> polys;
  if (c.through) polys = generate(seq, c.n);
  else polys.push_back(generate_one(seq, c.n));
  return {c.format == Format::Csv ? coefficients_csv(polys) : coefficients_json(seq, polys), "coefficients"};
}

Artifact roots(const RunConfig& c) {
  const auto seq = c.family();
  const RootSet rs = find_roots(generate_one(seq, c.n), c.policy());
  return {c.format == Format::Csv ? roots_csv(rs, c.digits) : roots_json(seq, rs, c.digits), "roots"};
}

Artifact phase_map(const RunConfig& c) {
  const PhaseGrid g = phase_grid(c.family(), c.resolution, c.boundary_tol, c.policy(), c.max_resolution);
  return {c.format == Format::Csv ? phase_grid_csv(g) : phase_grid_json(g), "phase_map"};
}

Artifact trace_curves(const RunConfig& c) {
  const auto seq = c.family();
  std::vector<CurvePolyline> curves;
  if (c.trace_t_lo) {
    const CurvePair pair = parse_pair(c.trace_pair);
    const BigComplex seed = seed_on_circle(seq, pair, *c.trace_t_lo, *c.trace_t_hi, c.policy());
    curves.push_back(trace(seq, seed, pair, {}, c.policy()));
  } else {
    const AttractorSet A = attractor_set(seq, c.policy());
    if (c.trace_pair.empty()) {
      curves = A.curves;
    } else {
      const CurvePair pair = parse_pair(c.trace_pair);
      for (const auto& cv : A.curves)
        if (same_pair(cv.pair, pair)) curves.push_back(cv);
      if (curves.empty())
        throw ValidationError("no boundary curve of " + seq.name() + " for pair " + c.trace_pair +
                              "; give --t-lo and --t-hi to trace from a seed bracket");
    }
  }
  return {c.format == Format::Csv ? curves_csv(curves) : curves_json(seq, curves), "curves"};
}

Artifact attractor(const RunConfig& c) {
  const AttractorSet A = attractor_set(c.family(), c.policy());
  return {c.format == Format::Csv ? attractor_csv(A) : attractor_json(A), "attractor"};
}

Artifact verify(const RunConfig& c, std::ostream& err) {
  const auto seq = c.family();
  const auto groups = verify_family(seq, c.max_n, c.seed);
  std::size_t total = 0, violations = 0;
  for (const auto& g : groups) {
    total += g.checks.size();
    violations += g.violations();
    for (const auto& ch : g.checks)
      if (ch.gating && !ch.passed) err << "violation: [" << g.id << "] " << ch.name << ": " << ch.detail << "\n";
  }
  err << "verify " << seq.name() << " max_n=" << c.max_n << ": " << total << " checks, " << violations
      << " violations\n";
  Artifact a{c.format == Format::Csv ? report_csv(groups) : report_json(seq, c.max_n, groups), "verify_report"};
  a.exit_code = verify_exit_code(groups);
  return a;
}

Artifact asymptotics(const RunConfig& c) {
  const auto seq = c.family();
  const auto rows = asymptotic_report(seq, c.points, c.weights, c.policy());
  return {c.format == Format::Csv ? asymptotics_csv(rows) : asymptotics_json(seq, rows), "asymptotics"};
}

Artifact special_function(const RunConfig& c) {
  const PrecisionPolicy pol = c.policy();
  const BigComplex z(c.dilog_re, c.dilog_im, c.bits);
  BigComplex value(c.bits);
  if (c.dilog_function == "dilog") {
    value = dilog(z, pol);
  } else if (c.dilog_function == "clausen") {
    value = BigComplex(clausen2(BigFloat::parse(c.dilog_t, c.bits), pol));
  } else if (c.dilog_function == "root-dilog") {
    value = BigComplex(root_dilog(c.dilog_k, z, pol));
  } else {
    value = BigComplex(catalan(pol));
  }
  const std::string re = value.re.str(c.digits), im = value.im.str(c.digits);
  if (c.format == Format::Csv) {
    std::string s = "function,re,im,t,k,value_re,value_im\n";
    s += c.dilog_function + "," + format_shortest(c.dilog_re) + "," + format_shortest(c.dilog_im) + "," + c.dilog_t +
         "," + std::to_string(c.dilog_k) + "," + re + "," + im + "\n";
    return {s, "dilog"};
  }
  nlohmann::ordered_json j{{"function", c.dilog_function}, {"precision_bits", c.bits}, {"digits", c.digits}};
  if (c.dilog_function == "clausen") j["t"] = c.dilog_t;
  if (c.dilog_function == "dilog" || c.dilog_function == "root-dilog")
    j["z"] = nlohmann::ordered_json::array({c.dilog_re, c.dilog_im});
  if (c.dilog_function == "root-dilog") j["k"] = c.dilog_k;
  j["value"] = {{"re", re}, {"im", im}};
  return {j.dump(2) + "\n", "dilog"};
}

void write_artifact(const Artifact& a, const RunConfig& c, const std::string& out_path, std::ostream& out) {
  std::string path = out_path;
  if (path.empty() && !c.output_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(c.output_dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + c.output_dir + "': " + ec.message());
    path = (std::filesystem::path(c.output_dir) / (a.name + "." + to_string(c.format))).string();
  }
  if (path.empty()) {
    out << a.payload;
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ValidationError("cannot open '" + path + "' for writing");
  f << a.payload;
  if (!f.flush()) throw ValidationError("failed writing '" + path + "'");
}

}  // namespace

int verify_exit_code(const std::vector<CheckGroup>& groups) {
  for (const auto& g : groups)
    if (!g.passed()) return kExitViolation;
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of partition polynomials, their phase functions and attractors", "pzeros"};
  app.require_subcommand(1, 1);
  std::string config_path, out_path;
  app.add_option("--config", config_path, "config file with [section] key = value lines");
  app.add_option("--out", out_path, "output file; format follows the .csv/.json extension unless --format is given");
  std::vector<std::string> values(std::size(kFlags));
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < std::size(kFlags); ++i)
    options.push_back(app.add_option(kFlags[i].name, values[i], kFlags[i].help));
  bool through = false;
  app.add_flag("--through", through, "gen-poly: write F_1 .. F_n");

  const std::pair<const char*, const char*> subs[] = {
      {"gen-poly", "exact coefficients of F_n"},
      {"roots", "all zeros of F_n"},
      {"phase-map", "winning phase on a polar grid"},
      {"trace", "phase-boundary curves"},
      {"attractor", "assembled zero attractor"},
      {"verify", "invariant suite; exit 3 on any violation"},
      {"asymptotics", "leading-order estimate against exact values"},
      {"dilog", "single special-function evaluation"},
  };
  for (const auto& [name, help] : subs) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  RunConfig cfg;
  try {
    if (auto t = threads_from_environment()) cfg.threads = *t;
    if (!config_path.empty()) cfg.load_file(config_path);
    for (std::size_t i = 0; i < options.size(); ++i)
      if (options[i]->count() > 0) cfg.set(kFlags[i].key, values[i]);
    if (through) cfg.through = true;
    if (!out_path.empty() && !cfg.format_set) {
      const std::string ext = std::filesystem::path(out_path).extension().string();
      if (ext == ".csv") cfg.format = Format::Csv;
      else if (ext == ".json") cfg.format = Format::Json;
    }
    cfg.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  set_thread_count(cfg.threads);

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    Artifact a;
    if (sub == "gen-poly") a = gen_poly(cfg);
    else if (sub == "roots") a = roots(cfg);
    else if (sub == "phase-map") a = phase_map(cfg);
    else if (sub == "trace") a = trace_curves(cfg);
    else if (sub == "attractor") a = attractor(cfg);
    else if (sub == "verify") a = verify(cfg, err);
    else if (sub == "asymptotics") a = asymptotics(cfg);
    else a = special_function(cfg);
    write_artifact(a, cfg, out_path, out);
    return a.exit_code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitComputation;
  }
}

}  // namespace pzeros
