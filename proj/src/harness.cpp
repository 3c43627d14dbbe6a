#include "pzeros/harness.hpp"

#include <algorithm>
#include <cmath>

#include "pzeros/errors.hpp"
#include "pzeros/parallel.hpp"

namespace pzeros {

namespace {

using cdouble = std::complex<double>;

double segment_distance(cdouble z, cdouble a, cdouble b) {
  const cdouble ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + ab * t));
}

double polyline_distance(cdouble z, const std::vector<cdouble>& pts) {
  if (pts.empty()) return 1e300;
  if (pts.size() == 1) return std::abs(z - pts[0]);
  double best = 1e300;
  for (std::size_t i = 1; i < pts.size(); ++i) best = std::min(best, segment_distance(z, pts[i - 1], pts[i]));
  return best;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<cdouble> to_double(const std::vector<BigComplex>& points) {
  std::vector<cdouble> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p.re.to_double(), p.im.to_double());
  return out;
}

double point_to_set_distance(cdouble z, const AttractorSet& A) {
  double best = A.circle ? std::abs(std::abs(z) - 1.0) : 1e300;
  for (const auto& c : A.curves) best = std::min(best, polyline_distance(z, c.to_double()));
  for (const auto& s : A.spokes) best = std::min(best, segment_distance(z, s.from, s.to));
  for (const auto& s : A.segments) best = std::min(best, segment_distance(z, s.from, s.to));
  if (best == 1e300) throw EmptySelection("attractor set is empty");
  return best;
}

DistanceProfile directed_distance_profile(const std::vector<cdouble>& points, const AttractorSet& A,
                                          double inner_radius_cut) {
  DistanceProfile out;
  out.total = points.size();
  std::vector<cdouble> sel;
  for (const auto& z : points)
    if (std::abs(z) <= inner_radius_cut) sel.push_back(z);
  if (sel.empty()) throw EmptySelection("no points with |z| <= " + std::to_string(inner_radius_cut));
  // Curves are converted once instead of per query.
  AttractorSet flat;
  flat.circle = A.circle;
  flat.spokes = A.spokes;
  std::vector<std::vector<cdouble>> lines;
  for (const auto& c : A.curves) lines.push_back(c.to_double());
  for (const auto& s : A.segments) lines.push_back({s.from, s.to});
  out.distances.resize(sel.size());
  parallel_for(sel.size(), [&](std::size_t i) {
    double best = flat.circle ? std::abs(std::abs(sel[i]) - 1.0) : 1e300;
    for (const auto& s : flat.spokes) best = std::min(best, segment_distance(sel[i], s.from, s.to));
    for (const auto& l : lines) best = std::min(best, polyline_distance(sel[i], l));
    out.distances[i] = best;
  });
  out.count = sel.size();
  double sum = 0.0;
  for (double d : out.distances) {
    sum += d;
    out.max = std::max(out.max, d);
  }
  out.mean = sum / static_cast<double>(out.count);
  out.median = median_of(out.distances);
  return out;
}

DistanceProfile directed_distance_profile(const RootSet& roots, const AttractorSet& A, double inner_radius_cut) {
  return directed_distance_profile(to_double(roots.roots), A, inner_radius_cut);
}

double spoke_angle_deviation(cdouble z, const AttractorSet& A) {
  if (A.spokes.empty()) throw EmptySelection("attractor has no spokes");
  const double a = std::arg(z);
  double best = 1e300;
  for (const auto& s : A.spokes) {
    const double d = std::remainder(a - std::arg(s.to), 2.0 * M_PI);
    best = std::min(best, std::abs(d));
  }
  return best;
}

std::vector<AsymptoticCheck> asymptotic_report(const ExponentSequence& seq, const std::vector<cdouble>& points,
                                               const std::vector<long>& weights, const PrecisionPolicy& policy) {
  if (weights.empty()) throw ValidationError("asymptotic_report needs at least one weight");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) throw ValidationError("weights must be positive");
    if (i > 0 && weights[i] <= weights[i - 1]) throw ValidationError("weights must be strictly increasing");
  }
  const auto polys = generate(seq, weights.back());
  std::vector<AsymptoticCheck> out;
  for (const auto& zd : points) {
    const BigComplex z(zd.real(), zd.imag(), policy.bits);
    const PhaseVerdict v = classify(seq, z, kDefaultBoundaryTol, policy);
    if (v.tie) throw DomainError("point lies on a phase boundary (margin " + std::to_string(v.margin) + ")");
    for (long n : weights) {
      AsymptoticCheck c;
      c.z = zd;
      c.n = n;
      c.winner = v.winner;
      const BigComplex exact = eval(polys[static_cast<std::size_t>(n - 1)], z, policy);
      const AsymptoticValue est = asymptotic_estimate(seq, v.winner, n, z, policy);
      c.branch_cut = est.branch_cut;
      c.log_abs_exact = log(abs(exact)).to_double();
      c.log_abs_estimate = log(abs(est.value)).to_double();
      c.log_error = std::abs(c.log_abs_exact - c.log_abs_estimate) / std::sqrt(static_cast<double>(n));
      out.push_back(c);
    }
  }
  return out;
}

double PhaseGrid::spacing() const {
  if (resolution <= 0) return 0.0;
  const double dr = 1.0 / resolution;
  const double dt = 2.0 * M_PI / resolution;
  return std::max(dr, dt);
}

PhaseGrid phase_grid(const ExponentSequence& seq, int resolution, double boundary_tol, const PrecisionPolicy& policy,
                     int max_resolution) {
  if (resolution < 2) throw ValidationError("grid resolution must be at least 2");
  if (resolution > max_resolution) {
    throw ResourceError("grid resolution " + std::to_string(resolution) + " exceeds the limit " +
                        std::to_string(max_resolution));
  }
  policy.validate();
  PhaseGrid g;
  g.family = seq;
  g.resolution = resolution;
  g.boundary_tol = boundary_tol;
  g.bits = policy.bits;
  const std::size_t n = static_cast<std::size_t>(resolution);
  g.points.resize(n * n);
  candidates(seq);  // warm the candidate cache before going parallel
  parallel_for(g.points.size(), [&](std::size_t idx) {
    GridPoint& p = g.points[idx];
    p.r = (static_cast<double>(idx / n) + 0.5) / resolution;
    p.t = 2.0 * M_PI * static_cast<double>(idx % n) / resolution;
    p.z = std::polar(p.r, p.t);
    const PhaseVerdict v = classify(seq, BigComplex(p.z.real(), p.z.imag(), policy.bits), boundary_tol, policy);
    p.winner = v.winner;
    p.runner_up = v.runner_up;
    p.margin = v.margin;
    p.tie = v.tie;
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GridPoint& p = g.points[i * n + j];
      bool b = p.tie;
      const std::size_t jn = (j + 1) % n, jp = (j + n - 1) % n;
      b = b || !(g.points[i * n + jn].winner == p.winner) || !(g.points[i * n + jp].winner == p.winner);
      if (i + 1 < n) b = b || !(g.points[(i + 1) * n + j].winner == p.winner);
      if (i > 0) b = b || !(g.points[(i - 1) * n + j].winner == p.winner);
      p.boundary = b;
    }
  }
  return g;
}

}  // namespace pzeros
