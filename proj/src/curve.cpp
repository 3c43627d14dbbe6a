#include "pzeros/curve.hpp"

#include <algorithm>
#include <cmath>

#include "pzeros/errors.hpp"
#include "pzeros/parallel.hpp"

namespace pzeros {

std::string to_string(const CurvePair& p) { return to_string(p.first) + "|" + to_string(p.second); }

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::Circle: return "circle";
    case StopReason::Origin: return "origin";
    case StopReason::BranchRay: return "branch-ray";
    case StopReason::Junction: return "junction";
    case StopReason::MaxPoints: return "max-points";
  }
  return "unknown";
}

double CurvePolyline::residual_max() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

std::vector<std::complex<double>> CurvePolyline::to_double() const {
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p.re.to_double(), p.im.to_double());
  return out;
}

namespace {

// Angular distance (in the z-plane) from z to the rays where one dilogarithm
// term of pf has a negative real argument, i.e. where L^2 can cross its cut.
double branch_distance(const PhaseFunction& pf, const BigComplex& z) {
  const double az = std::atan2(z.im.to_double(), z.re.to_double());
  double best = 1e300;
  auto term = [&](const PhaseFunction::Rotation& rot) {
    const double aw = pf.power * az + 2.0 * M_PI * static_cast<double>(rot.num) / static_cast<double>(rot.den);
    // distance of aw from pi modulo 2 pi
    double d = std::remainder(aw - M_PI, 2.0 * M_PI);
    best = std::min(best, std::abs(d) / static_cast<double>(pf.power));
  };
  term(pf.rotation);
  if (pf.secondary) term(*pf.secondary);
  return best;
}

class Tracer {
 public:
  Tracer(const ExponentSequence& seq, const CurvePair& pair, const TraceControls& c, const PrecisionPolicy& policy)
      : seq_(seq), pair_(pair), c_(c), policy_(policy),
        f1_(phase_function(seq, pair.first.h, pair.first.k)),
        f2_(phase_function(seq, pair.second.h, pair.second.k)) {
    for (const auto& m : candidates(seq)) {
      if (m == f1_.index || m == f2_.index) continue;
      thirds_.push_back(phase_function(seq, m.h, m.k));
    }
  }

  BigFloat u(const BigComplex& z) const { return re_L(f1_, z, policy_) - re_L(f2_, z, policy_); }

  BigComplex gprime(const BigComplex& z) const {
    return L_derivative(f1_, z, policy_) - L_derivative(f2_, z, policy_);
  }

  bool in_branch_band(const BigComplex& z) const {
    return branch_distance(f1_, z) < c_.branch_band || branch_distance(f2_, z) < c_.branch_band;
  }

  // Unit tangent i conj(g') / |g'|, oriented along `ref`.
  BigComplex tangent(const BigComplex& z, const BigComplex& ref) const {
    BigComplex g = gprime(z);
    BigFloat a = abs(g);
    if (a < c_.singular_tol) throw SingularError("level curve gradient vanishes");
    BigComplex t(g.im / a, g.re / a);
    if ((t.re * ref.re + t.im * ref.im).sign() < 0) t = -t;
    return t;
  }

  BigComplex rk4(const BigComplex& z, double h, const BigComplex& ref) const {
    BigComplex k1 = tangent(z, ref);
    BigComplex k2 = tangent(z + k1 * (h / 2), k1);
    BigComplex k3 = tangent(z + k2 * (h / 2), k1);
    BigComplex k4 = tangent(z + k3 * h, k1);
    return z + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6);
  }

  // Newton steps along the gradient of u = Re g onto u = 0.
  bool correct(BigComplex& z) const {
    for (int it = 0; it < 12; ++it) {
      BigFloat val = u(z);
      if (abs(val) < c_.residual_tol) return true;
      BigComplex g = gprime(z);
      BigFloat n2 = norm(g);
      if (n2 < c_.singular_tol * c_.singular_tol) return false;
      // grad u = conj(g')
      z -= conj(g) * (val / n2);
      if (abs(z) >= 1.0) return false;
    }
    return abs(u(z)) < c_.residual_tol;
  }

  std::vector<BigFloat> third_gaps(const BigComplex& z) const {
    std::vector<BigFloat> d;
    BigFloat base = re_L(f1_, z, policy_);
    for (const auto& m : thirds_) d.push_back(re_L(m, z, policy_) - base);
    return d;
  }

  const std::vector<PhaseFunction>& thirds() const { return thirds_; }
  const TraceControls& controls() const { return c_; }

 private:
  ExponentSequence seq_;
  CurvePair pair_;
  TraceControls c_;
  PrecisionPolicy policy_;
  PhaseFunction f1_, f2_;
  std::vector<PhaseFunction> thirds_;
};

bool dominant_at(const std::vector<BigFloat>& gaps, double tol) {
  for (const auto& d : gaps)
    if (d > tol) return false;
  return true;
}

}  // namespace

double ode_rhs(const ExponentSequence& seq, const CurvePair& pair, double x, double y, const PrecisionPolicy& policy,
               const TraceControls& controls) {
  const double r = std::hypot(x, y);
  if (r == 0.0 || r >= 1.0) throw DomainError("ode_rhs needs 0 < |z| < 1");
  Tracer tr(seq, pair, controls, policy);
  BigComplex z(x, y, policy.bits);
  if (tr.in_branch_band(z)) throw BranchError("point lies within the branch-ray guard band");
  BigComplex g = tr.gprime(z);
  if (abs(g.im) < controls.singular_tol) throw SingularError("Im[L_k' - L_l'] vanishes");
  return (g.re / g.im).to_double();
}

BigFloat seed_angle(const ExponentSequence& seq, const CurvePair& pair, double t_lo, double t_hi,
                    const PrecisionPolicy& policy, double angular_tol) {
  if (!(t_lo < t_hi)) throw ValidationError("seed bracket must satisfy t_lo < t_hi");
  PhaseFunction a = phase_function(seq, pair.first.h, pair.first.k);
  PhaseFunction b = phase_function(seq, pair.second.h, pair.second.k);
  auto diff = [&](const BigFloat& t) { return re_L(a, expi(t), policy) - re_L(b, expi(t), policy); };
  BigFloat lo(t_lo, policy.bits), hi(t_hi, policy.bits);
  const int slo = diff(lo).sign();
  const int shi = diff(hi).sign();
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) {
    throw NoSignChange("Re L" + to_string(pair.first) + " - Re L" + to_string(pair.second) +
                       " keeps its sign on [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) + "]");
  }
  while ((hi - lo) > angular_tol) {
    BigFloat mid = ldexp(lo + hi, -1);
    const int s = diff(mid).sign();
    if (s == 0) return mid;
    if (s == slo) lo = mid;
    else hi = mid;
  }
  return ldexp(lo + hi, -1);
}

BigComplex seed_on_circle(const ExponentSequence& seq, const CurvePair& pair, double t_lo, double t_hi,
                          const PrecisionPolicy& policy) {
  return expi(seed_angle(seq, pair, t_lo, t_hi, policy));
}

CurvePolyline trace(const ExponentSequence& seq, const BigComplex& seed, const CurvePair& pair,
                    const TraceControls& controls, const PrecisionPolicy& policy) {
  Tracer tr(seq, pair, controls, policy);
  CurvePolyline out;
  out.pair = pair;
  out.label = to_string(pair);

  BigComplex z = seed;
  z.set_precision(policy.bits);
  if (abs(z).to_double() > 1.0 + 1e-12) throw DomainError("trace seed lies outside the unit disk");
  if (z.is_zero()) throw DomainError("trace seed is the origin");
  if (abs(tr.u(z)) > 1e-6) throw DomainError("trace seed is not on the level set");

  const double r0 = abs(z).to_double();
  BigComplex ref = tr.tangent(z, BigComplex(-z.im, z.re));
  if (r0 > 1.0 - controls.eps_circle) {
    if ((ref.re * z.re + ref.im * z.im).sign() > 0) ref = -ref;  // point inward
  } else if (controls.direction < 0) {
    ref = -ref;
  }
  bool inside = r0 <= 1.0 - controls.eps_circle;
  std::vector<BigFloat> gaps = tr.third_gaps(z);
  if (r0 < 1.0) {
    out.points.push_back(z);
    out.residuals.push_back(abs(tr.u(z)).to_double());
    out.dominant.push_back(dominant_at(gaps, controls.junction_tol));
  }

  double h = controls.initial_step;
  while (true) {
    if (static_cast<long>(out.points.size()) >= controls.max_points) {
      out.stop = StopReason::MaxPoints;
      break;
    }
    if (h < controls.min_step) throw StepFailure("step size fell below " + std::to_string(controls.min_step));
    BigComplex znew;
    double err = 0.0;
    try {
      BigComplex full = tr.rk4(z, h, ref);
      BigComplex half = tr.rk4(z, h / 2, ref);
      BigComplex two = tr.rk4(half, h / 2, tr.tangent(half, ref));
      err = abs(full - two).to_double();
      znew = two;
    } catch (const DomainError&) {
      h /= 2;
      continue;
    } catch (const SingularError&) {
      h /= 2;
      continue;
    }
    if (err > controls.predictor_tol) {
      h /= 2;
      continue;
    }
    if (abs(znew) >= 1.0 || !tr.correct(znew)) {
      h /= 2;
      continue;
    }
    // A corrector that lands far from the step is following another branch.
    if (abs(znew - z).to_double() > 1.5 * h) {
      h /= 2;
      continue;
    }
    const double r = abs(znew).to_double();
    if (r < controls.eps_origin) {
      out.points.push_back(znew);
      out.residuals.push_back(abs(tr.u(znew)).to_double());
      out.dominant.push_back(dominant_at(tr.third_gaps(znew), controls.junction_tol));
      out.stop = StopReason::Origin;
      break;
    }
    if (inside && r > 1.0 - controls.eps_circle) {
      out.stop = StopReason::Circle;
      break;
    }
    if (tr.in_branch_band(znew)) {
      out.stop = StopReason::BranchRay;
      break;
    }
    if (r <= 1.0 - controls.eps_circle) inside = true;

    std::vector<BigFloat> ngaps = tr.third_gaps(znew);
    bool stop_here = false;
    for (std::size_t m = 0; m < ngaps.size(); ++m) {
      const int s0 = gaps[m].sign();
      const int s1 = ngaps[m].sign();
      const bool crossed = s0 != 0 && s1 != 0 && s0 != s1;
      const bool touching = abs(ngaps[m]) < controls.junction_tol && !(abs(gaps[m]) < controls.junction_tol);
      if (!crossed && !touching) continue;
      BigComplex jz = znew;
      if (crossed) {
        // Bisection on the fraction of the step where the third gap vanishes.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 48; ++it) {
          const double mid = 0.5 * (lo + hi);
          BigComplex p = tr.rk4(z, mid * h, ref);
          if (!tr.correct(p)) break;
          BigFloat d = re_L(tr.thirds()[m], p, policy) - re_L(phase_function(seq, pair.first.h, pair.first.k), p, policy);
          jz = p;
          if (abs(d) < controls.junction_tol * 1e-4) break;
          if (d.sign() == s0) lo = mid;
          else hi = mid;
        }
      }
      out.points.push_back(jz);
      out.residuals.push_back(abs(tr.u(jz)).to_double());
      out.dominant.push_back(1);
      out.junctions.push_back({jz, tr.thirds()[m].index, out.points.size() - 1});
      if (controls.stop_at_junction) stop_here = true;
    }
    if (stop_here) {
      out.stop = StopReason::Junction;
      break;
    }
    gaps = std::move(ngaps);
    ref = tr.tangent(znew, ref);
    z = znew;
    if (r < 1.0) {
      out.points.push_back(z);
      out.residuals.push_back(abs(tr.u(z)).to_double());
      out.dominant.push_back(dominant_at(gaps, controls.junction_tol));
    }
    if (err < controls.predictor_tol / 8) h = std::min(h * 1.5, controls.max_step);
  }
  return out;
}

std::vector<CurvePolyline> dominant_pieces(const CurvePolyline& curve) {
  std::vector<CurvePolyline> out;
  CurvePolyline cur;
  auto flush = [&] {
    if (cur.points.size() >= 2) out.push_back(cur);
    cur = CurvePolyline();
  };
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (!curve.dominant[i]) {
      flush();
      continue;
    }
    if (cur.points.empty()) {
      cur.pair = curve.pair;
      cur.label = curve.label;
      cur.stop = curve.stop;
    }
    cur.points.push_back(curve.points[i]);
    cur.residuals.push_back(curve.residuals[i]);
    cur.dominant.push_back(1);
    for (const auto& j : curve.junctions)
      if (j.index == i) cur.junctions.push_back({j.point, j.with, cur.points.size() - 1});
  }
  flush();
  return out;
}

BigFloat find_beta(const PrecisionPolicy& policy, double tol) {
  auto g = [&](const BigFloat& r) {
    return root_dilog(2, BigComplex(r), policy) - root_dilog(1, BigComplex(BigFloat(policy.bits), r), policy);
  };
  BigFloat lo(0.75, policy.bits), hi(1.0, policy.bits);
  if (!(g(lo).sign() < 0 && g(hi).sign() > 0)) throw ConvergenceError("f_2(r) - f_1(ir) is not bracketed by (3/4, 1)");
  while ((hi - lo) > tol) {
    BigFloat mid = ldexp(lo + hi, -1);
    if (g(mid).sign() < 0) lo = mid;
    else hi = mid;
  }
  return ldexp(lo + hi, -1);
}

BigComplex triple_point(const PrecisionPolicy& policy) {
  const auto all = ExponentSequence::all_parts();
  const PhaseFunction L1 = phase_function(all, 1, 1);
  const PhaseFunction L2 = phase_function(all, 1, 2);
  const PhaseFunction L3 = phase_function(all, 1, 3);

  // Coarse 200 x 200 polar scan of the second quadrant, relative residual.
  const int n = 200;
  const PrecisionPolicy coarse = PrecisionPolicy::for_bits(64);
  std::vector<double> score(static_cast<std::size_t>(n) * n);
  parallel_for(score.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx / n), j = static_cast<int>(idx % n);
    const double r = (i + 0.5) / n;
    const double t = M_PI / 2 + (j + 0.5) / n * (M_PI / 2);
    BigComplex z(r * std::cos(t), r * std::sin(t), 64);
    const double a = re_L(L1, z, coarse).to_double();
    const double b = re_L(L2, z, coarse).to_double();
    const double c = re_L(L3, z, coarse).to_double();
    score[idx] = (std::abs(a - b) + std::abs(b - c)) / (a + b + c + 1e-300);
  });
  const std::size_t best = static_cast<std::size_t>(std::min_element(score.begin(), score.end()) - score.begin());
  const double r = (static_cast<double>(best / n) + 0.5) / n;
  const double t = M_PI / 2 + (static_cast<double>(best % n) + 0.5) / n * (M_PI / 2);
  BigComplex z(r * std::cos(t), r * std::sin(t), policy.bits);

  auto residual = [&](const BigComplex& w, BigFloat& F1, BigFloat& F2) {
    BigFloat a = re_L(L1, w, policy), b = re_L(L2, w, policy), c = re_L(L3, w, policy);
    F1 = a - b;
    F2 = b - c;
    return abs(F1) + abs(F2);
  };
  BigFloat F1(policy.bits), F2(policy.bits);
  BigFloat res = residual(z, F1, F2);
  const BigFloat target = policy.tol * 16.0;
  for (int it = 0; it < 60 && res > target; ++it) {
    BigComplex d1 = L_derivative(L1, z, policy), d2 = L_derivative(L2, z, policy), d3 = L_derivative(L3, z, policy);
    BigComplex g12 = d1 - d2, g23 = d2 - d3;
    // gradient of Re g is (Re g', -Im g')
    BigFloat a = g12.re, b = -g12.im, c = g23.re, d = -g23.im;
    BigFloat det = a * d - b * c;
    if (det.is_zero()) throw ConvergenceError("singular Jacobian at the triple point");
    BigFloat dx = (-(F1 * d) + F2 * b) / det;
    BigFloat dy = (-(F2 * a) + F1 * c) / det;
    double lambda = 1.0;
    bool improved = false;
    for (int k = 0; k < 30; ++k) {
      BigComplex trial(z.re + dx * lambda, z.im + dy * lambda);
      if (abs(trial) < 1.0) {
        BigFloat G1(policy.bits), G2(policy.bits);
        BigFloat tres = residual(trial, G1, G2);
        if (tres < res) {
          z = trial;
          res = tres;
          F1 = G1;
          F2 = G2;
          improved = true;
          break;
        }
      }
      lambda /= 2;
    }
    if (!improved) break;
  }
  if (!(res < 1e-10)) throw ConvergenceError("triple point residual " + res.str(6));
  if (!(z.re.sign() < 0 && z.im.sign() > 0 && abs(z) < 1.0)) {
    throw ConvergenceError("triple point left the open second quadrant");
  }
  return z;
}

Segment make_segment(std::string label, std::complex<double> from, std::complex<double> to, int count) {
  Segment s;
  s.label = std::move(label);
  s.from = from;
  s.to = to;
  for (int i = 0; i < count; ++i) {
    const double u = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    s.samples.push_back(from + (to - from) * u);
  }
  return s;
}

namespace {

CurvePolyline mapped(const CurvePolyline& c, bool conjugate, bool negate, const CurvePair& pair) {
  CurvePolyline out = c;
  out.pair = pair;
  out.label = to_string(pair);
  for (auto& p : out.points) {
    if (conjugate) p = conj(p);
    if (negate) p = -p;
  }
  for (auto& j : out.junctions) {
    if (conjugate) j.point = conj(j.point);
    if (negate) j.point = -j.point;
  }
  return out;
}

std::complex<double> cd(const BigComplex& z) { return {z.re.to_double(), z.im.to_double()}; }

}  // namespace

AttractorSet attractor_set(const ExponentSequence& seq, const PrecisionPolicy& policy, const TraceControls& controls) {
  AttractorSet A;
  A.family = seq;
  switch (seq.kind()) {
    case FamilyKind::AllParts: {
      const CurvePair p12{{1, 1}, {1, 2}}, p13{{1, 1}, {1, 3}}, p23{{1, 2}, {1, 3}};
      const double t12 = seed_angle(seq, p12, M_PI / 2, M_PI, policy).to_double();
      struct Job {
        CurvePair pair;
        double lo, hi;
        bool stop;
      };
      const std::vector<Job> jobs = {{p13, M_PI / 2, t12, true}, {p23, t12, M_PI, true}, {p12, M_PI / 2, M_PI, false}};
      std::vector<CurvePolyline> traced(jobs.size());
      parallel_for(jobs.size(), [&](std::size_t i) {
        TraceControls c = controls;
        c.stop_at_junction = jobs[i].stop;
        BigComplex seed = seed_on_circle(seq, jobs[i].pair, jobs[i].lo, jobs[i].hi, policy);
        traced[i] = trace(seq, seed, jobs[i].pair, c, policy);
      });
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::vector<CurvePolyline> pieces;
        if (jobs[i].stop) pieces.push_back(traced[i]);
        else pieces = dominant_pieces(traced[i]);
        for (const auto& c : pieces) {
          A.curves.push_back(c);
          A.curves.push_back(mapped(c, true, false, c.pair));
        }
      }
      for (const auto& c : traced[0].junctions) {
        A.junctions.push_back(cd(c.point));
        A.junctions.push_back(std::conj(cd(c.point)));
      }
      break;
    }
    case FamilyKind::Residue: {
      if (seq.a() != 1) throw DomainError("attractor_set needs a_1 = 1 (residue class 1)");
      const long p = seq.p();
      if (p == 2) {
        const BigFloat beta = find_beta(policy);
        const double b = beta.to_double();
        const CurvePair p14{{1, 1}, {1, 4}};
        BigComplex seed = seed_on_circle(seq, p14, 0.0, M_PI / 2, policy);
        TraceControls c = controls;
        c.stop_at_junction = true;
        CurvePolyline gamma = trace(seq, seed, p14, c, policy);
        gamma.label = "gamma";
        const CurvePair p24{{1, 2}, {1, 4}};
        A.curves.push_back(gamma);
        A.curves.push_back(mapped(gamma, true, false, p14));
        A.curves.push_back(mapped(gamma, false, true, p24));
        A.curves.push_back(mapped(gamma, true, true, p24));
        A.curves[1].label = "conj gamma";
        A.curves[2].label = "-gamma";
        A.curves[3].label = "-conj gamma";
        A.segments.push_back(make_segment("i[-beta,beta]", {0.0, -b}, {0.0, b}, 512));
        A.junctions = {{0.0, b}, {0.0, -b}};
      } else {
        for (long j = 0; j < p; ++j) {
          const double ang = M_PI * (2.0 * j + 1.0) / static_cast<double>(p);
          const std::complex<double> dir = std::polar(1.0, ang);
          A.spokes.push_back(make_segment("spoke " + std::to_string(j), dir * controls.eps_origin,
                                          dir * (1.0 - controls.eps_circle), 512));
        }
      }
      break;
    }
    default:
      throw UnsupportedFamily("attractor_set supports all-parts and residue(1,p) families only");
  }
  return A;
}

}  // namespace pzeros
