#pragma once

// Phase-boundary curves Re L_k = Re L_l: seeds on the unit circle,
// predictor-corrector continuation, the odd-parts constant beta, the
// all-parts triple point, and assembled attractor sets.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pzeros/phase.hpp"

namespace pzeros {

struct CurvePair {
  CandidateIndex first;
  CandidateIndex second;
};

std::string to_string(const CurvePair& p);

struct TraceControls {
  double initial_step = 5e-4;
  double min_step = 1e-9;
  double max_step = 1e-3;
  // Step-doubling error allowed for the predictor.
  double predictor_tol = 1e-7;
  // Corrector target for |Re L_k - Re L_l|.
  double residual_tol = 1e-12;
  double eps_circle = 1e-4;
  double eps_origin = 1e-3;
  double branch_band = 1e-4;  // radians around branch rays
  double junction_tol = 1e-8;
  double singular_tol = 1e-12;
  long max_points = 100000;
  bool stop_at_junction = true;
  // +1 or -1 picks the orientation when the seed is not near the circle;
  // seeds near the circle always start inward.
  int direction = 1;
};

enum class StopReason { Circle, Origin, BranchRay, Junction, MaxPoints };
std::string to_string(StopReason r);

struct Junction {
  BigComplex point;
  CandidateIndex with;  // third candidate joining the pair
  std::size_t index;    // position in CurvePolyline::points
};

struct CurvePolyline {
  CurvePair pair;
  std::vector<BigComplex> points;
  std::vector<double> residuals;
  // Whether the pair's common value beats every other candidate at the point.
  std::vector<char> dominant;
  std::vector<Junction> junctions;
  StopReason stop = StopReason::MaxPoints;
  std::string label;

  double residual_max() const;
  std::vector<std::complex<double>> to_double() const;
};

// dy/dx of the level curve through z = x + i y: Re g' / Im g', g = L_k - L_l.
// SingularError when |Im g'| < singular_tol, BranchError inside a branch band.
double ode_rhs(const ExponentSequence& seq, const CurvePair& pair, double x, double y,
               const PrecisionPolicy& policy = {}, const TraceControls& controls = {});

// Angle t* in the bracket with Re L_k(e^{it*}) = Re L_l(e^{it*}), by bisection.
BigFloat seed_angle(const ExponentSequence& seq, const CurvePair& pair, double t_lo, double t_hi,
                    const PrecisionPolicy& policy = {}, double angular_tol = 1e-13);
BigComplex seed_on_circle(const ExponentSequence& seq, const CurvePair& pair, double t_lo, double t_hi,
                          const PrecisionPolicy& policy = {});

CurvePolyline trace(const ExponentSequence& seq, const BigComplex& seed, const CurvePair& pair,
                    const TraceControls& controls = {}, const PrecisionPolicy& policy = {});

// Maximal runs of consecutive dominant points, each as its own polyline.
std::vector<CurvePolyline> dominant_pieces(const CurvePolyline& curve);

// Root of f_2(r) = f_1(i r) in (3/4, 1).
BigFloat find_beta(const PrecisionPolicy& policy = {}, double tol = 1e-13);

// Second-quadrant point where f_1 = f_2 = f_3.
BigComplex triple_point(const PrecisionPolicy& policy = {});

struct Segment {
  std::string label;
  std::complex<double> from;
  std::complex<double> to;
  std::vector<std::complex<double>> samples;
};

struct AttractorSet {
  ExponentSequence family = ExponentSequence::all_parts();
  bool circle = true;
  std::vector<Segment> spokes;
  std::vector<CurvePolyline> curves;
  std::vector<Segment> segments;
  std::vector<std::complex<double>> junctions;
};

// Samples a straight segment with `count` evenly spaced points.
Segment make_segment(std::string label, std::complex<double> from, std::complex<double> to, int count);

AttractorSet attractor_set(const ExponentSequence& seq, const PrecisionPolicy& policy = {},
                           const TraceControls& controls = {});

}  // namespace pzeros
