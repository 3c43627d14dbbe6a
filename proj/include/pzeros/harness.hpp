#pragma once

// Agreement between computed zeros and predicted attractors, and between
// exact polynomial values and the leading-order asymptotics.

#include <complex>
#include <cstddef>
#include <vector>

#include "pzeros/curve.hpp"
#include "pzeros/roots.hpp"

namespace pzeros {

// Euclidean distance from z to the attractor: the unit circle (when present),
// every polyline and sampled segment taken segment by segment, and the spokes.
double point_to_set_distance(std::complex<double> z, const AttractorSet& attractor);

struct DistanceProfile {
  std::size_t total = 0;  // points offered
  std::size_t count = 0;  // points with |z| <= inner_radius_cut
  double median = 0.0;
  double mean = 0.0;
  double max = 0.0;
  std::vector<double> distances;  // for the selected points, input order
};

// One-sided distances of the points with |z| <= inner_radius_cut.
// EmptySelection when no point passes the cut.
DistanceProfile directed_distance_profile(const std::vector<std::complex<double>>& points,
                                          const AttractorSet& attractor, double inner_radius_cut = 0.95);
DistanceProfile directed_distance_profile(const RootSet& roots, const AttractorSet& attractor,
                                          double inner_radius_cut = 0.95);

// Angular distance from arg z to the nearest spoke direction of the attractor.
double spoke_angle_deviation(std::complex<double> z, const AttractorSet& attractor);

std::vector<std::complex<double>> to_double(const std::vector<BigComplex>& points);

struct AsymptoticCheck {
  std::complex<double> z;
  long n = 0;
  CandidateIndex winner;
  bool branch_cut = false;
  double log_abs_exact = 0.0;
  double log_abs_estimate = 0.0;
  // |ln|F_n(z)| - ln|estimate|| / sqrt(n)
  double log_error = 0.0;
};

struct WeightStats {
  long n = 0;
  double median_distance = 0.0;
  double max_distance = 0.0;
  std::size_t count_inside = 0;
};

struct ConvergenceReport {
  ExponentSequence family = ExponentSequence::all_parts();
  std::vector<long> weights;
  std::vector<WeightStats> per_n;
  std::vector<AsymptoticCheck> asymptotic_checks;
};

// For every point and weight: classify the point (DomainError on a tie), build
// the estimate for the winning phase and compare with exact evaluation.
// Weights must be strictly increasing. Rows are ordered point-major.
std::vector<AsymptoticCheck> asymptotic_report(const ExponentSequence& seq,
                                               const std::vector<std::complex<double>>& points,
                                               const std::vector<long>& weights, const PrecisionPolicy& policy = {});

struct GridPoint {
  double r = 0.0;
  double t = 0.0;
  std::complex<double> z;
  CandidateIndex winner;
  CandidateIndex runner_up;
  double margin = 0.0;
  bool tie = false;
  // Tie, or a radial/angular neighbour with a different winner.
  bool boundary = false;
};

struct PhaseGrid {
  ExponentSequence family = ExponentSequence::all_parts();
  int resolution = 0;  // radial and angular sample counts
  double boundary_tol = kDefaultBoundaryTol;
  Bits bits = 0;
  // Radius-major: index = i * resolution + j with r_i = (i + 1/2) / resolution
  // and t_j = 2 pi j / resolution.
  std::vector<GridPoint> points;
  // Largest distance between polar neighbours in the z-plane.
  double spacing() const;
};

inline constexpr int kMaxGridResolution = 2000;

// ResourceError above max_resolution.
PhaseGrid phase_grid(const ExponentSequence& seq, int resolution, double boundary_tol = kDefaultBoundaryTol,
                     const PrecisionPolicy& policy = PrecisionPolicy::for_bits(64),
                     int max_resolution = kMaxGridResolution);

}  // namespace pzeros
