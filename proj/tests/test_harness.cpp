#include "doctest.h"

#include <cmath>
#include <complex>
#include <set>

#include "pzeros/errors.hpp"
#include "pzeros/harness.hpp"

using namespace pzeros;

namespace {

using cdouble = std::complex<double>;

const AttractorSet& all_parts_attractor() {
  static const AttractorSet a = attractor_set(ExponentSequence::all_parts());
  return a;
}

}  // namespace

TEST_CASE("point to set distance") {
  const AttractorSet& all = all_parts_attractor();
  CHECK(point_to_set_distance(std::polar(1.0, 0.3), all) < 1e-15);
  CHECK(point_to_set_distance(std::polar(1.0, 2.9), all) < 1e-15);
  // no traced curve enters the right half disk
  CHECK(std::abs(point_to_set_distance({0.5, 0.0}, all) - 0.5) < 1e-15);
  // a traced point is at distance zero
  const cdouble on = all.curves[0].to_double()[10];
  CHECK(point_to_set_distance(on, all) < 1e-15);

  const AttractorSet r3 = attractor_set(ExponentSequence::residue(1, 3));
  CHECK(point_to_set_distance(std::polar(0.5, M_PI / 3), r3) < 1e-15);
  CHECK(point_to_set_distance({-0.5, 0.0}, r3) < 1e-15);
  // 0.5 on the positive axis: nearest spokes are at angle pi/3
  CHECK(std::abs(point_to_set_distance({0.5, 0.0}, r3) - 0.5 * std::sin(M_PI / 3)) < 1e-12);

  AttractorSet empty;
  empty.circle = false;
  CHECK_THROWS_AS(point_to_set_distance({0.1, 0.1}, empty), EmptySelection);
}

TEST_CASE("directed distance profile") {
  AttractorSet circle;
  const std::vector<cdouble> pts = {{0.5, 0.0}, {0.0, 0.8}, {0.9, 0.0}, {0.0, 0.99}};
  DistanceProfile p = directed_distance_profile(pts, circle, 0.95);
  CHECK(p.total == 4);
  CHECK(p.count == 3);
  CHECK(std::abs(p.max - 0.5) < 1e-15);
  CHECK(std::abs(p.median - 0.2) < 1e-15);
  CHECK(std::abs(p.mean - (0.5 + 0.2 + 0.1) / 3) < 1e-15);
  CHECK_THROWS_AS(directed_distance_profile(std::vector<cdouble>{{0.99, 0.0}}, circle, 0.95), EmptySelection);
}

TEST_CASE("spoke angle deviation") {
  const AttractorSet r5 = attractor_set(ExponentSequence::residue(1, 5));
  CHECK(spoke_angle_deviation(std::polar(0.3, M_PI / 5), r5) < 1e-12);
  CHECK(std::abs(spoke_angle_deviation(std::polar(0.3, 0.0), r5) - M_PI / 5) < 1e-12);
  CHECK_THROWS_AS(spoke_angle_deviation({0.1, 0.0}, all_parts_attractor()), EmptySelection);
}

TEST_CASE("asymptotic report") {
  const auto all = ExponentSequence::all_parts();
  const std::vector<long> weights = {100, 200, 400};
  const auto rows = asymptotic_report(all, {{0.5, 0.0}, std::polar(0.3, M_PI / 8)}, weights);
  REQUIRE(rows.size() == 6);
  for (std::size_t p = 0; p < 2; ++p) {
    const auto* r = &rows[3 * p];
    CHECK(r[0].winner == CandidateIndex{1, 1});
    CHECK(r[0].log_error > r[1].log_error);
    CHECK(r[1].log_error > r[2].log_error);
    CHECK(r[2].log_error < 0.1);
    CHECK_FALSE(r[0].branch_cut);
  }
  // ratio form of the same statement at z = 0.5
  CHECK(std::abs(rows[0].log_abs_exact - rows[0].log_abs_estimate) < std::log(1.5));

  // i r with r < beta is a (1,1)/(1,2) tie for odd parts
  CHECK_THROWS_AS(asymptotic_report(ExponentSequence::odd_parts(), {{0.0, 0.5}}, {50}), DomainError);
  CHECK_THROWS_AS(asymptotic_report(all, {{0.5, 0.0}}, {200, 100}), ValidationError);
  CHECK_THROWS_AS(asymptotic_report(all, {{0.5, 0.0}}, {}), ValidationError);
}

TEST_CASE("phase grid, all parts") {
  const PhaseGrid g = phase_grid(ExponentSequence::all_parts(), 300);
  REQUIRE(g.points.size() == 300u * 300u);
  const AttractorSet& A = all_parts_attractor();
  std::size_t boundary = 0;
  for (const auto& p : g.points) {
    if (p.z.real() > 0) CHECK(p.winner == CandidateIndex{1, 1});
    if (!p.boundary) continue;
    ++boundary;
    CHECK(point_to_set_distance(p.z, A) <= 2.0 * g.spacing());
  }
  CHECK(boundary > 100);
}

TEST_CASE("phase grid, odd parts and residue(1,5)") {
  const PhaseGrid odd = phase_grid(ExponentSequence::odd_parts(), 80);
  const double beta = find_beta().to_double();
  std::size_t checked = 0;
  for (const auto& p : odd.points) {
    if (std::abs(p.z.real()) > 1e-12 || p.r >= beta) continue;
    ++checked;
    CHECK(p.tie);
    CHECK(std::set<CandidateIndex>{p.winner, p.runner_up} == std::set<CandidateIndex>{{1, 1}, {1, 2}});
  }
  CHECK(checked > 100);

  const auto r5 = ExponentSequence::residue(1, 5);
  const PhaseGrid g = phase_grid(r5, 100);
  std::set<long> wedges;
  for (const auto& p : g.points) {
    if (p.boundary) continue;
    const long h = wedge_index(r5, p.winner);
    wedges.insert(h);
    // wedge h is centred at arg z = -2 pi h / 5
    const double off = std::remainder(p.t + 2.0 * M_PI * static_cast<double>(h) / 5.0, 2.0 * M_PI);
    CHECK(std::abs(off) <= M_PI / 5 + 1e-9);
  }
  CHECK(wedges.size() == 5);
  CHECK_THROWS_AS(phase_grid(r5, 5000), ResourceError);
  CHECK_THROWS_AS(phase_grid(r5, 1), ValidationError);
}
