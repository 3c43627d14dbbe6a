#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "pzeros/errors.hpp"
#include "pzeros/export.hpp"

using namespace pzeros;
using json = nlohmann::json;

namespace {

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("formats and fields") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("(1,1)|(1,2)") == "\"(1,1)|(1,2)\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("a,\"b\"") == "\"a,\"\"b\"\"\"");
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(std::stod(format_shortest(x)) == x);
  CHECK(format_shortest(0.5) == "0.5");
}

TEST_CASE("coefficient export") {
  const auto polys = generate(ExponentSequence::all_parts(), 4);
  const std::string csv = coefficients_csv(polys);
  CHECK(csv.rfind("n,k,coefficient\n1,0,0\n1,1,1\n", 0) == 0);
  CHECK(lines(csv) == 1 + 2 + 3 + 4 + 5);
  const auto big = generate_one(ExponentSequence::all_parts(), 400);
  const json j = json::parse(coefficients_json(ExponentSequence::all_parts(), {big}));
  CHECK(j["family"]["kind"] == "all-parts");
  const auto& c = j["polynomials"][0]["coefficients"];
  CHECK(c.size() == 401);
  // exact big integers survive as strings
  CHECK(c[20].get<std::string>() == big.coeffs[20].get_str());
}

TEST_CASE("root export") {
  const auto seq = ExponentSequence::odd_parts();
  const RootSet rs = find_roots(generate_one(seq, 30));
  const std::string csv = roots_csv(rs, 25);
  CHECK(lines(csv) == 1 + 30);
  CHECK(csv.rfind("n,re,im,residual\n30,0,0,0\n", 0) == 0);
  const json j = json::parse(roots_json(seq, rs, 25));
  CHECK(j["degree"] == 30);
  CHECK(j["precision_bits"] == rs.precision_bits);
  CHECK(j["digits"] == 25);
  CHECK(j["iterations"] == rs.iterations);
  CHECK(j["roots"].size() == rs.roots.size());
  CHECK(j["roots"][0]["re"].get<std::string>() == rs.roots[0].re.str(25));
}

TEST_CASE("phase grid, curves and attractor export") {
  const auto r3 = ExponentSequence::residue(1, 3);
  const PhaseGrid g = phase_grid(r3, 12);
  CHECK(lines(phase_grid_csv(g)) == 1 + 144);
  const json gj = json::parse(phase_grid_json(g));
  CHECK(gj["resolution"] == 12);
  CHECK(gj["tolerance"] == g.boundary_tol);
  CHECK(gj["points"].size() == 144);

  const AttractorSet A = attractor_set(r3);
  const json aj = json::parse(attractor_json(A));
  CHECK(aj["circle"] == true);
  CHECK(aj["spokes"].size() == 3);
  const std::string csv = attractor_csv(A, 36);
  std::size_t expected = 1 + 36;
  for (const auto& sp : A.spokes) expected += sp.samples.size();
  CHECK(lines(csv) == expected);
  CHECK(csv.find(",unit circle\n") != std::string::npos);

  const AttractorSet all = attractor_set(ExponentSequence::all_parts());
  const json cj = json::parse(curves_json(ExponentSequence::all_parts(), all.curves));
  REQUIRE(cj["curves"].size() == all.curves.size());
  CHECK(cj["curves"][0]["points"][0].size() == 2);
  CHECK(cj["curves"][0]["residual_max"].get<double>() < 1e-10);
  const std::string ccsv = curves_csv(all.curves);
  CHECK(ccsv.find("\"(1,1)|(1,3)\"") != std::string::npos);
}

TEST_CASE("report export") {
  std::vector<CheckGroup> groups = {{1, "one", {{"x <= y", true, "ok"}, {"informational", false, "n/a", false}}},
                                    {2, "two", {{"a, b", false, "bad"}}}};
  const json j = json::parse(report_json(ExponentSequence::all_parts(), 50, groups));
  CHECK(j["violations"] == 1);
  CHECK(j["passed"] == false);
  CHECK(j["checks"] == 3);
  CHECK(j["groups"][0]["passed"] == true);
  const std::string csv = report_csv(groups);
  CHECK(csv.find("2,\"a, b\",0,1,bad\n") != std::string::npos);
}
