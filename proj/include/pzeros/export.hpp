#pragma once

// CSV and JSON serialization of every artifact the CLI writes. Output is a
// pure function of the inputs: fixed ordering, no timestamps, locale-free
// number formatting. Multiprecision values are written as decimal strings
// with `digits` significant digits; doubles use the shortest round-trip form.

#include <string>
#include <string_view>
#include <vector>

#include "pzeros/harness.hpp"
#include "pzeros/verify.hpp"

namespace pzeros {

enum class Format { Csv, Json };

// "csv" or "json"; ValidationError otherwise.
Format parse_format(std::string_view text);
std::string to_string(Format f);

// Shortest decimal that round-trips to the same double.
std::string format_shortest(double x);

// Columns n,k,coefficient (decimal big integers); zero coefficients included.
std::string coefficients_csv(const std::vector<PartitionPolynomial>& polys);
std::string coefficients_json(const ExponentSequence& seq, const std::vector<PartitionPolynomial>& polys);

// Columns n,re,im,residual, one row per nonzero root plus one row per zero at the origin.
std::string roots_csv(const RootSet& roots, int digits);
std::string roots_json(const ExponentSequence& seq, const RootSet& roots, int digits);

// Columns re,im,winner_k,winner_h,margin,tie,boundary in grid order.
std::string phase_grid_csv(const PhaseGrid& grid);
std::string phase_grid_json(const PhaseGrid& grid);

// Columns curve,pair,re,im,residual.
std::string curves_csv(const std::vector<CurvePolyline>& curves);
std::string curves_json(const ExponentSequence& seq, const std::vector<CurvePolyline>& curves);

// Point cloud re,im,label: circle samples, spoke and segment samples, curve points.
std::string attractor_csv(const AttractorSet& attractor, int circle_samples = 720);
std::string attractor_json(const AttractorSet& attractor);

std::string asymptotics_csv(const std::vector<AsymptoticCheck>& rows);
std::string asymptotics_json(const ExponentSequence& seq, const std::vector<AsymptoticCheck>& rows);

// Columns group,check,passed,gating,detail.
std::string report_csv(const std::vector<CheckGroup>& groups);
std::string report_json(const ExponentSequence& seq, long max_n, const std::vector<CheckGroup>& groups);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace pzeros
