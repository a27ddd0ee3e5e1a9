#pragma once

#include <json.hpp>
#include <string>

#include "gevrey/arith.hpp"
#include "gevrey/laplace.hpp"
#include "gevrey/mellin.hpp"
#include "gevrey/newton.hpp"
#include "gevrey/solutions.hpp"

namespace gevrey::cli {

using json = nlohmann::json;

json to_json(const Rat& r);
json to_json(const std::vector<Rat>& v);
json to_json(const SeedCombo& c);
json to_json(const NewtonPolygon& n);
json to_json(const Exponents& e);
json to_json(const SingularityReport& s);
json to_json(const EShapeReport& e);
json to_json(const PuiseuxLogSeries& s, std::size_t max_terms = 12);
// Includes "apply_zero" when op is given.
json to_json(const FormalSolutionBasis& b, const DiffOp* op = nullptr);
json to_json(const DualityReport& d);
json to_json(const PCurvatureReport& p);
json to_json(const GevreyReport& g);
json to_json(const RateSummary& r);
json to_json(const RhoTable& t);

// op annihilates s through its precision.
bool apply_zero(const DiffOp& op, const PuiseuxLogSeries& s);
bool all_apply_zero(const DiffOp& op, const FormalSolutionBasis& b);

// Indented key: value lines.
std::string to_text(const json& j);

}  // namespace gevrey::cli
