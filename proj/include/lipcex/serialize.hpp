#pragma once

#include <string>

#include <json.hpp>

#include "lipcex/construction.hpp"
#include "lipcex/piecewise_linear.hpp"
#include "lipcex/step_function.hpp"

namespace lipcex {

using ordered_json = nlohmann::ordered_json;

/// {"breaks": [...], "values": [...]} with values[i] on [breaks[i], breaks[i+1]);
/// interior gaps appear as explicit zero values.
ordered_json step_to_json(const StepFunction& f);
StepFunction step_from_json(const ordered_json& j);

/// {"breaks": [...], "values": [...]} with one node value per breakpoint.
ordered_json pl_to_json(const PiecewiseLinear& f);
PiecewiseLinear pl_from_json(const ordered_json& j);

/// Two-column CSV (x, value); step functions emit staircase rows.
std::string step_to_csv(const StepFunction& f);
std::string pl_to_csv(const PiecewiseLinear& f);
/// Two-column CSV (x, y) vertex list.
std::string polygon_to_csv(const Polygon& poly);

ordered_json tables_to_json(const ConstructionTables& t);

}  // namespace lipcex
