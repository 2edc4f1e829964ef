#pragma once

#include <iosfwd>
#include <string>

#include "blendstat/projection.hpp"

namespace blendstat {

/// A game/projection problem as read from the CLI's JSON schema:
/// {"atoms": [...], "benchmark": [...], "lower": [...], "upper": [...]}.
struct GameProblem {
  ConstraintSet set;
  FiniteDistribution benchmark;
};

/// Parses the JSON problem document. Malformed documents raise
/// StructuralError with a description of what is wrong; value-level
/// problems surface as the usual domain/infeasibility errors.
GameProblem parse_problem_json(const std::string& text);

GameProblem load_problem(const std::string& path);

}  // namespace blendstat
