#pragma once

#include <vector>

#include "blendstat/errors.hpp"

namespace blendstat {

/// A p-value together with the known lower bound on the prior null
/// probability. p = 0 is rejected: the Bayes-factor bound degenerates there.
struct TestInput {
  TestInput(double p_value, double pi0_lower);

  double p_value;
  double pi0_lower;
};

enum class Regime { FrequentistDominated, BayesDominated, PriorKnown };

const char* to_string(Regime r);

struct BlendResult {
  double blended_null_prob;
  double lfdr_lower;
  double bayes_factor_lower;
  Regime regime;
};

/// Lower bound on the Bayes factor under a nonincreasing hazard rate:
/// -e p ln p for p < 1/e, else 1.
double sellke_bound(double p_value);

/// Lower bound on the local false discovery rate:
/// (1 + (1 - pi0) / (pi0 * b(p)))^-1.
double lfdr_lower_bound(const TestInput& input);

/// Blended posterior null probability max(p, lfdr_lower), with regime
/// diagnostics.
BlendResult blended_null_probability(const TestInput& input);

/// Lebesgue-averaged alternative posterior null probability (1 + lfdr)/2.
double maxent_alternative(const TestInput& input);

struct BlendTableRow {
  double p;
  double pi0_lower;
  double blended;
  double lfdr_lower;
  double sellke;
  double maxent;
};

/// Cross product of the two grids, pi0-major, p-minor.
std::vector<BlendTableRow> blend_table(const std::vector<double>& p_grid,
                                       const std::vector<double>& pi0_grid);

}  // namespace blendstat
