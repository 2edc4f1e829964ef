#include "blendstat/testing.hpp"

#include <cmath>
#include <sstream>

namespace blendstat {

TestInput::TestInput(double p, double pi0) : p_value(p), pi0_lower(pi0) {
  if (!(p > 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "TestInput: p_value " << p << " outside (0,1]";
    throw DomainError(msg.str());
  }
  if (!(pi0 >= 0.0 && pi0 <= 1.0)) {
    std::ostringstream msg;
    msg << "TestInput: pi0_lower " << pi0 << " outside [0,1]";
    throw DomainError(msg.str());
  }
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::FrequentistDominated:
      return "frequentist_dominated";
    case Regime::BayesDominated:
      return "bayes_dominated";
    case Regime::PriorKnown:
      return "prior_known";
  }
  return "unknown";
}

double sellke_bound(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("sellke_bound: p outside (0,1]");
  }
  const double e = std::exp(1.0);
  if (p < 1.0 / e) return -e * p * std::log(p);
  return 1.0;
}

double lfdr_lower_bound(const TestInput& input) {
  if (input.pi0_lower == 0.0) return 0.0;
  if (input.pi0_lower == 1.0) return 1.0;
  const double b = sellke_bound(input.p_value);
  return 1.0 / (1.0 + (1.0 - input.pi0_lower) / (input.pi0_lower * b));
}

BlendResult blended_null_probability(const TestInput& input) {
  const double lfdr = lfdr_lower_bound(input);
  const double blended = std::max(input.p_value, lfdr);
  Regime regime;
  if (input.pi0_lower == 1.0) {
    regime = Regime::PriorKnown;
  } else if (lfdr > input.p_value) {
    regime = Regime::BayesDominated;
  } else {
    // Ties p == lfdr take the p-value branch.
    regime = Regime::FrequentistDominated;
  }
  return BlendResult{blended, lfdr, sellke_bound(input.p_value), regime};
}

double maxent_alternative(const TestInput& input) {
  return 0.5 * (1.0 + lfdr_lower_bound(input));
}

std::vector<BlendTableRow> blend_table(const std::vector<double>& p_grid,
                                       const std::vector<double>& pi0_grid) {
  std::vector<BlendTableRow> rows;
  rows.reserve(p_grid.size() * pi0_grid.size());
  for (double pi0 : pi0_grid) {
    for (double p : p_grid) {
      const TestInput input(p, pi0);  // validates, naming the bad point
      const BlendResult r = blended_null_probability(input);
      rows.push_back(BlendTableRow{p, pi0, r.blended_null_prob, r.lfdr_lower,
                                   r.bayes_factor_lower,
                                   maxent_alternative(input)});
    }
  }
  return rows;
}

}  // namespace blendstat
