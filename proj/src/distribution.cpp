#include "blendstat/distribution.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace blendstat {

FiniteDistribution::FiniteDistribution(std::vector<std::string> atoms,
                                       std::vector<double> probs)
    : atoms_(std::move(atoms)), probs_(std::move(probs)) {
  if (atoms_.empty()) throw DomainError("FiniteDistribution: empty atom list");
  if (atoms_.size() != probs_.size()) {
    throw StructuralError("FiniteDistribution: atoms and probs differ in length");
  }
  std::set<std::string> seen(atoms_.begin(), atoms_.end());
  if (seen.size() != atoms_.size()) {
    throw DomainError("FiniteDistribution: duplicate atom labels");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!std::isfinite(probs_[i]) || probs_[i] < 0.0 || probs_[i] > 1.0) {
      std::ostringstream msg;
      msg << "FiniteDistribution: prob[" << atoms_[i] << "] = " << probs_[i]
          << " outside [0,1]";
      throw DomainError(msg.str());
    }
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::fabs(total - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "FiniteDistribution: probabilities sum to " << total
        << ", not 1 within " << kNormTolerance;
    throw DomainError(msg.str());
  }
  for (double& p : probs_) p /= total;
}

FiniteDistribution binary_distribution(double null_prob) {
  return FiniteDistribution({"0", "1"}, {null_prob, 1.0 - null_prob});
}

ExtendedReal kl_divergence(const FiniteDistribution& p,
                           const FiniteDistribution& q) {
  if (!p.same_atoms(q)) {
    throw StructuralError("kl_divergence: mismatched atom lists");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p.prob(i);
    if (pi == 0.0) continue;  // 0 * ln(0/q) := 0
    const double qi = q.prob(i);
    if (qi == 0.0) return ExtendedReal::infinity();
    total += pi * std::log(pi / qi);
  }
  return ExtendedReal::finite(total);
}

InferentialGain inferential_gain(const FiniteDistribution& p,
                                 const FiniteDistribution& benchmark,
                                 const FiniteDistribution& q) {
  const ExtendedReal to_benchmark = kl_divergence(p, benchmark);
  const ExtendedReal to_q = kl_divergence(p, q);
  if (to_benchmark.is_infinite() && to_q.is_infinite()) {
    return {GainKind::Indeterminate, 0.0};
  }
  if (to_benchmark.is_infinite()) return {GainKind::PositiveInfinity, 0.0};
  if (to_q.is_infinite()) return {GainKind::NegativeInfinity, 0.0};
  return {GainKind::Finite, to_benchmark.value() - to_q.value()};
}

}  // namespace blendstat
