#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blendstat/errors.hpp"

namespace blendstat {

/// A nonnegative extended real: either a finite value or +infinity.
/// Kept as an explicit tag so that infinite divergences never leak into
/// ordinary floating-point arithmetic.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return ExtendedReal(v, false); }
  static ExtendedReal infinity() { return ExtendedReal(0.0, true); }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// The finite value; throws if infinite.
  double value() const {
    if (inf_) throw DomainError("ExtendedReal: value() on +infinity");
    return v_;
  }

 private:
  ExtendedReal(double v, bool inf) : v_(v), inf_(inf) {}
  double v_;
  bool inf_;
};

/// Probability distribution over a finite, ordered list of labelled atoms.
/// Immutable after construction. Construction validates that atoms are
/// unique, all probabilities are nonnegative, and the total mass is 1
/// within 1e-12 (in which case it is renormalized exactly).
class FiniteDistribution {
 public:
  static constexpr double kNormTolerance = 1e-12;

  FiniteDistribution(std::vector<std::string> atoms, std::vector<double> probs);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_.at(i); }

  bool same_atoms(const FiniteDistribution& other) const {
    return atoms_ == other.atoms_;
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<double> probs_;
};

/// Convenience for the binary parameter space {"0","1"} used throughout
/// hypothesis testing.
FiniteDistribution binary_distribution(double null_prob);

/// I(p||q) = sum over atoms with p(i) > 0 of p(i) * ln(p(i)/q(i)), in nats.
/// +infinity when p puts mass on an atom where q has none.
ExtendedReal kl_divergence(const FiniteDistribution& p,
                           const FiniteDistribution& q);

enum class GainKind { Finite, PositiveInfinity, NegativeInfinity, Indeterminate };

/// I(p||benchmark) - I(p||q). Indeterminate when both divergences are
/// infinite; signed infinity when exactly one is.
struct InferentialGain {
  GainKind kind;
  double value;  // meaningful only when kind == Finite

  bool is_finite() const { return kind == GainKind::Finite; }
};

InferentialGain inferential_gain(const FiniteDistribution& p,
                                 const FiniteDistribution& benchmark,
                                 const FiniteDistribution& q);

}  // namespace blendstat
