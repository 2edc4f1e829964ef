#pragma once

#include <string>
#include <vector>

#include "blendstat/distribution.hpp"

namespace blendstat {

/// Convex set of distributions over a finite atom list, given by per-atom
/// box bounds intersected with the probability simplex:
///   { P : lower(i) <= P(i) <= upper(i), sum P(i) = 1 }.
class ConstraintSet {
 public:
  ConstraintSet(std::vector<std::string> atoms, std::vector<double> lower,
                std::vector<double> upper);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  std::size_t size() const { return atoms_.size(); }

  bool contains(const FiniteDistribution& p, double slack = 0.0) const;

 private:
  std::vector<std::string> atoms_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

enum class BoundStatus { AtLower, AtUpper, Interior };

struct ProjectionResult {
  FiniteDistribution projection;
  ExtendedReal divergence_to_benchmark;
  std::vector<BoundStatus> active_constraints;
};

/// Brute-force solution of the maximin inferential-gain game at a given
/// grid resolution.
struct GameSolution {
  double value;                          // nats
  FiniteDistribution statistician;       // Q attaining the sup
  FiniteDistribution worst_case_nature;  // P attaining the inner inf
  double grid_step;
};

/// Tightens the set to its members with finite divergence to the benchmark:
/// every atom with zero benchmark mass gets its upper bound forced to 0.
/// Throws InfeasibleError (naming the offending atoms) if this empties the
/// feasible slice.
ConstraintSet finite_divergence_subset(const ConstraintSet& set,
                                       const FiniteDistribution& benchmark);

/// The I-projection of the benchmark onto the constraint set: the unique
/// minimizer of I(.||benchmark). Applies finite_divergence_subset
/// internally. Solved by dual bisection on the simplex multiplier with
/// per-coordinate box clamping.
ProjectionResult i_projection(const ConstraintSet& set,
                              const FiniteDistribution& benchmark);

/// The blended posterior: i_projection after finite-divergence tightening.
ProjectionResult blend(const ConstraintSet& set,
                       const FiniteDistribution& benchmark);

/// Independent verification of the game by exhaustive grid search over both
/// players. Restricted to 2 or 3 atoms and grid_step in [1e-5, 1e-1].
GameSolution maximin_bruteforce(const ConstraintSet& set,
                                const FiniteDistribution& benchmark,
                                double grid_step);

}  // namespace blendstat
