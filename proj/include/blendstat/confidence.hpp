#pragma once

#include "blendstat/errors.hpp"

namespace blendstat {

/// Scalar location model with a Student-t pivot: an estimate, its standard
/// error, and the degrees of freedom. Non-integer df accepted.
struct LocationModel {
  LocationModel(double estimate, double std_error, double df);

  double estimate;
  double std_error;
  double df;
};

struct Interval {
  double lo;
  double hi;
};

struct BinaryConfidencePosterior {
  double null_prob;
  double alt_prob;
};

/// Student-t CDF via the regularized incomplete beta function
/// (continued-fraction evaluation). Valid for all df > 0.
double t_cdf(double t, double df);

/// Significance function of the t location model: S(theta; x), a
/// distribution function in theta from which p-values and confidence
/// intervals are both read.
class SignificanceFunction {
 public:
  explicit SignificanceFunction(LocationModel model) : model_(model) {}
  const LocationModel& model() const { return model_; }

  /// S(theta; x) = t_cdf((theta - estimate)/std_error, df).
  double operator()(double theta) const;

 private:
  LocationModel model_;
};

double significance(const SignificanceFunction& sf, double theta);

/// [S^-1(alpha), S^-1(beta)]: a (beta - alpha)100% confidence interval,
/// found by monotone bisection to 1e-10 in theta. Requires
/// 0 < alpha <= beta < 1 except for the degenerate alpha == beta case.
Interval confidence_interval(const SignificanceFunction& sf, double alpha,
                             double beta);

/// Two-sided p-value 2(1 - t_cdf(|estimate|/std_error, df)); equals the
/// significance of the folded parameter |theta| at 0.
double two_sided_p(const LocationModel& model);

/// The binary confidence posterior over {null, alternative}: null mass is
/// the two-sided p-value. This is the benchmark fed to the blending game.
BinaryConfidencePosterior confidence_posterior_null(const LocationModel& model);

}  // namespace blendstat
