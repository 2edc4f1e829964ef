#include "blendstat/confidence.hpp"

#include <cmath>
#include <sstream>

namespace blendstat {

namespace {

constexpr int kMaxLentzIter = 300;
constexpr double kLentzTol = 1e-14;
constexpr double kTiny = 1e-300;

// Continued fraction for the regularized incomplete beta function,
// modified Lentz evaluation.
double beta_cont_frac(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxLentzIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kLentzTol) return h;
  }
  throw DomainError("incomplete beta: continued fraction did not converge");
}

double reg_inc_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cont_frac(a, b, x) / a;
  }
  return 1.0 - bt * beta_cont_frac(b, a, 1.0 - x) / b;
}

}  // namespace

LocationModel::LocationModel(double est, double se, double dof)
    : estimate(est), std_error(se), df(dof) {
  if (!std::isfinite(est)) throw DomainError("LocationModel: estimate not finite");
  if (!(se > 0.0) || !std::isfinite(se)) {
    throw DomainError("LocationModel: std_error must be positive");
  }
  if (!(dof > 0.0) || !std::isfinite(dof)) {
    throw DomainError("LocationModel: df must be positive");
  }
}

double t_cdf(double t, double df) {
  if (!(df > 0.0)) throw DomainError("t_cdf: df must be positive");
  if (!std::isfinite(t)) throw DomainError("t_cdf: t must be finite");
  if (t == 0.0) return 0.5;
  // Symmetry keeps the tail computation in the well-conditioned branch.
  if (t < 0.0) return 1.0 - t_cdf(-t, df);
  const double x = df / (df + t * t);
  return 1.0 - 0.5 * reg_inc_beta(0.5 * df, 0.5, x);
}

double SignificanceFunction::operator()(double theta) const {
  return t_cdf((theta - model_.estimate) / model_.std_error, model_.df);
}

double significance(const SignificanceFunction& sf, double theta) {
  return sf(theta);
}

namespace {

// Monotone bisection for S^-1(u); S is a strictly increasing distribution
// function, so an expanding bracket always succeeds.
double invert_significance(const SignificanceFunction& sf, double u) {
  const LocationModel& m = sf.model();
  if (u == 0.5) return m.estimate;
  double w = 10.0 * m.std_error;
  double lo = m.estimate - w;
  double hi = m.estimate + w;
  while (sf(lo) > u) {
    w *= 2.0;
    lo = m.estimate - w;
  }
  while (sf(hi) < u) {
    w *= 2.0;
    hi = m.estimate + w;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (sf(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Interval confidence_interval(const SignificanceFunction& sf, double alpha,
                             double beta) {
  if (!(alpha >= 0.0 && beta <= 1.0)) {
    throw DomainError("confidence_interval: levels outside [0,1]");
  }
  if (alpha > beta) {
    throw DomainError("confidence_interval: alpha > beta");
  }
  if (alpha == 0.0 || alpha == 1.0 || beta == 0.0 || beta == 1.0) {
    throw DomainError(
        "confidence_interval: level 0 or 1 gives an unbounded endpoint");
  }
  return Interval{invert_significance(sf, alpha), invert_significance(sf, beta)};
}

double two_sided_p(const LocationModel& model) {
  const double t_ratio = std::fabs(model.estimate) / model.std_error;
  return 2.0 * (1.0 - t_cdf(t_ratio, model.df));
}

BinaryConfidencePosterior confidence_posterior_null(const LocationModel& model) {
  const double p = two_sided_p(model);
  return BinaryConfidencePosterior{p, 1.0 - p};
}

}  // namespace blendstat
