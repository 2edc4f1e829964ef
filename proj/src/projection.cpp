#include "blendstat/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace blendstat {

namespace {

constexpr double kFeasibilityEps = 1e-12;

double sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

}  // namespace

ConstraintSet::ConstraintSet(std::vector<std::string> atoms,
                             std::vector<double> lower,
                             std::vector<double> upper)
    : atoms_(std::move(atoms)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (atoms_.empty()) throw DomainError("ConstraintSet: empty atom list");
  if (lower_.size() != atoms_.size() || upper_.size() != atoms_.size()) {
    throw StructuralError("ConstraintSet: bound lists must match atom list length");
  }
  std::set<std::string> seen(atoms_.begin(), atoms_.end());
  if (seen.size() != atoms_.size()) {
    throw DomainError("ConstraintSet: duplicate atom labels");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!(lower_[i] >= 0.0 && lower_[i] <= 1.0) ||
        !(upper_[i] >= 0.0 && upper_[i] <= 1.0)) {
      throw DomainError("ConstraintSet: bounds must lie in [0,1]");
    }
    if (lower_[i] > upper_[i]) {
      std::ostringstream msg;
      msg << "ConstraintSet: lower > upper at atom " << atoms_[i];
      throw DomainError(msg.str());
    }
  }
  if (sum(lower_) > 1.0 + kFeasibilityEps || sum(upper_) < 1.0 - kFeasibilityEps) {
    throw InfeasibleError("ConstraintSet: box does not intersect the simplex");
  }
}

bool ConstraintSet::contains(const FiniteDistribution& p, double slack) const {
  if (p.atoms() != atoms_) {
    throw StructuralError("ConstraintSet::contains: mismatched atom lists");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (p.prob(i) < lower_[i] - slack || p.prob(i) > upper_[i] + slack) {
      return false;
    }
  }
  return true;
}

ConstraintSet finite_divergence_subset(const ConstraintSet& set,
                                       const FiniteDistribution& benchmark) {
  if (benchmark.atoms() != set.atoms()) {
    throw StructuralError("finite_divergence_subset: mismatched atom lists");
  }
  std::vector<double> lower = set.lower();
  std::vector<double> upper = set.upper();
  std::vector<std::string> offending;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (benchmark.prob(i) == 0.0) {
      if (lower[i] > 0.0) {
        offending.push_back(set.atoms()[i]);
      }
      upper[i] = 0.0;
    }
  }
  if (!offending.empty()) {
    std::ostringstream msg;
    msg << "finite_divergence_subset: lower bound forces mass on zero-benchmark atom(s):";
    for (const auto& a : offending) msg << " " << a;
    throw InfeasibleError(msg.str());
  }
  if (sum(upper) < 1.0 - kFeasibilityEps) {
    throw InfeasibleError(
        "finite_divergence_subset: tightened upper bounds sum below 1; "
        "no member has finite divergence to the benchmark");
  }
  return ConstraintSet(set.atoms(), std::move(lower), std::move(upper));
}

namespace {

std::vector<BoundStatus> classify_bounds(const std::vector<double>& p,
                                         const ConstraintSet& set) {
  constexpr double tol = 1e-9;
  std::vector<BoundStatus> status(p.size(), BoundStatus::Interior);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= set.lower()[i] + tol) {
      status[i] = BoundStatus::AtLower;
    } else if (p[i] >= set.upper()[i] - tol) {
      status[i] = BoundStatus::AtUpper;
    }
  }
  return status;
}

ProjectionResult make_result(std::vector<double> probs, const ConstraintSet& set,
                             const FiniteDistribution& benchmark) {
  const double total = sum(probs);
  for (double& v : probs) v /= total;
  auto status = classify_bounds(probs, set);
  FiniteDistribution projection(set.atoms(), std::move(probs));
  return ProjectionResult{projection, kl_divergence(projection, benchmark),
                          std::move(status)};
}

// Binary closed form: I(.||q) is monotone in |p0 - q0| on either side of q0,
// so the minimizer clamps q0 into the feasible interval for the first atom.
ProjectionResult project_binary(const ConstraintSet& set,
                                const FiniteDistribution& benchmark) {
  const double lo = std::max(set.lower()[0], 1.0 - set.upper()[1]);
  const double hi = std::min(set.upper()[0], 1.0 - set.lower()[1]);
  const double p0 = std::clamp(benchmark.prob(0), lo, hi);
  return make_result({p0, 1.0 - p0}, set, benchmark);
}

// Stationarity of sum p ln(p/q) + lambda (sum p - 1) gives p_i proportional
// to q_i; box-clamp each coordinate and bisect the normalization multiplier.
ProjectionResult project_general(const ConstraintSet& set,
                                 const FiniteDistribution& benchmark) {
  const std::size_t n = set.size();
  auto mass_at = [&](double nu, std::vector<double>& p) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = std::clamp(benchmark.prob(i) * nu, set.lower()[i], set.upper()[i]);
      total += p[i];
    }
    return total;
  };

  std::vector<double> p(n);
  double lo = 0.0;
  double hi = 1.0;
  while (mass_at(hi, p) < 1.0 && hi < 1e18) hi *= 2.0;

  constexpr int kMaxIter = 200;
  double total = 0.0;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double nu = 0.5 * (lo + hi);
    total = mass_at(nu, p);
    if (std::fabs(total - 1.0) <= 1e-12) break;
    if (total < 1.0) {
      lo = nu;
    } else {
      hi = nu;
    }
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    // Plateau exactly at the box boundary; fall back to the bracket ends.
    total = mass_at(hi, p);
  }
  return make_result(std::move(p), set, benchmark);
}

}  // namespace

ProjectionResult i_projection(const ConstraintSet& set,
                              const FiniteDistribution& benchmark) {
  const ConstraintSet tightened = finite_divergence_subset(set, benchmark);
  if (tightened.size() == 2) return project_binary(tightened, benchmark);
  return project_general(tightened, benchmark);
}

ProjectionResult blend(const ConstraintSet& set,
                       const FiniteDistribution& benchmark) {
  return i_projection(finite_divergence_subset(set, benchmark), benchmark);
}

namespace {

// Grid candidates over the closure of the box/simplex slice: exact multiples
// of grid_step, every box corner, and the benchmark when feasible.
// Sorted lexicographically; the scan order fixes tie-breaking.
std::vector<std::vector<double>> simplex_candidates(
    const ConstraintSet& set, const FiniteDistribution& benchmark, double h) {
  const std::size_t n = set.size();
  const double eps = 1e-9;
  std::vector<std::vector<double>> out;

  auto in_box = [&](const std::vector<double>& p) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < set.lower()[i] - eps || p[i] > set.upper()[i] + eps) return false;
    }
    return true;
  };
  auto push = [&](std::vector<double> p) {
    for (double& v : p) v = std::clamp(v, 0.0, 1.0);
    if (in_box(p)) out.push_back(std::move(p));
  };

  if (n == 2) {
    const double lo = std::max(set.lower()[0], 1.0 - set.upper()[1]);
    const double hi = std::min(set.upper()[0], 1.0 - set.lower()[1]);
    const long k0 = static_cast<long>(std::ceil(lo / h - eps));
    const long k1 = static_cast<long>(std::floor(hi / h + eps));
    for (long k = k0; k <= k1; ++k) {
      const double p0 = k * h;
      push({p0, 1.0 - p0});
    }
    push({lo, 1.0 - lo});
    push({hi, 1.0 - hi});
    push({benchmark.prob(0), benchmark.prob(1)});
  } else {
    const long m = static_cast<long>(std::llround(1.0 / h));
    for (long i = 0; i * h <= set.upper()[0] + eps; ++i) {
      const double p0 = i * h;
      if (p0 < set.lower()[0] - eps) continue;
      for (long j = 0; i + j <= m; ++j) {
        const double p1 = j * h;
        const double p2 = 1.0 - p0 - p1;
        push({p0, p1, p2});
      }
    }
    // Box corners restricted to the simplex: fix two coordinates at bounds.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        const std::size_t c = 3 - a - b;
        for (double va : {set.lower()[a], set.upper()[a]}) {
          for (double vb : {set.lower()[b], set.upper()[b]}) {
            const double vc = 1.0 - va - vb;
            if (vc < -eps || vc > 1.0 + eps) continue;
            std::vector<double> p(n);
            p[a] = va;
            p[b] = vb;
            p[c] = vc;
            push(std::move(p));
          }
        }
      }
    }
    push(benchmark.probs());
  }

  std::sort(out.begin(), out.end());
  const double dedup = h * 1e-6;
  auto near = [&](const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < n; ++i) {
      if (std::fabs(a[i] - b[i]) > dedup) return false;
    }
    return true;
  };
  out.erase(std::unique(out.begin(), out.end(), near), out.end());
  return out;
}

}  // namespace

GameSolution maximin_bruteforce(const ConstraintSet& set,
                                const FiniteDistribution& benchmark,
                                double grid_step) {
  if (set.size() != 2 && set.size() != 3) {
    throw DomainError("maximin_bruteforce: only 2 or 3 atoms supported");
  }
  if (!(grid_step >= 1e-5 && grid_step <= 1e-1)) {
    throw DomainError("maximin_bruteforce: grid_step must lie in [1e-5, 1e-1]");
  }
  if (benchmark.atoms() != set.atoms()) {
    throw StructuralError("maximin_bruteforce: mismatched atom lists");
  }
  const ConstraintSet tightened = finite_divergence_subset(set, benchmark);
  const auto candidates = simplex_candidates(tightened, benchmark, grid_step);
  const std::size_t n = set.size();
  const std::size_t m = candidates.size();
  const double neg_inf = -std::numeric_limits<double>::infinity();

  // base[k] = I(P_k||benchmark) - sum_i P_k(i) ln P_k(i); the Q-dependent
  // part of the gain is then sum_i P_k(i) ln q_i.
  std::vector<double> base(m);
  for (std::size_t k = 0; k < m; ++k) {
    double a = 0.0;
    double negent = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double pi = candidates[k][i];
      if (pi == 0.0) continue;
      a += pi * std::log(pi / benchmark.prob(i));
      negent += pi * std::log(pi);
    }
    base[k] = a - negent;
  }

  auto inner_inf = [&](const std::vector<double>& q, std::size_t* argmin) {
    std::vector<double> lq(n);
    bool q_full_support = true;
    for (std::size_t i = 0; i < n; ++i) {
      lq[i] = q[i] > 0.0 ? std::log(q[i]) : neg_inf;
      if (q[i] == 0.0) q_full_support = false;
    }
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < m; ++k) {
      double g;
      if (q_full_support) {
        g = base[k];
        for (std::size_t i = 0; i < n; ++i) g += candidates[k][i] * lq[i];
      } else {
        g = base[k];
        for (std::size_t i = 0; i < n; ++i) {
          const double pi = candidates[k][i];
          if (pi == 0.0) continue;
          if (q[i] == 0.0) {
            g = neg_inf;
            break;
          }
          g += pi * lq[i];
        }
      }
      if (g < best) {
        best = g;
        best_k = k;
      }
    }
    if (argmin) *argmin = best_k;
    return best;
  };

  double best_value = neg_inf;
  std::size_t best_q = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double v = inner_inf(candidates[j], nullptr);
    if (v > best_value) {
      best_value = v;
      best_q = j;
    }
  }
  std::size_t worst_p = 0;
  inner_inf(candidates[best_q], &worst_p);

  auto to_dist = [&](const std::vector<double>& p) {
    std::vector<double> v = p;
    const double total = sum(v);
    for (double& x : v) x /= total;
    return FiniteDistribution(set.atoms(), std::move(v));
  };
  return GameSolution{best_value, to_dist(candidates[best_q]),
                      to_dist(candidates[worst_p]), grid_step};
}

}  // namespace blendstat
