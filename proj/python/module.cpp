#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "blendstat/confidence.hpp"
#include "blendstat/distribution.hpp"
#include "blendstat/projection.hpp"
#include "blendstat/testing.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> default_atoms(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::to_string(i));
  return atoms;
}

double extended_to_double(const blendstat::ExtendedReal& v) {
  return v.is_infinite() ? std::numeric_limits<double>::infinity() : v.value();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Blended Bayesian-frequentist inference";

  py::register_exception<blendstat::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<blendstat::StructuralError>(m, "StructuralError",
                                                     PyExc_ValueError);
  py::register_exception<blendstat::InfeasibleError>(m, "InfeasibleError",
                                                     PyExc_RuntimeError);

  m.def(
      "kl_divergence",
      [](const std::vector<double>& p, const std::vector<double>& q) {
        const auto atoms = default_atoms(p.size());
        return extended_to_double(
            blendstat::kl_divergence(blendstat::FiniteDistribution(atoms, p),
                                     blendstat::FiniteDistribution(atoms, q)));
      },
      py::arg("p"), py::arg("q"),
      "I(p||q) in nats; math.inf on absolute-continuity failure.");

  m.def(
      "blend",
      [](const std::vector<double>& lower, const std::vector<double>& upper,
         const std::vector<double>& benchmark) {
        const auto atoms = default_atoms(benchmark.size());
        const auto result = blendstat::blend(
            blendstat::ConstraintSet(atoms, lower, upper),
            blendstat::FiniteDistribution(atoms, benchmark));
        py::dict out;
        out["projection"] = result.projection.probs();
        out["divergence"] = extended_to_double(result.divergence_to_benchmark);
        return out;
      },
      py::arg("lower"), py::arg("upper"), py::arg("benchmark"),
      "I-projection of the benchmark onto the box-constrained posterior set.");

  m.def(
      "maximin_bruteforce",
      [](const std::vector<double>& lower, const std::vector<double>& upper,
         const std::vector<double>& benchmark, double grid_step) {
        const auto atoms = default_atoms(benchmark.size());
        const auto game = blendstat::maximin_bruteforce(
            blendstat::ConstraintSet(atoms, lower, upper),
            blendstat::FiniteDistribution(atoms, benchmark), grid_step);
        py::dict out;
        out["value"] = game.value;
        out["statistician"] = game.statistician.probs();
        out["worst_case_nature"] = game.worst_case_nature.probs();
        out["grid_step"] = game.grid_step;
        return out;
      },
      py::arg("lower"), py::arg("upper"), py::arg("benchmark"),
      py::arg("grid_step") = 1e-4,
      "Exhaustive grid solution of the maximin inferential-gain game.");

  m.def("sellke_bound", &blendstat::sellke_bound, py::arg("p"),
        "Bayes-factor lower bound: -e p ln p for p < 1/e, else 1.");

  m.def(
      "lfdr_lower_bound",
      [](double p, double pi0) {
        return blendstat::lfdr_lower_bound(blendstat::TestInput(p, pi0));
      },
      py::arg("p"), py::arg("pi0_lower"));

  m.def(
      "blended_null_probability",
      [](double p, double pi0) {
        const auto r =
            blendstat::blended_null_probability(blendstat::TestInput(p, pi0));
        py::dict out;
        out["blended"] = r.blended_null_prob;
        out["lfdr_lower"] = r.lfdr_lower;
        out["sellke"] = r.bayes_factor_lower;
        out["regime"] = blendstat::to_string(r.regime);
        return out;
      },
      py::arg("p"), py::arg("pi0_lower"),
      "max(p, lfdr lower bound) with regime diagnostics.");

  m.def(
      "maxent_alternative",
      [](double p, double pi0) {
        return blendstat::maxent_alternative(blendstat::TestInput(p, pi0));
      },
      py::arg("p"), py::arg("pi0_lower"));

  m.def("t_cdf", &blendstat::t_cdf, py::arg("t"), py::arg("df"));

  m.def(
      "two_sided_p",
      [](double estimate, double std_error, double df) {
        return blendstat::two_sided_p(
            blendstat::LocationModel(estimate, std_error, df));
      },
      py::arg("estimate"), py::arg("std_error"), py::arg("df"));

  m.def(
      "confidence_interval",
      [](double estimate, double std_error, double df, double alpha, double beta) {
        const blendstat::SignificanceFunction sf(
            blendstat::LocationModel(estimate, std_error, df));
        const auto iv = blendstat::confidence_interval(sf, alpha, beta);
        return py::make_tuple(iv.lo, iv.hi);
      },
      py::arg("estimate"), py::arg("std_error"), py::arg("df"), py::arg("alpha"),
      py::arg("beta"));
}
