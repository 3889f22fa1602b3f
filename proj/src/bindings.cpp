// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
//
// Python module.  Report-shaped results are returned as JSON strings (the
// same deterministic serialization the CLI prints) and unpacked into dicts
// by the pure-python wrapper; matrices cross the boundary as numpy arrays.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhamming/dirac.hpp"
#include "qhamming/errors.hpp"
#include "qhamming/hamming.hpp"
#include "qhamming/json_io.hpp"
#include "qhamming/kantorovich.hpp"
#include "qhamming/metric.hpp"
#include "qhamming/quotient.hpp"
#include "qhamming/tensor.hpp"
#include "qhamming/verify.hpp"
#include "qhamming/wasserstein.hpp"

namespace py = pybind11;
using namespace qhm;

namespace {

FiniteMetricSpace space_from_dist(const RealMatrix& dist) {
  std::vector<std::string> labels;
  for (long i = 0; i < dist.rows(); ++i) labels.push_back(std::to_string(i));
  return make_metric_space(std::move(labels), dist);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "certified seminorms and transport distances on finite tensor products";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("version", []() { return std::string("0.1.0"); });

  // ------------------------------------------------------------- classical
  m.def(
      "hamming_lipschitz",
      [](const CVec& f, const std::vector<int>& alphabet_sizes) {
        const ProductSpace p = hamming_product(alphabet_sizes);
        if (f.size() != p.points()) throw ValidationError("function length does not match the product size");
        return py::make_tuple(lipschitz(f, p), partial_lipschitz_all(f, p));
      },
      py::arg("f"), py::arg("alphabet_sizes"),
      "Sum-metric Lipschitz constant and per-slot constants on a hamming product.");

  m.def(
      "kantorovich_value",
      [](const RealMatrix& dist, const RVec& mu, const RVec& nu) {
        return kantorovich(space_from_dist(dist), make_probability(mu), make_probability(nu)).value;
      },
      py::arg("dist"), py::arg("mu"), py::arg("nu"),
      "Least transport cost between two probability vectors on a finite metric space.");

  m.def(
      "decomposition_value",
      [](const std::vector<int>& alphabet_sizes, const RVec& mu, const RVec& nu) {
        return decomposition_distance(hamming_product(alphabet_sizes), make_probability(mu),
                                      make_probability(nu))
            .value;
      },
      py::arg("alphabet_sizes"), py::arg("mu"), py::arg("nu"),
      "Hamming transport cost through the slotwise decomposition program.");

  // --------------------------------------------------------------- quantum
  m.def(
      "seminorm_json",
      [](const Matrix& a, const std::vector<int>& site_dims, double tol) {
        const TensorFactorization f(site_dims);
        if (a.rows() != f.total_dim()) throw ValidationError("observable does not match site_dims");
        TildeOptions opt;
        opt.tol = tol;
        return dump_deterministic(seminorm_report_to_json(quantum_hamming_seminorm(a, f, opt), false));
      },
      py::arg("a"), py::arg("site_dims"), py::arg("tol") = 1e-6);

  m.def(
      "dist_to_tilde_json",
      [](const Matrix& a, int site, const std::vector<int>& site_dims, double tol) {
        TildeOptions opt;
        opt.tol = tol;
        return dump_deterministic(certificate_to_json(dist_to_tilde(a, site, TensorFactorization(site_dims), opt), false));
      },
      py::arg("a"), py::arg("site"), py::arg("site_dims"), py::arg("tol") = 1e-6);

  m.def(
      "w1_json",
      [](const Matrix& rho, const Matrix& sigma, const std::vector<int>& site_dims, double tol) {
        W1Options opt;
        opt.tol = tol;
        return dump_deterministic(
            w1_result_to_json(w1(make_density(rho), make_density(sigma), TensorFactorization(site_dims), opt), false));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("site_dims"), py::arg("tol") = 1e-4);

  m.def(
      "telescope",
      [](const Matrix& rho, const Matrix& sigma, const std::vector<int>& site_dims) {
        return telescope_decomposition(make_density(rho), make_density(sigma), TensorFactorization(site_dims));
      },
      py::arg("rho"), py::arg("sigma"), py::arg("site_dims"),
      "Interpolating decomposition of rho - sigma into site-traceless blocks.");

  m.def(
      "witness_json",
      [](const std::vector<int>& site_dims, double tol) {
        TildeOptions opt;
        opt.tol = tol;
        return dump_deterministic(witness_to_json(diameter_witness(TensorFactorization(site_dims), opt)));
      },
      py::arg("site_dims"), py::arg("tol") = 1e-6);

  m.def(
      "verify_json",
      [](std::uint64_t seed, double tol, const std::string& suite, const std::vector<int>& sizes) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.tol = tol;
        opt.suite = suite;
        opt.sizes = sizes;
        return dump_deterministic(verify_report_to_json(run_verification(opt)));
      },
      py::arg("seed") = 20260815, py::arg("tol") = 1e-6, py::arg("suite") = "all",
      py::arg("sizes") = std::vector<int>{});
}
