// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qhamming/errors.hpp"
#include "qhamming/json_io.hpp"
#include "qhamming/quotient.hpp"
#include "qhamming/rng.hpp"
#include "qhamming/tensor.hpp"
#include "qhamming/verify.hpp"

using namespace qhm;

TEST_SUITE("json") {
  TEST_CASE("matrix payloads round-trip exactly") {
    Rng rng(91);
    const Matrix m = random_matrix(rng, 3, 3);
    CHECK((matrix_from_json(matrix_to_json(m)) - m).norm() == 0.0);
    const Matrix h = random_hermitian(rng, 2);
    CHECK((matrix_from_json(matrix_to_json(h)) - h).norm() == 0.0);
    const CVec v = random_state(rng, 5);
    CHECK((cvec_from_json(cvec_to_json(v)) - v).norm() == 0.0);
    RVec r(3);
    r << 0.25, -1.5, 3.0;
    CHECK((rvec_from_json(rvec_to_json(r)) - r).norm() == 0.0);
    RealMatrix rm(2, 2);
    rm << 0, 1, 1, 0;
    CHECK((real_matrix_from_json(real_matrix_to_json(rm)) - rm).norm() == 0.0);
  }

  TEST_CASE("real payloads omit the imaginary block") {
    RealMatrix rm(2, 2);
    rm << 0, 1, 1, 0;
    Matrix m = rm.cast<Cplx>();
    const Json j = matrix_to_json(m);
    CHECK_FALSE(j.contains("im"));
    m(0, 1) = Cplx(1.0, 0.5);
    CHECK(matrix_to_json(m).contains("im"));
  }

  TEST_CASE("deterministic dump is byte-stable and key-order independent") {
    Json a;
    a["beta"] = 2.0 / 3.0;
    a["alpha"] = 1;
    Json b;
    b["alpha"] = 1;
    b["beta"] = 2.0 / 3.0;
    CHECK(dump_deterministic(a) == dump_deterministic(b));
    CHECK(dump_deterministic(a) == dump_deterministic(a));
    // Non-finite numbers are rejected rather than serialized as null.
    Json bad;
    bad["x"] = std::nan("");
    CHECK_THROWS_AS(dump_deterministic(bad), ValidationError);
  }

  TEST_CASE("metric spaces and factorizations validate on the way in") {
    const FiniteMetricSpace s = complete_graph(3);
    const FiniteMetricSpace back = metric_space_from_json(metric_space_to_json(s));
    CHECK(back.labels == s.labels);
    CHECK((back.dist - s.dist).norm() == 0.0);
    Json bad = metric_space_to_json(s);
    bad["dist"][0][1] = -1.0;  // negative distance
    CHECK_THROWS_AS(metric_space_from_json(bad), ValidationError);

    const TensorFactorization f({2, 3});
    CHECK(factorization_from_json(factorization_to_json(f)) == f);
    Json badf;
    badf["site_dims"] = {2, 0};
    CHECK_THROWS_AS(factorization_from_json(badf), ValidationError);
  }

  TEST_CASE("instance envelopes carry kind and schema version") {
    Json payload;
    payload["site_dims"] = {2, 2};
    const Json j = instance_to_json("quantum-observable", payload);
    CHECK(j["schema_version"] == 1);
    const InstanceFile inst = instance_from_json(j);
    CHECK(inst.kind == "quantum-observable");
    CHECK(inst.payload["site_dims"][0] == 2);

    std::istringstream in(dump_deterministic(j));
    CHECK(read_instance(in).kind == "quantum-observable");

    Json bad = j;
    bad["schema_version"] = 99;
    CHECK_THROWS_AS(instance_from_json(bad), ValidationError);
    Json nokind = j;
    nokind.erase("kind");
    CHECK_THROWS_AS(instance_from_json(nokind), ValidationError);
  }

  TEST_CASE("result payloads expose the certified fields") {
    Rng rng(92);
    const TensorFactorization f({2, 2});
    const DistanceCertificate c = dist_to_tilde(random_hermitian(rng, 4), 1, f);
    const Json slim = certificate_to_json(c, false);
    CHECK(slim.contains("value"));
    CHECK(slim.contains("lower_bound"));
    CHECK(slim.contains("gap"));
    CHECK(slim.contains("converged"));
    CHECK_FALSE(slim.contains("primal_point"));
    const Json full = certificate_to_json(c, true);
    CHECK((matrix_from_json(full["primal_point"]) - c.primal_point).norm() == 0.0);
    CHECK((matrix_from_json(full["dual_witness"]) - c.dual_witness).norm() == 0.0);
  }

  TEST_CASE("verify reports serialize one line per law") {
    VerifyOptions opt;
    opt.suite = "classical";
    opt.sizes = {2};
    const VerifyReport rep = run_verification(opt);
    const Json j = verify_report_to_json(rep);
    CHECK(j["suite"] == "classical");
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() == rep.checks.size());
    for (const auto& c : j["checks"]) {
      CHECK(c.contains("name"));
      CHECK(c.contains("law"));
      CHECK(c.contains("max_violation"));
      CHECK(c.contains("tolerance"));
      CHECK(c.contains("pass"));
    }
    CHECK(j["pass"].is_boolean());
  }
}
