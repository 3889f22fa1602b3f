// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#ifndef QHAMMING_JSON_IO_HPP
#define QHAMMING_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "qhamming/hamming.hpp"
#include "qhamming/kantorovich.hpp"
#include "qhamming/metric.hpp"
#include "qhamming/quotient.hpp"
#include "qhamming/tensor.hpp"
#include "qhamming/verify.hpp"
#include "qhamming/wasserstein.hpp"

namespace qhm {

using Json = nlohmann::json;

//! Byte-stable serialization: keys sorted (nlohmann's default object is an
//! ordered map), floating point printed with 12 significant digits.  Two
//! runs on the same inputs produce identical bytes.  Non-finite numbers are
//! rejected.
std::string dump_deterministic(const Json& j, int indent = 2);

// -------------------------------------------------------- basic payloads ---

//! matrix: {"dim": n, "re": [[...]], "im": [[...]] (optional)}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

//! function: {"re": [...], "im": [...] (optional)}
Json cvec_to_json(const CVec& v);
CVec cvec_from_json(const Json& j);

Json rvec_to_json(const RVec& v);
RVec rvec_from_json(const Json& j);

Json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

//! metric space: {"labels": [...], "dist": [[...]]}
Json metric_space_to_json(const FiniteMetricSpace& s);
FiniteMetricSpace metric_space_from_json(const Json& j);

//! factorization: {"site_dims": [...]}
Json factorization_to_json(const TensorFactorization& f);
TensorFactorization factorization_from_json(const Json& j);

// --------------------------------------------------------- instance files ---

//! On-disk envelope: {"kind": ..., "schema_version": 1, "payload": {...}}.
struct InstanceFile {
  std::string kind;
  Json payload;
};

InstanceFile instance_from_json(const Json& j);
Json instance_to_json(const std::string& kind, Json payload);
InstanceFile read_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);  // "-" reads stdin

// --------------------------------------------------------------- results ---

Json certificate_to_json(const DistanceCertificate& c, bool full);
Json seminorm_report_to_json(const SeminormReport& r, bool full);
Json chain_report_to_json(const ChainReport& r);
Json witness_to_json(const WitnessResult& w);
Json w1_result_to_json(const W1Result& r, bool full);
Json kantorovich_to_json(const KantorovichResult& r);
Json decomposition_to_json(const DecompositionResult& r);
Json verify_report_to_json(const VerifyReport& r);

}  // namespace qhm

#endif
