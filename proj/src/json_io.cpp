// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
#include "qhamming/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qhamming/errors.hpp"

namespace qhm {
namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw ValidationError("json: refusing to serialize a non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void dump(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent * depth), ' ');
  const std::string pad_in(static_cast<size_t>(indent * (depth + 1)), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(it.key()).dump() + ": ";
        dump(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Flat arrays of numbers stay on one line; nested ones break.
      bool scalar_only = true;
      for (const auto& v : j) scalar_only = scalar_only && !v.is_structured();
      if (scalar_only) {
        out += "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out += ", ";
          first = false;
          dump(v, out, indent, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump(v, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<std::vector<double>> grid_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ValidationError(std::string(what) + ": expected a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ValidationError(std::string(what) + ": expected rows of numbers");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw ValidationError(std::string(what) + ": expected numeric entries");
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ValidationError(std::string(what) + ": ragged rows");
  return rows;
}

Json grid_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  dump(j, out, indent, 0);
  out += "\n";
  return out;
}

Json matrix_to_json(const Matrix& m) {
  require_square(m, "matrix_to_json");
  Json j;
  j["dim"] = m.rows();
  j["re"] = grid_to_json(m.real());
  if (m.imag().cwiseAbs().maxCoeff() > 0.0) j["im"] = grid_to_json(m.imag());
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const long dim = field(j, "dim", "matrix").is_number_integer() ? field(j, "dim", "matrix").get<long>() : -1;
  if (dim < 1) throw ValidationError("matrix: 'dim' must be a positive integer");
  const auto re = grid_from_json(field(j, "re", "matrix"), "matrix re");
  if (static_cast<long>(re.size()) != dim || static_cast<long>(re.front().size()) != dim)
    throw ValidationError("matrix: 're' shape does not match 'dim'");
  Matrix m(dim, dim);
  for (long i = 0; i < dim; ++i)
    for (long k = 0; k < dim; ++k) m(i, k) = re[static_cast<size_t>(i)][static_cast<size_t>(k)];
  if (j.contains("im")) {
    const auto im = grid_from_json(j.at("im"), "matrix im");
    if (static_cast<long>(im.size()) != dim || static_cast<long>(im.front().size()) != dim)
      throw ValidationError("matrix: 'im' shape does not match 'dim'");
    for (long i = 0; i < dim; ++i)
      for (long k = 0; k < dim; ++k) m(i, k) += Cplx(0.0, im[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  require_finite(m, "matrix");
  return m;
}

Json cvec_to_json(const CVec& v) {
  Json j;
  Json re = Json::array(), im = Json::array();
  bool has_im = false;
  for (long i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
    has_im = has_im || v(i).imag() != 0.0;
  }
  j["re"] = std::move(re);
  if (has_im) j["im"] = std::move(im);
  return j;
}

CVec cvec_from_json(const Json& j) {
  const Json& re = field(j, "re", "function");
  if (!re.is_array() || re.empty()) throw ValidationError("function: 're' must be a non-empty array");
  CVec v(static_cast<long>(re.size()));
  for (long i = 0; i < v.size(); ++i) {
    if (!re.at(static_cast<size_t>(i)).is_number()) throw ValidationError("function: 're' entries must be numbers");
    v(i) = re.at(static_cast<size_t>(i)).get<double>();
  }
  if (j.contains("im")) {
    const Json& im = j.at("im");
    if (!im.is_array() || static_cast<long>(im.size()) != v.size())
      throw ValidationError("function: 'im' must match 're' in length");
    for (long i = 0; i < v.size(); ++i) {
      if (!im.at(static_cast<size_t>(i)).is_number()) throw ValidationError("function: 'im' entries must be numbers");
      v(i) += Cplx(0.0, im.at(static_cast<size_t>(i)).get<double>());
    }
  }
  return v;
}

Json rvec_to_json(const RVec& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

RVec rvec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("vector: expected a non-empty numeric array");
  RVec v(static_cast<long>(j.size()));
  for (long i = 0; i < v.size(); ++i) {
    if (!j.at(static_cast<size_t>(i)).is_number()) throw ValidationError("vector: entries must be numbers");
    v(i) = j.at(static_cast<size_t>(i)).get<double>();
  }
  return v;
}

Json real_matrix_to_json(const RealMatrix& m) { return grid_to_json(m); }

RealMatrix real_matrix_from_json(const Json& j) {
  const auto rows = grid_from_json(j, "real matrix");
  RealMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows.front().size()));
  for (long i = 0; i < m.rows(); ++i)
    for (long k = 0; k < m.cols(); ++k) m(i, k) = rows[static_cast<size_t>(i)][static_cast<size_t>(k)];
  return m;
}

Json metric_space_to_json(const FiniteMetricSpace& s) {
  Json j;
  j["labels"] = s.labels;
  j["dist"] = grid_to_json(s.dist);
  return j;
}

FiniteMetricSpace metric_space_from_json(const Json& j) {
  const Json& labels = field(j, "labels", "metric space");
  if (!labels.is_array() || labels.empty()) throw ValidationError("metric space: 'labels' must be a non-empty array");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw ValidationError("metric space: labels must be strings");
    names.push_back(l.get<std::string>());
  }
  return make_metric_space(std::move(names), real_matrix_from_json(field(j, "dist", "metric space")));
}

Json factorization_to_json(const TensorFactorization& f) {
  Json j;
  j["site_dims"] = f.site_dims();
  return j;
}

TensorFactorization factorization_from_json(const Json& j) {
  const Json& dims = field(j, "site_dims", "factorization");
  if (!dims.is_array() || dims.empty())
    throw ValidationError("factorization: 'site_dims' must be a non-empty array");
  std::vector<int> d;
  for (const auto& v : dims) {
    if (!v.is_number_integer()) throw ValidationError("factorization: site dimensions must be integers");
    d.push_back(v.get<int>());
  }
  return TensorFactorization(std::move(d));
}

InstanceFile instance_from_json(const Json& j) {
  InstanceFile f;
  const Json& kind = field(j, "kind", "instance");
  if (!kind.is_string()) throw ValidationError("instance: 'kind' must be a string");
  f.kind = kind.get<std::string>();
  const Json& ver = field(j, "schema_version", "instance");
  if (!ver.is_number_integer() || ver.get<int>() != 1)
    throw ValidationError("instance: unsupported schema_version (expected 1)");
  f.payload = field(j, "payload", "instance");
  return f;
}

Json instance_to_json(const std::string& kind, Json payload) {
  Json j;
  j["kind"] = kind;
  j["schema_version"] = 1;
  j["payload"] = std::move(payload);
  return j;
}

InstanceFile read_instance(std::istream& in) {
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("instance: malformed json: ") + e.what());
  }
  return instance_from_json(j);
}

InstanceFile read_instance_file(const std::string& path) {
  if (path == "-") return read_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw ValidationError("instance: cannot open '" + path + "'");
  return read_instance(in);
}

Json certificate_to_json(const DistanceCertificate& c, bool full) {
  Json j;
  j["value"] = c.value;
  j["lower_bound"] = c.lower_bound;
  j["gap"] = c.gap;
  j["converged"] = c.converged;
  j["iterations"] = c.iterations;
  if (full) {
    j["primal_point"] = matrix_to_json(c.primal_point);
    j["dual_witness"] = matrix_to_json(c.dual_witness);
  }
  return j;
}

Json seminorm_report_to_json(const SeminormReport& r, bool full) {
  Json j;
  j["value"] = r.value;
  j["lower"] = r.lower;
  j["l0"] = r.l0;
  j["max_gap"] = r.max_gap;
  j["converged"] = r.converged;
  Json sites = Json::array();
  for (const auto& s : r.sites) {
    Json e = certificate_to_json(s.cert, full);
    e["site"] = s.site;
    sites.push_back(std::move(e));
  }
  j["sites"] = std::move(sites);
  return j;
}

Json chain_report_to_json(const ChainReport& r) {
  Json j;
  j["two_l0"] = r.two_l0;
  j["sum_li"] = r.sum_li;
  j["n_lqh"] = r.n_lqh;
  j["two_n_l0"] = r.two_n_l0;
  j["slack_budget"] = r.slack_budget;
  j["worst_violation"] = r.worst_violation;
  j["holds"] = r.holds;
  j["seminorms"] = seminorm_report_to_json(r.seminorms, false);
  return j;
}

Json witness_to_json(const WitnessResult& w) {
  Json j;
  j["seminorm"] = w.seminorm;
  j["lower_bound"] = w.lower_bound;
  j["observable"] = matrix_to_json(w.observable);
  j["rho_mu"] = matrix_to_json(w.rho_mu);
  j["rho_nu"] = matrix_to_json(w.rho_nu);
  j["report"] = seminorm_report_to_json(w.report, false);
  return j;
}

Json w1_result_to_json(const W1Result& r, bool full) {
  Json j;
  j["value"] = r.value;
  j["primal_value"] = r.primal_value;
  j["dual_value"] = r.dual_value;
  j["gap"] = r.gap;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  if (full) {
    Json blocks = Json::array();
    for (const auto& x : r.decomposition) blocks.push_back(matrix_to_json(x));
    j["decomposition"] = std::move(blocks);
    j["dual_observable"] = matrix_to_json(r.dual_observable);
  }
  return j;
}

Json kantorovich_to_json(const KantorovichResult& r) {
  Json j;
  j["value"] = r.value;
  j["coupling"] = grid_to_json(r.coupling);
  j["potential"] = rvec_to_json(r.potential);
  return j;
}

Json decomposition_to_json(const DecompositionResult& r) {
  Json j;
  j["value"] = r.value;
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back(rvec_to_json(c));
  j["components"] = std::move(comps);
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["seconds"] = r.seconds;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["suite"] = c.suite;
    e["law"] = c.law;
    e["instances"] = c.instances;
    e["max_violation"] = c.max_violation;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    e["seconds"] = c.seconds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace qhm
