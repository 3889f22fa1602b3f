// Copyright the qhamming developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end.  All results go to stdout as deterministic JSON;
// errors go to stderr as {"error": ...}.  Exit codes: 0 success, 1 failed
// verification, 2 invalid input, 3 convergence not reached.
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

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

namespace {

using namespace qhm;

void emit(const Json& j) { std::cout << dump_deterministic(j); }

void emit_error(const std::string& message) {
  Json j;
  j["error"] = message;
  std::cerr << dump_deterministic(j);
}

void write_output(const Json& j, const std::string& path) {
  if (path == "-") {
    emit(j);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file '" + path + "'");
  out << dump_deterministic(j);
}

double resolve_tol(const CLI::Option* tol_opt, double flag_value) {
  if (tol_opt->count() > 0) {
    if (!(flag_value > 0)) throw ValidationError("--tol must be positive");
    return flag_value;
  }
  if (const char* env = std::getenv("QHAMMING_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
      throw ValidationError("QHAMMING_TOL must be a positive number");
    return v;
  }
  return 1e-6;
}

InstanceFile load(const std::string& path, const std::string& expected_kind) {
  InstanceFile inst = read_instance_file(path);
  if (inst.kind != expected_kind)
    throw ValidationError("instance kind '" + inst.kind + "' does not match command (expected '" +
                          expected_kind + "')");
  return inst;
}

ProductSpace product_from_payload(const Json& payload) {
  if (payload.contains("factors")) {
    std::vector<FiniteMetricSpace> factors;
    for (const auto& f : payload.at("factors")) factors.push_back(metric_space_from_json(f));
    return make_product(std::move(factors));
  }
  if (payload.contains("alphabet_sizes")) {
    std::vector<int> sizes;
    for (const auto& v : payload.at("alphabet_sizes")) {
      if (!v.is_number_integer()) throw ValidationError("alphabet_sizes must be integers");
      sizes.push_back(v.get<int>());
    }
    return hamming_product(sizes);
  }
  throw ValidationError("payload needs 'factors' or 'alphabet_sizes'");
}

int exit_for_convergence(bool converged) { return converged ? 0 : 3; }

// ------------------------------------------------------------ subcommands ---

int run_classical_lipschitz(const std::string& in) {
  const InstanceFile inst = load(in, "classical-lipschitz");
  const ProductSpace p = product_from_payload(inst.payload);
  const CVec f = cvec_from_json(inst.payload.at("f"));
  if (f.size() != p.points()) throw ValidationError("function length does not match the product size");
  Json out;
  out["value"] = lipschitz(f, p);
  const std::vector<double> parts = partial_lipschitz_all(f, p);
  out["partials"] = parts;
  int arg = 0;
  for (int i = 1; i < static_cast<int>(parts.size()); ++i)
    if (parts[static_cast<size_t>(i)] > parts[static_cast<size_t>(arg)]) arg = i;
  out["max_slot"] = arg + 1;
  emit(out);
  return 0;
}

int run_classical_kantorovich(const std::string& in) {
  const InstanceFile inst = load(in, "classical-kantorovich");
  FiniteMetricSpace space =
      inst.payload.contains("space") ? metric_space_from_json(inst.payload.at("space"))
                                     : product_from_payload(inst.payload).as_metric_space();
  const RVec mu = make_probability(rvec_from_json(inst.payload.at("mu")));
  const RVec nu = make_probability(rvec_from_json(inst.payload.at("nu")));
  emit(kantorovich_to_json(kantorovich(space, mu, nu)));
  return 0;
}

int run_classical_decompose(const std::string& in) {
  const InstanceFile inst = load(in, "classical-decompose");
  const ProductSpace p = product_from_payload(inst.payload);
  const RVec mu = make_probability(rvec_from_json(inst.payload.at("mu")));
  const RVec nu = make_probability(rvec_from_json(inst.payload.at("nu")));
  emit(decomposition_to_json(decomposition_distance(p, mu, nu)));
  return 0;
}

int run_quantum_seminorm(const std::string& in, double tol, bool full, bool chain) {
  const InstanceFile inst = load(in, "quantum-observable");
  const TensorFactorization f = factorization_from_json(inst.payload);
  const Matrix a = matrix_from_json(inst.payload.at("a"));
  if (a.rows() != f.total_dim()) throw ValidationError("observable does not match site_dims");
  TildeOptions opt;
  opt.tol = tol;
  if (chain) {
    const ChainReport rep = seminorm_chain_check(a, f, opt);
    emit(chain_report_to_json(rep));
    return exit_for_convergence(rep.seminorms.converged);
  }
  const SeminormReport rep = quantum_hamming_seminorm(a, f, opt);
  emit(seminorm_report_to_json(rep, full));
  return exit_for_convergence(rep.converged);
}

int run_quantum_w1(const std::string& in, double tol, bool full) {
  const InstanceFile inst = load(in, "quantum-state-pair");
  const TensorFactorization f = factorization_from_json(inst.payload);
  const Matrix rho = make_density(matrix_from_json(inst.payload.at("rho")));
  const Matrix sigma = make_density(matrix_from_json(inst.payload.at("sigma")));
  if (rho.rows() != f.total_dim() || sigma.rows() != f.total_dim())
    throw ValidationError("states do not match site_dims");
  W1Options opt;
  opt.tol = tol;
  const W1Result res = w1(rho, sigma, f, opt);
  emit(w1_result_to_json(res, full));
  return exit_for_convergence(res.converged);
}

int run_quantum_telescope(const std::string& in) {
  const InstanceFile inst = load(in, "quantum-state-pair");
  const TensorFactorization f = factorization_from_json(inst.payload);
  const Matrix rho = make_density(matrix_from_json(inst.payload.at("rho")));
  const Matrix sigma = make_density(matrix_from_json(inst.payload.at("sigma")));
  if (rho.rows() != f.total_dim() || sigma.rows() != f.total_dim())
    throw ValidationError("states do not match site_dims");
  const std::vector<Matrix> xs = telescope_decomposition(rho, sigma, f);
  Json out;
  Json blocks = Json::array();
  double cost = 0.0, sum_residual = 0.0, trace_residual = 0.0;
  Matrix sum = Matrix::Zero(f.total_dim(), f.total_dim());
  for (int k = 1; k <= f.sites(); ++k) {
    const Matrix& x = xs[static_cast<size_t>(k - 1)];
    blocks.push_back(matrix_to_json(x));
    cost += 0.5 * trace_norm(x);
    sum += x;
    trace_residual = std::max(trace_residual, partial_trace_site(x, k, f).cwiseAbs().maxCoeff());
  }
  sum_residual = (sum - (rho - sigma)).cwiseAbs().maxCoeff();
  out["blocks"] = std::move(blocks);
  out["transport_cost_bound"] = cost;
  out["sum_residual"] = sum_residual;
  out["site_trace_residual"] = trace_residual;
  emit(out);
  return 0;
}

int run_quantum_witness(const std::vector<int>& dims, double tol) {
  if (dims.empty()) throw ValidationError("--dims must list at least one site dimension");
  const TensorFactorization f(dims);
  TildeOptions opt;
  opt.tol = tol;
  const WitnessResult res = diameter_witness(f, opt);
  emit(witness_to_json(res));
  return exit_for_convergence(res.report.converged);
}

int run_verify(std::uint64_t seed, double tol, const std::string& suite, const std::vector<int>& sizes) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.tol = tol;
  opt.suite = suite;
  opt.sizes = sizes;
  const VerifyReport rep = run_verification(opt);
  emit(verify_report_to_json(rep));
  return rep.pass ? 0 : 1;
}

int run_gen(const std::string& kind, std::uint64_t seed, const std::string& out_path,
            const std::vector<int>& dims, int slots, int points, const std::vector<int>& alphabet) {
  Rng rng(seed);
  Json payload;
  if (kind == "classical-lipschitz") {
    Json factors = Json::array();
    for (int s = 0; s < slots; ++s)
      factors.push_back(metric_space_to_json(random_metric_space(rng, rng.uniform_int(2, 4))));
    payload["factors"] = std::move(factors);
    long total = 1;
    for (const auto& f : payload.at("factors")) total *= static_cast<long>(f.at("labels").size());
    CVec f(total);
    for (long i = 0; i < total; ++i) f(i) = Cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    payload["f"] = cvec_to_json(f);
  } else if (kind == "classical-kantorovich") {
    payload["space"] = metric_space_to_json(random_metric_space(rng, points));
    payload["mu"] = rvec_to_json(random_probability(rng, points));
    payload["nu"] = rvec_to_json(random_probability(rng, points));
  } else if (kind == "classical-decompose") {
    payload["alphabet_sizes"] = alphabet;
    long total = 1;
    for (int a : alphabet) total *= a;
    payload["mu"] = rvec_to_json(random_probability(rng, static_cast<int>(total)));
    payload["nu"] = rvec_to_json(random_probability(rng, static_cast<int>(total)));
  } else if (kind == "quantum-observable") {
    const TensorFactorization f(dims);
    payload["site_dims"] = dims;
    payload["a"] = matrix_to_json(random_hermitian(rng, f.total_dim()));
  } else if (kind == "quantum-state-pair") {
    const TensorFactorization f(dims);
    payload["site_dims"] = dims;
    payload["rho"] = matrix_to_json(random_density(rng, f.total_dim()));
    payload["sigma"] = matrix_to_json(random_density(rng, f.total_dim()));
  } else {
    throw ValidationError("unknown kind '" + kind +
                          "' (expected classical-lipschitz, classical-kantorovich, "
                          "classical-decompose, quantum-observable, quantum-state-pair)");
  }
  write_output(instance_to_json(kind, std::move(payload)), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified seminorms and transport distances on finite tensor products"};
  app.require_subcommand(1);
  std::function<int()> action;

  // Shared option storage.
  std::string in_path = "-", out_path = "-", suite = "all", kind;
  double tol_flag = 1e-6;
  bool full = false, chain = false;
  std::uint64_t seed = 20260815;
  std::vector<int> dims{2, 2}, sizes, alphabet{2, 2};
  int slots = 2, points = 5;

  CLI::App* classical = app.add_subcommand("classical", "finite metric space computations");
  classical->require_subcommand(1);
  {
    CLI::App* c = classical->add_subcommand("lipschitz", "sum-metric and slot Lipschitz constants");
    c->add_option("--in", in_path, "instance file (kind classical-lipschitz), '-' for stdin");
    c->callback([&]() { action = [&]() { return run_classical_lipschitz(in_path); }; });
  }
  {
    CLI::App* c = classical->add_subcommand("kantorovich", "transport cost between two measures");
    c->add_option("--in", in_path, "instance file (kind classical-kantorovich), '-' for stdin");
    c->callback([&]() { action = [&]() { return run_classical_kantorovich(in_path); }; });
  }
  {
    CLI::App* c = classical->add_subcommand("decompose", "slotwise decomposition transport cost");
    c->add_option("--in", in_path, "instance file (kind classical-decompose), '-' for stdin");
    c->callback([&]() { action = [&]() { return run_classical_decompose(in_path); }; });
  }

  CLI::App* quantum = app.add_subcommand("quantum", "tensor product operator computations");
  quantum->require_subcommand(1);
  {
    CLI::App* c = quantum->add_subcommand("seminorm", "certified site seminorms of an observable");
    c->add_option("--in", in_path, "instance file (kind quantum-observable), '-' for stdin");
    CLI::Option* t = c->add_option("--tol", tol_flag, "target certificate gap");
    c->add_flag("--full", full, "include matrices in the output");
    c->add_flag("--chain", chain, "also check the two-sided comparison chain (Hermitian input)");
    c->callback([&, t]() {
      action = [&, t]() { return run_quantum_seminorm(in_path, resolve_tol(t, tol_flag), full, chain); };
    });
  }
  {
    CLI::App* c = quantum->add_subcommand("w1", "certified transport distance between two states");
    c->add_option("--in", in_path, "instance file (kind quantum-state-pair), '-' for stdin");
    CLI::Option* t = c->add_option("--tol", tol_flag, "target duality gap");
    c->add_flag("--full", full, "include matrices in the output");
    c->callback([&, t]() {
      action = [&, t]() { return run_quantum_w1(in_path, resolve_tol(t, tol_flag), full); };
    });
  }
  {
    CLI::App* c = quantum->add_subcommand("telescope", "interpolating decomposition of a state difference");
    c->add_option("--in", in_path, "instance file (kind quantum-state-pair), '-' for stdin");
    c->callback([&]() { action = [&]() { return run_quantum_telescope(in_path); }; });
  }
  {
    CLI::App* c = quantum->add_subcommand("witness", "diameter witness for a product of sites");
    c->add_option("--dims", dims, "site dimensions, e.g. --dims 2 2 2")->delimiter(',');
    CLI::Option* t = c->add_option("--tol", tol_flag, "target certificate gap");
    c->callback([&, t]() { action = [&, t]() { return run_quantum_witness(dims, resolve_tol(t, tol_flag)); }; });
  }

  {
    CLI::App* c = app.add_subcommand("verify", "run the property battery");
    c->add_option("--seed", seed, "base seed for instance generation");
    CLI::Option* t = c->add_option("--tol", tol_flag, "solver accuracy target");
    c->add_option("--suite", suite, "classical | quantum | dirac | all");
    c->add_option("--sizes", sizes, "restrict to these site/slot counts, e.g. --sizes 2,3")->delimiter(',');
    c->callback([&, t]() {
      action = [&, t]() { return run_verify(seed, resolve_tol(t, tol_flag), suite, sizes); };
    });
  }
  {
    CLI::App* c = app.add_subcommand("gen", "generate a random instance file");
    c->add_option("--kind", kind, "instance kind")->required();
    c->add_option("--seed", seed, "generator seed");
    c->add_option("--out", out_path, "output path, '-' for stdout");
    c->add_option("--dims", dims, "site dimensions for quantum kinds")->delimiter(',');
    c->add_option("--slots", slots, "slot count for classical-lipschitz");
    c->add_option("--points", points, "point count for classical-kantorovich");
    c->add_option("--alphabet", alphabet, "alphabet sizes for classical-decompose")->delimiter(',');
    c->callback([&]() {
      action = [&]() { return run_gen(kind, seed, out_path, dims, slots, points, alphabet); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(std::string("argument error: ") + e.what());
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ValidationError& e) {
    emit_error(e.what());
    return 2;
  } catch (const ConvergenceError& e) {
    emit_error(e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error(std::string("internal error: ") + e.what());
    return 2;
  }
}
