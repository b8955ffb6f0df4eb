// Command-line front end: frame validation, comparative indices of frame
// pairs, cyclic sums of frame chains, Kashiwara indices, and focal-point
// counts of discrete symplectic systems, over small JSON input files.
//
// Exit codes: 0 success, 1 a computed identity or verdict failed,
// 2 invocation / input errors.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compidx/comparative_index.hpp"
#include "compidx/cyclic_sums.hpp"
#include "compidx/discrete_systems.hpp"
#include "compidx/frames.hpp"
#include "compidx/kashiwara.hpp"
#include "compidx/linalg.hpp"
#include "compidx/verification.hpp"

namespace {

using compidx::Matrix;
using nlohmann::json;
using nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  double tol_rank = 1e-12;
  double eig_kappa = 100.0;
  std::uint64_t seed = 12345;
  bool json_output = false;

  compidx::ToleranceProfile tol() const { return {tol_rank, eig_kappa}; }
};

// Accepts either a nested array of `rows` rows with `cols` entries each, or a
// flat row-major array of rows*cols numbers.
Matrix parse_matrix(const json& node, int rows, int cols,
                    const std::string& what) {
  if (!node.is_array() || node.empty())
    throw InputError(what + ": expected a non-empty array");
  Matrix A(rows, cols);
  if (node.front().is_array()) {
    if (static_cast<int>(node.size()) != rows)
      throw InputError(what + ": expected " + std::to_string(rows) + " rows");
    for (int i = 0; i < rows; ++i) {
      const json& row = node[i];
      if (!row.is_array() || static_cast<int>(row.size()) != cols)
        throw InputError(what + ": row " + std::to_string(i) + " must have " +
                         std::to_string(cols) + " entries");
      for (int j = 0; j < cols; ++j) {
        if (!row[j].is_number())
          throw InputError(what + ": non-numeric entry");
        A(i, j) = row[j].get<double>();
      }
    }
  } else {
    if (static_cast<int>(node.size()) != rows * cols)
      throw InputError(what + ": expected " + std::to_string(rows * cols) +
                       " entries (row-major), got " +
                       std::to_string(node.size()));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const json& v = node[i * cols + j];
        if (!v.is_number()) throw InputError(what + ": non-numeric entry");
        A(i, j) = v.get<double>();
      }
  }
  return A;
}

struct InputDocument {
  int n = 0;
  std::vector<Matrix> frames;  // raw 2n x n candidates
  std::vector<Matrix> system;  // raw 2n x 2n candidates S_0..S_N
  std::vector<std::string> labels;
};

std::string frame_label(const InputDocument& in, std::size_t i) {
  if (i < in.labels.size()) return in.labels[i];
  return "Y" + std::to_string(i + 1);
}

InputDocument load_input(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw InputError("cannot open input file: " + path);
  json doc;
  try {
    doc = json::parse(stream);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("input must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw InputError("input needs an integer field \"n\"");
  InputDocument in;
  in.n = doc["n"].get<int>();
  if (in.n < 1) throw InputError("\"n\" must be a positive integer");
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw InputError("\"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw InputError("\"labels\" must be an array of strings");
      in.labels.push_back(l.get<std::string>());
    }
  }
  if (doc.contains("frames")) {
    if (!doc["frames"].is_array())
      throw InputError("\"frames\" must be an array of 2n x n matrices");
    for (std::size_t i = 0; i < doc["frames"].size(); ++i)
      in.frames.push_back(parse_matrix(doc["frames"][i], 2 * in.n, in.n,
                                       "frames[" + std::to_string(i) + "]"));
  }
  if (doc.contains("system")) {
    if (!doc["system"].is_array())
      throw InputError("\"system\" must be an array of 2n x 2n matrices");
    for (std::size_t i = 0; i < doc["system"].size(); ++i)
      in.system.push_back(parse_matrix(doc["system"][i], 2 * in.n, 2 * in.n,
                                       "system[" + std::to_string(i) + "]"));
  }
  return in;
}

std::vector<compidx::LagrangianFrame> make_frames(const InputDocument& in,
                                                  const GlobalOptions& opt) {
  std::vector<compidx::LagrangianFrame> frames;
  frames.reserve(in.frames.size());
  for (std::size_t i = 0; i < in.frames.size(); ++i) {
    try {
      frames.emplace_back(in.frames[i], opt.tol());
    } catch (const std::invalid_argument& e) {
      throw InputError(frame_label(in, i) + ": " + e.what());
    }
  }
  return frames;
}

compidx::SymplecticSystem make_system(const InputDocument& in,
                                      const GlobalOptions& opt) {
  if (in.system.empty())
    throw InputError("this command needs a non-empty \"system\" array");
  std::vector<compidx::SymplecticMatrix> coeffs;
  coeffs.reserve(in.system.size());
  for (std::size_t k = 0; k < in.system.size(); ++k) {
    try {
      coeffs.emplace_back(in.system[k], opt.tol());
    } catch (const std::invalid_argument& e) {
      throw InputError("system[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return compidx::SymplecticSystem(std::move(coeffs));
}

ordered_json checks_to_json(const std::vector<compidx::IdentityCheck>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks)
    arr.push_back(ordered_json{{"name", c.name},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs},
                               {"pass", c.pass()}});
  return arr;
}

int count_failures(const std::vector<compidx::IdentityCheck>& checks) {
  int failures = 0;
  for (const auto& c : checks)
    if (!c.pass()) ++failures;
  return failures;
}

void print_check_summary(const std::vector<compidx::IdentityCheck>& checks) {
  const int failed = count_failures(checks);
  std::printf("checks: %zu passed, %d failed\n", checks.size() - failed, failed);
  for (const auto& c : checks)
    if (!c.pass())
      std::printf("  [FAIL] %s: lhs=%lld rhs=%lld\n", c.name.c_str(), c.lhs,
                  c.rhs);
}

void emit_json(const ordered_json& report) {
  std::cout << report.dump(2) << '\n';
}

ordered_json ints_to_json(const std::vector<int>& v) {
  return ordered_json(v);
}

std::string ints_to_text(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  out += ']';
  return out;
}

// ---------------------------------------------------------------------------

int run_validate(const InputDocument& in, const GlobalOptions& opt) {
  if (in.frames.empty() && in.system.empty())
    throw InputError("nothing to validate: provide \"frames\" or \"system\"");
  ordered_json report;
  report["command"] = "validate";
  report["n"] = in.n;
  bool all_ok = true;
  ordered_json frame_rows = ordered_json::array();
  for (std::size_t i = 0; i < in.frames.size(); ++i) {
    const auto v = compidx::validate_frame(in.frames[i], opt.tol());
    all_ok = all_ok && v.ok;
    frame_rows.push_back(ordered_json{{"label", frame_label(in, i)},
                                      {"ok", v.ok},
                                      {"rank", v.rank},
                                      {"pairing_residual", v.pairing_residual}});
  }
  if (!in.frames.empty()) report["frames"] = frame_rows;
  ordered_json system_rows = ordered_json::array();
  for (std::size_t k = 0; k < in.system.size(); ++k) {
    const auto v = compidx::validate_symplectic(in.system[k], opt.tol());
    all_ok = all_ok && v.ok;
    system_rows.push_back(ordered_json{
        {"index", static_cast<int>(k)}, {"ok", v.ok}, {"residual", v.residual}});
  }
  if (!in.system.empty()) report["system"] = system_rows;
  report["ok"] = all_ok;

  if (opt.json_output) {
    emit_json(report);
  } else {
    for (std::size_t i = 0; i < in.frames.size(); ++i) {
      const auto& row = frame_rows[i];
      std::printf("frame %-8s %s  rank=%d  pairing_residual=%.3e\n",
                  row["label"].get<std::string>().c_str(),
                  row["ok"].get<bool>() ? "ok  " : "FAIL",
                  row["rank"].get<int>(),
                  row["pairing_residual"].get<double>());
    }
    for (std::size_t k = 0; k < in.system.size(); ++k) {
      const auto& row = system_rows[k];
      std::printf("system[%zu]  %s  residual=%.3e\n", k,
                  row["ok"].get<bool>() ? "ok  " : "FAIL",
                  row["residual"].get<double>());
    }
    std::printf("%s\n", all_ok ? "all inputs valid" : "validation failed");
  }
  return all_ok ? 0 : 1;
}

int run_compindex(const InputDocument& in, const GlobalOptions& opt) {
  if (in.frames.size() != 2)
    throw InputError("compindex needs exactly two frames");
  const auto frames = make_frames(in, opt);
  const auto& Y = frames[0];
  const auto& Yhat = frames[1];
  const auto tol = opt.tol();

  const auto ci = compidx::comparative_index(Y, Yhat, tol);
  const auto ci_q = compidx::comparative_index_via_q(Y, Yhat, tol);
  const auto [bi_mu, bi_mu_star] =
      compidx::comparative_index_via_block_inertia(Y, Yhat, tol);
  const int mu1_ranks = compidx::mu1_rank_formula(Y, Yhat, tol);
  const double pair_scale =
      std::max(1.0, Y.matrix().norm() * Yhat.matrix().norm());
  const int w_rank =
      compidx::rank_of(compidx::wronskian(Y, Yhat), tol, pair_scale);

  const auto W = compidx::random_symplectic(Y.n(), opt.seed);
  const auto checks =
      compidx::pair_identity_checks(Y, Yhat, W, opt.seed, tol);

  ordered_json report;
  report["command"] = "compindex";
  report["n"] = Y.n();
  report["pair"] = {frame_label(in, 0), frame_label(in, 1)};
  report["mu1"] = ci.mu1;
  report["mu2"] = ci.mu2;
  report["mu"] = ci.mu();
  report["mu2_dual"] = ci.mu2_dual;
  report["mu_star"] = ci.mu_star();
  report["wronskian_rank"] = w_rank;
  report["routes"] = ordered_json{
      {"definition", {{"mu1", ci.mu1}, {"mu", ci.mu()}, {"mu_star", ci.mu_star()}}},
      {"q_route", {{"mu1", ci_q.mu1}, {"mu", ci_q.mu()}, {"mu_star", ci_q.mu_star()}}},
      {"block_inertia", {{"mu", bi_mu}, {"mu_star", bi_mu_star}}},
      {"mu1_rank_formula", mu1_ranks}};
  report["checks"] = checks_to_json(checks);
  report["ok"] = compidx::all_pass(checks);

  if (opt.json_output) {
    emit_json(report);
  } else {
    std::printf("comparative index of (%s, %s), n = %d\n",
                frame_label(in, 0).c_str(), frame_label(in, 1).c_str(), Y.n());
    std::printf("  mu1 = %d   mu2 = %d   mu = %d\n", ci.mu1, ci.mu2, ci.mu());
    std::printf("  mu2_dual = %d       mu_star = %d\n", ci.mu2_dual,
                ci.mu_star());
    std::printf("  rank w = %d\n", w_rank);
    std::printf("routes: q (mu=%d mu*=%d), block inertia (mu=%d mu*=%d), "
                "rank formula mu1=%d\n",
                ci_q.mu(), ci_q.mu_star(), bi_mu, bi_mu_star, mu1_ranks);
    print_check_summary(checks);
  }
  return compidx::all_pass(checks) ? 0 : 1;
}

int run_cyclic(const InputDocument& in, const GlobalOptions& opt) {
  if (in.frames.size() < 2)
    throw InputError("cyclic needs at least two frames");
  const auto tol = opt.tol();
  const compidx::FrameChain chain(make_frames(in, opt));

  const auto sums = compidx::cyclic_sums(chain, tol);
  const auto [in_minus, in_plus] = compidx::cyclic_sum_via_inertia(chain, tol);
  const auto [pr_minus, pr_plus] = compidx::cyclic_sum_via_reduction(
      chain, compidx::ReducedRoute::projector, tol);
  const auto [opr_minus, opr_plus] = compidx::open_sum_via_reduction(
      chain, compidx::ReducedRoute::projector, tol);
  std::optional<std::pair<int, int>> schur_closed, schur_open;
  if (chain.m() >= 3) {
    schur_closed = compidx::cyclic_sum_via_reduction(
        chain, compidx::ReducedRoute::schur, tol);
    schur_open = compidx::open_sum_via_reduction(
        chain, compidx::ReducedRoute::schur, tol);
  }
  const auto bounds = compidx::cyclic_sum_bounds(chain, tol);

  std::vector<compidx::IdentityCheck> checks =
      compidx::chain_inertia_checks(chain, tol);
  auto more = compidx::chain_law_checks(chain, opt.seed, tol);
  checks.insert(checks.end(), more.begin(), more.end());
  more = compidx::chain_bound_checks(chain, tol);
  checks.insert(checks.end(), more.begin(), more.end());
  more = compidx::chain_geometry_checks(chain, tol);
  checks.insert(checks.end(), more.begin(), more.end());

  ordered_json report;
  report["command"] = "cyclic";
  report["n"] = chain.n();
  report["m"] = chain.m();
  report["mu_minus"] = sums.mu_minus;
  report["mu_plus"] = sums.mu_plus;
  report["nu_minus"] = sums.nu_minus;
  report["nu_plus"] = sums.nu_plus;
  ordered_json routes;
  routes["inertia"] = {{"mu_minus", in_minus}, {"mu_plus", in_plus}};
  routes["projector"] = {{"mu_minus", pr_minus},
                         {"mu_plus", pr_plus},
                         {"nu_minus", opr_minus},
                         {"nu_plus", opr_plus}};
  if (schur_closed)
    routes["schur"] = {{"mu_minus", schur_closed->first},
                       {"mu_plus", schur_closed->second},
                       {"nu_minus", schur_open->first},
                       {"nu_plus", schur_open->second}};
  report["routes"] = routes;
  report["bounds"] = ordered_json{{"mu_lower", bounds.r_lower},
                                  {"mu_upper", bounds.p_upper},
                                  {"nu_lower", bounds.nu_lower},
                                  {"nu_upper", bounds.nu_upper},
                                  {"ok", bounds.ok}};
  report["checks"] = checks_to_json(checks);
  const bool ok = compidx::all_pass(checks) && bounds.ok;
  report["ok"] = ok;

  if (opt.json_output) {
    emit_json(report);
  } else {
    std::printf("cyclic sums of %d frames, n = %d\n", chain.m(), chain.n());
    std::printf("  mu_minus = %d   mu_plus = %d   nu_minus = %d   nu_plus = %d\n",
                sums.mu_minus, sums.mu_plus, sums.nu_minus, sums.nu_plus);
    std::printf("  inertia route:   mu_minus = %d, mu_plus = %d\n", in_minus,
                in_plus);
    std::printf("  projector route: mu_minus = %d, mu_plus = %d, "
                "nu_minus = %d, nu_plus = %d\n",
                pr_minus, pr_plus, opr_minus, opr_plus);
    if (schur_closed)
      std::printf("  schur route:     mu_minus = %d, mu_plus = %d, "
                  "nu_minus = %d, nu_plus = %d\n",
                  schur_closed->first, schur_closed->second,
                  schur_open->first, schur_open->second);
    std::printf("  bounds: %d <= mu_c <= %d, %d <= nu_c <= %d (%s)\n",
                bounds.r_lower, bounds.p_upper, bounds.nu_lower,
                bounds.nu_upper, bounds.ok ? "ok" : "VIOLATED");
    print_check_summary(checks);
  }
  return ok ? 0 : 1;
}

int run_kashiwara(const InputDocument& in, const GlobalOptions& opt) {
  if (in.frames.size() < 3)
    throw InputError("kashiwara needs at least three frames");
  const auto tol = opt.tol();
  const compidx::FrameChain chain(make_frames(in, opt));

  const int tau = compidx::kashiwara_index(chain, tol);
  const int tau_cyclic = compidx::kashiwara_via_cyclic(chain, tol);
  const auto rebuilt = compidx::cyclic_sums_from_kashiwara(chain, tol);
  const auto direct = compidx::cyclic_sums(chain, tol);

  std::vector<compidx::IdentityCheck> checks =
      compidx::kashiwara_representation_checks(chain, tol);
  checks.push_back({"rebuilt mu_minus matches", rebuilt.mu_minus, direct.mu_minus});
  checks.push_back({"rebuilt mu_plus matches", rebuilt.mu_plus, direct.mu_plus});
  checks.push_back({"rebuilt nu_minus matches", rebuilt.nu_minus, direct.nu_minus});
  checks.push_back({"rebuilt nu_plus matches", rebuilt.nu_plus, direct.nu_plus});

  ordered_json report;
  report["command"] = "kashiwara";
  report["n"] = chain.n();
  report["m"] = chain.m();
  report["tau"] = tau;
  report["tau_via_cyclic"] = tau_cyclic;
  report["sums_from_tau"] = ordered_json{{"mu_minus", rebuilt.mu_minus},
                                         {"mu_plus", rebuilt.mu_plus},
                                         {"nu_minus", rebuilt.nu_minus},
                                         {"nu_plus", rebuilt.nu_plus}};
  report["sums_direct"] = ordered_json{{"mu_minus", direct.mu_minus},
                                       {"mu_plus", direct.mu_plus},
                                       {"nu_minus", direct.nu_minus},
                                       {"nu_plus", direct.nu_plus}};
  report["checks"] = checks_to_json(checks);
  const bool ok = compidx::all_pass(checks);
  report["ok"] = ok;

  if (opt.json_output) {
    emit_json(report);
  } else {
    std::printf("kashiwara index of %d frames, n = %d\n", chain.m(), chain.n());
    std::printf("  tau = %d (quadratic form), %d (cyclic-sum difference)\n",
                tau, tau_cyclic);
    std::printf("  sums rebuilt from tau: mu_minus = %d, mu_plus = %d, "
                "nu_minus = %d, nu_plus = %d\n",
                rebuilt.mu_minus, rebuilt.mu_plus, rebuilt.nu_minus,
                rebuilt.nu_plus);
    print_check_summary(checks);
  }
  return ok ? 0 : 1;
}

int run_focal(const InputDocument& in, const GlobalOptions& opt) {
  const auto tol = opt.tol();
  const auto system = make_system(in, opt);
  const int N = system.N();

  const auto principal_0 = compidx::principal_solution(system, 0, tol);
  const auto principal_end = compidx::principal_solution(system, N + 1, tol);
  auto tally_0 = compidx::forward_focal_multiplicities(system, principal_0, tol);
  const auto backward_0 =
      compidx::backward_focal_multiplicities(system, principal_0, tol);
  tally_0.m_star = backward_0.m_star;
  tally_0.l_star_total = backward_0.l_star_total;
  auto tally_end =
      compidx::forward_focal_multiplicities(system, principal_end, tol);
  const auto backward_end =
      compidx::backward_focal_multiplicities(system, principal_end, tol);
  tally_end.m_star = backward_end.m_star;
  tally_end.l_star_total = backward_end.l_star_total;

  const auto counts = compidx::focal_counts_via_inertia(system, tol);
  const auto chain_sums = compidx::focal_sums_via_cyclic(principal_0, tol);

  bool disconjugate = false;
  ordered_json certificate;
  if (N >= 1) {
    const auto cert = compidx::disconjugacy_check(system, tol);
    disconjugate = cert.disconjugate;
    certificate = ordered_json{
        {"disconjugate", cert.disconjugate},
        {"m_tilde_vanishes", cert.m_tilde_vanishes},
        {"reduced_block_nonpositive", cert.reduced_block_nonpositive},
        {"max_eigenvalue", cert.max_eigenvalue}};
  } else {
    // Single-step system: no reduced matrix exists, fall back to the count.
    disconjugate = tally_0.l_total == 0;
    certificate = ordered_json{{"disconjugate", disconjugate},
                               {"from_reduced_matrix", false}};
  }

  const auto checks = compidx::system_identity_checks(system, opt.seed, tol);

  ordered_json report;
  report["command"] = "focal";
  report["n"] = system.n();
  report["N"] = N;
  report["principal_at_0"] =
      ordered_json{{"m1", ints_to_json(tally_0.m1)},
                   {"m2", ints_to_json(tally_0.m2)},
                   {"m", ints_to_json(tally_0.m)},
                   {"m_star", ints_to_json(tally_0.m_star)},
                   {"l", tally_0.l_total},
                   {"l_star", tally_0.l_star_total}};
  report["principal_at_end"] =
      ordered_json{{"m", ints_to_json(tally_end.m)},
                   {"m_star", ints_to_json(tally_end.m_star)},
                   {"l", tally_end.l_total},
                   {"l_star", tally_end.l_star_total}};
  ordered_json inertia_counts;
  inertia_counts["l_star_at_0"] = counts.l_star_at_0;
  if (counts.l_at_0)
    inertia_counts["l_at_0"] = *counts.l_at_0;
  report["inertia_route"] = inertia_counts;
  report["chain_route"] =
      ordered_json{{"mu_minus_chain", chain_sums.mu_minus_chain},
                   {"mu_plus_reversed", chain_sums.mu_plus_reversed},
                   {"nu_minus_chain", chain_sums.nu_minus_chain},
                   {"nu_plus_reversed", chain_sums.nu_plus_reversed}};
  report["disconjugacy"] = certificate;
  report["checks"] = checks_to_json(checks);
  const bool ok = compidx::all_pass(checks);
  report["ok"] = ok;

  if (opt.json_output) {
    emit_json(report);
  } else {
    std::printf("focal-point counts, n = %d, N = %d (steps 0..%d)\n",
                system.n(), N, N + 1);
    std::printf("principal solution at 0:\n");
    std::printf("  m1     = %s\n", ints_to_text(tally_0.m1).c_str());
    std::printf("  m2     = %s\n", ints_to_text(tally_0.m2).c_str());
    std::printf("  m      = %s   l      = %d\n", ints_to_text(tally_0.m).c_str(),
                tally_0.l_total);
    std::printf("  m_star = %s   l_star = %d\n",
                ints_to_text(tally_0.m_star).c_str(), tally_0.l_star_total);
    std::printf("principal solution at %d: l = %d, l_star = %d\n", N + 1,
                tally_end.l_total, tally_end.l_star_total);
    if (counts.l_at_0)
      std::printf("inertia route: l_star(at 0) = %d, l(at 0) = %d\n",
                  counts.l_star_at_0, *counts.l_at_0);
    else
      std::printf("inertia route: l_star(at 0) = %d\n", counts.l_star_at_0);
    std::printf("disconjugate on [0, %d]: %s\n", N + 1,
                disconjugate ? "yes" : "no");
    print_check_summary(checks);
  }
  return ok ? 0 : 1;
}

int run_verify(const compidx::BatteryOptions& options,
               const GlobalOptions& opt) {
  const auto report = compidx::run_identity_battery(options);

  ordered_json out;
  out["command"] = "verify";
  out["options"] = ordered_json{{"trials", options.trials},
                                {"system_trials", options.system_trials},
                                {"n_max", options.n_max},
                                {"m_max", options.m_max},
                                {"seed", options.seed}};
  out["identities_checked"] = report.identities_checked;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures)
    failures.push_back(ordered_json{{"category", f.category},
                                    {"seed", f.seed},
                                    {"name", f.check.name},
                                    {"lhs", f.check.lhs},
                                    {"rhs", f.check.rhs}});
  out["failures"] = failures;
  out["ok"] = report.ok();

  if (opt.json_output) {
    emit_json(out);
  } else {
    std::printf("identity battery: %d chain/pair trials, %d system trials, "
                "seed %llu\n",
                options.trials, options.system_trials,
                static_cast<unsigned long long>(options.seed));
    std::printf("identities checked: %lld\n", report.identities_checked);
    for (const auto& f : report.failures)
      std::printf("  [FAIL] %s (seed %llu) %s: lhs=%lld rhs=%lld\n",
                  f.category.c_str(),
                  static_cast<unsigned long long>(f.seed),
                  f.check.name.c_str(), f.check.lhs, f.check.rhs);
    std::printf("%s\n", report.ok() ? "all identities hold" : "FAILURES FOUND");
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comparative indices of Lagrangian frames, cyclic sums of "
               "frame chains, and focal-point counts of discrete symplectic "
               "systems"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--tol-rank", opt.tol_rank,
                 "relative singular-value cutoff for rank decisions")
      ->capture_default_str();
  app.add_option("--tol-eig-kappa", opt.eig_kappa,
                 "zero-eigenvalue factor (cutoff = kappa * eps * dim * max|lambda|)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for auxiliary random transforms")
      ->capture_default_str();
  app.add_flag("--json", opt.json_output, "emit a JSON report instead of text");

  std::string input_path;
  const auto add_input = [&input_path](CLI::App* cmd) {
    cmd->add_option("input", input_path, "path to a JSON input file")
        ->required();
    cmd->fallthrough();
  };

  auto* cmd_validate = app.add_subcommand(
      "validate", "check frames for the Lagrangian conditions and system "
                  "matrices for symplecticity");
  add_input(cmd_validate);
  auto* cmd_compindex = app.add_subcommand(
      "compindex", "comparative index of a frame pair, all routes");
  add_input(cmd_compindex);
  auto* cmd_cyclic = app.add_subcommand(
      "cyclic", "cyclic comparative-index sums of a frame chain, all routes");
  add_input(cmd_cyclic);
  auto* cmd_kashiwara = app.add_subcommand(
      "kashiwara", "Kashiwara index of a frame chain and its relation to the "
                   "cyclic sums");
  add_input(cmd_kashiwara);
  auto* cmd_focal = app.add_subcommand(
      "focal", "focal-point counts of a discrete symplectic system");
  add_input(cmd_focal);

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the randomized identity battery");
  cmd_verify->fallthrough();
  compidx::BatteryOptions battery;
  cmd_verify->add_option("--trials", battery.trials, "chain/pair instances")
      ->capture_default_str();
  cmd_verify
      ->add_option("--system-trials", battery.system_trials,
                   "discrete-system instances")
      ->capture_default_str();
  cmd_verify->add_option("--n-max", battery.n_max, "largest block dimension")
      ->capture_default_str();
  cmd_verify->add_option("--m-max", battery.m_max, "largest chain length")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_verify->parsed()) {
      battery.seed = opt.seed;
      battery.tol = opt.tol();
      return run_verify(battery, opt);
    }
    const InputDocument in = load_input(input_path);
    if (cmd_validate->parsed()) return run_validate(in, opt);
    if (cmd_compindex->parsed()) return run_compindex(in, opt);
    if (cmd_cyclic->parsed()) return run_cyclic(in, opt);
    if (cmd_kashiwara->parsed()) return run_kashiwara(in, opt);
    if (cmd_focal->parsed()) return run_focal(in, opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;  // no subcommand matched (unreachable with require_subcommand)
}
