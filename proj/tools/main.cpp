// Copyright 2026 The ncorlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncorlicz/duality.hpp"
#include "ncorlicz/hardy.hpp"
#include "ncorlicz/io.hpp"
#include "ncorlicz/norms.hpp"
#include "ncorlicz/random.hpp"
#include "ncorlicz/spectra.hpp"
#include "ncorlicz/suites.hpp"
#include "ncorlicz/weighted.hpp"

namespace {

using nlohmann::json;
using namespace ncorlicz;

struct GlobalOptions {
  RunConfig config;
  std::vector<std::string> tol_flags;
  std::string format = "json";
  std::string out;
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(g.out);
    if (!f) throw std::invalid_argument("cannot open output file: " + g.out);
    f << text << "\n";
  }
}

void parse_tolerances(GlobalOptions& g) {
  for (const auto& kv : g.tol_flags) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--tol expects name=value: " + kv);
    g.config.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
}

int thread_cap() {
  if (const char* env = std::getenv("NC_ORLICZ_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

json all_norms_json(const DecreasingStepFunction& m, const NFunction& f) {
  json out;
  out["luxemburg"] = norm_report_to_json(luxemburg_norm(m, f));
  out["weak_orlicz"] = norm_report_to_json(weak_orlicz_quasinorm(m, f));
  out["equivalent_banach"] = norm_report_to_json(equivalent_banach_norm(m, f));
  out["marcinkiewicz"] = norm_report_to_json(marcinkiewicz_norm(m, f));
  out["lorentz"] = norm_report_to_json(lorentz_norm(m, f));
  out["N0"] = seminorm_N0(m, f);
  out["Ninf"] = seminorm_Ninf(m, f);
  if (f.family() == NFunction::Family::Power)
    out["weak_lp"] = norm_report_to_json(weak_lp_norm(m, f.parameter()));
  return out;
}

int cmd_nfunc(const GlobalOptions& g, const std::string& nf_path) {
  const NFunction f = nfunction_from_json(load_json_file(nf_path));
  const NFunction psi = f.complement();
  json out;
  out["family"] = nfunction_to_json(f);
  const GrowthIndices gi = growth_indices(f);
  out["indices"] = {{"a_Phi", gi.lower},
                    {"b_Phi", gi.upper_unbounded ? json("unbounded") : json(gi.upper)}};
  const Delta2Result d2 = delta2_constant(f);
  out["delta2"] = d2.unbounded ? json("unbounded") : json(d2.constant);
  out["nabla2"] = nabla2_check(f);
  const DilationIndices di = dilation_indices(f);
  out["dilation_indices"] = {{"p_phi", di.lower},
                             {"q_phi", di.upper},
                             {"fit_residual", di.fit_residual},
                             {"reliable", di.reliable}};
  json table = json::array();
  for (double t = 1e-4; t <= 1.0001e4; t *= 10.0)
    table.push_back({{"t", t},
                     {"Phi", f.value(t)},
                     {"Psi", psi.value(t)},
                     {"inverse_product_ratio", inverse_product_ratio(f, t)},
                     {"fundamental", fundamental_function(f, t)}});
  out["conjugate_table"] = table;
  emit(g, out.dump(2));
  return 0;
}

int cmd_norms(const GlobalOptions& g, const std::string& input, const std::string& nf_path) {
  const NFunction f = nfunction_from_json(load_json_file(nf_path));
  const json in = load_json_file(input);
  DecreasingStepFunction m;
  json desc;
  if (in.contains("steps")) {
    m = steps_from_json(in);
    desc = steps_to_json(m);
  } else {
    const TracedMatrix x = matrix_from_json(in);
    m = singular_value_function(x);
    desc = steps_to_json(m);
  }
  json out = all_norms_json(m, f);
  out["mu"] = desc;
  emit(g, out.dump(2));
  return 0;
}

int cmd_weighted(const GlobalOptions& g, const std::string& input, const std::string& nf_path,
                 const std::string& density_path, double alpha) {
  const NFunction f = nfunction_from_json(load_json_file(nf_path));
  const TracedMatrix x = matrix_from_json(load_json_file(input));
  const Density d(matrix_from_json(load_json_file(density_path)));
  const NormReport r = weighted_weak_norm(x, d, f, alpha);
  json out = norm_report_to_json(r);
  out["alpha"] = alpha;
  out["transform_mu"] = steps_to_json(singular_value_function(t_map(x, d, f, alpha)));
  emit(g, out.dump(2));
  return 0;
}

int cmd_hardy(const GlobalOptions& g, const std::string& input, const std::string& blocks_flag,
              const std::string& nf_path) {
  const TracedMatrix x = matrix_from_json(load_json_file(input));
  std::vector<int> sizes;
  std::stringstream ss(blocks_flag);
  for (std::string item; std::getline(ss, item, ',');) sizes.push_back(std::stoi(item));
  const BlockStructure b(sizes);
  if (b.dim() != x.dim()) throw std::invalid_argument("block sizes do not sum to the matrix dimension");
  const NFunction f = nf_path.empty() ? NFunction::power(2.0)
                                      : nfunction_from_json(load_json_file(nf_path));

  const MembershipReport mem = hardy_membership(b, f, x);
  const RieszDecomposition dec = riesz_decomposition(b, x);
  json out;
  out["membership"] = {{"member", mem.member()},
                       {"annihilator_test", mem.annihilator},
                       {"structural_test", mem.structural},
                       {"max_pairing", mem.max_pairing}};
  out["h"] = matrix_to_json(dec.hardy_part);
  out["z"] = matrix_to_json(dec.conjugate_part);
  out["norms"] = {{"x", norm_report_to_json(weak_orlicz_quasinorm(x, f))},
                  {"h", norm_report_to_json(weak_orlicz_quasinorm(dec.hardy_part, f))},
                  {"z", norm_report_to_json(weak_orlicz_quasinorm(dec.conjugate_part, f))}};
  emit(g, out.dump(2));
  return 0;
}

int cmd_duality(const GlobalOptions& g, const std::string& nf_path, std::vector<int> dims) {
  const NFunction f = nf_path.empty() ? NFunction::power(2.0)
                                      : nfunction_from_json(load_json_file(nf_path));
  if (dims.empty()) dims = {4, 16, 64};
  RandomSource rng(mix_seed(g.config.seed, "cli.duality"));
  std::vector<BracketReport> rows;
  for (int n : dims) {
    const int trials = std::max(8, g.config.trials / std::max(1, n * n / 4));
    rows.push_back(weak_dual_bracket(f, trials, n, rng));
  }
  if (g.format == "csv") {
    std::ostringstream os;
    os << "family,n,trials,C_emp,attained_ratio";
    os.precision(12);
    for (const auto& r : rows)
      os << "\n" << r.family << "," << r.dim << "," << r.trials << "," << r.c_emp << ","
         << r.attained_ratio;
    emit(g, os.str());
  } else {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"family", r.family},
                     {"n", r.dim},
                     {"trials", r.trials},
                     {"C_emp", r.c_emp},
                     {"attained_ratio", r.attained_ratio}});
    emit(g, out.dump(2));
  }
  return 0;
}

int cmd_verify(const GlobalOptions& g, const std::vector<std::string>& suites, bool list_only) {
  if (list_only) {
    std::ostringstream os;
    for (const auto& [name, fn] : suite_registry()) os << name << "\n";
    std::cout << os.str();
    return 0;
  }
  const json report = run_suites(g.config, suites, thread_cap());
  if (g.format == "csv") {
    std::ostringstream os;
    os << "suite,passed,checks,failure_count";
    for (const auto& s : report.at("suites"))
      os << "\n" << s.at("name").get<std::string>() << "," << (s.at("passed").get<bool>() ? 1 : 0)
         << "," << s.at("checks").get<long>() << "," << s.at("failure_count").get<long>();
    emit(g, os.str());
  } else {
    emit(g, report.dump(2));
  }
  return report.at("all_passed").get<bool>() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional noncommutative weak Orlicz space toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.config.seed, "random seed for the verification suites");
  app.add_option("--trials", g.config.trials, "trial budget per randomized suite");
  app.add_option("--tol", g.tol_flags, "tolerance override name=value")->take_all();
  app.add_option("--format", g.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write the report to this file instead of stdout");

  std::string nf_path, input_path, density_path, blocks_flag;
  double alpha = 0.5;
  std::vector<int> dims;
  std::vector<std::string> suite_names;
  bool list_suites = false;

  CLI::App* nfunc = app.add_subcommand("nfunc", "N-function calculus report");
  nfunc->add_option("--nfunction", nf_path, "N-function config JSON")->required();

  CLI::App* norms = app.add_subcommand("norms", "norm report for a matrix or step function");
  norms->add_option("--input", input_path, "matrix or step-function JSON")->required();
  norms->add_option("--nfunction", nf_path, "N-function config JSON")->required();

  CLI::App* weighted = app.add_subcommand("weighted", "weighted weak quasi-norm");
  weighted->add_option("--input", input_path, "matrix JSON")->required();
  weighted->add_option("--nfunction", nf_path, "N-function config JSON")->required();
  weighted->add_option("--density", density_path, "density matrix JSON")->required();
  weighted->add_option("--alpha", alpha, "split exponent in [0,1]")->check(CLI::Range(0.0, 1.0));

  CLI::App* hardy = app.add_subcommand("hardy", "membership and Riesz decomposition");
  hardy->add_option("--input", input_path, "matrix JSON")->required();
  hardy->add_option("--blocks", blocks_flag, "comma-separated block sizes, e.g. 1,1,2")->required();
  hardy->add_option("--nfunction", nf_path, "N-function config JSON (default power p=2)");

  CLI::App* duality = app.add_subcommand("duality", "empirical duality bracket tables");
  duality->add_option("--nfunction", nf_path, "N-function config JSON (default power p=2)");
  duality->add_option("--n", dims, "matrix dimensions to sweep")->take_all();

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", suite_names, "run only these suites (repeatable)")->take_all();
  verify->add_flag("--list", list_suites, "list suite names and exit");

  // global flags (--seed, --trials, ...) may follow the subcommand
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    parse_tolerances(g);
    if (app.got_subcommand(nfunc)) return cmd_nfunc(g, nf_path);
    if (app.got_subcommand(norms)) return cmd_norms(g, input_path, nf_path);
    if (app.got_subcommand(weighted)) return cmd_weighted(g, input_path, nf_path, density_path, alpha);
    if (app.got_subcommand(hardy)) return cmd_hardy(g, input_path, blocks_flag, nf_path);
    if (app.got_subcommand(duality)) return cmd_duality(g, nf_path, dims);
    if (app.got_subcommand(verify)) return cmd_verify(g, suite_names, list_suites);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
