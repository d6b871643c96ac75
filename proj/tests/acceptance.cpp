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
//
// Acceptance gate: one integration criterion per line, pinned tolerances.
// Exit code 0 iff every criterion passes.

#include <cstdio>
#include <string>
#include <vector>

#include "ncorlicz/suites.hpp"

namespace {

using ncorlicz::RunConfig;
using ncorlicz::SuiteResult;

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> suites;
  int trials = 10000;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1,
       "N-function suite: Young, biconjugation <1e-6, delta2/nabla2 duality, "
       "inverse product in [1-1e-9, 2+1e-9]",
       {"nfunction.young", "nfunction.biconjugation", "nfunction.delta2_nabla2",
        "nfunction.inverse_product", "nfunction.convexity", "nfunction.indices"}},
      {2,
       "Rearrangement suite: mu/lambda identity to 1e-9 on 1e4 matrices, unitary "
       "invariance, sub(additivity|multiplicativity) on the grid",
       {"spectra.distribution_identity", "spectra.unitary_invariance", "spectra.subadditivity",
        "spectra.trace_integral", "spectra.monotonicity"}},
      {3,
       "Norm suite: projection norms equal 1/Phi^{-1}(1/k) to 1e-9 for k=1..32, "
       "weak-Lp dual formulas agree to 1e-9, weak <= strong",
       {"norms.projection", "norms.weak_lp", "norms.weak_le_strong"}},
      {4,
       "Quasi-norm axioms: Prop 3.2 (i)-(iv) analogues on 1e4 random (x,y,D,alpha) "
       "tuples, constant-2 quasi-triangle",
       {"weighted.prop32", "norms.quasi_triangle", "norms.unit_ball"}},
      {5,
       "Equivalence suite: banach/weak ratio bracket stable <20% across n in {4,16,64} "
       "for p in {1.5,2,3}; marcinkiewicz == equivalent to 1e-9",
       {"norms.equivalence_bracket", "norms.hardy_bound", "norms.banach_triangle"}},
      {6,
       "Weighted isometry: ||x||_{Phi,inf,alpha,omega} = ||T(x)||_{Phi,inf} to 1e-10, "
       "T bijective (rank n^2), alpha in {0,.25,.5,.75,1}, 100 densities",
       {"weighted.isometry", "weighted.weight_axioms", "weighted.functional_calculus",
        "weighted.t_map"}},
      {7,
       "Hardy suite: subdiagonal axioms, membership tests agree on 1e4 matrices, "
       "riesz reconstruction to 1e-12, dual pairing on 100x100",
       {"hardy.axioms", "hardy.membership", "hardy.riesz", "hardy.projection",
        "hardy.dual_pairing", "hardy.truncation"}},
      {8,
       "Duality suite: bruteforce dual = marcinkiewicz to 1e-8 on 1e3 steps, "
       "C_emp finite and stable, aligned pairs attain >= 50%",
       {"duality.dual_norm", "duality.weak_bracket", "duality.pairing",
        "duality.rearrangement_bound", "norms.holder", "norms.lorentz"}},
      {9,
       "Seminorm/extremal suite: N0 = Ninf = 0 on steps, N0 = 4 for the p=q=2 decay, "
       "extremal element has weak quasi-norm 1",
       {"norms.seminorms"}},
      {10,
       "Index suite: power fundamental dilation indices equal 1/q to 1e-4, inclusion "
       "checked against the complementary indices with a warning record",
       {"nfunction.dilation", "nfunction.fundamental"}},
  };

  RunConfig config;
  config.seed = 20260810;
  config.trials = 10000;

  int failed = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    long checks = 0, failures = 0;
    std::string first_failure;
    bool warned = false;
    for (const auto& name : c.suites) {
      const SuiteResult r = ncorlicz::run_suite(name, config);
      ok = ok && r.passed;
      checks += r.checks;
      failures += r.failure_count;
      warned = warned || !r.warnings.empty();
      if (!r.passed && first_failure.empty() && !r.failures.empty())
        first_failure = r.failures.front().check + " [" + r.failures.front().detail + "]";
    }
    std::printf("[%s] criterion %2d: %s (checks=%ld, failures=%ld%s)\n", ok ? "PASS" : "FAIL",
                c.number, c.description.c_str(), checks, failures,
                warned ? ", warnings emitted" : "");
    if (!ok) {
      std::printf("       first failure: %s\n", first_failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  if (failed > 0) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
