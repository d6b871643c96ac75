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

#ifndef NCORLICZ_SUITES_HPP
#define NCORLICZ_SUITES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncorlicz/nfunction.hpp"

namespace ncorlicz {

struct RunConfig {
  std::uint64_t seed = 42;
  int trials = 10000;
  std::map<std::string, double> tolerances;  // name -> override

  double tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
  }
  /// Scales the trial budget for suites whose unit of work is expensive.
  int scaled_trials(int divisor, int at_least = 16) const {
    return std::max(at_least, trials / divisor);
  }
};

struct FailureRecord {
  std::string check;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<FailureRecord> failures;  // capped; failure_count is exact
  long failure_count = 0;
  std::vector<std::string> warnings;
  nlohmann::json details = nlohmann::json::object();
};

/// Collects assertion outcomes for one suite; keeps at most a few concrete
/// failure records so reports stay bounded.
class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(&r) {}
  bool require(bool ok, const std::string& check, const std::string& detail = "");

 private:
  SuiteResult* r_;
};

using SuiteFn = std::function<SuiteResult(const RunConfig&)>;

/// Name -> suite, sorted by name; every module invariant suite is listed.
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const RunConfig& config);

/// Runs the selected suites (all when names is empty) on up to max_threads
/// workers and assembles the canonical report (suites sorted by name).
nlohmann::json run_suites(const RunConfig& config, const std::vector<std::string>& names,
                          int max_threads);

nlohmann::json suite_result_to_json(const SuiteResult& r);

/// The pinned N-function battery used by the cross-family suites.
std::vector<NFunction> family_battery();

/// Numeric Legendre transform sup_t (s t - value(t)) by golden section on
/// the concave objective; the independent oracle for conjugation checks.
double legendre_transform_numeric(const std::function<double(double)>& value, double s);

}  // namespace ncorlicz

#endif  // NCORLICZ_SUITES_HPP
