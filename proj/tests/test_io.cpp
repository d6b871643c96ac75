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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ncorlicz/io.hpp"
#include "ncorlicz/random.hpp"
#include "ncorlicz/suites.hpp"

using namespace ncorlicz;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("nfunction configs") {
  const NFunction p = nfunction_from_json(json::parse(R"({"family":"power","p":2.5})"));
  CHECK(p.family() == NFunction::Family::Power);
  CHECK(p.parameter() == 2.5);
  const NFunction t = nfunction_from_json(json::parse(
      R"({"family":"tabulated","grid":[1.0,2.0,4.0],"phi":[1.0,2.0,4.0],"tail_exponents":[1.0,1.0]})"));
  CHECK(t.family() == NFunction::Family::Tabulated);
  // round trip through the emitter
  CHECK(nfunction_from_json(nfunction_to_json(t)).value(3.0) == t.value(3.0));
  CHECK_THROWS_AS(nfunction_from_json(json::parse(R"({"family":"mystery"})")),
                  std::invalid_argument);
}

TEST_CASE("matrix round trip") {
  RandomSource rng(91);
  const TracedMatrix x = rng.gaussian_matrix(4, 2.0);
  const TracedMatrix back = matrix_from_json(matrix_to_json(x));
  CHECK((back.entries - x.entries).norm() == 0.0);
  CHECK(back.trace_scale == x.trace_scale);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n":2,"entries":[[[1,0]],[[0,0],[1,0]]]})")),
      std::invalid_argument);
}

TEST_CASE("step function round trip") {
  const DecreasingStepFunction m({{2.0, 1.0}, {1.0, 3.0}});
  const DecreasingStepFunction back = steps_from_json(steps_to_json(m));
  CHECK(back.size() == 2);
  CHECK(back.steps()[1].length == 3.0);
}

TEST_CASE("parse errors carry position diagnostics") {
  const std::string path = "bad_input_test.json.tmp";
  {
    std::ofstream f(path);
    f << "{\"family\": power}";
  }
  CHECK_THROWS_AS((void)load_json_file(path), std::invalid_argument);
  CHECK_THROWS_AS((void)load_json_file("no_such_file.json"), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("suite reports are deterministic in the seed") {
  RunConfig cfg;
  cfg.seed = 20260810;
  cfg.trials = 200;
  const json a = run_suites(cfg, {"spectra.monotonicity", "nfunction.inverse_product"}, 1);
  const json b = run_suites(cfg, {"nfunction.inverse_product", "spectra.monotonicity"}, 2);
  CHECK(a.dump() == b.dump());
  CHECK(a.at("schema_version").get<int>() == 1);
  CHECK(a.at("suites").size() == 2);
  // canonical order regardless of request order
  CHECK(a.at("suites")[0].at("name").get<std::string>() == "nfunction.inverse_product");
}

TEST_CASE("tolerance overrides reach the suites") {
  RunConfig cfg;
  cfg.trials = 50;
  cfg.tolerances["inverse_product"] = 1e-1;
  CHECK(run_suite("nfunction.inverse_product", cfg).passed);
}

}  // TEST_SUITE
