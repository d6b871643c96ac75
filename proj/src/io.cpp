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

#include "ncorlicz/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ncorlicz {

using nlohmann::json;

NFunction nfunction_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "power") return NFunction::power(j.at("p").get<double>());
  if (family == "power-log" || family == "power_log")
    return NFunction::power_log(j.at("p").get<double>());
  if (family == "exp" || family == "exp-type") return NFunction::exp_type();
  if (family == "tabulated") {
    const auto tails = j.at("tail_exponents");
    return NFunction::tabulated(j.at("grid").get<std::vector<double>>(),
                                j.at("phi").get<std::vector<double>>(),
                                tails.at(0).get<double>(), tails.at(1).get<double>());
  }
  throw std::invalid_argument("unknown N-function family: " + family);
}

json nfunction_to_json(const NFunction& f) {
  switch (f.family()) {
    case NFunction::Family::Power: return {{"family", "power"}, {"p", f.parameter()}};
    case NFunction::Family::PowerLog: return {{"family", "power-log"}, {"p", f.parameter()}};
    case NFunction::Family::Exp: return {{"family", "exp"}};
    case NFunction::Family::Tabulated:
      return {{"family", "tabulated"},
              {"grid", f.grid()},
              {"phi", f.phi_samples()},
              {"tail_exponents", {f.tail_exponent_low(), f.tail_exponent_high()}}};
    default: return {{"family", f.describe()}};
  }
}

TracedMatrix matrix_from_json(const json& j) {
  const auto n = j.at("n").get<Eigen::Index>();
  const double c = j.value("trace_scale", 1.0);
  const auto& rows = j.at("entries");
  if (static_cast<Eigen::Index>(rows.size()) != n)
    throw std::invalid_argument("entries row count does not match n");
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw std::invalid_argument("entries column count does not match n");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& cell = row.at(static_cast<std::size_t>(k));
      m(i, k) = std::complex<double>(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return TracedMatrix(std::move(m), c);
}

json matrix_to_json(const TracedMatrix& x) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < x.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < x.dim(); ++k)
      row.push_back({x.entries(i, k).real(), x.entries(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return {{"n", x.dim()}, {"trace_scale", x.trace_scale}, {"entries", std::move(rows)}};
}

DecreasingStepFunction steps_from_json(const json& j) {
  std::vector<DecreasingStepFunction::Step> steps;
  for (const auto& s : j.at("steps"))
    steps.push_back({s.at(0).get<double>(), s.at(1).get<double>()});
  return DecreasingStepFunction(std::move(steps));
}

json steps_to_json(const DecreasingStepFunction& m) {
  json steps = json::array();
  for (const auto& s : m.steps()) steps.push_back({s.value, s.length});
  return {{"steps", std::move(steps)}};
}

json norm_report_to_json(const NormReport& r) {
  json j{{"value", r.value}, {"method", to_string(r.method)}};
  if (r.attained_at)
    j["attained_at"] = *r.attained_at;
  else
    j["attained_at"] = nullptr;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace ncorlicz
