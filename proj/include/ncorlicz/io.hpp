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

#ifndef NCORLICZ_IO_HPP
#define NCORLICZ_IO_HPP

#include <string>

#include <json.hpp>

#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/norms.hpp"
#include "ncorlicz/step_function.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

/// {"family":"power","p":2.5} | {"family":"power-log","p":2} |
/// {"family":"exp"} |
/// {"family":"tabulated","grid":[...],"phi":[...],"tail_exponents":[a,b]}
NFunction nfunction_from_json(const nlohmann::json& j);
nlohmann::json nfunction_to_json(const NFunction& f);

/// {"n":3,"trace_scale":1.0,"entries":[[[re,im],...],...]}
TracedMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const TracedMatrix& x);

/// {"steps":[[value,length],...]}
DecreasingStepFunction steps_from_json(const nlohmann::json& j);
nlohmann::json steps_to_json(const DecreasingStepFunction& m);

nlohmann::json norm_report_to_json(const NormReport& r);

/// Parses a JSON document from a file, rethrowing parse errors with the
/// file name and byte position in the message.
nlohmann::json load_json_file(const std::string& path);

}  // namespace ncorlicz

#endif  // NCORLICZ_IO_HPP
