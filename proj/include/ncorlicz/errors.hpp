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

#ifndef NCORLICZ_ERRORS_HPP
#define NCORLICZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncorlicz {

// Integral or supremum diverges (e.g. a decay with exponent >= 1 at zero).
class divergence_error : public std::runtime_error {
 public:
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative kernel failed to converge within its cap.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncorlicz

#endif  // NCORLICZ_ERRORS_HPP
