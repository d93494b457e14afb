// Copyright 2026 The Heyting Toolkit Authors
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

#ifndef HEYTING_ALGEBRA_IO_H_
#define HEYTING_ALGEBRA_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "heyting/algebra.h"

namespace heyting {

// {"size": int, "leq": [[0|1|bool, ...], ...], "implies": [[int, ...], ...],
//  "bot": int, "top": int}
HeytingAlgebra algebra_from_json(const nlohmann::json& j, const Limits& limits = {});
nlohmann::json algebra_to_json(const HeytingAlgebra& a);
HeytingAlgebra load_algebra(const std::string& path, const Limits& limits = {});

}  // namespace heyting

#endif  // HEYTING_ALGEBRA_IO_H_
