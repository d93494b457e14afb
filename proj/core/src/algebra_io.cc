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

#include "heyting/algebra_io.h"

#include <fstream>

#include "heyting/errors.h"

namespace heyting {

HeytingAlgebra algebra_from_json(const nlohmann::json& j, const Limits& limits) {
  try {
    const auto size = j.at("size").get<std::int64_t>();
    if (size <= 0) throw InputError("algebra JSON: size must be positive");
    std::vector<std::vector<bool>> leq;
    for (const auto& row : j.at("leq")) {
      std::vector<bool> r;
      for (const auto& v : row) r.push_back(v.is_boolean() ? v.get<bool>() : v.get<int>() != 0);
      leq.push_back(std::move(r));
    }
    std::vector<std::vector<std::size_t>> imp;
    for (const auto& row : j.at("implies")) {
      std::vector<std::size_t> r;
      for (const auto& v : row) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) throw InputError("algebra JSON: negative element");
        r.push_back(static_cast<std::size_t>(x));
      }
      imp.push_back(std::move(r));
    }
    const auto bot = j.at("bot").get<std::int64_t>();
    const auto top = j.at("top").get<std::int64_t>();
    if (bot < 0 || top < 0) throw InputError("algebra JSON: negative bot/top");
    return HeytingAlgebra::from_tables(static_cast<std::size_t>(size), leq, imp,
                                       static_cast<std::size_t>(bot),
                                       static_cast<std::size_t>(top), limits);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("algebra JSON: ") + e.what());
  }
}

nlohmann::json algebra_to_json(const HeytingAlgebra& a) {
  nlohmann::json leq = nlohmann::json::array();
  nlohmann::json imp = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json lrow = nlohmann::json::array();
    nlohmann::json irow = nlohmann::json::array();
    for (std::size_t k = 0; k < a.size(); ++k) {
      lrow.push_back(a.leq(i, k) ? 1 : 0);
      irow.push_back(a.implies(i, k));
    }
    leq.push_back(std::move(lrow));
    imp.push_back(std::move(irow));
  }
  return {{"size", a.size()}, {"leq", leq}, {"implies", imp}, {"bot", a.bot()}, {"top", a.top()}};
}

HeytingAlgebra load_algebra(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return algebra_from_json(j, limits);
}

}  // namespace heyting
