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

#include "heyting/poset_io.h"

#include <fstream>
#include <map>
#include <sstream>

#include "heyting/errors.h"

namespace heyting {

Poset poset_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n")) throw InputError("poset JSON needs an object with \"n\"");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw InputError("poset JSON: negative \"n\"");
    std::vector<Poset::Pair> pairs;
    if (j.contains("covers")) {
      for (const auto& pair : j.at("covers")) {
        if (!pair.is_array() || pair.size() != 2) throw InputError("poset JSON: cover must be [i, j]");
        const auto a = pair[0].get<std::int64_t>();
        const auto b = pair[1].get<std::int64_t>();
        if (a < 0 || b < 0) throw InputError("poset JSON: negative index");
        pairs.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
      throw InputError("poset JSON: label count does not match n");
    return Poset::from_relation(static_cast<std::size_t>(n), pairs, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("poset JSON: ") + e.what());
  }
}

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : p.cover_pairs()) covers.push_back({a, b});
  return {{"n", p.size()}, {"covers", covers}, {"labels", p.labels()}};
}

Poset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return poset_from_json(j);
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=circle, width=0.3, fontsize=10];\n";
  std::map<std::size_t, std::vector<std::size_t>, std::greater<>> ranks;
  for (std::size_t x = 0; x < p.size(); ++x) ranks[p.depth_of(x)].push_back(x);
  for (const auto& [depth, xs] : ranks) {
    out << "  { rank=same;";
    for (std::size_t x : xs) out << " n" << x << ";";
    out << " }  // depth " << depth << "\n";
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=\"" << p.label(x) << "\"];\n";
  }
  for (const auto& [a, b] : p.cover_pairs()) out << "  n" << a << " -> n" << b << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace heyting
