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

#ifndef HEYTING_POSET_IO_H_
#define HEYTING_POSET_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "heyting/poset.h"

namespace heyting {

// {"n": int, "covers": [[i, j], ...], "labels": [...]?}. "covers" may be any
// generating relation; it is closed on load.
Poset poset_from_json(const nlohmann::json& j);
// Always writes the transitive reduction and the labels.
nlohmann::json poset_to_json(const Poset& p);

Poset load_poset(const std::string& path);

// Hasse diagram in Graphviz DOT. Edges are the covers only; elements of
// equal depth share a rank and deeper elements are drawn lower.
std::string to_dot(const Poset& p, const std::string& name = "poset");

}  // namespace heyting

#endif  // HEYTING_POSET_IO_H_
