// Copyright 2026 The Authors.
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

// JSON forms of instances and constraints.
//
//   {"type":"graph-cut","n":3,"edges":[[0,1,1.0],[1,2,1.0]]}
//   {"type":"hypergraph-cut","n":4,"edges":[{"members":[0,1,2],"w":5.0}]}
//   {"type":"table","n":2,"values":[0,5,5,0]}
//
//   {"type":"cardinality","k":3}
//   {"type":"uniform-matroid","k":3}
//   {"type":"partition-matroid","parts":[[0,1],[2,3]],"limits":[1,1]}
//   {"type":"packing","A":[[0.5,1.0]],"b":[2.0]}
//   {"type":"knapsack","weights":[3,1,1],"budget":3.0}
//
// Unknown keys (e.g. a "generator" block) are ignored on input. All parse
// failures surface as MalformedInstanceError.

#ifndef SYMSUB_IO_HPP_
#define SYMSUB_IO_HPP_

#include <memory>
#include <string>

#include "json.hpp"
#include "symsub/constraints.hpp"
#include "symsub/oracle.hpp"

namespace symsub {

using Json = nlohmann::ordered_json;

std::shared_ptr<const SetFunction> ParseInstance(const Json& j);
Json InstanceToJson(const SetFunction& f);
Json GraphToJson(const WeightedGraph& g);
Json HypergraphToJson(const WeightedHypergraph& h);

// `n` binds size-free constraint kinds (uniform matroid) to the ground set.
Constraint ParseConstraint(const Json& j, int n);
Json ConstraintToJson(const Constraint& c);

// File helpers. Read failures throw MalformedInstanceError; write failures
// throw Error.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);
Json ParseJsonText(const std::string& text, const std::string& what);
// Two-space indented JSON plus a trailing newline.
std::string DumpJson(const Json& j);

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(const std::string& bytes);

}  // namespace symsub

#endif  // SYMSUB_IO_HPP_
