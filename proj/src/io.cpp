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

#include "symsub/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

#include "symsub/errors.hpp"

namespace symsub {

namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedInstanceError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw MalformedInstanceError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T As(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw MalformedInstanceError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::shared_ptr<const SetFunction> ParseInstance(const Json& j) {
  const auto type = Field<std::string>(j, "type");
  const int n = Field<int>(j, "n");
  if (n < 0) throw MalformedInstanceError("n must be >= 0");
  if (type == "graph-cut") {
    WeightedGraph g;
    g.n = n;
    const Json& edges = j.contains("edges") ? j.at("edges") : Json::array();
    if (!edges.is_array()) throw MalformedInstanceError("edges must be an array");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 3) {
        throw MalformedInstanceError("graph edge must be [u, v, w]");
      }
      g.edges.push_back({As<int>(e[0], "edge endpoint"), As<int>(e[1], "edge endpoint"),
                         As<double>(e[2], "edge weight")});
    }
    return std::make_shared<GraphCutFunction>(std::move(g));
  }
  if (type == "hypergraph-cut") {
    WeightedHypergraph h;
    h.n = n;
    const Json& edges = j.contains("edges") ? j.at("edges") : Json::array();
    if (!edges.is_array()) throw MalformedInstanceError("edges must be an array");
    for (const Json& e : edges) {
      h.hyperedges.push_back({Field<IdList>(e, "members"), Field<double>(e, "w")});
    }
    return std::make_shared<HypergraphCutFunction>(std::move(h));
  }
  if (type == "table") {
    return std::make_shared<TableFunction>(n, Field<std::vector<double>>(j, "values"));
  }
  throw MalformedInstanceError("unknown instance type \"" + type + "\"");
}

Json GraphToJson(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const WeightedEdge& e : g.edges) edges.push_back(Json::array({e.u, e.v, e.w}));
  return Json{{"type", "graph-cut"}, {"n", g.n}, {"edges", std::move(edges)}};
}

Json HypergraphToJson(const WeightedHypergraph& h) {
  Json edges = Json::array();
  for (const Hyperedge& e : h.hyperedges) edges.push_back(Json{{"members", e.members}, {"w", e.w}});
  return Json{{"type", "hypergraph-cut"}, {"n", h.n}, {"edges", std::move(edges)}};
}

Json InstanceToJson(const SetFunction& f) {
  switch (f.kind()) {
    case OracleKind::kGraphCut:
      return GraphToJson(static_cast<const GraphCutFunction&>(f).graph());
    case OracleKind::kHypergraphCut:
      return HypergraphToJson(static_cast<const HypergraphCutFunction&>(f).hypergraph());
    case OracleKind::kTable:
      return Json{{"type", "table"},
                  {"n", f.n()},
                  {"values", static_cast<const TableFunction&>(f).values()}};
  }
  throw InternalInvariantError("unhandled oracle kind");
}

Constraint ParseConstraint(const Json& j, int n) {
  const auto type = Field<std::string>(j, "type");
  if (type == "cardinality") {
    const int k = Field<int>(j, "k");
    if (k < 1) throw MalformedInstanceError("cardinality k must be >= 1");
    return CardinalityConstraint{k};
  }
  if (type == "uniform-matroid") {
    const int k = Field<int>(j, "k");
    if (k < 0) throw MalformedInstanceError("uniform matroid k must be >= 0");
    return Matroid::Uniform(n, k);
  }
  if (type == "partition-matroid") {
    return Matroid::Partition(n, Field<std::vector<IdList>>(j, "parts"),
                              Field<std::vector<int>>(j, "limits"));
  }
  if (type == "packing") {
    PackingConstraint p = MakePacking(Field<std::vector<std::vector<double>>>(j, "A"),
                                      Field<std::vector<double>>(j, "b"));
    if (p.n() != n) {
      throw MalformedInstanceError("packing A has " + std::to_string(p.n()) +
                                   " columns, instance has n = " + std::to_string(n));
    }
    return p;
  }
  if (type == "knapsack") {
    KnapsackConstraint kc =
        MakeKnapsack(Field<std::vector<double>>(j, "weights"), Field<double>(j, "budget"));
    if (kc.n() != n) {
      throw MalformedInstanceError("knapsack has " + std::to_string(kc.n()) +
                                   " weights, instance has n = " + std::to_string(n));
    }
    return kc;
  }
  throw MalformedInstanceError("unknown constraint type \"" + type + "\"");
}

Json ConstraintToJson(const Constraint& c) {
  struct Visitor {
    Json operator()(const CardinalityConstraint& cc) const {
      return Json{{"type", "cardinality"}, {"k", cc.k}};
    }
    Json operator()(const Matroid& m) const {
      if (m.kind() == Matroid::Kind::kUniform) {
        return Json{{"type", "uniform-matroid"}, {"k", m.uniform_k()}};
      }
      return Json{{"type", "partition-matroid"}, {"parts", m.parts()}, {"limits", m.limits()}};
    }
    Json operator()(const PackingConstraint& p) const {
      return Json{{"type", "packing"}, {"A", p.a}, {"b", p.b}};
    }
    Json operator()(const KnapsackConstraint& kc) const {
      return Json{{"type", "knapsack"}, {"weights", kc.weights}, {"budget", kc.budget}};
    }
  };
  return std::visit(Visitor{}, c);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInstanceError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

Json ParseJsonText(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInstanceError(what + ": " + e.what());
  }
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

std::string Sha256Hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace symsub
