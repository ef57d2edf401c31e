// Copyright 2026 The hcore Authors
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

#ifndef HCORE_GRAPH_H_
#define HCORE_GRAPH_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcore/poly.h"
#include "hcore/ratfunc.h"

namespace hcore {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

  // Disjoint union, vertices of o shifted by n().
  Graph DisjointUnion(const Graph& o) const;

 private:
  std::vector<std::vector<int>> adj_;
};

inline constexpr int kInfiniteGirth = -1;
inline constexpr int kMaxIndPolyOrder = 40;

// Shortest cycle length, or kInfiniteGirth for a forest.
int girth(const Graph& g);
bool check_regular(const Graph& g, int d);

// Independence polynomial by the deletion recursion
//   P_G = P_{G-v} + λ P_{G-N[v]}
// pivoting on a maximum-degree vertex. Throws GraphError if n > 40.
Poly independence_polynomial(const Graph& g);
int independence_number(const Graph& g);
RatFunc occupancy_fraction(const Graph& g);

long moore_order(int d, int g);

// Graph file: "n m", then m lines "u v"; '#' starts a comment line.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

struct NamedGraph {
  std::string name;
  Graph graph;
  int order = 0;
  int regularity = 0;
  int girth = 0;
};

// petersen, heawood, gp72, tutte_coxeter_h38, h46, robertson, cyclotomic13,
// and the families kdd(d), complete(k), cycle(n) written as e.g. "kdd(3)".
// Throws GraphError for unknown names or when validation fails.
NamedGraph named(std::string_view name);
std::vector<std::string> named_catalog();

// Common constructions.
Graph complete_graph(int k);
Graph cycle_graph(int n);
Graph complete_bipartite(int d);

}  // namespace hcore

#endif  // HCORE_GRAPH_H_
