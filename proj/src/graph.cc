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

#include "hcore/graph.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "named_graph_data.h"

namespace hcore {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw GraphError("multi-edge in graph");
    }
  }
}

int Graph::num_edges() const {
  size_t twice = 0;
  for (const auto& nb : adj_) twice += nb.size();
  return static_cast<int>(twice / 2);
}

bool Graph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) e.emplace_back(u, v);
    }
  }
  return e;
}

Graph Graph::DisjointUnion(const Graph& o) const {
  auto e = edges();
  for (auto [u, v] : o.edges()) e.emplace_back(u + n(), v + n());
  return Graph(n() + o.n(), e);
}

int girth(const Graph& g) {
  int best = kInfiniteGirth;
  std::vector<int> dist(g.n());
  std::vector<int> parent(g.n());
  for (int s = 0; s < g.n(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          const int len = dist[x] + dist[y] + 1;
          if (best == kInfiniteGirth || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool check_regular(const Graph& g, int d) {
  for (int v = 0; v < g.n(); ++v) {
    if (static_cast<int>(g.neighbors(v).size()) != d) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;
using Counts = std::vector<std::uint64_t>;

Counts Multiply(const Counts& x, const Counts& y) {
  Counts r(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return r;
}

// Memo table lives for one computation only.
class IndPolySolver {
 public:
  explicit IndPolySolver(const Graph& g) : nbr_(g.n()), closed_(g.n()) {
    for (int v = 0; v < g.n(); ++v) {
      for (int u : g.neighbors(v)) nbr_[v] |= Mask{1} << u;
      closed_[v] = nbr_[v] | (Mask{1} << v);
    }
  }

  Counts Solve(Mask mask) {
    if (mask == 0) return {1};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Counts result;
    const Mask comp = Component(mask);
    if (comp != mask) {
      result = Multiply(Solve(comp), Solve(mask & ~comp));
    } else {
      int pivot = -1;
      int best = -1;
      for (Mask m = mask; m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int deg = std::popcount(nbr_[v] & mask);
        if (deg > best) {
          best = deg;
          pivot = v;
        }
      }
      if (best == 0) {
        // Single isolated vertex.
        result = {1, 1};
      } else {
        const Counts without = Solve(mask & ~(Mask{1} << pivot));
        const Counts with = Solve(mask & ~closed_[pivot]);
        result = without;
        if (result.size() < with.size() + 1) result.resize(with.size() + 1, 0);
        for (size_t i = 0; i < with.size(); ++i) result[i + 1] += with[i];
      }
    }
    memo_.emplace(mask, result);
    return result;
  }

 private:
  Mask Component(Mask mask) const {
    Mask seen = mask & (~mask + 1);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) {
        next |= nbr_[std::countr_zero(m)];
      }
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  std::vector<Mask> nbr_;
  std::vector<Mask> closed_;
  std::unordered_map<Mask, Counts> memo_;
};

}  // namespace

Poly independence_polynomial(const Graph& g) {
  if (g.n() > kMaxIndPolyOrder) {
    throw GraphError("independence polynomial size guard: n = " +
                     std::to_string(g.n()) + " > " +
                     std::to_string(kMaxIndPolyOrder));
  }
  IndPolySolver solver(g);
  const Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  const Counts c = solver.Solve(all);
  std::vector<Scalar> coeffs;
  coeffs.reserve(c.size());
  for (auto x : c) coeffs.emplace_back(mpq_class(mpz_class(std::to_string(x))));
  return Poly(std::move(coeffs));
}

int independence_number(const Graph& g) {
  return independence_polynomial(g).degree();
}

RatFunc occupancy_fraction(const Graph& g) {
  const Poly p = independence_polynomial(g);
  return RatFunc(Poly::X() * p.Derivative(), Scalar(g.n()) * p);
}

long moore_order(int d, int g) {
  if (d < 2 || g < 3) throw std::invalid_argument("moore_order needs d>=2, g>=3");
  auto geometric = [d](int top) {
    long s = 0;
    long p = 1;
    for (int j = 0; j <= top; ++j) {
      s += p;
      p *= d - 1;
    }
    return s;
  };
  if (g % 2 == 1) return 1 + d * geometric((g - 3) / 2);
  long p = 1;
  for (int j = 0; j < g / 2 - 1; ++j) p *= d - 1;
  return 1 + p + d * geometric((g - 4) / 2);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long> row;
    long x = 0;
    while (ls >> x) row.push_back(x);
    if (!ls.eof() || row.size() != 2) {
      throw GraphError("graph parse error at line " + std::to_string(lineno) +
                       ": expected two integers");
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw GraphError("graph parse error: missing header");
  const long n = rows[0][0];
  const long m = rows[0][1];
  if (n < 0 || m < 0 || n > 1'000'000) {
    throw GraphError("graph parse error: bad header");
  }
  if (static_cast<long>(rows.size()) - 1 != m) {
    throw GraphError("graph parse error: header says " + std::to_string(m) +
                     " edges, found " + std::to_string(rows.size() - 1));
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 1; i < rows.size(); ++i) {
    edges.emplace_back(static_cast<int>(rows[i][0]),
                       static_cast<int>(rows[i][1]));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw GraphError("cannot open graph file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  }
  return Graph(k, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_bipartite(int d) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) e.emplace_back(i, d + j);
  }
  return Graph(2 * d, e);
}

namespace {

struct Expected {
  const char* name;
  int order, regularity, girth;
};

constexpr Expected kEmbedded[] = {
    {"petersen", 10, 3, 5},          {"heawood", 14, 3, 6},
    {"gp72", 14, 3, 5},              {"tutte_coxeter_h38", 30, 3, 8},
    {"h46", 26, 4, 6},               {"robertson", 19, 4, 5},
    {"cyclotomic13", 13, 4, 4},
};

// "kdd(3)" -> ("kdd", 3).
std::optional<std::pair<std::string, int>> SplitFamily(std::string_view name) {
  const auto open = name.find('(');
  if (open == std::string_view::npos || name.back() != ')') return std::nullopt;
  const std::string arg(name.substr(open + 1, name.size() - open - 2));
  if (arg.empty() ||
      !std::all_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      arg.size() > 4) {
    return std::nullopt;
  }
  return std::make_pair(std::string(name.substr(0, open)), std::stoi(arg));
}

NamedGraph Validated(NamedGraph ng) {
  const int gg = girth(ng.graph);
  if (ng.graph.n() != ng.order || !check_regular(ng.graph, ng.regularity) ||
      gg != ng.girth) {
    throw GraphError("named graph " + ng.name +
                     " fails validation: order " + std::to_string(ng.graph.n()) +
                     ", girth " + std::to_string(gg));
  }
  return ng;
}

}  // namespace

NamedGraph named(std::string_view name) {
  for (const auto& e : kEmbedded) {
    if (name == e.name) {
      return Validated({e.name, parse_graph(EmbeddedGraphText(e.name)),
                        e.order, e.regularity, e.girth});
    }
  }
  const auto fam = SplitFamily(name);
  if (fam) {
    const auto& [kind, k] = *fam;
    if (kind == "kdd" && k >= 2) {
      return Validated({std::string(name), complete_bipartite(k), 2 * k, k, 4});
    }
    if (kind == "complete" && k >= 3) {
      return Validated({std::string(name), complete_graph(k), k, k - 1, 3});
    }
    if (kind == "cycle" && k >= 3) {
      return Validated({std::string(name), cycle_graph(k), k, 2, k});
    }
  }
  throw GraphError("unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> named_catalog() {
  std::vector<std::string> names;
  for (const auto& e : kEmbedded) names.emplace_back(e.name);
  names.emplace_back("kdd(d)");
  names.emplace_back("complete(k)");
  names.emplace_back("cycle(n)");
  return names;
}

}  // namespace hcore
