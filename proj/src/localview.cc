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

#include "hcore/localview.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace hcore {
namespace {

using Mask8 = std::uint8_t;

constexpr std::array<std::array<int, 3>, 6> kS3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

Mask8 ApplyPerm(Mask8 m, const std::array<int, 3>& sigma) {
  Mask8 r = 0;
  for (int i = 0; i < 3; ++i) {
    if (m & (1u << i)) r |= static_cast<Mask8>(1u << sigma[i]);
  }
  return r;
}

struct RawView {
  std::vector<Mask8> attach;
  std::vector<Mask8> adj;
};

std::string EdgeBits(const std::vector<Mask8>& adj,
                     const std::vector<int>& order) {
  // order[k] = old index placed at new position k.
  const int s = static_cast<int>(order.size());
  std::string bits;
  bits.reserve(s * (s - 1) / 2);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      bits.push_back((adj[order[i]] >> order[j]) & 1 ? '1' : '0');
    }
  }
  return bits;
}

// Orbit-minimal relabelling under S3 on U and all permutations of W. For a
// fixed u-permutation the attachment string is minimised by sorting, so
// only W-permutations inside blocks of equal masks need to be tried.
std::pair<std::string, RawView> CanonicalForm(const RawView& raw) {
  const int s = static_cast<int>(raw.attach.size());
  std::string best_key;
  RawView best;
  bool have = false;
  for (const auto& sigma : kS3) {
    std::vector<Mask8> m(s);
    for (int w = 0; w < s; ++w) m[w] = ApplyPerm(raw.attach[w], sigma);
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return m[x] < m[y]; });
    std::string prefix = std::to_string(s) + ":";
    for (int k = 0; k < s; ++k) prefix.push_back(static_cast<char>('0' + m[order[k]]));
    prefix.push_back(':');
    if (have && prefix > best_key.substr(0, prefix.size())) continue;

    std::vector<std::pair<int, int>> blocks;
    for (int k = 0; k < s;) {
      int e = k;
      while (e < s && m[order[e]] == m[order[k]]) ++e;
      blocks.emplace_back(k, e);
      k = e;
    }
    std::function<void(size_t)> rec = [&](size_t b) {
      if (b == blocks.size()) {
        std::string key = prefix + EdgeBits(raw.adj, order);
        if (!have || key < best_key) {
          have = true;
          best_key = std::move(key);
          best.attach.assign(s, 0);
          best.adj.assign(s, 0);
          std::vector<int> pos(s);
          for (int k = 0; k < s; ++k) pos[order[k]] = k;
          for (int k = 0; k < s; ++k) {
            best.attach[k] = m[order[k]];
            for (int x = 0; x < s; ++x) {
              if (raw.adj[order[k]] & (1u << x)) {
                best.adj[k] |= static_cast<Mask8>(1u << pos[x]);
              }
            }
          }
        }
        return;
      }
      auto [lo, hi] = blocks[b];
      std::sort(order.begin() + lo, order.begin() + hi);
      do {
        rec(b + 1);
      } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
  }
  if (s == 0) return {"0::", raw};
  return {best_key, best};
}

// Girth of the graph on v, U, W induced by the view (0 = acyclic).
int ViewGirth(const RawView& r) {
  const int s = static_cast<int>(r.attach.size());
  const int n = 4 + s;
  std::vector<std::vector<int>> adj(n);
  auto add = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = 0; i < 3; ++i) add(0, 1 + i);
  for (int w = 0; w < s; ++w) {
    for (int i = 0; i < 3; ++i) {
      if (r.attach[w] & (1u << i)) add(1 + i, 4 + w);
    }
    for (int x = w + 1; x < s; ++x) {
      if (r.adj[w] & (1u << x)) add(4 + w, 4 + x);
    }
  }
  Graph g(n, [&] {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a) {
      for (int b : adj[a]) {
        if (a < b) e.emplace_back(a, b);
      }
    }
    return e;
  }());
  const int gg = girth(g);
  return gg == kInfiniteGirth ? 0 : gg;
}

void Validate(GirthClass cls, const RawView& r) {
  const int s = static_cast<int>(r.attach.size());
  if (s > kMaxW) throw ConfigError("more than 6 second neighbours");
  std::array<int, 3> slots{};
  for (int w = 0; w < s; ++w) {
    const Mask8 m = r.attach[w];
    if (m == 0 || m > 7) throw ConfigError("w without attachment to U");
    if (cls != GirthClass::kG4 && std::popcount(m) != 1) {
      throw ConfigError("w attached to several u's in a girth >= 5 view");
    }
    for (int i = 0; i < 3; ++i) slots[i] += (m >> i) & 1;
    if (r.adj[w] & (1u << w)) throw ConfigError("loop in W");
    for (int x = 0; x < s; ++x) {
      if (((r.adj[w] >> x) & 1) != ((r.adj[x] >> w) & 1)) {
        throw ConfigError("asymmetric W adjacency");
      }
      if ((r.adj[w] & (1u << x)) && (r.attach[w] & r.attach[x])) {
        throw ConfigError("W-edge between two children of the same u");
      }
    }
    if (std::popcount(m) + std::popcount(r.adj[w]) > 3) {
      throw ConfigError("second neighbour of degree > 3");
    }
  }
  for (int c : slots) {
    if (c > 2) throw ConfigError("u with more than two children");
  }
  if (cls == GirthClass::kG6) {
    for (Mask8 a : r.adj) {
      if (a != 0) throw ConfigError("W-edge in a girth-6 view");
    }
  }
  const int gg = ViewGirth(r);
  if (gg != 0 && gg < static_cast<int>(cls)) {
    throw ConfigError("view has a cycle of length " + std::to_string(gg));
  }
}

RawView FromPairs(int s, const std::vector<std::pair<int, int>>& attach,
                  const std::vector<std::pair<int, int>>& e22) {
  if (s < 0 || s > kMaxW) throw ConfigError("bad |W| = " + std::to_string(s));
  RawView r{std::vector<Mask8>(s, 0), std::vector<Mask8>(s, 0)};
  for (auto [u, w] : attach) {
    if (u < 0 || u > 2 || w < 0 || w >= s) throw ConfigError("bad attachment");
    r.attach[w] |= static_cast<Mask8>(1u << u);
  }
  for (auto [x, y] : e22) {
    if (x < 0 || y < 0 || x >= s || y >= s) throw ConfigError("bad W-edge");
    r.adj[x] |= static_cast<Mask8>(1u << y);
    r.adj[y] |= static_cast<Mask8>(1u << x);
  }
  return r;
}

Configuration Build(GirthClass cls, const RawView& raw) {
  Validate(cls, raw);
  auto [key, canon] = CanonicalForm(raw);
  Configuration c;
  c.girth_class = cls;
  c.attach = std::move(canon.attach);
  c.adj = std::move(canon.adj);
  c.canon_key = std::move(key);
  return c;
}

struct Enumeration {
  std::vector<RawView> full_balls;
  std::vector<Configuration> views;
};

Enumeration Enumerate(GirthClass cls) {
  const int g = static_cast<int>(cls);
  Enumeration out;
  std::set<std::string> ball_keys;
  for (int s = 2; s <= kMaxW; ++s) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < s; ++x) {
      for (int y = x + 1; y < s; ++y) pairs.emplace_back(x, y);
    }
    // Each u has exactly two children; together they cover all of S.
    std::map<std::string, RawView> patterns;
    for (const auto& p0 : pairs) {
      for (const auto& p1 : pairs) {
        for (const auto& p2 : pairs) {
          RawView r{std::vector<Mask8>(s, 0), std::vector<Mask8>(s, 0)};
          const std::pair<int, int> ps[3] = {p0, p1, p2};
          for (int i = 0; i < 3; ++i) {
            r.attach[ps[i].first] |= static_cast<Mask8>(1u << i);
            r.attach[ps[i].second] |= static_cast<Mask8>(1u << i);
          }
          if (std::any_of(r.attach.begin(), r.attach.end(),
                          [](Mask8 m) { return m == 0; })) {
            continue;
          }
          auto [key, canon] = CanonicalForm(r);
          patterns.emplace(key, canon);
        }
      }
    }
    for (const auto& [unused, pattern] : patterns) {
      std::vector<std::pair<int, int>> cand;
      for (auto [x, y] : pairs) {
        if ((pattern.attach[x] & pattern.attach[y]) == 0) cand.emplace_back(x, y);
      }
      RawView r = pattern;
      std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cand.size()) {
          const int gg = ViewGirth(r);
          if (gg != 0 && gg < g) return;
          auto [key, canon] = CanonicalForm(r);
          if (ball_keys.insert(key).second) out.full_balls.push_back(canon);
          return;
        }
        rec(idx + 1);
        auto [x, y] = cand[idx];
        auto deg = [&](int w) {
          return std::popcount(r.attach[w]) + std::popcount(r.adj[w]);
        };
        if (deg(x) < 3 && deg(y) < 3) {
          r.adj[x] |= static_cast<Mask8>(1u << y);
          r.adj[y] |= static_cast<Mask8>(1u << x);
          rec(idx + 1);
          r.adj[x] &= static_cast<Mask8>(~(1u << y));
          r.adj[y] &= static_cast<Mask8>(~(1u << x));
        }
      };
      rec(0);
    }
  }
  std::map<std::string, Configuration> views;
  for (const RawView& ball : out.full_balls) {
    const int s = static_cast<int>(ball.attach.size());
    int coverable = 0;
    for (int w = 0; w < s; ++w) {
      if (std::popcount(ball.attach[w]) + std::popcount(ball.adj[w]) < 3) {
        coverable |= 1 << w;
      }
    }
    // Every subset of the coverable second neighbours may be covered.
    for (int cov = coverable;; cov = (cov - 1) & coverable) {
      std::vector<int> keep;
      for (int w = 0; w < s; ++w) {
        if (!(cov & (1 << w))) keep.push_back(w);
      }
      RawView r;
      for (int w : keep) {
        r.attach.push_back(ball.attach[w]);
        Mask8 a = 0;
        for (size_t k = 0; k < keep.size(); ++k) {
          if (ball.adj[w] & (1u << keep[k])) a |= static_cast<Mask8>(1u << k);
        }
        r.adj.push_back(a);
      }
      Configuration c = Build(cls, r);
      views.emplace(c.canon_key, std::move(c));
      if (cov == 0) break;
    }
  }
  for (auto& [key, c] : views) out.views.push_back(std::move(c));
  std::sort(out.views.begin(), out.views.end(), CanonicalLess);
  return out;
}

Poly FromCounts(const std::vector<long>& counts) {
  std::vector<Scalar> c;
  c.reserve(counts.size());
  for (long x : counts) c.emplace_back(x);
  return Poly(std::move(c));
}

}  // namespace

GirthClass ParseGirthClass(int g) {
  switch (g) {
    case 4:
      return GirthClass::kG4;
    case 5:
      return GirthClass::kG5;
    case 6:
      return GirthClass::kG6;
    default:
      throw ConfigError("girth class must be 4, 5 or 6");
  }
}

std::vector<std::pair<int, int>> Configuration::attach_pairs() const {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < 3; ++i) {
    for (int w = 0; w < size(); ++w) {
      if (attach[w] & (1u << i)) p.emplace_back(i, w);
    }
  }
  return p;
}

std::vector<std::pair<int, int>> Configuration::e22_edges() const {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < size(); ++x) {
    for (int y = x + 1; y < size(); ++y) {
      if (adj[x] & (1u << y)) e.emplace_back(x, y);
    }
  }
  return e;
}

std::array<int, 3> Configuration::CVector() const {
  std::array<int, 3> c{};
  for (auto m : attach) {
    for (int i = 0; i < 3; ++i) c[i] += (m >> i) & 1;
  }
  std::sort(c.begin(), c.end());
  return c;
}

std::string Configuration::Label() const {
  const bool tree =
      std::all_of(attach.begin(), attach.end(),
                  [](Mask8 m) { return std::popcount(m) == 1; }) &&
      std::all_of(adj.begin(), adj.end(), [](Mask8 m) { return m == 0; });
  if (!tree) return canon_key;
  const auto c = CVector();
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
         std::to_string(c[2]) + ")";
}

bool CanonicalLess(const Configuration& x, const Configuration& y) {
  if (x.size() != y.size()) return x.size() > y.size();
  return x.canon_key < y.canon_key;
}

Configuration canonicalize(GirthClass cls, int s,
                           const std::vector<std::pair<int, int>>& attach,
                           const std::vector<std::pair<int, int>>& e22) {
  return Build(cls, FromPairs(s, attach, e22));
}

Configuration canonicalize(const Configuration& c) {
  return Build(c.girth_class, RawView{c.attach, c.adj});
}

Configuration g6_configuration(int c1, int c2, int c3) {
  const int c[3] = {c1, c2, c3};
  std::vector<std::pair<int, int>> attach;
  int w = 0;
  for (int i = 0; i < 3; ++i) {
    if (c[i] < 0 || c[i] > 2) throw ConfigError("c_i must be in 0..2");
    for (int k = 0; k < c[i]; ++k) attach.emplace_back(i, w++);
  }
  return canonicalize(GirthClass::kG6, w, attach, {});
}

std::vector<Configuration> enumerate_configurations(GirthClass cls) {
  return Enumerate(cls).views;
}

int count_full_balls(GirthClass cls) {
  return static_cast<int>(Enumerate(cls).full_balls.size());
}

PartitionFunctions partition_functions(const Configuration& c) {
  const ConfigFunctions f = config_functions(c);
  return {f.z_plus, f.z_minus, f.z};
}

RatFunc alpha(const Configuration& c) { return config_functions(c).alpha; }

RatFunc gamma(const Configuration& c, char side, int t) {
  if (t < 0 || t > 3) throw std::invalid_argument("t must be in 0..3");
  const ConfigFunctions f = config_functions(c);
  if (side == 'v') return f.gamma_v[t];
  if (side == 'u') return f.gamma_u[t];
  throw std::invalid_argument("side must be 'v' or 'u'");
}

ConfigFunctions config_functions(const Configuration& c) {
  const int s = c.size();
  const int max_deg = 4 + s;
  std::vector<long> zp(max_deg + 1, 0);
  std::vector<long> zm(max_deg + 1, 0);
  std::array<std::vector<long>, 4> gv;
  std::array<std::vector<long>, 4> gu;
  for (auto& x : gv) x.assign(max_deg + 1, 0);
  for (auto& x : gu) x.assign(max_deg + 1, 0);

  std::array<Mask8, 3> children{};
  for (int w = 0; w < s; ++w) {
    for (int i = 0; i < 3; ++i) {
      if (c.attach[w] & (1u << i)) children[i] |= static_cast<Mask8>(1u << w);
    }
  }
  for (int s2 = 0; s2 < (1 << s); ++s2) {
    bool independent = true;
    Mask8 blocked = 0;
    for (int w = 0; w < s; ++w) {
      if (!(s2 & (1 << w))) continue;
      if (c.adj[w] & s2) independent = false;
      blocked |= c.attach[w];
    }
    if (!independent) continue;
    const int k2 = std::popcount(static_cast<unsigned>(s2));
    std::array<int, 3> occ{};
    for (int i = 0; i < 3; ++i) occ[i] = std::popcount(static_cast<unsigned>(children[i] & s2));

    // v occupied: all of U is empty, each u sees v plus its occupied children.
    zp[1 + k2] += 1;
    for (int i = 0; i < 3; ++i) gu[occ[i] + 1][1 + k2] += 1;

    // v empty: any S1 in U with no edge to S2.
    for (int s1 = 0; s1 < 8; ++s1) {
      if (s1 & blocked) continue;
      const int k1 = std::popcount(static_cast<unsigned>(s1));
      zm[k1 + k2] += 1;
      gv[k1][k1 + k2] += 1;
      for (int i = 0; i < 3; ++i) gu[occ[i]][k1 + k2] += 1;
    }
  }
  ConfigFunctions f;
  f.z_plus = FromCounts(zp);
  f.z_minus = FromCounts(zm);
  f.z = f.z_plus + f.z_minus;
  f.alpha = RatFunc(f.z_plus, f.z);
  const Poly one_plus = Poly({1, 1});
  const Poly three_z = Scalar(3) * f.z;
  for (int t = 0; t < 4; ++t) {
    f.gv_num[t] = FromCounts(gv[t]);
    if (t == 0) f.gv_num[t] *= one_plus;
    f.gu_num[t] = FromCounts(gu[t]);
    f.gamma_v[t] = RatFunc(f.gv_num[t], f.z);
    f.gamma_u[t] = RatFunc(f.gu_num[t], three_z);
  }
  return f;
}

Configuration extract_configuration(const Graph& g, int v,
                                    const std::vector<bool>& in_set) {
  if (v < 0 || v >= g.n()) throw ConfigError("vertex out of range");
  if (static_cast<int>(in_set.size()) != g.n()) {
    throw ConfigError("independent-set indicator has wrong length");
  }
  if (!check_regular(g, 3)) throw ConfigError("graph is not cubic");
  const int gg = girth(g);
  if (gg != kInfiniteGirth && gg < 4) throw ConfigError("graph has triangles");
  for (auto [a, b] : g.edges()) {
    if (in_set[a] && in_set[b]) throw ConfigError("set is not independent");
  }
  const GirthClass cls = gg == kInfiniteGirth || gg >= 6 ? GirthClass::kG6
                         : gg == 5                       ? GirthClass::kG5
                                                         : GirthClass::kG4;
  std::vector<int> dist(g.n(), -1);
  dist[v] = 0;
  std::queue<int> q;
  q.push(v);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (dist[x] == 3) continue;
    for (int y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  const std::vector<int>& u = g.neighbors(v);
  std::vector<int> index(g.n(), -1);
  std::vector<int> w_list;
  for (int x = 0; x < g.n(); ++x) {
    if (dist[x] != 2) continue;
    bool covered = false;
    for (int y : g.neighbors(x)) covered |= dist[y] == 3 && in_set[y];
    if (!covered) {
      index[x] = static_cast<int>(w_list.size());
      w_list.push_back(x);
    }
  }
  std::vector<std::pair<int, int>> attach;
  std::vector<std::pair<int, int>> e22;
  for (int i = 0; i < 3; ++i) {
    for (int y : g.neighbors(u[i])) {
      if (index[y] >= 0) attach.emplace_back(i, index[y]);
    }
  }
  for (int x : w_list) {
    for (int y : g.neighbors(x)) {
      if (index[y] > index[x]) e22.emplace_back(index[x], index[y]);
    }
  }
  return canonicalize(cls, static_cast<int>(w_list.size()), attach, e22);
}

std::map<std::string, DistributionEntry> configuration_distribution(
    const Graph& g, const mpq_class& lambda) {
  if (g.n() > 16) throw ConfigError("configuration_distribution needs n <= 16");
  if (lambda <= 0) throw ConfigError("lambda must be positive");
  const int n = g.n();
  std::vector<unsigned> nbr(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y : g.neighbors(x)) nbr[x] |= 1u << y;
  }
  std::vector<mpq_class> lambda_pow(n + 1, 1);
  for (int k = 1; k <= n; ++k) lambda_pow[k] = lambda_pow[k - 1] * lambda;

  std::map<std::string, DistributionEntry> dist;
  mpq_class total = 0;
  for (unsigned set = 0; set < (1u << n); ++set) {
    bool independent = true;
    for (int x = 0; x < n && independent; ++x) {
      if ((set >> x & 1) && (nbr[x] & set)) independent = false;
    }
    if (!independent) continue;
    const mpq_class& weight = lambda_pow[std::popcount(set)];
    total += weight;
    std::vector<bool> in_set(n);
    for (int x = 0; x < n; ++x) in_set[x] = set >> x & 1;
    for (int v = 0; v < n; ++v) {
      Configuration c = extract_configuration(g, v, in_set);
      auto it = dist.find(c.canon_key);
      if (it == dist.end()) {
        std::string key = c.canon_key;
        it = dist.emplace(key, DistributionEntry{std::move(c), 0}).first;
      }
      it->second.probability += weight;
    }
  }
  for (auto& [key, e] : dist) {
    e.probability /= total * n;
    e.probability.canonicalize();
  }
  return dist;
}

std::string DumpLine(const Configuration& c, const PartitionFunctions& pf) {
  std::string attach;
  for (auto [u, w] : c.attach_pairs()) {
    if (!attach.empty()) attach += ",";
    attach += "u" + std::to_string(u) + "-w" + std::to_string(w);
  }
  std::string e22;
  for (auto [x, y] : c.e22_edges()) {
    if (!e22.empty()) e22 += ",";
    e22 += "w" + std::to_string(x) + "-w" + std::to_string(y);
  }
  return c.canon_key + "\t" + std::to_string(c.size()) + "\tattach=" +
         attach + "\te22=" + e22 + "\tz_plus=" + pf.z_plus.Serialize() +
         "\tz_minus=" + pf.z_minus.Serialize() + "\tz=" + pf.z.Serialize();
}

}  // namespace hcore
