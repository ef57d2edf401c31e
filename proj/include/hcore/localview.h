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

// Local views of a vertex v in a cubic graph. U = {u0, u1, u2} are the
// neighbours of v; W holds the second neighbours that are externally
// uncovered (no neighbour at distance 3 lies in the independent set). A
// covered second neighbour is simply absent from W.

#ifndef HCORE_LOCALVIEW_H_
#define HCORE_LOCALVIEW_H_

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcore/graph.h"
#include "hcore/poly.h"
#include "hcore/ratfunc.h"

namespace hcore {

enum class GirthClass { kG4 = 4, kG5 = 5, kG6 = 6 };

GirthClass ParseGirthClass(int g);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxW = 6;

struct Configuration {
  GirthClass girth_class = GirthClass::kG4;
  // attach[w]: bit i set iff w ~ u_i.
  std::vector<std::uint8_t> attach;
  // adj[w]: bit x set iff w ~ x inside W.
  std::vector<std::uint8_t> adj;
  std::string canon_key;

  int size() const { return static_cast<int>(attach.size()); }
  // (u, w) pairs in canonical labelling.
  std::vector<std::pair<int, int>> attach_pairs() const;
  std::vector<std::pair<int, int>> e22_edges() const;
  // Number of w's attached to each u, sorted ascending. Meaningful as a
  // label only when every w has a single attachment.
  std::array<int, 3> CVector() const;
  // "(c1,c2,c3)" for single-attachment views without W-edges, otherwise
  // the canonical key.
  std::string Label() const;
};

// Sorts by |W| descending, then by canon_key.
bool CanonicalLess(const Configuration& x, const Configuration& y);

// Raw view: |W| = s, attachments as (u, w) pairs, W-edges as (w, w') pairs.
// Validates the structural invariants of the girth class and returns the
// orbit-minimal relabelling. Throws ConfigError on a violation.
Configuration canonicalize(GirthClass cls, int s,
                           const std::vector<std::pair<int, int>>& attach,
                           const std::vector<std::pair<int, int>>& e22);
Configuration canonicalize(const Configuration& c);

// G6 view with c_i uncovered children under u_i.
Configuration g6_configuration(int c1, int c2, int c3);

// Every reduced view of a ball of girth >= class, deduplicated and sorted.
std::vector<Configuration> enumerate_configurations(GirthClass cls);

// Number of full balls (nothing covered) found during enumeration.
int count_full_balls(GirthClass cls);

struct ConfigFunctions {
  Poly z_plus;
  Poly z_minus;
  Poly z;
  RatFunc alpha;
  std::array<RatFunc, 4> gamma_v;
  std::array<RatFunc, 4> gamma_u;
  // Unreduced numerators: gamma_v[t] = gv_num[t] / z and
  // gamma_u[t] = gu_num[t] / (3 z).
  std::array<Poly, 4> gv_num;
  std::array<Poly, 4> gu_num;
};

struct PartitionFunctions {
  Poly z_plus;
  Poly z_minus;
  Poly z;
};

PartitionFunctions partition_functions(const Configuration& c);
RatFunc alpha(const Configuration& c);
// side is 'v' or 'u'; t in 0..3.
RatFunc gamma(const Configuration& c, char side, int t);
ConfigFunctions config_functions(const Configuration& c);

// Local view of v in the cubic graph g given the independent set `in_set`
// (indicator vector). The girth class is taken from girth(g).
Configuration extract_configuration(const Graph& g, int v,
                                    const std::vector<bool>& in_set);

struct DistributionEntry {
  Configuration config;
  mpq_class probability;
};

// Exact distribution of the local view of a uniform vertex under the
// hard-core model at fugacity lambda. Keyed by canon_key. Needs n <= 16.
std::map<std::string, DistributionEntry> configuration_distribution(
    const Graph& g, const mpq_class& lambda);

// One line for the `configs --dump` format.
std::string DumpLine(const Configuration& c, const PartitionFunctions& pf);

}  // namespace hcore

#endif  // HCORE_LOCALVIEW_H_
