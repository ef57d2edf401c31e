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

#ifndef HCORE_NAMED_GRAPH_DATA_H_
#define HCORE_NAMED_GRAPH_DATA_H_

#include <string_view>

namespace hcore {

// Edge-list text of an embedded graph, empty if unknown.
std::string_view EmbeddedGraphText(std::string_view name);

}  // namespace hcore

#endif  // HCORE_NAMED_GRAPH_DATA_H_
