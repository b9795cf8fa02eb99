// Copyright 2026 The MCF Suite Authors
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

#ifndef MCF_TYPES_HPP
#define MCF_TYPES_HPP

#include <cstdint>

namespace mcf {

// Node and arc indices. Residual arc indices range over [0, 2m), so the
// supported problem size is bounded by what int32 can address twice over.
using NodeId = std::int32_t;
using ArcId = std::int32_t;

// All numeric quantities (capacities, costs, supplies, flows, potentials)
// are 64-bit signed integers. Magnitude headroom is enforced at network
// build time so that scaled costs and potentials cannot overflow.
using Value = std::int64_t;

inline constexpr NodeId kInvalidNode = -1;
inline constexpr ArcId kInvalidArc = -1;

// Largest scaling factor accepted by the cost-scaling and capacity-scaling
// solvers; part of the build-time overflow headroom check.
inline constexpr Value kMaxScalingFactor = 64;

}  // namespace mcf

#endif  // MCF_TYPES_HPP
