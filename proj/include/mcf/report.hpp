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

#ifndef MCF_REPORT_HPP
#define MCF_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "mcf/types.hpp"

namespace mcf {

enum class SolveStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,  // guard status; cannot occur with finite capacities
  kTimeout,
};

inline const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kUnbounded: return "Unbounded";
    case SolveStatus::kTimeout: return "Timeout";
  }
  return "Unknown";
}

struct SolverReport {
  SolveStatus status = SolveStatus::kOptimal;
  Value objective = 0;
  // Main-loop steps: cycle cancellations (SCC/MMCC/CAT), path augmentations
  // (SSP/CAS), pushes+relabels (COS), pivots (NS).
  std::int64_t iterations = 0;
  std::int64_t pushes = 0;
  std::int64_t relabels = 0;
  std::int64_t phases_run = 0;
  std::int64_t phases_skipped = 0;
  double wall_time_ms = 0.0;
};

struct SolveResult {
  SolverReport report;
  // Per original arc; meaningful only when report.status == kOptimal.
  std::vector<Value> flow;
};

// Wall-clock budget shared by all solvers. seconds <= 0 means no limit.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      armed_ = true;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    }
  }

  bool expired() const {
    return armed_ && std::chrono::steady_clock::now() >= end_;
  }

 private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point end_{};
};

// Scoped wall timer filling SolverReport::wall_time_ms.
class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mcf

#endif  // MCF_REPORT_HPP
