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

#ifndef MCF_ERROR_HPP
#define MCF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcf {

enum class ErrorCode {
  // Network construction.
  kUnbalancedSupply,
  kNegativeCapacity,
  kDisconnected,
  kSelfLoop,
  kOverflowRisk,
  // Solver preconditions and internal checks.
  kNegativeCost,
  kNegativeCycle,
  kInfeasibleFlow,
  kInternalInconsistency,
  // DIMACS parsing.
  kSyntax,
  kIdOutOfRange,
  kCapBelowLow,
  kMissingProblemLine,
  // Generators and benchmark config.
  kInvalidSpec,
  kSolverDisagreement,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedSupply: return "UnbalancedSupply";
    case ErrorCode::kNegativeCapacity: return "NegativeCapacity";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kOverflowRisk: return "OverflowRisk";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kNegativeCycle: return "NegativeCycle";
    case ErrorCode::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kSyntax: return "Syntax";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kCapBelowLow: return "CapBelowLow";
    case ErrorCode::kMissingProblemLine: return "MissingProblemLine";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kSolverDisagreement: return "SolverDisagreement";
  }
  return "UnknownError";
}

}  // namespace mcf

#endif  // MCF_ERROR_HPP
