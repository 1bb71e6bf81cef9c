// Copyright 2026 The qnetplan Authors
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

#ifndef QNP_MILP_HPP
#define QNP_MILP_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace qnp {

// Centralized numeric tolerances for the solver stack.
struct MilpTolerances {
  static constexpr double kFeasibility = 1e-6;
  static constexpr double kIntegrality = 1e-6;
  static constexpr double kPivot = 1e-9;
};

enum class VarKind { kBinary, kContinuous };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

// Mixed-binary linear program, always a maximization. Immutable once built
// (by convention: solvers never mutate a model).
class MilpModel {
 public:
  struct Variable {
    std::string name;
    VarKind kind = VarKind::kContinuous;
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    double objective = 0.0;
  };
  struct Constraint {
    std::string name;
    std::vector<std::pair<int, double>> terms;  // (variable index, coeff)
    Relation relation = Relation::kLessEqual;
    double rhs = 0.0;
  };

  int add_binary(const std::string& name, double objective = 0.0);
  int add_continuous(const std::string& name, double lower, double upper,
                     double objective = 0.0);
  void add_constraint(const std::string& name,
                      std::vector<std::pair<int, double>> terms,
                      Relation relation, double rhs);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  int binary_count() const;
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  int variable_index(const std::string& name) const;

  void validate() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::map<std::string, int> by_name_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;
};

// Continuous relaxation via a two-phase dense simplex with bounded
// variables; Dantzig pricing with Bland's rule fallback for anti-cycling.
// Optional per-variable bound overrides support branch-and-bound.
LpResult solve_lp_relaxation(const MilpModel& model);
LpResult solve_lp_relaxation(const MilpModel& model,
                             const std::vector<double>& lower_override,
                             const std::vector<double>& upper_override);

enum class MilpStatus { kOptimal, kInfeasible, kBudgetExhausted, kUnbounded };

struct MilpSolution {
  MilpStatus status = MilpStatus::kInfeasible;
  double objective = 0.0;
  double best_bound = 0.0;
  std::vector<double> values;
  std::int64_t node_count = 0;
  double wall_seconds = 0.0;
};

struct BranchAndBoundOptions {
  std::int64_t node_budget = 50'000'000;
  double relative_gap = 0.0;   // 0 = solve to proven optimality
};

// Exact best-first branch and bound over the binary variables, branching on
// the most fractional variable (ties by variable name order). Deterministic.
MilpSolution solve_branch_and_bound(const MilpModel& model,
                                    const BranchAndBoundOptions& options = {});

// Brute force over all binary assignments; refuses models with more than 25
// binaries or with continuous variables that cannot be eliminated by bound
// propagation. Test oracle.
MilpSolution solve_exhaustive(const MilpModel& model);

// Industry-standard LP text format (Maximize / Subject To / Bounds /
// Binaries sections); deterministic and byte-stable across repeat calls.
std::string export_lp(const MilpModel& model);

}  // namespace qnp

#endif  // QNP_MILP_HPP
