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

#include "qnp/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qnp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Dense two-phase primal simplex with bounded variables. Nonbasic variables
// at their upper bound are kept in complemented form (column negated), so
// every nonbasic variable reads as "at zero" and a single pricing rule
// applies. Maximization throughout.
class Simplex {
 public:
  Simplex(const MilpModel& model, const std::vector<double>& lower,
          const std::vector<double>& upper) {
    const int n = model.variable_count();
    lower_ = lower;
    range_.resize(n);
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(lower[j])) {
        throw std::invalid_argument("variable lower bounds must be finite");
      }
      range_[j] = upper[j] - lower[j];
      if (range_[j] < 0) {
        infeasible_by_bounds_ = true;
        return;
      }
    }
    n_structural_ = n;
    // Shifted rows, one slack per inequality.
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<int> slack_col(model.constraints().size(), -1);
    int n_cols = n;
    for (const auto& con : model.constraints()) {
      if (con.relation != Relation::kEqual) slack_col[rows.size()] = n_cols++;
      rows.emplace_back();
      rhs.push_back(0);
    }
    tableau_.assign(rows.size(), std::vector<double>(n_cols, 0.0));
    rhs_.assign(rows.size(), 0.0);
    range_.resize(n_cols, kInf);
    int r = 0;
    for (const auto& con : model.constraints()) {
      double b = con.rhs;
      for (auto [j, a] : con.terms) {
        tableau_[r][j] += a;
        b -= a * lower[j];
      }
      if (con.relation == Relation::kLessEqual) tableau_[r][slack_col[r]] = 1.0;
      if (con.relation == Relation::kGreaterEqual) {
        tableau_[r][slack_col[r]] = -1.0;
      }
      if (b < 0) {
        for (double& a : tableau_[r]) a = -a;
        b = -b;
      }
      rhs_[r] = b;
      ++r;
    }
    n_total_ = n_cols;
    flipped_.assign(n_total_, false);
    banned_.assign(n_total_, false);
    basis_.assign(tableau_.size(), -1);
    in_basis_.assign(n_total_, false);
    // Initial basis: slack where it survived normalization with +1, else an
    // artificial column appended on the fly.
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      const int s = slack_col[i];
      if (s >= 0 && tableau_[i][s] > 0.5) {
        basis_[i] = s;
        in_basis_[s] = true;
      } else {
        const int art = n_total_++;
        for (auto& row : tableau_) row.push_back(0.0);
        tableau_[i][art] = 1.0;
        range_.push_back(kInf);
        flipped_.push_back(false);
        banned_.push_back(false);
        in_basis_.push_back(true);
        artificial_.push_back(art);
        basis_[i] = art;
      }
    }
  }

  LpStatus solve(const MilpModel& model) {
    if (infeasible_by_bounds_) return LpStatus::kInfeasible;
    if (!artificial_.empty()) {
      const LpStatus ph1 = run_phase_one();
      if (ph1 != LpStatus::kOptimal) return ph1;
    }
    return run_phase_two(model);
  }

  double objective() const { return obj_value_; }

  std::vector<double> extract(const MilpModel& model) const {
    std::vector<double> x(model.variable_count(), 0.0);
    std::vector<double> basic_value(n_total_, 0.0);
    std::vector<bool> basic(n_total_, false);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      basic[basis_[i]] = true;
      basic_value[basis_[i]] = rhs_[i];
    }
    for (int j = 0; j < model.variable_count(); ++j) {
      const double y = basic[j] ? basic_value[j] : 0.0;
      x[j] = lower_[j] + (flipped_[j] ? range_[j] - y : y);
    }
    return x;
  }

 private:
  LpStatus run_phase_one() {
    obj_row_.assign(n_total_, 0.0);
    obj_value_ = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (is_artificial(basis_[i])) {
        for (int j = 0; j < n_total_; ++j) {
          if (!is_artificial(j)) obj_row_[j] += tableau_[i][j];
        }
        obj_value_ -= rhs_[i];
      }
    }
    for (int a : artificial_) obj_row_[a] = 0.0;
    const LpStatus status = iterate();
    if (status != LpStatus::kOptimal) return status;
    if (obj_value_ < -MilpTolerances::kFeasibility) return LpStatus::kInfeasible;
    // Drive leftover artificials out of the basis where possible; rows that
    // are all zero outside the artificials are redundant and stay inert.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (int j = 0; j < n_total_; ++j) {
        if (is_artificial(j) || banned_[j]) continue;
        if (std::fabs(tableau_[i][j]) > MilpTolerances::kPivot) {
          pivot(static_cast<int>(i), j);
          break;
        }
      }
    }
    for (int a : artificial_) banned_[a] = true;
    return LpStatus::kOptimal;
  }

  LpStatus run_phase_two(const MilpModel& model) {
    obj_row_.assign(n_total_, 0.0);
    obj_value_ = 0.0;
    for (int j = 0; j < model.variable_count(); ++j) {
      const double c = model.variables()[j].objective;
      obj_value_ += c * lower_[j];
      if (flipped_[j]) {
        obj_value_ += c * range_[j];
        obj_row_[j] = -c;
      } else {
        obj_row_[j] = c;
      }
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const double cb = obj_row_[basis_[i]];
      if (std::fabs(cb) > 0.0) {
        for (int j = 0; j < n_total_; ++j) obj_row_[j] -= cb * tableau_[i][j];
        obj_row_[basis_[i]] = 0.0;
        obj_value_ += cb * rhs_[i];
      }
    }
    return iterate();
  }

  bool is_artificial(int col) const {
    return col >= first_artificial_col() && !artificial_.empty();
  }
  int first_artificial_col() const {
    return artificial_.empty() ? n_total_ : artificial_.front();
  }

  LpStatus iterate() {
    const long max_iter = 20000 + 200L * (n_total_ + tableau_.size());
    int degenerate_streak = 0;
    bool bland = false;
    for (long iter = 0; iter < max_iter; ++iter) {
      const int entering = pick_entering(bland);
      if (entering < 0) return LpStatus::kOptimal;
      // Ratio test: entering grows until a basic variable hits a bound or
      // the entering variable reaches its own range.
      double best_t = range_[entering];
      int best_row = -1;
      bool leaves_at_upper = false;
      for (std::size_t i = 0; i < tableau_.size(); ++i) {
        const double a = tableau_[i][entering];
        if (a > MilpTolerances::kPivot) {
          const double t = rhs_[i] / a;
          if (t < best_t - 1e-12 ||
              (t < best_t + 1e-12 && better_leaving(i, best_row, a, bland))) {
            best_t = std::min(best_t, std::max(t, 0.0));
            best_row = static_cast<int>(i);
            leaves_at_upper = false;
          }
        } else if (a < -MilpTolerances::kPivot &&
                   std::isfinite(range_[basis_[i]])) {
          const double t = (range_[basis_[i]] - rhs_[i]) / (-a);
          if (t < best_t - 1e-12 ||
              (t < best_t + 1e-12 && better_leaving(i, best_row, a, bland))) {
            best_t = std::min(best_t, std::max(t, 0.0));
            best_row = static_cast<int>(i);
            leaves_at_upper = true;
          }
        }
      }
      if (best_row < 0 && !std::isfinite(best_t)) return LpStatus::kUnbounded;
      if (best_t < 1e-11) {
        if (++degenerate_streak > 40) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
      if (best_row < 0) {
        flip_column(entering);
        continue;
      }
      const int leaving = basis_[best_row];
      pivot(best_row, entering);
      if (leaves_at_upper) flip_column(leaving);
    }
    return LpStatus::kIterationLimit;
  }

  bool better_leaving(std::size_t row, int current_row, double a,
                      bool bland) const {
    if (current_row < 0) return true;
    if (bland) return basis_[row] < basis_[current_row];
    const double incumbent = std::fabs(tableau_[current_row][col_cache_]);
    return std::fabs(a) > incumbent;
  }

  int pick_entering(bool bland) {
    int best = -1;
    double best_score = MilpTolerances::kPivot;
    for (int j = 0; j < n_total_; ++j) {
      if (in_basis_[j] || banned_[j]) continue;
      if (obj_row_[j] > best_score) {
        best = j;
        if (bland) break;  // smallest eligible index
        best_score = obj_row_[j];
      }
    }
    col_cache_ = best;
    return best;
  }

  void pivot(int row, int col) {
    const double p = tableau_[row][col];
    std::vector<double>& prow = tableau_[row];
    const double inv = 1.0 / p;
    for (double& a : prow) a *= inv;
    rhs_[row] *= inv;
    prow[col] = 1.0;
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const double f = tableau_[i][col];
      if (std::fabs(f) < 1e-13) continue;
      std::vector<double>& target = tableau_[i];
      for (int j = 0; j < n_total_; ++j) target[j] -= f * prow[j];
      target[col] = 0.0;
      rhs_[i] -= f * rhs_[row];
      if (rhs_[i] < 0 && rhs_[i] > -1e-11) rhs_[i] = 0.0;
    }
    const double cf = obj_row_[col];
    if (std::fabs(cf) > 0.0) {
      for (int j = 0; j < n_total_; ++j) obj_row_[j] -= cf * prow[j];
      obj_row_[col] = 0.0;
      obj_value_ += cf * rhs_[row];
    }
    in_basis_[basis_[row]] = false;
    basis_[row] = col;
    in_basis_[col] = true;
  }

  void flip_column(int col) {
    const double u = range_[col];
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      rhs_[i] -= tableau_[i][col] * u;
      tableau_[i][col] = -tableau_[i][col];
      if (rhs_[i] < 0 && rhs_[i] > -1e-11) rhs_[i] = 0.0;
    }
    obj_value_ += obj_row_[col] * u;
    obj_row_[col] = -obj_row_[col];
    flipped_[col] = !flipped_[col];
  }

  bool infeasible_by_bounds_ = false;
  int n_structural_ = 0;
  int n_total_ = 0;
  int col_cache_ = -1;
  std::vector<std::vector<double>> tableau_;
  std::vector<double> rhs_;
  std::vector<double> obj_row_;
  double obj_value_ = 0.0;
  std::vector<double> lower_;
  std::vector<double> range_;
  std::vector<int> basis_;
  std::vector<bool> in_basis_;
  std::vector<bool> flipped_;
  std::vector<bool> banned_;
  std::vector<int> artificial_;
};

}  // namespace

int MilpModel::add_binary(const std::string& name, double objective) {
  Variable v;
  v.name = name;
  v.kind = VarKind::kBinary;
  v.lower = 0.0;
  v.upper = 1.0;
  v.objective = objective;
  variables_.push_back(v);
  if (!by_name_.emplace(name, variable_count() - 1).second) {
    throw std::invalid_argument("duplicate variable name: " + name);
  }
  return variable_count() - 1;
}

int MilpModel::add_continuous(const std::string& name, double lower,
                              double upper, double objective) {
  Variable v;
  v.name = name;
  v.kind = VarKind::kContinuous;
  v.lower = lower;
  v.upper = upper;
  v.objective = objective;
  variables_.push_back(v);
  if (!by_name_.emplace(name, variable_count() - 1).second) {
    throw std::invalid_argument("duplicate variable name: " + name);
  }
  return variable_count() - 1;
}

void MilpModel::add_constraint(const std::string& name,
                               std::vector<std::pair<int, double>> terms,
                               Relation relation, double rhs) {
  for (auto [j, a] : terms) {
    if (j < 0 || j >= variable_count()) {
      throw std::invalid_argument("constraint references unknown variable");
    }
    (void)a;
  }
  Constraint c;
  c.name = name.empty() ? "c" + std::to_string(constraints_.size()) : name;
  c.terms = std::move(terms);
  c.relation = relation;
  c.rhs = rhs;
  constraints_.push_back(std::move(c));
}

int MilpModel::binary_count() const {
  int n = 0;
  for (const auto& v : variables_) n += v.kind == VarKind::kBinary ? 1 : 0;
  return n;
}

int MilpModel::variable_index(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) {
    throw std::invalid_argument("unknown variable name: " + name);
  }
  return it->second;
}

void MilpModel::validate() const {
  for (const auto& v : variables_) {
    if (v.kind == VarKind::kBinary && (v.lower != 0.0 || v.upper != 1.0)) {
      throw std::invalid_argument("binary variable with non [0,1] bounds: " +
                                  v.name);
    }
    if (!std::isfinite(v.lower)) {
      throw std::invalid_argument("variable lower bound must be finite: " +
                                  v.name);
    }
  }
}

LpResult solve_lp_relaxation(const MilpModel& model) {
  std::vector<double> lo, hi;
  lo.reserve(model.variable_count());
  hi.reserve(model.variable_count());
  for (const auto& v : model.variables()) {
    lo.push_back(v.lower);
    hi.push_back(v.upper);
  }
  return solve_lp_relaxation(model, lo, hi);
}

LpResult solve_lp_relaxation(const MilpModel& model,
                             const std::vector<double>& lower_override,
                             const std::vector<double>& upper_override) {
  model.validate();
  LpResult out;
  if (model.variable_count() == 0) {
    for (const auto& con : model.constraints()) {
      const double lhs = 0.0;
      const bool ok =
          (con.relation == Relation::kLessEqual &&
           lhs <= con.rhs + MilpTolerances::kFeasibility) ||
          (con.relation == Relation::kGreaterEqual &&
           lhs >= con.rhs - MilpTolerances::kFeasibility) ||
          (con.relation == Relation::kEqual &&
           std::fabs(lhs - con.rhs) <= MilpTolerances::kFeasibility);
      if (!ok) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
    }
    out.status = LpStatus::kOptimal;
    return out;
  }
  Simplex simplex(model, lower_override, upper_override);
  out.status = simplex.solve(model);
  if (out.status == LpStatus::kOptimal) {
    out.objective = simplex.objective();
    out.values = simplex.extract(model);
  }
  return out;
}

MilpSolution solve_branch_and_bound(const MilpModel& model,
                                    const BranchAndBoundOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  model.validate();
  MilpSolution out;
  std::vector<double> root_lo, root_hi;
  for (const auto& v : model.variables()) {
    root_lo.push_back(v.lower);
    root_hi.push_back(v.upper);
  }

  struct Node {
    double bound;
    std::int64_t id;
    std::vector<double> lo, hi, values;
  };
  auto node_order = [](const Node& a, const Node& b) {
    if (a.bound != b.bound) return a.bound < b.bound;  // max-heap on bound
    return a.id > b.id;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(node_order)> open(
      node_order);

  double incumbent = -kInf;
  bool have_incumbent = false;
  std::vector<double> incumbent_values;
  std::int64_t next_id = 0;

  auto finish = [&](MilpStatus status, double bound) {
    out.status = status;
    out.best_bound = bound;
    if (have_incumbent) {
      out.objective = incumbent;
      out.values = incumbent_values;
    }
    out.node_count = next_id;
    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
  };

  auto integral = [&](const std::vector<double>& x) {
    for (int j = 0; j < model.variable_count(); ++j) {
      if (model.variables()[j].kind != VarKind::kBinary) continue;
      if (std::fabs(x[j] - std::round(x[j])) > MilpTolerances::kIntegrality) {
        return false;
      }
    }
    return true;
  };

  auto push_node = [&](std::vector<double> lo, std::vector<double> hi)
      -> bool {  // returns false when the node budget is exhausted
    if (next_id >= options.node_budget) return false;
    const LpResult lp = solve_lp_relaxation(model, lo, hi);
    ++next_id;
    if (lp.status == LpStatus::kUnbounded) {
      throw std::runtime_error("unbounded relaxation in branch and bound");
    }
    if (lp.status != LpStatus::kOptimal) return true;  // pruned
    if (lp.objective <= incumbent + 1e-9 && have_incumbent) return true;
    if (integral(lp.values)) {
      if (!have_incumbent || lp.objective > incumbent) {
        incumbent = lp.objective;
        incumbent_values = lp.values;
        for (int j = 0; j < model.variable_count(); ++j) {
          if (model.variables()[j].kind == VarKind::kBinary) {
            incumbent_values[j] = std::round(incumbent_values[j]);
          }
        }
        have_incumbent = true;
      }
      return true;
    }
    Node node;
    node.bound = lp.objective;
    node.id = next_id;
    node.lo = std::move(lo);
    node.hi = std::move(hi);
    node.values = lp.values;
    open.push(std::move(node));
    return true;
  };

  try {
    if (!push_node(root_lo, root_hi)) {
      return finish(MilpStatus::kBudgetExhausted, kInf);
    }
  } catch (const std::runtime_error&) {
    return finish(MilpStatus::kUnbounded, kInf);
  }

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (have_incumbent && node.bound <= incumbent + 1e-9) continue;
    if (have_incumbent && options.relative_gap > 0.0) {
      const double gap = (node.bound - incumbent) /
                         std::max(1.0, std::fabs(incumbent));
      if (gap <= options.relative_gap) break;
    }
    // Most fractional binary; ties resolved by variable name order.
    int branch_var = -1;
    double best_score = -1.0;
    for (int j = 0; j < model.variable_count(); ++j) {
      if (model.variables()[j].kind != VarKind::kBinary) continue;
      const double v = node.values[j];
      const double frac = v - std::floor(v);
      const double score = std::min(frac, 1.0 - frac);
      if (score <= MilpTolerances::kIntegrality) continue;
      if (score > best_score + 1e-12 ||
          (score > best_score - 1e-12 && branch_var >= 0 &&
           model.variables()[j].name < model.variables()[branch_var].name)) {
        best_score = score;
        branch_var = j;
      }
    }
    if (branch_var < 0) continue;
    for (double fixed : {0.0, 1.0}) {
      std::vector<double> lo = node.lo;
      std::vector<double> hi = node.hi;
      lo[branch_var] = fixed;
      hi[branch_var] = fixed;
      if (!push_node(std::move(lo), std::move(hi))) {
        const double bound = open.empty() ? node.bound
                                          : std::max(node.bound,
                                                     open.top().bound);
        return finish(MilpStatus::kBudgetExhausted, bound);
      }
    }
  }

  if (!have_incumbent) return finish(MilpStatus::kInfeasible, -kInf);
  return finish(MilpStatus::kOptimal, incumbent);
}

MilpSolution solve_exhaustive(const MilpModel& model) {
  const auto start = std::chrono::steady_clock::now();
  model.validate();
  std::vector<int> binaries, continuous;
  for (int j = 0; j < model.variable_count(); ++j) {
    (model.variables()[j].kind == VarKind::kBinary ? binaries : continuous)
        .push_back(j);
  }
  if (binaries.size() > 25) {
    throw std::invalid_argument("exhaustive solver capped at 25 binaries");
  }

  // Continuous variables must be one-sided so that bound propagation fixes
  // them once the binaries are set (e.g. longest-link style variables).
  enum class Side { kLowerBounded, kUpperBounded, kFree };
  std::map<int, Side> side;
  for (int v : continuous) side[v] = Side::kFree;
  for (const auto& con : model.constraints()) {
    int cont_here = 0;
    for (auto [j, a] : con.terms) {
      if (model.variables()[j].kind == VarKind::kContinuous && a != 0.0) {
        ++cont_here;
      }
    }
    if (cont_here == 0) continue;
    if (cont_here > 1 || con.relation == Relation::kEqual) {
      throw std::invalid_argument(
          "exhaustive solver cannot eliminate coupled continuous variables");
    }
    for (auto [j, a] : con.terms) {
      if (model.variables()[j].kind != VarKind::kContinuous || a == 0.0) {
        continue;
      }
      const bool lower_bounding =
          (con.relation == Relation::kGreaterEqual && a > 0) ||
          (con.relation == Relation::kLessEqual && a < 0);
      const Side s = lower_bounding ? Side::kLowerBounded : Side::kUpperBounded;
      if (side[j] == Side::kFree) side[j] = s;
      if (side[j] != s) {
        throw std::invalid_argument(
            "exhaustive solver cannot eliminate two-sided continuous "
            "variable " +
            model.variables()[j].name);
      }
    }
  }
  for (int v : continuous) {
    const double c = model.variables()[v].objective;
    if (side[v] == Side::kLowerBounded && c > 0) {
      throw std::invalid_argument(
          "exhaustive solver: continuous variable pushed against missing "
          "upper bound");
    }
    if (side[v] == Side::kUpperBounded && c < 0) {
      throw std::invalid_argument(
          "exhaustive solver: continuous variable pushed against missing "
          "lower bound");
    }
    if (side[v] == Side::kFree && c > 0 &&
        !std::isfinite(model.variables()[v].upper)) {
      throw std::invalid_argument("exhaustive solver: unbounded objective");
    }
  }

  MilpSolution out;
  out.status = MilpStatus::kInfeasible;
  double best = -kInf;
  std::vector<double> x(model.variable_count(), 0.0);
  const std::uint64_t combos = 1ULL << binaries.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t b = 0; b < binaries.size(); ++b) {
      x[binaries[b]] = (mask >> b) & 1 ? 1.0 : 0.0;
    }
    bool feasible = true;
    // Fix each continuous variable at its binding bound.
    for (int v : continuous) {
      double value;
      if (side[v] == Side::kUpperBounded) {
        value = model.variables()[v].upper;
      } else if (side[v] == Side::kFree) {
        value = model.variables()[v].objective > 0 ? model.variables()[v].upper
                                                   : model.variables()[v].lower;
      } else {
        value = model.variables()[v].lower;
      }
      for (const auto& con : model.constraints()) {
        double coeff = 0.0;
        double rest = 0.0;
        for (auto [j, a] : con.terms) {
          if (j == v) {
            coeff = a;
          } else {
            rest += a * x[j];
          }
        }
        if (coeff == 0.0) continue;
        const double bound = (con.rhs - rest) / coeff;
        if (side[v] == Side::kLowerBounded) {
          value = std::max(value, bound);
        } else {
          value = std::min(value, bound);
        }
      }
      if (value < model.variables()[v].lower - MilpTolerances::kFeasibility ||
          value > model.variables()[v].upper + MilpTolerances::kFeasibility) {
        feasible = false;
        break;
      }
      x[v] = value;
    }
    if (feasible) {
      for (const auto& con : model.constraints()) {
        double lhs = 0.0;
        for (auto [j, a] : con.terms) lhs += a * x[j];
        if ((con.relation == Relation::kLessEqual &&
             lhs > con.rhs + MilpTolerances::kFeasibility) ||
            (con.relation == Relation::kGreaterEqual &&
             lhs < con.rhs - MilpTolerances::kFeasibility) ||
            (con.relation == Relation::kEqual &&
             std::fabs(lhs - con.rhs) > MilpTolerances::kFeasibility)) {
          feasible = false;
          break;
        }
      }
    }
    if (!feasible) continue;
    double obj = 0.0;
    for (int j = 0; j < model.variable_count(); ++j) {
      obj += model.variables()[j].objective * x[j];
    }
    if (obj > best) {
      best = obj;
      out.values = x;
      out.status = MilpStatus::kOptimal;
    }
  }
  if (out.status == MilpStatus::kOptimal) {
    out.objective = best;
    out.best_bound = best;
  }
  out.node_count = static_cast<std::int64_t>(combos);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

std::string export_lp(const MilpModel& model) {
  model.validate();
  std::ostringstream out;
  auto write_terms = [&](const std::vector<std::pair<int, double>>& terms) {
    if (terms.empty()) {
      out << " 0";
      if (model.variable_count() > 0) {
        out << " " << model.variables()[0].name;
      }
      return;
    }
    for (auto [j, a] : terms) {
      out << (a < 0 ? " - " : " + ") << format_number(std::fabs(a)) << " "
          << model.variables()[j].name;
    }
  };

  out << "\\ qnetplan LP export\n";
  out << "Maximize\n obj:";
  std::vector<std::pair<int, double>> obj_terms;
  for (int j = 0; j < model.variable_count(); ++j) {
    const double c = model.variables()[j].objective;
    if (c != 0.0) obj_terms.emplace_back(j, c);
  }
  write_terms(obj_terms);
  out << "\nSubject To\n";
  for (const auto& con : model.constraints()) {
    out << " " << con.name << ":";
    write_terms(con.terms);
    switch (con.relation) {
      case Relation::kLessEqual:
        out << " <= ";
        break;
      case Relation::kEqual:
        out << " = ";
        break;
      case Relation::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << format_number(con.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : model.variables()) {
    if (v.kind == VarKind::kBinary) continue;
    if (std::isfinite(v.upper)) {
      out << " " << format_number(v.lower) << " <= " << v.name
          << " <= " << format_number(v.upper) << "\n";
    } else {
      out << " " << v.name << " >= " << format_number(v.lower) << "\n";
    }
  }
  bool any_binary = false;
  for (const auto& v : model.variables()) {
    if (v.kind == VarKind::kBinary) {
      if (!any_binary) out << "Binaries\n";
      any_binary = true;
      out << " " << v.name << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace qnp
