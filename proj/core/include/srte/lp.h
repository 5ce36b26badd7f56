// Copyright 2026 The srte Authors.
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

#ifndef SRTE_LP_H_
#define SRTE_LP_H_

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "srte/common.h"

namespace srte {
namespace lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Feasibility tolerance (absolute, on rows scaled to unit max coefficient).
inline constexpr double kFeasibilityTolerance = 1e-7;

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string_view StatusName(Status status);

using VariableIndex = int;
using ConstraintIndex = int;

struct Term {
  VariableIndex variable;
  double coefficient;
};

struct Constraint {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0;
  std::string label;
};

struct Variable {
  std::string label;
  double objective = 0;
  double lower = 0;
  double upper = kInfinity;
};

// A linear program over continuous variables. Rows are stored sparsely;
// a term naming an unknown variable, or a non-finite coefficient or rhs,
// is rejected with InvalidArgument when the row is added.
class Problem {
 public:
  explicit Problem(Sense sense = Sense::kMinimize) : sense_(sense) {}

  VariableIndex AddVariable(std::string label = "", double objective = 0,
                            double lower = 0, double upper = kInfinity);
  ConstraintIndex AddConstraint(std::vector<Term> terms, Relation relation,
                                double rhs, std::string label = "");

  void SetObjective(VariableIndex variable, double coefficient);
  void SetBounds(VariableIndex variable, double lower, double upper);
  void set_sense(Sense sense) { sense_ = sense; }

  Sense sense() const { return sense_; }
  int variable_count() const { return static_cast<int>(variables_.size()); }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Variable& variable(VariableIndex v) const { return variables_[v]; }
  const Constraint& constraint(ConstraintIndex c) const { return constraints_[c]; }

  double Activity(ConstraintIndex c, const std::vector<double>& values) const;
  double ObjectiveValue(const std::vector<double>& values) const;

  // Largest bound or row violation of `values`; each row is scaled by its
  // largest absolute coefficient first.
  double MaxViolation(const std::vector<double>& values) const;

 private:
  Sense sense_;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
};

struct Solution {
  Status status = Status::kInfeasible;
  double objective_value = 0;
  std::vector<double> values;
  int iterations = 0;

  bool optimal() const { return status == Status::kOptimal; }
};

// Two-phase primal simplex on a dense tableau. Pricing is Dantzig's rule;
// after a run of degenerate pivots it falls back to Bland's rule until the
// objective moves again, so no basis is ever revisited. Output depends only
// on the input.
Solution Solve(const Problem& problem);

// Human-readable dump in the CPLEX LP text dialect:
//
//   \ comment
//   Minimize | Maximize
//    obj: <coef> <var> + ...
//   Subject To
//    <label>: <coef> <var> + ... (<= | = | >=) <rhs>
//   Bounds
//    <lower> <= <var> <= <upper>   |   <var> free
//   End
//
// Variable and row names are sanitized to [A-Za-z0-9_.]; unnamed ones
// become x<i> / c<i>. Default bounds [0, inf) are omitted.
std::string FormatLpText(const Problem& problem);

}  // namespace lp
}  // namespace srte

#endif  // SRTE_LP_H_
