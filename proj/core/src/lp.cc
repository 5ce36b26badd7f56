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

#include "srte/lp.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace srte {
namespace lp {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kCostTolerance = 1e-9;
constexpr double kDropTolerance = 1e-13;
// Harris ratio test slack on the (perturbed) right-hand side.
constexpr double kRatioSlack = 1e-9;
// Relative size of the right-hand side perturbation.
constexpr double kPerturbation = 1e-7;
constexpr int kDegenerateStreakLimit = 50;

// Dense simplex tableau in canonical form: every basic column is a unit
// vector. Column cols() holds the true right-hand side and column cols()+1 a
// perturbed copy that drives the ratio test, which keeps degenerate pivots
// rare. `cost_` holds the reduced costs with -z in slot cols().
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        stride_(cols + 2),
        data_(static_cast<std::size_t>(rows) * (cols + 2), 0.0),
        cost_(cols + 2, 0.0),
        basis_(rows, -1),
        may_enter_(cols, 1) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double* row(int r) { return &data_[static_cast<std::size_t>(r) * stride_]; }
  double& rhs(int r) { return row(r)[cols_]; }
  double& perturbed(int r) { return row(r)[cols_ + 1]; }
  std::vector<double>& cost() { return cost_; }
  std::vector<int>& basis() { return basis_; }
  void forbid(int col) { may_enter_[col] = 0; }
  int iterations() const { return iterations_; }

  // Perturbed rhs = true rhs + a deterministic positive offset per row.
  void Perturb() {
    for (int r = 0; r < rows_; ++r) {
      const double jitter = 0.5 + 0.5 * std::fmod(0.6180339887498949 * (r + 1), 1.0);
      perturbed(r) = std::max(0.0, rhs(r)) + kPerturbation * (1 + std::abs(rhs(r))) * jitter;
    }
  }

  // Drops the perturbation: the ratio test runs on the true values again.
  void Unperturb() {
    for (int r = 0; r < rows_; ++r) perturbed(r) = std::max(0.0, rhs(r));
  }

  // Removes every entry of row r except its basic column; used for rows
  // that turned out to be linear combinations of the others.
  void ClearRow(int r) {
    double* t = row(r);
    const int b = basis_[r];
    std::fill(t, t + stride_, 0.0);
    t[b] = 1.0;
  }

  enum class Outcome { kOptimal, kUnbounded };

  Outcome Run() {
    bool bland = false;
    int degenerate_streak = 0;
    const long limit = 50000L + 50L * (rows_ + cols_);
    while (true) {
      if (iterations_ > limit) throw Error("simplex iteration limit reached");
      int enter = ChooseEntering(bland);
      if (enter < 0) return Outcome::kOptimal;
      int leave = bland ? ChooseLeavingBland(enter) : ChooseLeavingHarris(enter);
      if (leave < 0) return Outcome::kUnbounded;
      const bool degenerate = perturbed(leave) <= kDropTolerance;
      Pivot(leave, enter);
      ++iterations_;
      if (degenerate) {
        if (++degenerate_streak >= kDegenerateStreakLimit) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
    }
  }

  void Pivot(int r, int c) {
    double* pivot_row = row(r);
    const double inv = 1.0 / pivot_row[c];
    nonzero_.clear();
    for (int j = 0; j < stride_; ++j) {
      double& a = pivot_row[j];
      if (a == 0.0) continue;
      a *= inv;
      if (std::abs(a) < kDropTolerance) {
        a = 0.0;
      } else {
        nonzero_.push_back(j);
      }
    }
    pivot_row[c] = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Eliminate(row(i), c, pivot_row);
      double& b = perturbed(i);
      if (b < 0) b = 0;
    }
    Eliminate(cost_.data(), c, pivot_row);
    basis_[r] = c;
  }

 private:
  void Eliminate(double* target, int c, const double* pivot_row) {
    const double factor = target[c];
    if (factor == 0.0) return;
    for (int j : nonzero_) {
      double v = target[j] - factor * pivot_row[j];
      target[j] = std::abs(v) < kDropTolerance ? 0.0 : v;
    }
    target[c] = 0.0;
  }

  int ChooseEntering(bool bland) const {
    int enter = -1;
    double best = -kCostTolerance;
    for (int j = 0; j < cols_; ++j) {
      if (!may_enter_[j]) continue;
      const double d = cost_[j];
      if (d < best) {
        enter = j;
        if (bland) break;
        best = d;
      }
    }
    return enter;
  }

  // Two passes: the largest step any row tolerates with a little slack, then
  // the biggest pivot among rows blocking within that step.
  int ChooseLeavingHarris(int enter) {
    double bound = kInfinity;
    for (int r = 0; r < rows_; ++r) {
      const double a = row(r)[enter];
      if (a <= kPivotTolerance) continue;
      bound = std::min(bound, (perturbed(r) + kRatioSlack) / a);
    }
    if (bound == kInfinity) return -1;
    int leave = -1;
    double best_pivot = 0;
    for (int r = 0; r < rows_; ++r) {
      const double a = row(r)[enter];
      if (a <= kPivotTolerance || perturbed(r) / a > bound) continue;
      if (a > best_pivot) {
        leave = r;
        best_pivot = a;
      }
    }
    return leave;
  }

  // Textbook minimum ratio with the smallest basic index on ties; together
  // with first-improving entering this never revisits a basis.
  int ChooseLeavingBland(int enter) {
    int leave = -1;
    double best_ratio = 0;
    for (int r = 0; r < rows_; ++r) {
      const double a = row(r)[enter];
      if (a <= kPivotTolerance) continue;
      const double ratio = perturbed(r) / a;
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    return leave;
  }

  int rows_;
  int cols_;
  int stride_;
  std::vector<double> data_;
  std::vector<double> cost_;
  std::vector<int> basis_;
  std::vector<char> may_enter_;
  std::vector<int> nonzero_;
  int iterations_ = 0;
};

// x = offset + sign * y[pos] (- y[neg] for free variables).
struct Substitution {
  double offset = 0;
  double sign = 1;
  int pos = -1;
  int neg = -1;
};

struct Row {
  std::map<int, double> coef;
  Relation relation;
  double rhs;
};

Solution MakeStatus(Status status, int iterations = 0) {
  Solution s;
  s.status = status;
  s.iterations = iterations;
  return s;
}

}  // namespace

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
  }
  return "?";
}

VariableIndex Problem::AddVariable(std::string label, double objective,
                                   double lower, double upper) {
  if (!std::isfinite(objective)) throw InvalidArgument("non-finite objective");
  if (std::isnan(lower) || std::isnan(upper)) throw InvalidArgument("NaN bound");
  variables_.push_back(Variable{std::move(label), objective, lower, upper});
  return variable_count() - 1;
}

ConstraintIndex Problem::AddConstraint(std::vector<Term> terms,
                                       Relation relation, double rhs,
                                       std::string label) {
  if (!std::isfinite(rhs)) throw InvalidArgument("non-finite right-hand side");
  for (const Term& t : terms) {
    if (t.variable < 0 || t.variable >= variable_count()) {
      throw InvalidArgument("constraint references unknown variable " +
                            std::to_string(t.variable));
    }
    if (!std::isfinite(t.coefficient)) {
      throw InvalidArgument("non-finite constraint coefficient");
    }
  }
  constraints_.push_back(
      Constraint{std::move(terms), relation, rhs, std::move(label)});
  return constraint_count() - 1;
}

void Problem::SetObjective(VariableIndex variable, double coefficient) {
  if (!std::isfinite(coefficient)) throw InvalidArgument("non-finite objective");
  variables_.at(variable).objective = coefficient;
}

void Problem::SetBounds(VariableIndex variable, double lower, double upper) {
  if (std::isnan(lower) || std::isnan(upper)) throw InvalidArgument("NaN bound");
  Variable& v = variables_.at(variable);
  v.lower = lower;
  v.upper = upper;
}

double Problem::Activity(ConstraintIndex c,
                         const std::vector<double>& values) const {
  double sum = 0;
  for (const Term& t : constraints_[c].terms) {
    sum += t.coefficient * values[t.variable];
  }
  return sum;
}

double Problem::ObjectiveValue(const std::vector<double>& values) const {
  double sum = 0;
  for (int j = 0; j < variable_count(); ++j) {
    sum += variables_[j].objective * values[j];
  }
  return sum;
}

double Problem::MaxViolation(const std::vector<double>& values) const {
  double worst = 0;
  for (int j = 0; j < variable_count(); ++j) {
    worst = std::max(worst, variables_[j].lower - values[j]);
    worst = std::max(worst, values[j] - variables_[j].upper);
  }
  for (int c = 0; c < constraint_count(); ++c) {
    double scale = 0;
    for (const Term& t : constraints_[c].terms) {
      scale = std::max(scale, std::abs(t.coefficient));
    }
    if (scale == 0) scale = 1;
    const double gap = (Activity(c, values) - constraints_[c].rhs) / scale;
    switch (constraints_[c].relation) {
      case Relation::kLessEqual: worst = std::max(worst, gap); break;
      case Relation::kGreaterEqual: worst = std::max(worst, -gap); break;
      case Relation::kEqual: worst = std::max(worst, std::abs(gap)); break;
    }
  }
  return worst;
}

Solution Solve(const Problem& problem) {
  const int n = problem.variable_count();

  // Map every original variable onto non-negative columns.
  std::vector<Substitution> subst(n);
  std::vector<Row> rows;
  int structural = 0;
  for (int j = 0; j < n; ++j) {
    const Variable& v = problem.variable(j);
    if (v.lower > v.upper) return MakeStatus(Status::kInfeasible);
    Substitution& s = subst[j];
    if (std::isfinite(v.lower)) {
      s.offset = v.lower;
      s.pos = structural++;
      if (std::isfinite(v.upper)) {
        rows.push_back(Row{{{s.pos, 1.0}}, Relation::kLessEqual, v.upper - v.lower});
      }
    } else if (std::isfinite(v.upper)) {
      s.offset = v.upper;
      s.sign = -1;
      s.pos = structural++;
    } else {
      s.pos = structural++;
      s.neg = structural++;
    }
  }
  for (const Constraint& c : problem.constraints()) {
    Row row{{}, c.relation, c.rhs};
    for (const Term& t : c.terms) {
      const Substitution& s = subst[t.variable];
      row.rhs -= t.coefficient * s.offset;
      row.coef[s.pos] += t.coefficient * s.sign;
      if (s.neg >= 0) row.coef[s.neg] -= t.coefficient;
    }
    rows.push_back(std::move(row));
  }

  // Normalize: unit max coefficient, non-negative rhs, drop empty rows.
  std::vector<Row> kept;
  for (Row& row : rows) {
    double scale = 0;
    for (auto it = row.coef.begin(); it != row.coef.end();) {
      if (it->second == 0.0) {
        it = row.coef.erase(it);
      } else {
        scale = std::max(scale, std::abs(it->second));
        ++it;
      }
    }
    if (scale == 0) {
      const double tol = kFeasibilityTolerance;
      const bool ok = (row.relation == Relation::kLessEqual && row.rhs >= -tol) ||
                      (row.relation == Relation::kGreaterEqual && row.rhs <= tol) ||
                      (row.relation == Relation::kEqual && std::abs(row.rhs) <= tol);
      if (!ok) return MakeStatus(Status::kInfeasible);
      continue;
    }
    for (auto& [col, a] : row.coef) a /= scale;
    row.rhs /= scale;
    if (row.rhs < 0) {
      for (auto& [col, a] : row.coef) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    kept.push_back(std::move(row));
  }

  const int m = static_cast<int>(kept.size());
  int slack_count = 0;
  int artificial_count = 0;
  for (const Row& row : kept) {
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
  }
  const int first_artificial = structural + slack_count;
  const int cols = first_artificial + artificial_count;
  Tableau tab(m, cols);

  int next_slack = structural;
  int next_artificial = first_artificial;
  double max_rhs = 1;
  for (int r = 0; r < m; ++r) {
    const Row& row = kept[r];
    double* t = tab.row(r);
    for (const auto& [col, a] : row.coef) t[col] = a;
    tab.rhs(r) = row.rhs;
    max_rhs = std::max(max_rhs, row.rhs);
    switch (row.relation) {
      case Relation::kLessEqual:
        t[next_slack] = 1;
        tab.basis()[r] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t[next_slack++] = -1;
        t[next_artificial] = 1;
        tab.basis()[r] = next_artificial++;
        break;
      case Relation::kEqual:
        t[next_artificial] = 1;
        tab.basis()[r] = next_artificial++;
        break;
    }
  }

  tab.Perturb();

  // Phase 1: minimize the sum of artificials.
  if (artificial_count > 0) {
    std::vector<double>& cost = tab.cost();
    for (int j = first_artificial; j < cols; ++j) cost[j] = 1;
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] < first_artificial) continue;
      const double* t = tab.row(r);
      for (int j = 0; j < cols + 2; ++j) cost[j] -= t[j];
    }
    tab.Run();
    double infeasibility = 0;
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] >= first_artificial) infeasibility += std::abs(tab.rhs(r));
    }
    if (infeasibility > kFeasibilityTolerance * max_rhs) {
      return MakeStatus(Status::kInfeasible, tab.iterations());
    }
    for (int j = first_artificial; j < cols; ++j) tab.forbid(j);
    // Pivot zero-valued artificials out where the row allows it.
    for (int r = 0; r < m; ++r) {
      if (tab.basis()[r] < first_artificial) continue;
      double* t = tab.row(r);
      int best = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (std::abs(t[j]) > 1e-7 && (best < 0 || std::abs(t[j]) > std::abs(t[best]))) {
          best = j;
        }
      }
      if (best >= 0) {
        tab.rhs(r) = 0;
        tab.perturbed(r) = 0;
        tab.Pivot(r, best);
      } else {
        tab.ClearRow(r);
      }
    }
  }

  // Phase 2.
  const bool maximize = problem.sense() == Sense::kMaximize;
  std::vector<double>& cost = tab.cost();
  std::fill(cost.begin(), cost.end(), 0.0);
  for (int j = 0; j < n; ++j) {
    const double c = (maximize ? -1.0 : 1.0) * problem.variable(j).objective;
    const Substitution& s = subst[j];
    cost[s.pos] += c * s.sign;
    if (s.neg >= 0) cost[s.neg] -= c;
  }
  for (int r = 0; r < m; ++r) {
    const double cb = cost[tab.basis()[r]];
    if (cb == 0.0) continue;
    const double* t = tab.row(r);
    for (int j = 0; j < cols + 2; ++j) cost[j] -= cb * t[j];
  }
  if (tab.Run() == Tableau::Outcome::kUnbounded) {
    return MakeStatus(Status::kUnbounded, tab.iterations());
  }
  // Finish on the unperturbed values; usually zero extra pivots.
  tab.Unperturb();
  if (tab.Run() == Tableau::Outcome::kUnbounded) {
    return MakeStatus(Status::kUnbounded, tab.iterations());
  }

  std::vector<double> y(cols, 0.0);
  for (int r = 0; r < m; ++r) y[tab.basis()[r]] = std::max(0.0, tab.rhs(r));
  Solution solution;
  solution.status = Status::kOptimal;
  solution.iterations = tab.iterations();
  solution.values.resize(n);
  for (int j = 0; j < n; ++j) {
    const Substitution& s = subst[j];
    double x = s.offset + s.sign * y[s.pos];
    if (s.neg >= 0) x -= y[s.neg];
    solution.values[j] = x;
  }
  solution.objective_value = problem.ObjectiveValue(solution.values);
  return solution;
}

namespace {

std::string Sanitize(const std::string& label, char prefix, int index) {
  std::string out;
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '.';
    out.push_back(ok ? c : '_');
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9') || out[0] == '.') {
    out = std::string(1, prefix) + std::to_string(index) + (out.empty() ? "" : "_" + out);
  }
  return out;
}

std::string Number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void WriteLinear(std::ostringstream& out, const std::vector<Term>& terms,
                 const std::vector<std::string>& names) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    double c = t.coefficient;
    if (first) {
      out << ' ' << (c < 0 ? "- " : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (std::abs(c) != 1.0) out << Number(std::abs(c)) << ' ';
    out << names[t.variable];
    first = false;
  }
}

}  // namespace

std::string FormatLpText(const Problem& problem) {
  std::vector<std::string> names;
  for (int j = 0; j < problem.variable_count(); ++j) {
    names.push_back(Sanitize(problem.variable(j).label, 'x', j));
  }
  std::ostringstream out;
  out << "\\ srte linear program: " << problem.variable_count()
      << " variables, " << problem.constraint_count() << " constraints\n";
  out << (problem.sense() == Sense::kMinimize ? "Minimize\n" : "Maximize\n");
  std::vector<Term> objective;
  for (int j = 0; j < problem.variable_count(); ++j) {
    if (problem.variable(j).objective != 0) {
      objective.push_back(Term{j, problem.variable(j).objective});
    }
  }
  out << " obj:";
  WriteLinear(out, objective, names);
  out << "\nSubject To\n";
  for (int c = 0; c < problem.constraint_count(); ++c) {
    const Constraint& row = problem.constraint(c);
    out << ' ' << Sanitize(row.label, 'c', c) << ':';
    WriteLinear(out, row.terms, names);
    switch (row.relation) {
      case Relation::kLessEqual: out << " <= "; break;
      case Relation::kEqual: out << " = "; break;
      case Relation::kGreaterEqual: out << " >= "; break;
    }
    out << Number(row.rhs) << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < problem.variable_count(); ++j) {
    const Variable& v = problem.variable(j);
    if (v.lower == 0 && v.upper == kInfinity) continue;
    if (v.lower == -kInfinity && v.upper == kInfinity) {
      out << ' ' << names[j] << " free\n";
      continue;
    }
    out << ' ' << (v.lower == -kInfinity ? "-inf" : Number(v.lower)) << " <= "
        << names[j] << " <= " << (v.upper == kInfinity ? "+inf" : Number(v.upper))
        << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace lp
}  // namespace srte
