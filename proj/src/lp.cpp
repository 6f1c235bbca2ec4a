#include "pricelab/exactnum/lp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "pricelab/errors.hpp"

namespace pricelab::exact {

void LinearProgram::validate() const {
  if (objective.size() != num_vars) {
    throw ArgumentError("objective has " + std::to_string(objective.size()) +
                        " coefficients, expected " + std::to_string(num_vars));
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coeffs.size() != num_vars) {
      throw ArgumentError("constraint " + std::to_string(i) + " has " +
                          std::to_string(constraints[i].coeffs.size()) +
                          " coefficients, expected " + std::to_string(num_vars));
    }
  }
  if (!bounds.empty() && bounds.size() != num_vars) {
    throw ArgumentError("bounds given for " + std::to_string(bounds.size()) + " of " +
                        std::to_string(num_vars) + " variables");
  }
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    if (bounds[j].lower && bounds[j].upper && *bounds[j].upper < *bounds[j].lower) {
      throw ArgumentError("variable " + std::to_string(j) + " has lower bound above upper bound");
    }
  }
}

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& x) {
  Rational value;
  for (std::size_t j = 0; j < lp.num_vars; ++j) value += lp.objective[j] * x[j];
  return value;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_vars) return false;
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    switch (c.relation) {
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  for (std::size_t j = 0; j < lp.bounds.size(); ++j) {
    if (lp.bounds[j].lower && x[j] < *lp.bounds[j].lower) return false;
    if (lp.bounds[j].upper && x[j] > *lp.bounds[j].upper) return false;
  }
  return true;
}

namespace {

// Condensed tableau: basic[i] = rhs[i] - sum_j a[i][j] * nonbasic[j], every variable >= 0.
// Objective z = z0 + sum_j cost[j] * nonbasic[j] is maximized.
class Dictionary {
 public:
  Dictionary(std::size_t columns, std::vector<std::vector<mpq_class>> rows, std::vector<mpq_class> rhs)
      : a_(std::move(rows)), rhs_(std::move(rhs)), cost_(columns) {
    for (std::size_t j = 0; j < columns; ++j) nonbasic_.push_back(j);
    for (std::size_t i = 0; i < a_.size(); ++i) basic_.push_back(columns + i);
  }

  std::size_t rows() const { return a_.size(); }
  std::size_t columns() const { return nonbasic_.size(); }

  // Returns false when feasible region is empty.
  bool make_feasible() {
    std::size_t worst = rows();
    for (std::size_t i = 0; i < rows(); ++i) {
      if (rhs_[i] < 0 && (worst == rows() || rhs_[i] < rhs_[worst] ||
                          (rhs_[i] == rhs_[worst] && basic_[i] < basic_[worst]))) {
        worst = i;
      }
    }
    if (worst == rows()) return true;

    const std::size_t aux = next_label();
    const std::size_t aux_col = columns();
    nonbasic_.push_back(aux);
    for (auto& row : a_) row.emplace_back(-1);
    cost_.assign(columns(), 0);
    cost_[aux_col] = -1;
    z0_ = 0;

    pivot(worst, aux_col);
    if (run_bland() != Result::Optimal) throw std::logic_error("auxiliary problem unbounded");
    if (z0_ < 0) return false;

    const auto aux_row = std::find(basic_.begin(), basic_.end(), aux);
    if (aux_row != basic_.end()) {
      const std::size_t r = static_cast<std::size_t>(aux_row - basic_.begin());
      std::size_t best = columns();
      for (std::size_t j = 0; j < columns(); ++j) {
        if (a_[r][j] != 0 && (best == columns() || nonbasic_[j] < nonbasic_[best])) best = j;
      }
      if (best == columns()) {
        erase_row(r);
      } else {
        pivot(r, best);
      }
    }
    const auto col_it = std::find(nonbasic_.begin(), nonbasic_.end(), aux);
    const std::size_t col = static_cast<std::size_t>(col_it - nonbasic_.begin());
    erase_column(col);
    return true;
  }

  // Installs z = constant + sum_k objective[k] * y_k over the structural labels.
  void set_objective(const std::vector<mpq_class>& objective, const mpq_class& constant) {
    cost_.assign(columns(), 0);
    z0_ = constant;
    for (std::size_t j = 0; j < columns(); ++j) {
      if (nonbasic_[j] < objective.size()) cost_[j] = objective[nonbasic_[j]];
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      if (basic_[i] >= objective.size()) continue;
      const mpq_class& c = objective[basic_[i]];
      if (c == 0) continue;
      z0_ += c * rhs_[i];
      for (std::size_t j = 0; j < columns(); ++j) cost_[j] -= c * a_[i][j];
    }
  }

  enum class Result { Optimal, Unbounded };

  Result run_bland() {
    for (;;) {
      std::size_t enter = columns();
      for (std::size_t j = 0; j < columns(); ++j) {
        if (cost_[j] > 0 && (enter == columns() || nonbasic_[j] < nonbasic_[enter])) enter = j;
      }
      if (enter == columns()) return Result::Optimal;

      std::size_t leave = rows();
      mpq_class best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        mpq_class ratio = rhs_[i] / a_[i][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows()) return Result::Unbounded;
      pivot(leave, enter);
    }
  }

  const mpq_class& objective_value() const { return z0_; }

  // Values of labels [0, count); nonbasic variables sit at zero.
  std::vector<mpq_class> values(std::size_t count) const {
    std::vector<mpq_class> v(count);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (basic_[i] < count) v[basic_[i]] = rhs_[i];
    }
    return v;
  }

 private:
  std::size_t next_label() const {
    std::size_t label = 0;
    for (auto b : basic_) label = std::max(label, b + 1);
    for (auto n : nonbasic_) label = std::max(label, n + 1);
    return label;
  }

  void pivot(std::size_t r, std::size_t s) {
    const mpq_class inv = 1 / a_[r][s];
    auto& prow = a_[r];
    rhs_[r] *= inv;
    for (std::size_t j = 0; j < columns(); ++j) {
      if (j != s && prow[j] != 0) prow[j] *= inv;
    }
    prow[s] = inv;

    mpq_class f;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_[i][s] == 0) continue;
      f = a_[i][s];
      auto& row = a_[i];
      rhs_[i] -= f * rhs_[r];
      for (std::size_t j = 0; j < columns(); ++j) {
        if (j != s && prow[j] != 0) row[j] -= f * prow[j];
      }
      row[s] = -f * inv;
    }
    if (cost_[s] != 0) {
      f = cost_[s];
      z0_ += f * rhs_[r];
      for (std::size_t j = 0; j < columns(); ++j) {
        if (j != s && prow[j] != 0) cost_[j] -= f * prow[j];
      }
      cost_[s] = -f * inv;
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  void erase_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void erase_column(std::size_t c) {
    for (auto& row : a_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
    cost_.erase(cost_.begin() + static_cast<std::ptrdiff_t>(c));
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(c));
  }

  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> rhs_;
  std::vector<mpq_class> cost_;
  mpq_class z0_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

// x_j = offset + sum sign * y_col over nonnegative columns.
struct VariableMap {
  mpq_class offset;
  std::vector<std::pair<std::size_t, int>> terms;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();

  std::vector<VariableMap> maps(lp.num_vars);
  std::size_t columns = 0;
  std::vector<std::pair<std::size_t, mpq_class>> upper_rows;  // y_col <= value
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    const VariableBounds none;
    const VariableBounds& b = lp.bounds.empty() ? none : lp.bounds[j];
    if (b.lower) {
      maps[j].offset = b.lower->raw();
      maps[j].terms.emplace_back(columns, 1);
      if (b.upper) upper_rows.emplace_back(columns, b.upper->raw() - b.lower->raw());
      ++columns;
    } else if (b.upper) {
      maps[j].offset = b.upper->raw();
      maps[j].terms.emplace_back(columns++, -1);
    } else {
      maps[j].terms.emplace_back(columns++, 1);
      maps[j].terms.emplace_back(columns++, -1);
    }
  }

  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  auto add_row = [&](const LinearConstraint& c, int orientation) {
    std::vector<mpq_class> row(columns);
    mpq_class b = c.rhs.raw();
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      const mpq_class& coef = c.coeffs[j].raw();
      if (coef == 0) continue;
      b -= coef * maps[j].offset;
      for (auto [col, sign] : maps[j].terms) row[col] += sign * coef;
    }
    if (orientation < 0) {
      for (auto& v : row) v = -v;
      b = -b;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  };
  for (const auto& c : lp.constraints) {
    if (c.relation != Relation::GreaterEqual) add_row(c, +1);
    if (c.relation != Relation::LessEqual) add_row(c, -1);
  }
  for (auto& [col, value] : upper_rows) {
    std::vector<mpq_class> row(columns);
    row[col] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(value);
  }

  std::vector<mpq_class> objective(columns);
  mpq_class constant;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    const mpq_class& c = lp.objective[j].raw();
    constant += c * maps[j].offset;
    for (auto [col, sign] : maps[j].terms) objective[col] += sign * c;
  }

  Dictionary dict(columns, std::move(rows), std::move(rhs));
  LpOutcome out;
  if (!dict.make_feasible()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  dict.set_objective(objective, constant);
  if (dict.run_bland() == Dictionary::Result::Unbounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  const auto y = dict.values(columns);
  out.status = LpStatus::Optimal;
  out.witness.reserve(lp.num_vars);
  for (const auto& m : maps) {
    mpq_class x = m.offset;
    for (auto [col, sign] : m.terms) x += sign * y[col];
    out.witness.emplace_back(Rational(Integer(x.get_num()), Integer(x.get_den())));
  }
  out.optimal_value = evaluate_objective(lp, out.witness);
  if (out.optimal_value.raw() != dict.objective_value() || !satisfies(lp, out.witness)) {
    throw std::logic_error("simplex produced an inconsistent optimum");
  }
  return out;
}

}  // namespace pricelab::exact
