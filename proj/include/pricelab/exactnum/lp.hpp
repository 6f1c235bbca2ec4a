#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pricelab/exactnum/rational.hpp"

namespace pricelab::exact {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Absent bound = unbounded on that side.
struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// maximize objective·x subject to the constraints and per-variable bounds.
/// An empty `bounds` vector means every variable is free.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBounds> bounds;

  /// Throws ArgumentError on dimension mismatches or lower > upper.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// `optimal_value` and `witness` are meaningful only when status == Optimal.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational optimal_value;
  std::vector<Rational> witness;
};

/// Exact two-phase simplex with Bland's rule. Deterministic.
LpOutcome solve_lp(const LinearProgram& lp);

/// True iff x satisfies every constraint and bound of lp exactly.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);

Rational evaluate_objective(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace pricelab::exact
