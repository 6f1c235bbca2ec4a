#pragma once

#include <optional>
#include <vector>

#include "pricelab/exactnum/lp.hpp"
#include "pricelab/pricing/pricing.hpp"

namespace oracle {

using pricelab::exact::LinearProgram;
using pricelab::exact::LpStatus;
using pricelab::exact::Rational;
using Vec = std::vector<Rational>;

/// a·x <= b
struct Row {
  Vec a;
  Rational b;
};

std::vector<Row> rows_of(const LinearProgram& lp);

/// Unique solution of A x = b (A is r x k), or nullopt if rank < k or inconsistent.
std::optional<Vec> solve_system(std::vector<Vec> A, Vec b);

/// Points where n linearly independent hyperplanes, taken from the rows and (when
/// the rows do not span) the coordinate planes, meet inside the region.
std::vector<Vec> basic_points(const std::vector<Row>& rows, std::size_t n);

std::optional<Vec> feasible_point(const std::vector<Row>& rows, std::size_t n);

/// y >= 0 with y^T A = 0 and y^T b = -1.
std::optional<Vec> farkas_certificate(const std::vector<Row>& rows, std::size_t n);

struct LpVerdict {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vec point;
  Vec ray;    // Unbounded: A r <= 0 (homogeneous rows), c·r = 1
  Vec farkas;  // Infeasible
};

/// Brute-force LP: basic feasible points for the optimum, certificates otherwise.
LpVerdict brute_force_lp(const LinearProgram& lp);

struct BilevelVerdict {
  pricelab::pricing::PricingStatus status = pricelab::pricing::PricingStatus::NoFollowerSolution;
  Rational value;
};

/// Optimistic bilevel value by enumerating every subset of the universe (or the family
/// enumerator above 20 elements) and solving one brute-force LP per candidate over
/// the full, ungrouped ground set.
BilevelVerdict brute_force_pricing(const pricelab::pricing::PricingInstance& inst);

}  // namespace oracle
