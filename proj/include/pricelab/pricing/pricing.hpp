#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pricelab/exactnum/rational.hpp"
#include "pricelab/ssp/lop.hpp"

namespace pricelab::pricing {

using exact::Integer;
using exact::Rational;
using ssp::ElementId;
using ssp::LopInstance;
using ssp::SetFamily;
using ssp::Subset;

/// Admissible leader prices d, relative to the valuation v (profit p or cost c).
enum class DomainRestriction {
  Free,               // d unrestricted
  NonNeg,             // 0 <= d
  CappedByValuation,  // d <= v
  Box,                // 0 <= d <= v
  LowerCap,           // -v <= d (min sense only)
};

enum class FollowerGround { FeasibleSets, SolutionSets };

const char* to_string(DomainRestriction d);
const char* to_string(FollowerGround g);

using PriceVector = std::map<ElementId, Rational>;

/// Bilevel pricing instance over `base`. For Max and Feasibility sense the
/// follower maximizes v(X) - d(X); for Min sense it minimizes v(X) + d(X).
/// The leader collects d(X) from the elements of X it owns.
struct PricingInstance {
  LopInstance base;
  Subset leader_set;
  Subset follower_set;
  std::vector<Integer> valuation;
  DomainRestriction domain = DomainRestriction::Free;
  Rational threshold;
  FollowerGround ground = FollowerGround::FeasibleSets;

  void validate() const;
  bool follower_minimizes() const { return base.sense == ssp::Sense::Min; }
  bool is_leader(ElementId e) const;
};

/// Splits the universe into the given leader set and its complement.
void set_partition(PricingInstance& inst, Subset leader_set);

enum class PricingStatus { Optimal, Unbounded, NoFollowerSolution };

const char* to_string(PricingStatus s);

struct PricingSolution {
  PricingStatus status = PricingStatus::NoFollowerSolution;
  PriceVector prices;
  Subset response;
  Rational leader_value;
  Rational follower_value;
};

struct FollowerResponse {
  Subset response;
  Rational follower_value;
  Rational leader_value;
};

SetFamily follower_ground_set(const PricingInstance& inst, ssp::EnumerationCap cap = {});

Rational leader_revenue(const PricingInstance& inst, const PriceVector& d, const Subset& x);
Rational follower_objective(const PricingInstance& inst, const PriceVector& d, const Subset& x);

/// Exact optimistic follower response: follower-optimal, then largest d(X),
/// then first in canonical order. nullopt when the ground set is empty.
/// Prices missing from `d` count as 0.
std::optional<FollowerResponse> best_response(const PricingInstance& inst,
                                              std::span<const Subset> ground,
                                              const PriceVector& d);

bool respects_domain(const PricingInstance& inst, const PriceVector& d);

/// Optimistic bilevel optimum: one exact LP per candidate follower response.
PricingSolution solve_pricing(const PricingInstance& inst, ssp::EnumerationCap cap = {});

/// Same, over an explicitly supplied canonical ground set.
PricingSolution solve_pricing_over(const PricingInstance& inst, const SetFamily& ground);

/// Unbounded, or optimal with leader_value >= threshold. Throws
/// NoFollowerSolutionError when the ground set is empty.
bool decide_pricing(const PricingInstance& inst, ssp::EnumerationCap cap = {});
bool decide(const PricingSolution& solution, const Rational& threshold);

/// d(e) = p_L(e) - i(e). Key sets must agree.
PriceVector incentive_to_price(const std::map<ElementId, Integer>& leader_profit,
                               const std::map<ElementId, Rational>& incentives);

/// p_L(X) - i(X) over the leader elements of X.
Rational incentive_objective(const std::map<ElementId, Integer>& leader_profit,
                             const std::map<ElementId, Rational>& incentives, const Subset& x);

}  // namespace pricelab::pricing
