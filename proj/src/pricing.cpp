#include "pricelab/pricing/pricing.hpp"

#include <algorithm>
#include <stdexcept>

#include "pricelab/errors.hpp"
#include "pricelab/exactnum/lp.hpp"

namespace pricelab::pricing {

const char* to_string(DomainRestriction d) {
  switch (d) {
    case DomainRestriction::Free:
      return "free";
    case DomainRestriction::NonNeg:
      return "nonneg";
    case DomainRestriction::CappedByValuation:
      return "capped";
    case DomainRestriction::Box:
      return "box";
    case DomainRestriction::LowerCap:
      return "lowercap";
  }
  return "?";
}

const char* to_string(FollowerGround g) {
  return g == FollowerGround::FeasibleSets ? "feasible-sets" : "solution-sets";
}

const char* to_string(PricingStatus s) {
  switch (s) {
    case PricingStatus::Optimal:
      return "optimal";
    case PricingStatus::Unbounded:
      return "unbounded";
    case PricingStatus::NoFollowerSolution:
      return "no-follower-solution";
  }
  return "?";
}

void PricingInstance::validate() const {
  base.validate();
  const auto n = base.universe.size();
  std::vector<int> owner(n, 0);
  auto mark = [&](const Subset& s, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= n) throw ArgumentError(std::string(what) + " set leaves the universe");
      if (i > 0 && s[i] <= s[i - 1]) throw ArgumentError(std::string(what) + " set must be sorted");
      ++owner[s[i]];
    }
  };
  mark(leader_set, "leader");
  mark(follower_set, "follower");
  for (std::size_t e = 0; e < n; ++e) {
    if (owner[e] != 1) {
      throw ArgumentError("leader and follower sets must partition the universe (element " +
                          base.universe[e].label + ")");
    }
  }
  if (valuation.size() != n) throw ArgumentError("valuation must cover every universe element");
  for (const auto& v : valuation) {
    if (v < 0) throw ArgumentError("valuations must be nonnegative");
  }
  if (threshold < 0) throw ArgumentError("pricing threshold must be nonnegative");
  if (domain == DomainRestriction::LowerCap && base.sense != ssp::Sense::Min) {
    throw ArgumentError("the -c <= d restriction applies to min-sense instances only");
  }
}

bool PricingInstance::is_leader(ElementId e) const {
  return std::binary_search(leader_set.begin(), leader_set.end(), e);
}

void set_partition(PricingInstance& inst, Subset leader_set) {
  std::sort(leader_set.begin(), leader_set.end());
  for (auto e : leader_set) {
    if (e >= inst.base.universe.size()) throw ArgumentError("leader set leaves the universe");
  }
  inst.leader_set = std::move(leader_set);
  inst.follower_set.clear();
  for (const auto& u : inst.base.universe) {
    if (!inst.is_leader(u.id)) inst.follower_set.push_back(u.id);
  }
}

SetFamily follower_ground_set(const PricingInstance& inst, ssp::EnumerationCap cap) {
  return inst.ground == FollowerGround::FeasibleSets ? ssp::feasible_sets(inst.base, cap)
                                                     : ssp::solution_set(inst.base, cap);
}

Rational leader_revenue(const PricingInstance& inst, const PriceVector& d, const Subset& x) {
  Rational total;
  for (auto e : x) {
    if (!inst.is_leader(e)) continue;
    const auto it = d.find(e);
    if (it != d.end()) total += it->second;
  }
  return total;
}

Rational follower_objective(const PricingInstance& inst, const PriceVector& d, const Subset& x) {
  Integer v = 0;
  for (auto e : x) v += inst.valuation[e];
  const Rational revenue = leader_revenue(inst, d, x);
  return inst.follower_minimizes() ? Rational(v) + revenue : Rational(v) - revenue;
}

std::optional<FollowerResponse> best_response(const PricingInstance& inst,
                                              std::span<const Subset> ground,
                                              const PriceVector& d) {
  std::optional<FollowerResponse> best;
  const bool minimize = inst.follower_minimizes();
  for (const auto& x : ground) {
    Rational fv = follower_objective(inst, d, x);
    Rational lv = leader_revenue(inst, d, x);
    bool take = !best;
    if (best) {
      if (fv != best->follower_value) {
        take = minimize ? fv < best->follower_value : fv > best->follower_value;
      } else {
        take = lv > best->leader_value;
      }
    }
    if (take) best = FollowerResponse{x, std::move(fv), std::move(lv)};
  }
  return best;
}

bool respects_domain(const PricingInstance& inst, const PriceVector& d) {
  for (const auto& [e, price] : d) {
    if (!inst.is_leader(e)) return false;
    const Rational v(inst.valuation[e]);
    switch (inst.domain) {
      case DomainRestriction::Free:
        break;
      case DomainRestriction::NonNeg:
        if (price < 0) return false;
        break;
      case DomainRestriction::CappedByValuation:
        if (price > v) return false;
        break;
      case DomainRestriction::Box:
        if (price < 0 || price > v) return false;
        break;
      case DomainRestriction::LowerCap:
        if (price < -v) return false;
        break;
    }
  }
  return true;
}

namespace {

// All ground-set members sharing the same leader part are interchangeable for
// the leader; only the member with the best follower utility can be a response.
struct PatternGroup {
  std::vector<std::size_t> positions;  // indices into leader_set
  Integer utility;                     // max of v(X) (max sense) or -v(X) (min sense)
  const Subset* representative = nullptr;
  Rational upper_bound;
  bool has_upper_bound = false;
};

exact::VariableBounds bounds_for(DomainRestriction domain, const Integer& v) {
  exact::VariableBounds b;
  switch (domain) {
    case DomainRestriction::Free:
      break;
    case DomainRestriction::NonNeg:
      b.lower = Rational(0);
      break;
    case DomainRestriction::CappedByValuation:
      b.upper = Rational(v);
      break;
    case DomainRestriction::Box:
      b.lower = Rational(0);
      b.upper = Rational(v);
      break;
    case DomainRestriction::LowerCap:
      b.lower = -Rational(v);
      break;
  }
  return b;
}

}  // namespace

PricingSolution solve_pricing_over(const PricingInstance& inst, const SetFamily& ground) {
  PricingSolution out;
  if (ground.empty()) {
    out.status = PricingStatus::NoFollowerSolution;
    return out;
  }

  const auto n = inst.base.universe.size();
  std::vector<long> position(n, -1);
  for (std::size_t k = 0; k < inst.leader_set.size(); ++k) {
    position[inst.leader_set[k]] = static_cast<long>(k);
  }
  const bool minimize = inst.follower_minimizes();

  std::map<std::vector<std::size_t>, PatternGroup> groups;
  for (const auto& x : ground) {
    std::vector<std::size_t> pattern;
    Integer value = 0;
    for (auto e : x) {
      value += inst.valuation[e];
      if (position[e] >= 0) pattern.push_back(static_cast<std::size_t>(position[e]));
    }
    if (minimize) value = -value;
    auto [it, fresh] = groups.try_emplace(pattern);
    if (fresh || value > it->second.utility) {
      it->second.positions = std::move(pattern);
      it->second.utility = value;
      it->second.representative = &x;
    }
  }

  const auto empty_it = groups.find({});
  const bool has_empty = empty_it != groups.end();
  const bool capped = inst.domain == DomainRestriction::CappedByValuation ||
                      inst.domain == DomainRestriction::Box;
  if (!has_empty && !capped) {
    // Every response pays the leader; raising all prices together never loses revenue.
    out.status = PricingStatus::Unbounded;
    return out;
  }

  std::vector<PatternGroup*> candidates;
  for (auto& [pattern, g] : groups) {
    if (has_empty) {
      g.upper_bound = Rational(g.utility - empty_it->second.utility);
      g.has_upper_bound = true;
    }
    if (capped) {
      Rational cap_sum;
      for (auto k : g.positions) cap_sum += Rational(inst.valuation[inst.leader_set[k]]);
      if (!g.has_upper_bound || cap_sum < g.upper_bound) g.upper_bound = cap_sum;
      g.has_upper_bound = true;
    }
    candidates.push_back(&g);
  }
  std::sort(candidates.begin(), candidates.end(), [](const PatternGroup* a, const PatternGroup* b) {
    if (a->upper_bound != b->upper_bound) return a->upper_bound > b->upper_bound;
    return *a->representative < *b->representative;
  });

  const std::size_t dims = inst.leader_set.size();
  exact::LinearProgram lp;
  lp.num_vars = dims;
  lp.bounds.reserve(dims);
  for (auto e : inst.leader_set) lp.bounds.push_back(bounds_for(inst.domain, inst.valuation[e]));

  const PatternGroup* best = nullptr;
  Rational best_value;
  std::vector<Rational> best_prices;
  for (const PatternGroup* cand : candidates) {
    if (best && (cand->upper_bound < best_value ||
                 (cand->upper_bound == best_value && *cand->representative > *best->representative))) {
      continue;
    }
    lp.objective.assign(dims, Rational(0));
    for (auto k : cand->positions) lp.objective[k] = 1;
    lp.constraints.clear();
    for (const auto& [pattern, g] : groups) {
      if (&g == cand) continue;
      exact::LinearConstraint c;
      c.coeffs = lp.objective;
      for (auto k : g.positions) c.coeffs[k] -= 1;
      c.relation = exact::Relation::LessEqual;
      c.rhs = Rational(cand->utility - g.utility);
      lp.constraints.push_back(std::move(c));
    }
    auto result = exact::solve_lp(lp);
    if (result.status == exact::LpStatus::Infeasible) continue;
    if (result.status == exact::LpStatus::Unbounded) {
      out.status = PricingStatus::Unbounded;
      return out;
    }
    if (!best || result.optimal_value > best_value ||
        (result.optimal_value == best_value && *cand->representative < *best->representative)) {
      best = cand;
      best_value = result.optimal_value;
      best_prices = std::move(result.witness);
    }
  }
  if (!best) throw std::logic_error("no candidate response admits feasible prices");

  for (std::size_t k = 0; k < dims; ++k) out.prices.emplace(inst.leader_set[k], best_prices[k]);
  auto response = best_response(inst, ground, out.prices);
  if (!response || response->leader_value != best_value) {
    throw std::logic_error("optimistic response disagrees with the candidate optimum");
  }
  out.status = PricingStatus::Optimal;
  out.response = std::move(response->response);
  out.leader_value = std::move(response->leader_value);
  out.follower_value = std::move(response->follower_value);
  return out;
}

PricingSolution solve_pricing(const PricingInstance& inst, ssp::EnumerationCap cap) {
  inst.validate();
  return solve_pricing_over(inst, follower_ground_set(inst, cap));
}

bool decide(const PricingSolution& solution, const Rational& threshold) {
  switch (solution.status) {
    case PricingStatus::Unbounded:
      return true;
    case PricingStatus::Optimal:
      return solution.leader_value >= threshold;
    case PricingStatus::NoFollowerSolution:
      throw NoFollowerSolutionError("the follower has no feasible response");
  }
  return false;
}

bool decide_pricing(const PricingInstance& inst, ssp::EnumerationCap cap) {
  return decide(solve_pricing(inst, cap), inst.threshold);
}

PriceVector incentive_to_price(const std::map<ElementId, Integer>& leader_profit,
                               const std::map<ElementId, Rational>& incentives) {
  if (leader_profit.size() != incentives.size()) {
    throw ArgumentError("profits and incentives must share the same leader elements");
  }
  PriceVector d;
  for (const auto& [e, p] : leader_profit) {
    const auto it = incentives.find(e);
    if (it == incentives.end()) {
      throw ArgumentError("no incentive given for leader element " + std::to_string(e));
    }
    d.emplace(e, Rational(p) - it->second);
  }
  return d;
}

Rational incentive_objective(const std::map<ElementId, Integer>& leader_profit,
                             const std::map<ElementId, Rational>& incentives, const Subset& x) {
  Rational total;
  for (auto e : x) {
    const auto p = leader_profit.find(e);
    if (p == leader_profit.end()) continue;
    total += Rational(p->second) - incentives.at(e);
  }
  return total;
}

}  // namespace pricelab::pricing
