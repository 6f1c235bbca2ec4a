#include "pricelab/problems/families.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include "pricelab/errors.hpp"

namespace pricelab::problems {

ElementId literal_id(Literal lit) {
  if (lit == 0) throw ArgumentError("literal 0 is not a valid literal");
  const auto var = static_cast<ElementId>(std::abs(lit));
  return 2 * (var - 1) + (lit < 0 ? 1 : 0);
}

Literal literal_at(ElementId id) {
  const auto var = static_cast<Literal>(id / 2 + 1);
  return id % 2 == 0 ? var : -var;
}

Literal negate(Literal lit) { return -lit; }

void CnfFormula::validate() const {
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    for (auto lit : clauses[j]) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars) {
        throw ArgumentError("clause " + std::to_string(j) + " references variable " +
                            std::to_string(std::abs(lit)) + " outside [1, " +
                            std::to_string(num_vars) + "]");
      }
      if (std::find(clauses[j].begin(), clauses[j].end(), -lit) != clauses[j].end()) {
        throw ArgumentError("clause " + std::to_string(j) +
                            " contains a literal and its negation");
      }
    }
  }
}

void CnfFormula::normalize() {
  for (auto& c : clauses) {
    std::sort(c.begin(), c.end(),
              [](Literal a, Literal b) { return literal_id(a) < literal_id(b); });
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
}

std::vector<std::string> literal_labels(std::size_t num_vars,
                                        const std::vector<std::string>& var_names) {
  if (!var_names.empty() && var_names.size() != num_vars) {
    throw ArgumentError("variable name list does not match variable count");
  }
  std::vector<std::string> labels;
  labels.reserve(2 * num_vars);
  for (std::size_t v = 0; v < num_vars; ++v) {
    const std::string name = var_names.empty() ? "x" + std::to_string(v + 1) : var_names[v];
    labels.push_back(name);
    labels.push_back("~" + name);
  }
  return labels;
}

SatFamily::SatFamily(CnfFormula formula) : formula_(std::move(formula)) {
  formula_.validate();
  formula_.normalize();
}

bool SatFamily::contains(std::span<const ElementId> set) const {
  std::vector<char> chosen(universe_size(), 0);
  for (auto e : set) {
    if (e >= universe_size()) return false;
    chosen[e] = 1;
  }
  for (std::size_t v = 0; v < formula_.num_vars; ++v) {
    if (chosen[2 * v] + chosen[2 * v + 1] != 1) return false;
  }
  for (const auto& c : formula_.clauses) {
    const bool hit = std::any_of(c.begin(), c.end(), [&](Literal l) { return chosen[literal_id(l)]; });
    if (!hit) return false;
  }
  return true;
}

void SatFamily::for_each(const Visitor& visit) const {
  const std::size_t n = formula_.num_vars;
  if (n > 63) throw ResourceError("SAT enumeration beyond 63 variables", 63);
  struct Masks {
    std::uint64_t pos = 0, neg = 0;
  };
  std::vector<Masks> masks;
  masks.reserve(formula_.clauses.size());
  for (const auto& c : formula_.clauses) {
    Masks m;
    for (auto l : c) {
      const std::uint64_t bit = std::uint64_t{1} << (std::abs(l) - 1);
      (l > 0 ? m.pos : m.neg) |= bit;
    }
    masks.push_back(m);
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  Subset s(n);
  for (std::uint64_t a = 0; a < count; ++a) {
    bool ok = true;
    for (const auto& m : masks) {
      if (!((a & m.pos) | (~a & m.neg))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (std::size_t v = 0; v < n; ++v) {
      s[v] = static_cast<ElementId>(2 * v + (((a >> v) & 1) ? 0 : 1));
    }
    visit(s);
  }
}

VertexCoverFamily::VertexCoverFamily(std::size_t num_vertices,
                                     std::vector<std::pair<ElementId, ElementId>> edges,
                                     std::vector<std::pair<ElementId, ElementId>> exclusive_pairs)
    : num_vertices_(num_vertices), edges_(std::move(edges)), pairs_(std::move(exclusive_pairs)) {
  earlier_neighbors_.resize(num_vertices_);
  earlier_partner_.assign(num_vertices_, -1);
  for (auto [u, v] : edges_) {
    if (u >= num_vertices_ || v >= num_vertices_) throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("self-loop edges are not supported");
    earlier_neighbors_[std::max(u, v)].push_back(std::min(u, v));
  }
  std::vector<char> paired(num_vertices_, 0);
  for (auto [u, v] : pairs_) {
    if (u >= num_vertices_ || v >= num_vertices_ || u == v) {
      throw ArgumentError("invalid exclusive pair");
    }
    if (paired[u] || paired[v]) throw ArgumentError("exclusive pairs must be disjoint");
    paired[u] = paired[v] = 1;
    earlier_partner_[std::max(u, v)] = static_cast<long>(std::min(u, v));
  }
}

bool VertexCoverFamily::contains(std::span<const ElementId> set) const {
  std::vector<char> in(num_vertices_, 0);
  for (auto e : set) {
    if (e >= num_vertices_) return false;
    in[e] = 1;
  }
  for (auto [u, v] : edges_) {
    if (!in[u] && !in[v]) return false;
  }
  for (auto [u, v] : pairs_) {
    if (in[u] + in[v] != 1) return false;
  }
  return true;
}

void VertexCoverFamily::for_each(const Visitor& visit) const {
  std::vector<char> in(num_vertices_, 0);
  Subset current;
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == num_vertices_) {
      visit(current);
      return;
    }
    const long partner = earlier_partner_[v];
    // Excluding v requires every earlier neighbour to be in the cover.
    bool can_exclude = std::all_of(earlier_neighbors_[v].begin(), earlier_neighbors_[v].end(),
                                   [&](ElementId u) { return in[u] != 0; });
    bool can_include = true;
    if (partner >= 0) {
      if (in[partner]) {
        can_include = false;
      } else {
        can_exclude = false;
      }
    }
    if (can_exclude) go(v + 1);
    if (can_include) {
      in[v] = 1;
      current.push_back(static_cast<ElementId>(v));
      go(v + 1);
      current.pop_back();
      in[v] = 0;
    }
  };
  go(0);
}

SubsetSumFamily::SubsetSumFamily(std::vector<Integer> items, Integer capacity)
    : items_(std::move(items)), capacity_(std::move(capacity)) {
  for (const auto& w : items_) {
    if (w < 0) throw ArgumentError("subset-sum items must be nonnegative");
  }
}

bool SubsetSumFamily::contains(std::span<const ElementId> set) const {
  Integer total = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= items_.size() || (i > 0 && set[i] <= set[i - 1])) return false;
    total += items_[set[i]];
  }
  return total <= capacity_;
}

void SubsetSumFamily::for_each(const Visitor& visit) const {
  Subset current;
  Integer total = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == items_.size()) {
      visit(current);
      return;
    }
    go(i + 1);
    total += items_[i];
    if (total <= capacity_) {
      current.push_back(static_cast<ElementId>(i));
      go(i + 1);
      current.pop_back();
    }
    total -= items_[i];
  };
  go(0);
}

LopInstance make_sat_instance(CnfFormula formula, const std::vector<std::string>& var_names) {
  LopInstance inst;
  inst.universe = ssp::make_universe(literal_labels(formula.num_vars, var_names));
  inst.weights.assign(inst.universe.size(), Integer(0));
  inst.threshold = 0;
  inst.sense = ssp::Sense::Feasibility;
  inst.family = std::make_shared<SatFamily>(std::move(formula));
  inst.validate();
  return inst;
}

LopInstance make_vertex_cover_instance(std::size_t num_vertices,
                                       std::vector<std::pair<ElementId, ElementId>> edges,
                                       Integer k, std::vector<Integer> weights,
                                       std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t v = 0; v < num_vertices; ++v) labels.push_back("v" + std::to_string(v));
  }
  if (labels.size() != num_vertices) throw ArgumentError("vertex label count mismatch");
  if (weights.empty()) weights.assign(num_vertices, Integer(1));
  LopInstance inst;
  inst.universe = ssp::make_universe(labels);
  inst.weights = std::move(weights);
  inst.threshold = std::move(k);
  inst.sense = ssp::Sense::Min;
  inst.family = std::make_shared<VertexCoverFamily>(num_vertices, std::move(edges));
  inst.validate();
  return inst;
}

LopInstance make_subset_sum_instance(std::vector<Integer> items, Integer target,
                                     std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < items.size(); ++i) labels.push_back("item" + std::to_string(i));
  }
  if (labels.size() != items.size()) throw ArgumentError("item label count mismatch");
  LopInstance inst;
  inst.universe = ssp::make_universe(labels);
  inst.weights = items;
  inst.threshold = target;
  inst.sense = ssp::Sense::Max;
  inst.family = std::make_shared<SubsetSumFamily>(std::move(items), std::move(target));
  inst.validate();
  return inst;
}

const SatFamily* as_sat(const LopInstance& inst) {
  return dynamic_cast<const SatFamily*>(inst.family.get());
}

}  // namespace pricelab::problems
