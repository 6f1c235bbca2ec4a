#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pricelab/ssp/lop.hpp"

namespace pricelab::problems {

using ssp::ElementId;
using ssp::Integer;
using ssp::LopInstance;
using ssp::Subset;

/// DIMACS-style literal: +v is variable v, -v its negation (v >= 1).
using Literal = int;
using Clause = std::vector<Literal>;

/// Literal universe layout: variable v owns ids 2(v-1) (positive) and 2(v-1)+1 (negative).
ElementId literal_id(Literal lit);
Literal literal_at(ElementId id);
Literal negate(Literal lit);

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  /// Variables in range, no clause holding a literal together with its negation.
  void validate() const;
  /// Sorts each clause by literal id and removes repeated literals.
  void normalize();

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Labels "x1", "~x1", ... or "<name>", "~<name>" when variable names are given.
std::vector<std::string> literal_labels(std::size_t num_vars,
                                        const std::vector<std::string>& var_names = {});

/// Satisfying literal sets: one literal per variable, every clause hit.
class SatFamily final : public ssp::FeasibleFamily {
 public:
  explicit SatFamily(CnfFormula formula);

  std::size_t universe_size() const override { return 2 * formula_.num_vars; }
  bool contains(std::span<const ElementId> set) const override;
  std::size_t enumeration_dimension() const override { return formula_.num_vars; }
  void for_each(const Visitor& visit) const override;

  const CnfFormula& formula() const { return formula_; }

 private:
  CnfFormula formula_;
};

/// Vertex covers of a graph. Optional exclusive pairs further require that
/// each listed pair contributes exactly one endpoint to the set.
class VertexCoverFamily final : public ssp::FeasibleFamily {
 public:
  VertexCoverFamily(std::size_t num_vertices, std::vector<std::pair<ElementId, ElementId>> edges,
                    std::vector<std::pair<ElementId, ElementId>> exclusive_pairs = {});

  std::size_t universe_size() const override { return num_vertices_; }
  bool contains(std::span<const ElementId> set) const override;
  std::size_t enumeration_dimension() const override { return num_vertices_; }
  void for_each(const Visitor& visit) const override;

  const std::vector<std::pair<ElementId, ElementId>>& edges() const { return edges_; }
  const std::vector<std::pair<ElementId, ElementId>>& exclusive_pairs() const { return pairs_; }

 private:
  std::size_t num_vertices_;
  std::vector<std::pair<ElementId, ElementId>> edges_;
  std::vector<std::pair<ElementId, ElementId>> pairs_;
  std::vector<std::vector<ElementId>> earlier_neighbors_;
  std::vector<long> earlier_partner_;
};

/// Item sets whose total weight stays within the capacity.
class SubsetSumFamily final : public ssp::FeasibleFamily {
 public:
  SubsetSumFamily(std::vector<Integer> items, Integer capacity);

  std::size_t universe_size() const override { return items_.size(); }
  bool contains(std::span<const ElementId> set) const override;
  std::size_t enumeration_dimension() const override { return items_.size(); }
  void for_each(const Visitor& visit) const override;

  const std::vector<Integer>& items() const { return items_; }
  const Integer& capacity() const { return capacity_; }

 private:
  std::vector<Integer> items_;
  Integer capacity_;
};

/// SAT as a feasibility-sense instance over the 2N literals.
LopInstance make_sat_instance(CnfFormula formula, const std::vector<std::string>& var_names = {});

/// Min-sense vertex cover with unit weights unless `weights` is given.
LopInstance make_vertex_cover_instance(std::size_t num_vertices,
                                       std::vector<std::pair<ElementId, ElementId>> edges,
                                       Integer k, std::vector<Integer> weights = {},
                                       std::vector<std::string> labels = {});

/// Max-sense subset sum: feasible = weight <= target, solutions = weight exactly target.
LopInstance make_subset_sum_instance(std::vector<Integer> items, Integer target,
                                     std::vector<std::string> labels = {});

/// The SAT family behind an instance, or nullptr.
const SatFamily* as_sat(const LopInstance& inst);

}  // namespace pricelab::problems
