#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pricelab/exactnum/rational.hpp"

namespace pricelab::ssp {

using exact::Integer;

/// Index of an element inside its instance's universe.
using ElementId = std::uint32_t;

/// A subset of a universe, stored as strictly increasing ids. Ordering of
/// Subset values (lexicographic on the id list) is the canonical subset order.
using Subset = std::vector<ElementId>;

/// Canonically ordered, duplicate-free list of subsets.
using SetFamily = std::vector<Subset>;

struct UniverseElement {
  ElementId id = 0;
  std::string label;

  friend bool operator==(const UniverseElement&, const UniverseElement&) = default;
};

enum class Sense { Min, Max, Feasibility };

const char* to_string(Sense sense);

/// Default bound on the enumeration dimension (2^24 candidate points).
inline constexpr std::size_t kDefaultEnumerationCap = 24;

struct EnumerationCap {
  std::size_t max_dimension = kDefaultEnumerationCap;
};

/// Feasible-set oracle plus exhaustive enumerator for one instance.
class FeasibleFamily {
 public:
  using Visitor = std::function<void(const Subset&)>;

  virtual ~FeasibleFamily() = default;

  virtual std::size_t universe_size() const = 0;
  virtual bool contains(std::span<const ElementId> set) const = 0;

  /// log2 of the number of points the enumerator has to sweep.
  virtual std::size_t enumeration_dimension() const = 0;

  /// Yields every feasible set exactly once, each sorted ascending.
  virtual void for_each(const Visitor& visit) const = 0;
};

/// A family given by an explicit list of sets.
class ExplicitFamily final : public FeasibleFamily {
 public:
  ExplicitFamily(std::size_t universe_size, SetFamily sets);

  std::size_t universe_size() const override { return universe_size_; }
  bool contains(std::span<const ElementId> set) const override;
  std::size_t enumeration_dimension() const override;
  void for_each(const Visitor& visit) const override;

  const SetFamily& sets() const { return sets_; }

 private:
  std::size_t universe_size_;
  SetFamily sets_;
};

/// Combinatorial problem instance (universe, feasible sets, weights, threshold).
///
/// Min sense: solutions are feasible F with w(F) <= t, all weights >= 0, t >= 0.
/// Max sense: stored with nonnegative weights; solutions are feasible F with w(F) >= t.
/// Feasibility sense: all weights 0 and t = 0; every feasible set is a solution.
struct LopInstance {
  std::vector<UniverseElement> universe;
  std::shared_ptr<const FeasibleFamily> family;
  std::vector<Integer> weights;
  Integer threshold;
  Sense sense = Sense::Feasibility;

  /// Throws ArgumentError when an invariant above (or id uniqueness) is violated.
  void validate() const;

  Integer weight(std::span<const ElementId> set) const;
  bool feasible(std::span<const ElementId> set) const { return family->contains(set); }
  bool is_solution(std::span<const ElementId> set) const;
  /// Feasible and strictly better than the threshold (w <= t-1 for Min, w >= t+1 for Max).
  bool beats_threshold(std::span<const ElementId> set) const;
};

/// Universe of `labels.size()` elements with ids 0..n-1.
std::vector<UniverseElement> make_universe(const std::vector<std::string>& labels);

/// Throws ResourceError if the instance's enumeration dimension exceeds the cap.
void require_within_cap(const LopInstance& inst, EnumerationCap cap);

SetFamily feasible_sets(const LopInstance& inst, EnumerationCap cap = {});
SetFamily solution_set(const LopInstance& inst, EnumerationCap cap = {});

/// Sorts and removes duplicates.
void canonicalize(SetFamily& family);

/// A set rendered with element labels, e.g. "{x1, ~x2}".
std::string format_subset(const std::vector<UniverseElement>& universe, const Subset& set);

struct ProvenanceStep {
  std::string compiler;
  std::vector<std::pair<std::string, std::string>> parameters;

  friend bool operator==(const ProvenanceStep&, const ProvenanceStep&) = default;
};

using Provenance = std::vector<ProvenanceStep>;

}  // namespace pricelab::ssp
