#include "pricelab/ssp/lop.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "pricelab/errors.hpp"

namespace pricelab::ssp {

const char* to_string(Sense sense) {
  switch (sense) {
    case Sense::Min:
      return "min";
    case Sense::Max:
      return "max";
    case Sense::Feasibility:
      return "feasibility";
  }
  return "?";
}

ExplicitFamily::ExplicitFamily(std::size_t universe_size, SetFamily sets)
    : universe_size_(universe_size), sets_(std::move(sets)) {
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw ArgumentError("explicit family set repeats an element");
    }
    if (!s.empty() && s.back() >= universe_size_) {
      throw ArgumentError("explicit family set references an element outside the universe");
    }
  }
  canonicalize(sets_);
}

bool ExplicitFamily::contains(std::span<const ElementId> set) const {
  const Subset key(set.begin(), set.end());
  return std::binary_search(sets_.begin(), sets_.end(), key);
}

std::size_t ExplicitFamily::enumeration_dimension() const {
  return static_cast<std::size_t>(std::bit_width(sets_.size()));
}

void ExplicitFamily::for_each(const Visitor& visit) const {
  for (const auto& s : sets_) visit(s);
}

void LopInstance::validate() const {
  if (!family) throw ArgumentError("instance has no feasible family");
  if (family->universe_size() != universe.size()) {
    throw ArgumentError("feasible family universe size differs from instance universe");
  }
  if (weights.size() != universe.size()) {
    throw ArgumentError("weights must cover every universe element");
  }
  std::unordered_set<ElementId> ids;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (universe[i].id != i) throw ArgumentError("universe ids must be 0..n-1 in order");
    ids.insert(universe[i].id);
  }
  switch (sense) {
    case Sense::Min:
    case Sense::Max:
      for (const auto& w : weights) {
        if (w < 0) throw ArgumentError("min/max instances require nonnegative weights");
      }
      if (threshold < 0) throw ArgumentError("min/max instances require a nonnegative threshold");
      break;
    case Sense::Feasibility:
      for (const auto& w : weights) {
        if (w != 0) throw ArgumentError("feasibility instances require zero weights");
      }
      if (threshold != 0) throw ArgumentError("feasibility instances require threshold 0");
      break;
  }
}

Integer LopInstance::weight(std::span<const ElementId> set) const {
  Integer total = 0;
  for (auto e : set) total += weights[e];
  return total;
}

bool LopInstance::is_solution(std::span<const ElementId> set) const {
  if (!feasible(set)) return false;
  switch (sense) {
    case Sense::Min:
      return weight(set) <= threshold;
    case Sense::Max:
      return weight(set) >= threshold;
    case Sense::Feasibility:
      return true;
  }
  return false;
}

bool LopInstance::beats_threshold(std::span<const ElementId> set) const {
  switch (sense) {
    case Sense::Min:
      return weight(set) <= threshold - 1;
    case Sense::Max:
      return weight(set) >= threshold + 1;
    case Sense::Feasibility:
      return false;
  }
  return false;
}

std::vector<UniverseElement> make_universe(const std::vector<std::string>& labels) {
  std::vector<UniverseElement> u;
  u.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    u.push_back({static_cast<ElementId>(i), labels[i]});
  }
  return u;
}

void require_within_cap(const LopInstance& inst, EnumerationCap cap) {
  const auto dim = inst.family->enumeration_dimension();
  if (dim > cap.max_dimension) {
    throw ResourceError("enumeration dimension " + std::to_string(dim) +
                            " exceeds the enumeration cap of " +
                            std::to_string(cap.max_dimension),
                        cap.max_dimension);
  }
}

void canonicalize(SetFamily& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

SetFamily feasible_sets(const LopInstance& inst, EnumerationCap cap) {
  require_within_cap(inst, cap);
  SetFamily out;
  inst.family->for_each([&](const Subset& s) { out.push_back(s); });
  canonicalize(out);
  return out;
}

SetFamily solution_set(const LopInstance& inst, EnumerationCap cap) {
  require_within_cap(inst, cap);
  SetFamily out;
  inst.family->for_each([&](const Subset& s) {
    switch (inst.sense) {
      case Sense::Min:
        if (inst.weight(s) <= inst.threshold) out.push_back(s);
        break;
      case Sense::Max:
        if (inst.weight(s) >= inst.threshold) out.push_back(s);
        break;
      case Sense::Feasibility:
        out.push_back(s);
        break;
    }
  });
  canonicalize(out);
  return out;
}

std::string format_subset(const std::vector<UniverseElement>& universe, const Subset& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += set[i] < universe.size() ? universe[set[i]].label : "#" + std::to_string(set[i]);
  }
  return out + "}";
}

}  // namespace pricelab::ssp
