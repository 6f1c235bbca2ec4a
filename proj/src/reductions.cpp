#include "pricelab/problems/reductions.hpp"

#include <algorithm>

#include "pricelab/errors.hpp"

namespace pricelab::problems {

namespace {

const SatFamily& require_sat(const LopInstance& sat) {
  const SatFamily* fam = as_sat(sat);
  if (!fam) throw ArgumentError("reduction source must be a SAT instance");
  return *fam;
}

std::vector<std::string> labels_of(const LopInstance& inst) {
  std::vector<std::string> labels;
  labels.reserve(inst.universe.size());
  for (const auto& u : inst.universe) labels.push_back(u.label);
  return labels;
}

}  // namespace

ssp::SspReductionArtifact sat_to_vertex_cover(const LopInstance& sat) {
  const CnfFormula& phi = require_sat(sat).formula();
  const auto n = phi.num_vars;

  std::vector<std::string> labels = labels_of(sat);
  std::vector<std::pair<ElementId, ElementId>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<ElementId>(2 * v), static_cast<ElementId>(2 * v + 1));
  }

  Integer t = static_cast<unsigned long>(n);
  std::size_t padded = 0;
  for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
    const auto& clause = phi.clauses[j];
    if (clause.empty()) {
      throw DegenerateInstanceError("clause " + std::to_string(j + 1) +
                                    " is empty; no vertex cover reduction is emitted");
    }
    std::vector<ElementId> attach;
    for (auto lit : clause) attach.push_back(literal_id(lit));
    if (attach.size() == 1) {
      attach.push_back(attach.front());
      ++padded;
    }
    const auto first = static_cast<ElementId>(labels.size());
    for (std::size_t r = 0; r < attach.size(); ++r) {
      labels.push_back("c" + std::to_string(j + 1) + "." + std::to_string(r + 1));
    }
    for (std::size_t r = 0; r < attach.size(); ++r) {
      const auto g = static_cast<ElementId>(first + r);
      for (std::size_t q = r + 1; q < attach.size(); ++q) {
        edges.emplace_back(g, static_cast<ElementId>(first + q));
      }
      edges.emplace_back(attach[r], g);
    }
    t += static_cast<unsigned long>(attach.size() - 1);
  }

  const auto vertices = labels.size();
  ssp::SspReductionArtifact art;
  art.source_universe = sat.universe;
  art.target = make_vertex_cover_instance(vertices, std::move(edges), t, {}, std::move(labels));
  art.embedding.resize(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) art.embedding[i] = static_cast<ElementId>(i);
  art.provenance.push_back({"sat2vc",
                            {{"t", exact::to_string(t)},
                             {"vertices", std::to_string(vertices)},
                             {"padded_singletons", std::to_string(padded)}}});
  art.certification = ssp::Certification::ShippedCompiler;
  return art;
}

Integer subset_sum_base(const CnfFormula& formula) {
  std::size_t kmax = 1;
  for (const auto& c : formula.clauses) kmax = std::max(kmax, c.size());
  return Integer(static_cast<unsigned long>(std::max({std::size_t{10}, kmax + 3, 2 * kmax})));
}

ssp::SspReductionArtifact sat_to_subset_sum(const LopInstance& sat) {
  const CnfFormula& phi = require_sat(sat).formula();
  const auto n = phi.num_vars;
  if (n == 0) throw ArgumentError("subset-sum reduction needs at least one variable");
  const auto m = phi.clauses.size();

  const Integer base = subset_sum_base(phi);
  std::vector<Integer> power(n + m);
  power[0] = 1;
  for (std::size_t d = 1; d < n + m; ++d) power[d] = power[d - 1] * base;

  std::vector<Integer> items(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    items[2 * v] = power[v];
    items[2 * v + 1] = power[v];
  }
  Integer target = 0;
  for (std::size_t v = 0; v < n; ++v) target += power[v];

  std::vector<std::string> labels = labels_of(sat);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& clause = phi.clauses[j];
    const Integer& digit = power[n + j];
    for (auto lit : clause) items[literal_id(lit)] += digit;
    target += digit * static_cast<unsigned long>(std::max<std::size_t>(clause.size(), 1));
    // Slack values 1, 2, 4, ..., remainder: subset sums are exactly 0..|C|-1.
    std::size_t remaining = clause.empty() ? 0 : clause.size() - 1;
    std::size_t chunk = 1;
    std::size_t r = 0;
    while (remaining > 0) {
      const std::size_t value = std::min(chunk, remaining);
      items.push_back(digit * static_cast<unsigned long>(value));
      labels.push_back("s" + std::to_string(j + 1) + "." + std::to_string(++r));
      remaining -= value;
      chunk *= 2;
    }
  }

  const auto count = items.size();
  ssp::SspReductionArtifact art;
  art.source_universe = sat.universe;
  art.target = make_subset_sum_instance(std::move(items), target, std::move(labels));
  art.embedding.resize(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) art.embedding[i] = static_cast<ElementId>(i);
  art.provenance.push_back({"sat2ss",
                            {{"base", exact::to_string(base)},
                             {"t", exact::to_string(target)},
                             {"items", std::to_string(count)}}});
  art.certification = ssp::Certification::ShippedCompiler;
  return art;
}

}  // namespace pricelab::problems
