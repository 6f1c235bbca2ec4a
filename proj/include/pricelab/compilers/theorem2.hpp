#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pricelab/compilers/qdnf.hpp"
#include "pricelab/pricing/pricing.hpp"
#include "pricelab/ssp/lop.hpp"

namespace pricelab::compilers {

using exact::Integer;

/// Feasibility-pricing instance over SAT built from an ∃∀-DNF formula.
struct CompiledSatPricing {
  pricing::PricingInstance pricing;
  Integer k_star;  // (n+1)M - n
  Integer M;       // 2n
  /// Gadget role ("h1", "vt2", "a1", ...) -> id of its positive literal.
  std::vector<std::pair<std::string, ssp::ElementId>> atlas;
  ssp::Provenance provenance;
  /// Sanity checks that failed on this output (empty when the construction behaves as stated).
  std::vector<std::string> anomalies;
};

/// Variable names in CNF order: h1 h2 z1 z2, then vt_i vf_i vo_i a_i b_i per i.
std::vector<std::string> theorem2_variable_names(std::size_t n);

/// Emits the gadget formula, leader/follower split, profits and k*.
/// The result uses the solution-set ground, Free prices, threshold k*.
CompiledSatPricing compile_theorem2(const QdnfInstance& q);

}  // namespace pricelab::compilers
