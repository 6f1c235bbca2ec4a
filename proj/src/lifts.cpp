#include "pricelab/compilers/lifts.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "pricelab/errors.hpp"

namespace pricelab::compilers {

using pricing::PricingInstance;
using ssp::ElementId;
using ssp::Sense;
using ssp::SspReductionArtifact;
using ssp::Subset;

const char* to_string(LiftMode m) {
  switch (m) {
    case LiftMode::MaxLift: return "max";
    case LiftMode::MinLift: return "min";
    case LiftMode::FeasLift: return "feas";
  }
  return "?";
}

Integer lift_constant(const PricingInstance& sat_pricing) {
  Integer total(0);
  for (const auto& p : sat_pricing.valuation) total += p;
  return Integer(static_cast<unsigned long>(4 * sat_pricing.base.universe.size())) * total;
}

namespace {

void check_source(const PricingInstance& src, const SspReductionArtifact& art) {
  src.validate();
  if (src.base.sense != Sense::Feasibility) {
    throw ArgumentError("lift: source pricing instance must be feasibility-sense");
  }
  art.validate();
  if (art.source_universe.size() != src.base.universe.size()) {
    throw ArgumentError("lift: artifact source universe does not match the pricing instance");
  }
}

Integer optimum_or_threshold(const ssp::LopInstance& target, ssp::EnumerationCap cap,
                             std::string& how) {
  if (target.sense == Sense::Feasibility) {
    how = "zero";
    return Integer(0);
  }
  if (target.family->enumeration_dimension() > cap.max_dimension) {
    how = "threshold";
    return target.threshold;
  }
  std::optional<Integer> best;
  target.family->for_each([&](const Subset& f) {
    const Integer w = target.weight(f);
    if (!best || (target.sense == Sense::Max ? w > *best : w < *best)) best = w;
  });
  if (!best) {
    how = "threshold";
    return target.threshold;
  }
  how = "enumerated";
  return *best;
}

LiftResult build(const PricingInstance& src, SspReductionArtifact art, LiftMode mode,
                 ssp::EnumerationCap cap) {
  const auto& target = art.target;
  LiftResult out;
  out.params.mode = mode;
  out.params.M_lift = mode == LiftMode::FeasLift ? Integer(0) : lift_constant(src);
  std::string alpha_how;
  out.params.alpha_pi = optimum_or_threshold(target, cap, alpha_how);

  const auto m = target.universe.size();
  std::vector<std::optional<ElementId>> preimage(m);
  for (ElementId s = 0; s < art.embedding.size(); ++s) preimage[art.embedding[s]] = s;

  PricingInstance& lifted = out.pricing;
  lifted.base = target;
  lifted.valuation.resize(m);
  for (ElementId e = 0; e < m; ++e) {
    Integer v = out.params.M_lift * target.weights[e];
    if (preimage[e]) {
      const Integer& p = src.valuation[*preimage[e]];
      if (mode == LiftMode::MinLift) {
        v -= p;
      } else {
        v += p;
      }
    }
    if (v < 0) throw std::logic_error("lift_min produced a negative cost");
    lifted.valuation[e] = v;
  }
  Subset leader;
  for (ElementId s : src.leader_set) leader.push_back(art.embedding[s]);
  std::sort(leader.begin(), leader.end());
  set_partition(lifted, leader);
  lifted.domain = src.domain;
  lifted.threshold = src.threshold;
  lifted.ground = mode == LiftMode::FeasLift ? pricing::FollowerGround::SolutionSets
                                             : pricing::FollowerGround::FeasibleSets;
  lifted.validate();

  out.provenance = art.provenance;
  out.provenance.push_back({std::string("lift-") + to_string(mode),
                            {{"M_lift", exact::to_string(out.params.M_lift)},
                             {"alpha_pi", exact::to_string(out.params.alpha_pi)},
                             {"alpha_source", alpha_how},
                             {"threshold", src.threshold.str()}}});
  out.artifact = std::move(art);
  return out;
}

}  // namespace

LiftResult lift_max(const PricingInstance& sat_pricing, const SspReductionArtifact& art,
                    ssp::EnumerationCap cap) {
  check_source(sat_pricing, art);
  if (art.target.sense != Sense::Max) throw ArgumentError("lift_max: target must be max-sense");
  ssp::require_certified(sat_pricing.base, art, cap);
  return build(sat_pricing, art, LiftMode::MaxLift, cap);
}

LiftResult lift_min(const PricingInstance& sat_pricing, const SspReductionArtifact& art,
                    ssp::EnumerationCap cap) {
  check_source(sat_pricing, art);
  if (art.target.sense != Sense::Min) throw ArgumentError("lift_min: target must be min-sense");
  ssp::require_certified(sat_pricing.base, art, cap);
  bool light = false;
  for (ElementId e : art.embedding) {
    if (art.target.weights[e] < 1) light = true;
  }
  return build(sat_pricing, light ? weight_lift(art) : art, LiftMode::MinLift, cap);
}

LiftResult lift_feas(const PricingInstance& sat_pricing, const SspReductionArtifact& art,
                     ssp::EnumerationCap cap) {
  check_source(sat_pricing, art);
  const auto& t = art.target;
  bool zero = t.threshold == 0;
  for (const auto& w : t.weights) zero = zero && w == 0;
  if (!zero) throw ArgumentError("lift_feas: target weights and threshold must be zero");
  ssp::require_certified(sat_pricing.base, art, cap);
  return build(sat_pricing, art, LiftMode::FeasLift, cap);
}

ssp::LopInstance weight_lift(const ssp::LopInstance& inst, const Subset& f_image) {
  inst.validate();
  if (inst.sense != Sense::Min) throw ArgumentError("weight_lift: instance must be min-sense");
  const std::size_t n = f_image.size();
  if (n % 2 != 0) throw ArgumentError("weight_lift: |f(U)| = " + std::to_string(n) + " is odd");
  const Integer K(static_cast<unsigned long>(n + 1));
  ssp::LopInstance out = inst;
  for (auto& w : out.weights) w *= K;
  for (ElementId e : f_image) {
    if (e >= out.weights.size()) throw ArgumentError("weight_lift: image element out of range");
    out.weights[e] += 1;
  }
  out.threshold = K * inst.threshold + Integer(static_cast<unsigned long>(n / 2));
  return out;
}

SspReductionArtifact weight_lift(const SspReductionArtifact& art) {
  art.validate();
  const Subset img = art.image();
  SspReductionArtifact out = art;
  out.target = weight_lift(art.target, img);
  out.provenance.push_back({"weight-lift",
                            {{"K", std::to_string(img.size() + 1)},
                             {"t_prime", exact::to_string(out.target.threshold)}}});
  return out;
}

}  // namespace pricelab::compilers
