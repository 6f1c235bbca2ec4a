#pragma once

#include "pricelab/pricing/pricing.hpp"
#include "pricelab/ssp/reduction.hpp"

namespace pricelab::compilers {

using exact::Integer;

enum class LiftMode { MaxLift, MinLift, FeasLift };

const char* to_string(LiftMode m);

struct LiftParameters {
  Integer M_lift;    // 4 n sum_e p(e), n = |U_SAT|
  Integer alpha_pi;  // optimal target weight (= w(Y) for every target solution Y)
  LiftMode mode = LiftMode::MaxLift;
};

struct LiftResult {
  pricing::PricingInstance pricing;
  LiftParameters params;
  /// The artifact the lift was built on (weight-lifted when lift_min needed it).
  ssp::SspReductionArtifact artifact;
  ssp::Provenance provenance;
};

/// 4 n sum_e p(e) over the source universe.
Integer lift_constant(const pricing::PricingInstance& sat_pricing);

/// P_feas over SAT -> Pricing-Π for a max-sense target: p'(e) = M w(e) + p(f^-1(e)).
LiftResult lift_max(const pricing::PricingInstance& sat_pricing,
                    const ssp::SspReductionArtifact& art, ssp::EnumerationCap cap = {});

/// P_feas over SAT -> Pricing-Π for a min-sense target: c'(e) = M w(e) - p(f^-1(e)).
/// Applies weight_lift first when some embedded element has weight 0.
LiftResult lift_min(const pricing::PricingInstance& sat_pricing,
                    const ssp::SspReductionArtifact& art, ssp::EnumerationCap cap = {});

/// P_feas over SAT -> Feas-Pricing-Π: p'(e) = p(f^-1(e)) on the image, 0 elsewhere.
LiftResult lift_feas(const pricing::PricingInstance& sat_pricing,
                     const ssp::SspReductionArtifact& art, ssp::EnumerationCap cap = {});

/// K = n + 1 with n = |f_image|: w'(e) = K w(e) + 1 on f_image, K w(e) elsewhere,
/// t' = K t + n/2. Min-sense input only; n must be even.
ssp::LopInstance weight_lift(const ssp::LopInstance& inst, const ssp::Subset& f_image);

/// weight_lift applied to an artifact's target, with a provenance step (K, t').
ssp::SspReductionArtifact weight_lift(const ssp::SspReductionArtifact& art);

}  // namespace pricelab::compilers
