#pragma once

#include "pricelab/problems/families.hpp"
#include "pricelab/ssp/reduction.hpp"

namespace pricelab::problems {

/// Garey-Johnson style SAT -> Vertex Cover. One edge per variable, a
/// |C|-clique per clause with each gadget vertex tied to its literal, and
/// t = N + sum(|C| - 1). A singleton clause {l} gets a 2-clique whose two
/// vertices both attach to l. Literal vertices keep the literal ids, so f is
/// the identity on 0..2N-1. Throws DegenerateInstanceError on an empty clause.
ssp::SspReductionArtifact sat_to_vertex_cover(const LopInstance& sat);

/// Digit base used by sat_to_subset_sum for this formula.
Integer subset_sum_base(const CnfFormula& formula);

/// Digit construction SAT -> Subset Sum: one item per literal plus slack
/// items per clause whose subset sums cover exactly {0, ..., |C|-1}; target
/// has digit 1 per variable and |C| per clause. Literal items keep literal ids.
ssp::SspReductionArtifact sat_to_subset_sum(const LopInstance& sat);

}  // namespace pricelab::problems
