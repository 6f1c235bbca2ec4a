#pragma once

#include <string>
#include <vector>

#include "pricelab/ssp/lop.hpp"

namespace pricelab::ssp {

enum class Certification {
  None,             // never checked
  Checked,          // passed check_ssp_reduction on this concrete instance
  ShippedCompiler,  // emitted by a built-in reduction compiler
};

const char* to_string(Certification c);

/// Output of an SSP reduction: target instance plus the injective embedding
/// f of the source universe into the target universe.
struct SspReductionArtifact {
  std::vector<UniverseElement> source_universe;
  LopInstance target;
  std::vector<ElementId> embedding;  // embedding[source id] = target id
  Provenance provenance;
  Certification certification = Certification::None;

  /// f injective, image within target universe, one entry per source element.
  void validate() const;

  /// f(U_source), sorted.
  Subset image() const;

  /// Maps a target subset back through f^-1 (elements outside the image are dropped).
  Subset project(const Subset& target_set) const;
};

struct SspCheckReport {
  bool yes_equivalence = false;     // (a) S(src) != {} <=> S(target) != {}
  bool family_equality = false;     // (b) {f(S)} == {S' ∩ f(U)}
  bool no_strictly_better = false;  // (c) no feasible target set beats t
  std::size_t source_solutions = 0;
  std::size_t target_solutions = 0;
  std::size_t projected_solutions = 0;

  bool passed() const { return yes_equivalence && family_equality && no_strictly_better; }
  /// "yes-equivalence", "family-equality", "no-strictly-better" or "" when passed.
  std::string first_failure() const;
};

SspCheckReport check_ssp_reduction(const LopInstance& src, const SspReductionArtifact& art,
                                   EnumerationCap cap = {});

/// Runs check_ssp_reduction; on success marks the artifact Checked, otherwise
/// throws CertificationError naming the first failing check.
void certify(const LopInstance& src, SspReductionArtifact& art, EnumerationCap cap = {});

/// Accepts Checked artifacts. Anything else is re-checked when both sides fit the cap
/// (throws CertificationError on failure); above the cap only ShippedCompiler output passes.
void require_certified(const LopInstance& src, const SspReductionArtifact& art,
                       EnumerationCap cap = {});

/// The reflexive reduction of an instance to itself.
SspReductionArtifact identity_reduction(const LopInstance& inst);

}  // namespace pricelab::ssp
