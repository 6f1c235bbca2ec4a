#include "pricelab/ssp/reduction.hpp"

#include <algorithm>

#include "pricelab/errors.hpp"

namespace pricelab::ssp {

const char* to_string(Certification c) {
  switch (c) {
    case Certification::None:
      return "none";
    case Certification::Checked:
      return "checked";
    case Certification::ShippedCompiler:
      return "shipped-compiler";
  }
  return "?";
}

void SspReductionArtifact::validate() const {
  target.validate();
  if (embedding.size() != source_universe.size()) {
    throw ArgumentError("embedding must map every source element");
  }
  std::vector<bool> hit(target.universe.size(), false);
  for (auto e : embedding) {
    if (e >= target.universe.size()) throw ArgumentError("embedding leaves the target universe");
    if (hit[e]) throw ArgumentError("embedding is not injective");
    hit[e] = true;
  }
}

Subset SspReductionArtifact::image() const {
  Subset img(embedding.begin(), embedding.end());
  std::sort(img.begin(), img.end());
  return img;
}

Subset SspReductionArtifact::project(const Subset& target_set) const {
  std::vector<long> inverse(target.universe.size(), -1);
  for (std::size_t s = 0; s < embedding.size(); ++s) inverse[embedding[s]] = static_cast<long>(s);
  Subset out;
  for (auto e : target_set) {
    if (e < inverse.size() && inverse[e] >= 0) out.push_back(static_cast<ElementId>(inverse[e]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string SspCheckReport::first_failure() const {
  if (!yes_equivalence) return "yes-equivalence";
  if (!family_equality) return "family-equality";
  if (!no_strictly_better) return "no-strictly-better";
  return "";
}

SspCheckReport check_ssp_reduction(const LopInstance& src, const SspReductionArtifact& art,
                                   EnumerationCap cap) {
  art.validate();
  if (art.source_universe.size() != src.universe.size()) {
    throw ArgumentError("artifact source universe does not match the source instance");
  }
  require_within_cap(src, cap);
  require_within_cap(art.target, cap);

  const SetFamily source = solution_set(src, cap);

  std::vector<long> inverse(art.target.universe.size(), -1);
  for (std::size_t s = 0; s < art.embedding.size(); ++s) {
    inverse[art.embedding[s]] = static_cast<long>(s);
  }

  SspCheckReport report;
  report.no_strictly_better = true;
  SetFamily projected;
  art.target.family->for_each([&](const Subset& f) {
    if (art.target.beats_threshold(f)) report.no_strictly_better = false;
    if (!art.target.is_solution(f)) return;
    ++report.target_solutions;
    Subset p;
    for (auto e : f) {
      if (inverse[e] >= 0) p.push_back(static_cast<ElementId>(inverse[e]));
    }
    std::sort(p.begin(), p.end());
    projected.push_back(std::move(p));
  });
  canonicalize(projected);

  report.source_solutions = source.size();
  report.projected_solutions = projected.size();
  report.yes_equivalence = source.empty() == (report.target_solutions == 0);
  report.family_equality = source == projected;
  return report;
}

void certify(const LopInstance& src, SspReductionArtifact& art, EnumerationCap cap) {
  const auto report = check_ssp_reduction(src, art, cap);
  if (!report.passed()) {
    const auto check = report.first_failure();
    throw CertificationError("SSP reduction failed check '" + check + "'", check);
  }
  art.certification = Certification::Checked;
}

void require_certified(const LopInstance& src, const SspReductionArtifact& art,
                       EnumerationCap cap) {
  if (art.certification == Certification::Checked) return;
  const bool enumerable = src.family->enumeration_dimension() <= cap.max_dimension &&
                          art.target.family->enumeration_dimension() <= cap.max_dimension;
  if (!enumerable) {
    if (art.certification == Certification::ShippedCompiler) return;
    throw CertificationError("artifact is uncertified and too large to check", "uncertified");
  }
  auto copy = art;
  certify(src, copy, cap);
}

SspReductionArtifact identity_reduction(const LopInstance& inst) {
  SspReductionArtifact art;
  art.source_universe = inst.universe;
  art.target = inst;
  art.embedding.resize(inst.universe.size());
  for (std::size_t i = 0; i < inst.universe.size(); ++i) art.embedding[i] = static_cast<ElementId>(i);
  art.provenance.push_back({"identity", {}});
  art.certification = Certification::ShippedCompiler;
  return art;
}

}  // namespace pricelab::ssp
