#include <doctest.h>

#include "corpora.hpp"
#include "pricelab/errors.hpp"
#include "pricelab/problems/families.hpp"
#include "pricelab/problems/reductions.hpp"

using namespace pricelab;
using problems::CnfFormula;
using ssp::SetFamily;
using ssp::Subset;

namespace {

SetFamily projected_solutions(const ssp::SspReductionArtifact& art) {
  SetFamily out;
  for (const auto& s : corpora::brute_force_solutions(art.target)) out.push_back(art.project(s));
  ssp::canonicalize(out);
  return out;
}

std::string param(const ssp::SspReductionArtifact& art, const std::string& key) {
  for (const auto& [k, v] : art.provenance.back().parameters) {
    if (k == key) return v;
  }
  return "";
}

}  // namespace

TEST_CASE("literal layout") {
  CHECK(problems::literal_id(1) == 0);
  CHECK(problems::literal_id(-1) == 1);
  CHECK(problems::literal_id(3) == 4);
  CHECK(problems::literal_at(5) == -3);
  CHECK(problems::negate(-2) == 2);
  CHECK(problems::literal_labels(2) == std::vector<std::string>{"x1", "~x1", "x2", "~x2"});
  CHECK(problems::literal_labels(1, {"h"}) == std::vector<std::string>{"h", "~h"});
}

TEST_CASE("formula validation") {
  CHECK_THROWS_AS((CnfFormula{1, {{1, -1}}}.validate()), ArgumentError);
  CHECK_THROWS_AS((CnfFormula{1, {{2}}}.validate()), ArgumentError);
  CHECK_THROWS_AS((CnfFormula{1, {{0}}}.validate()), ArgumentError);
  CnfFormula f{2, {{2, 1, 2}}};
  f.normalize();
  CHECK(f.clauses[0] == problems::Clause{1, 2});
}

TEST_CASE("sat_to_vertex_cover threshold for three-literal clauses") {
  const auto sat = problems::make_sat_instance({3, {{1, 2, 3}, {-1, -2, 3}}});
  const auto art = problems::sat_to_vertex_cover(sat);
  CHECK(art.target.threshold == 7);
  CHECK(art.target.universe.size() == 12);
  CHECK(ssp::check_ssp_reduction(sat, art).passed());
}

TEST_CASE("sat_to_vertex_cover with a singleton clause") {
  const auto sat = problems::make_sat_instance({1, {{1}}});
  const auto art = problems::sat_to_vertex_cover(sat);
  CHECK(art.target.universe.size() == 4);
  CHECK(art.target.threshold == 2);
  const auto sols = corpora::brute_force_solutions(art.target);
  CHECK(sols.size() == 2);
  for (const auto& f : sols) CHECK(art.project(f) == Subset{0});
  CHECK(param(art, "padded_singletons") == "1");
}

TEST_CASE("sat_to_vertex_cover of an unsatisfiable formula has no small cover") {
  const auto sat = problems::make_sat_instance({1, {{1}, {-1}}});
  const auto art = problems::sat_to_vertex_cover(sat);
  CHECK(art.target.universe.size() == 6);
  CHECK(corpora::brute_force_solutions(art.target).empty());
  CHECK(ssp::check_ssp_reduction(sat, art).passed());
}

TEST_CASE("sat_to_vertex_cover rejects empty clauses") {
  const auto sat = problems::make_sat_instance({1, {{}}});
  CHECK_THROWS_AS(problems::sat_to_vertex_cover(sat), DegenerateInstanceError);
  CHECK_THROWS_AS(problems::sat_to_vertex_cover(problems::make_vertex_cover_instance(2, {{0, 1}}, 1)),
                  ArgumentError);
}

TEST_CASE("sat_to_subset_sum examples") {
  auto sat = problems::make_sat_instance({1, {{1}}});
  auto art = problems::sat_to_subset_sum(sat);
  CHECK(projected_solutions(art) == SetFamily{{0}});

  sat = problems::make_sat_instance({1, {}});
  art = problems::sat_to_subset_sum(sat);
  CHECK(projected_solutions(art) == SetFamily{{0}, {1}});

  sat = problems::make_sat_instance({2, {{1, 2}}});
  art = problems::sat_to_subset_sum(sat);
  CHECK(projected_solutions(art) == SetFamily{{0, 2}, {0, 3}, {1, 2}});
  CHECK(ssp::check_ssp_reduction(sat, art).passed());
  CHECK(art.target.sense == ssp::Sense::Max);

  CHECK_THROWS_AS(problems::sat_to_subset_sum(problems::make_sat_instance({0, {}})), ArgumentError);
}

TEST_CASE("sat_to_subset_sum with an empty clause has no solutions") {
  const auto sat = problems::make_sat_instance({1, {{}, {1}}});
  const auto art = problems::sat_to_subset_sum(sat);
  CHECK(corpora::brute_force_solutions(art.target).empty());
  CHECK(ssp::check_ssp_reduction(sat, art).passed());
}

TEST_CASE("digit sums never carry") {
  for (const auto& f : corpora::exhaustive_cnf(2, 3, 2)) {
    const auto art = problems::sat_to_subset_sum(problems::make_sat_instance(f));
    const auto* fam = dynamic_cast<const problems::SubsetSumFamily*>(art.target.family.get());
    REQUIRE(fam != nullptr);
    const exact::Integer base = problems::subset_sum_base(f);
    std::vector<exact::Integer> digit_total(f.num_vars + f.clauses.size());
    for (auto item : fam->items()) {
      for (auto& d : digit_total) {
        d += item % base;
        item /= base;
      }
      REQUIRE(item == 0);
    }
    for (const auto& d : digit_total) REQUIRE(d < base);
  }
  // clause size 7 would carry in base 10
  problems::CnfFormula wide{7, {{1, 2, 3, 4, 5, 6, 7}}};
  CHECK(problems::subset_sum_base(wide) == 14);
}

TEST_CASE("both reductions certify on all small formulas") {
  for (const auto& f : corpora::exhaustive_cnf(2, 3, 2)) {
    const auto sat = problems::make_sat_instance(f);
    const auto vc = ssp::check_ssp_reduction(sat, problems::sat_to_vertex_cover(sat));
    const auto ss = ssp::check_ssp_reduction(sat, problems::sat_to_subset_sum(sat));
    REQUIRE(vc.passed());
    REQUIRE(ss.passed());
    REQUIRE(projected_solutions(problems::sat_to_vertex_cover(sat)) == ssp::solution_set(sat));
  }
}

TEST_CASE("vertex cover check (c) holds on unsatisfiable sources") {
  Rng rng(3);
  int unsat = 0;
  for (int k = 0; k < 200 && unsat < 20; ++k) {
    const auto sat = problems::make_sat_instance(corpora::random_cnf(rng, 2, 4, 2));
    if (!ssp::solution_set(sat).empty()) continue;
    ++unsat;
    const auto art = problems::sat_to_vertex_cover(sat);
    const auto r = ssp::check_ssp_reduction(sat, art);
    CHECK(r.no_strictly_better);
    CHECK(r.target_solutions == 0);
  }
  CHECK(unsat > 0);
}

TEST_CASE("exclusive pairs restrict vertex covers") {
  problems::VertexCoverFamily fam(3, {{0, 2}, {1, 2}}, {{0, 1}});
  CHECK(fam.contains(Subset{0, 2}));
  CHECK_FALSE(fam.contains(Subset{0, 1}));
  CHECK_FALSE(fam.contains(Subset{2}));
  SetFamily all;
  fam.for_each([&](const Subset& s) { all.push_back(s); });
  std::sort(all.begin(), all.end());
  CHECK(all == SetFamily{{0, 2}, {1, 2}});
}
