#include "corpora.hpp"

#include <algorithm>
#include <set>

#include "pricelab/problems/reductions.hpp"

namespace corpora {

using pricelab::Rng;
using pricelab::exact::Integer;
using pricelab::problems::Clause;
using pricelab::problems::CnfFormula;
using pricelab::ssp::ElementId;
using pricelab::ssp::Subset;

namespace {

std::vector<Clause> all_clauses(std::size_t vars, std::size_t max_size) {
  std::vector<Clause> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    Clause c;
    std::size_t x = code;
    for (std::size_t v = 1; v <= vars; ++v, x /= 3) {
      if (x % 3 == 1) c.push_back(static_cast<int>(v));
      if (x % 3 == 2) c.push_back(-static_cast<int>(v));
    }
    if (c.size() <= max_size) out.push_back(c);
  }
  return out;
}

void choose(const std::vector<Clause>& pool, std::size_t start, std::size_t left,
            std::vector<Clause>& cur, std::size_t vars, std::vector<CnfFormula>& out) {
  out.push_back({vars, cur});
  if (left == 0) return;
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    choose(pool, i + 1, left - 1, cur, vars, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CnfFormula> exhaustive_cnf(std::size_t max_vars, std::size_t max_clauses,
                                      std::size_t max_size) {
  std::vector<CnfFormula> out;
  for (std::size_t n = 1; n <= max_vars; ++n) {
    const auto pool = all_clauses(n, max_size);
    std::vector<Clause> cur;
    choose(pool, 0, max_clauses, cur, n, out);
  }
  return out;
}

CnfFormula random_cnf(Rng& rng, std::size_t max_vars, std::size_t max_clauses,
                      std::size_t max_size) {
  CnfFormula f;
  f.num_vars = 1 + rng.below(max_vars);
  const auto m = 1 + rng.below(max_clauses);
  for (std::uint64_t j = 0; j < m; ++j) {
    const auto size = 1 + rng.below(std::min(max_size, f.num_vars));
    std::vector<int> vars;
    for (std::size_t v = 1; v <= f.num_vars; ++v) vars.push_back(static_cast<int>(v));
    for (std::size_t i = 0; i < size; ++i) {  // partial Fisher-Yates
      std::swap(vars[i], vars[i + rng.below(vars.size() - i)]);
    }
    Clause c;
    for (std::size_t i = 0; i < size; ++i) c.push_back(rng.coin() ? vars[i] : -vars[i]);
    f.clauses.push_back(c);
  }
  return f;
}

pricelab::pricing::PricingInstance random_sat_pricing(Rng& rng, std::size_t max_vars,
                                                      int max_profit) {
  while (true) {
    auto sat = pricelab::problems::make_sat_instance(random_cnf(rng, max_vars, 3, 3));
    pricelab::pricing::PricingInstance inst;
    inst.base = sat;
    const auto u = sat.universe.size();
    Subset leader;
    for (ElementId e = 0; e < u; ++e) {
      inst.valuation.push_back(Integer(static_cast<long>(rng.between(0, max_profit))));
      if (rng.coin()) leader.push_back(e);
    }
    pricelab::pricing::set_partition(inst, leader);
    inst.ground = pricelab::pricing::FollowerGround::SolutionSets;
    inst.domain = pricelab::pricing::DomainRestriction::Free;
    inst.threshold = 0;
    const auto sols = pricelab::ssp::solution_set(sat);
    const bool bounded = std::any_of(sols.begin(), sols.end(), [&](const Subset& s) {
      return std::none_of(s.begin(), s.end(), [&](ElementId e) { return inst.is_leader(e); });
    });
    if (!sols.empty() && bounded) return inst;
  }
}

std::vector<pricelab::pricing::PricingInstance> value_preservation_corpus(std::size_t count,
                                                                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<pricelab::pricing::PricingInstance> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_sat_pricing(rng, 4, 5));
  return out;
}

pricelab::ssp::SetFamily brute_force_solutions(const pricelab::ssp::LopInstance& inst) {
  pricelab::ssp::SetFamily out;
  const auto u = inst.universe.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
    Subset s;
    for (std::size_t e = 0; e < u; ++e) {
      if (mask >> e & 1) s.push_back(static_cast<ElementId>(e));
    }
    if (inst.is_solution(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

pricelab::ssp::SspReductionArtifact zero_weight_vertex_cover(
    const pricelab::ssp::SspReductionArtifact& vc) {
  const auto* fam = dynamic_cast<const pricelab::problems::VertexCoverFamily*>(vc.target.family.get());
  if (fam == nullptr) throw std::invalid_argument("not a vertex-cover target");
  auto out = vc;
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (std::size_t s = 0; s + 1 < vc.embedding.size(); s += 2) {
    pairs.emplace_back(vc.embedding[s], vc.embedding[s + 1]);
  }
  out.target.family = std::make_shared<pricelab::problems::VertexCoverFamily>(
      fam->universe_size(), fam->edges(), pairs);
  for (auto e : vc.embedding) out.target.weights[e] = 0;
  out.target.threshold -= Integer(static_cast<unsigned long>(pairs.size()));
  out.certification = pricelab::ssp::Certification::None;
  out.provenance.push_back({"zero-weight-literals", {}});
  return out;
}

pricelab::exact::LinearProgram random_lp(Rng& rng) {
  using pricelab::exact::Relation;
  pricelab::exact::LinearProgram lp;
  lp.num_vars = 1 + rng.below(4);
  for (std::size_t i = 0; i < lp.num_vars; ++i) lp.objective.emplace_back(rng.between(-5, 5));
  const auto m = rng.below(7);
  for (std::uint64_t j = 0; j < m; ++j) {
    pricelab::exact::LinearConstraint c;
    for (std::size_t i = 0; i < lp.num_vars; ++i) c.coeffs.emplace_back(rng.between(-5, 5));
    const auto r = rng.below(5);
    c.relation = r < 3 ? Relation::LessEqual : (r == 3 ? Relation::GreaterEqual : Relation::Equal);
    c.rhs = rng.between(-5, 5);
    lp.constraints.push_back(std::move(c));
  }
  if (rng.coin()) {
    lp.bounds.resize(lp.num_vars);
    for (auto& b : lp.bounds) {
      const auto kind = rng.below(4);
      long long lo = rng.between(-5, 5), hi = rng.between(-5, 5);
      if (lo > hi) std::swap(lo, hi);
      if (kind == 1 || kind == 3) b.lower = pricelab::exact::Rational(lo);
      if (kind == 2 || kind == 3) b.upper = pricelab::exact::Rational(hi);
    }
  }
  return lp;
}

}  // namespace corpora
