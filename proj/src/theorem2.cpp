#include "pricelab/compilers/theorem2.hpp"

#include <algorithm>
#include <string>

#include "pricelab/errors.hpp"
#include "pricelab/problems/families.hpp"

namespace pricelab::compilers {

using problems::Clause;
using problems::CnfFormula;
using problems::Literal;
using problems::literal_id;
using ssp::ElementId;
using ssp::Subset;

namespace {

constexpr Literal kH1 = 1;
constexpr Literal kH2 = 2;
constexpr Literal kZ1 = 3;
constexpr Literal kZ2 = 4;

struct Block {
  Literal vt, vf, vo, a, b;
};

Block block(std::size_t i) {  // i is 1-based
  const auto base = static_cast<Literal>(5 + 5 * (i - 1));
  return {base, base + 1, base + 2, base + 3, base + 4};
}

void once_guarded(std::vector<Clause>& out, Literal y1, Literal y2, Literal y3) {
  out.push_back({-kH2, y1, y2, y3});
  out.push_back({-kH2, -y1, -y2});
  out.push_back({-kH2, -y1, -y3});
  out.push_back({-kH2, -y2, -y3});
}

}  // namespace

std::vector<std::string> theorem2_variable_names(std::size_t n) {
  std::vector<std::string> names{"h1", "h2", "z1", "z2"};
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = std::to_string(i);
    for (const char* role : {"vt", "vf", "vo", "a", "b"}) names.push_back(role + s);
  }
  return names;
}

CompiledSatPricing compile_theorem2(const QdnfInstance& q) {
  q.validate();
  if (q.n == 0) throw ArgumentError("compile_theorem2: n must be at least 1");
  const std::size_t n = q.n;
  const std::size_t num_vars = 4 + 5 * n;

  auto map_lit = [&](int lit) -> Literal {
    const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
    const Block blk = block(v <= n ? v : v - n);
    const Literal var = v <= n ? blk.a : blk.b;
    return lit < 0 ? -var : var;
  };

  CnfFormula formula;
  formula.num_vars = num_vars;
  auto& cl = formula.clauses;
  cl.push_back({kH1, kH2});
  for (Literal x = 2; x <= static_cast<Literal>(num_vars); ++x) cl.push_back({-kH1, -x});
  cl.push_back({-kH2, kZ1, kZ2});
  cl.push_back({-kH2, -kZ1, -kZ2});
  for (const auto& term : q.terms) {
    Clause c{-kH2, -kZ2};
    for (int lit : term) c.push_back(-map_lit(lit));
    cl.push_back(std::move(c));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const Block blk = block(i);
    once_guarded(cl, blk.vt, blk.vf, blk.vo);
    cl.push_back({-kH2, -blk.vt, blk.a});
    cl.push_back({-kH2, -blk.vf, -blk.a});
    cl.push_back({-kH2, -blk.vo, kZ1});
  }

  const auto names = theorem2_variable_names(n);
  CompiledSatPricing out;
  out.M = Integer(static_cast<unsigned long>(2 * n));
  out.k_star = Integer(static_cast<unsigned long>(n + 1)) * out.M - Integer(static_cast<unsigned long>(n));

  auto& inst = out.pricing;
  inst.base = problems::make_sat_instance(formula, names);
  inst.valuation.assign(2 * num_vars, Integer(0));
  auto profit = [&](Literal v, const Integer& p) { inst.valuation[literal_id(v)] = p; };
  profit(kH1, Integer(static_cast<unsigned long>(n)));
  profit(kZ1, out.M);
  profit(kZ2, Integer(1));
  Subset leader{literal_id(kZ1)};
  for (std::size_t i = 1; i <= n; ++i) {
    const Block blk = block(i);
    profit(blk.vt, out.M);
    profit(blk.vf, out.M);
    profit(blk.vo, Integer(1));
    leader.push_back(literal_id(blk.vt));
    leader.push_back(literal_id(blk.vf));
  }
  std::sort(leader.begin(), leader.end());
  set_partition(inst, leader);
  inst.domain = pricing::DomainRestriction::Free;
  inst.ground = pricing::FollowerGround::SolutionSets;
  inst.threshold = exact::Rational(out.k_star);
  inst.validate();

  for (std::size_t v = 1; v <= num_vars; ++v) {
    out.atlas.emplace_back(names[v - 1], literal_id(static_cast<Literal>(v)));
  }

  // The h1 branch: h1 true, everything else false.
  Subset h1_branch{literal_id(kH1)};
  for (Literal x = 2; x <= static_cast<Literal>(num_vars); ++x) h1_branch.push_back(literal_id(-x));
  std::sort(h1_branch.begin(), h1_branch.end());
  const bool h1_feasible = inst.base.feasible(h1_branch);
  bool all_follower = h1_feasible;
  Integer h1_value(0);
  for (ElementId e : h1_branch) {
    h1_value += inst.valuation[e];
    if (inst.is_leader(e)) all_follower = false;
  }
  if (!h1_feasible) out.anomalies.push_back("h1 branch assignment is not satisfying");
  if (h1_value != Integer(static_cast<unsigned long>(n))) {
    out.anomalies.push_back("h1 branch follower value " + exact::to_string(h1_value) + " != n");
  }
  if (!all_follower) out.anomalies.push_back("no all-follower solution found");

  ssp::ProvenanceStep step{"thm2",
                           {{"n", std::to_string(n)},
                            {"M", exact::to_string(out.M)},
                            {"k_star", exact::to_string(out.k_star)},
                            {"variables", std::to_string(num_vars)},
                            {"clauses", std::to_string(formula.clauses.size())},
                            {"h1_branch_value", exact::to_string(h1_value)},
                            {"all_follower_solution", all_follower ? "true" : "false"}}};
  out.provenance.push_back(std::move(step));
  return out;
}

}  // namespace pricelab::compilers
