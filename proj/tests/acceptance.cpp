// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "corpora.hpp"
#include "oracles.hpp"
#include "pricelab/compilers/lifts.hpp"
#include "pricelab/compilers/theorem2.hpp"
#include "pricelab/io/sweep.hpp"
#include "pricelab/problems/reductions.hpp"

using namespace pricelab;
using exact::Rational;
using pricing::DomainRestriction;
using pricing::PricingInstance;
using pricing::PricingStatus;
using ssp::SetFamily;
using ssp::Subset;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

struct Lifted {
  PricingInstance source;
  Rational value;
  compilers::LiftResult min_vc;
  compilers::LiftResult max_ss;
  compilers::LiftResult feas_id;
};

std::vector<Lifted>& lifted_corpus() {
  static std::vector<Lifted> corpus = [] {
    std::vector<Lifted> out;
    for (auto& src : corpora::value_preservation_corpus(120, 20261014)) {
      Lifted l;
      l.source = src;
      l.value = pricing::solve_pricing(src).leader_value;
      l.min_vc = compilers::lift_min(src, problems::sat_to_vertex_cover(src.base));
      l.max_ss = compilers::lift_max(src, problems::sat_to_subset_sum(src.base));
      l.feas_id = compilers::lift_feas(src, ssp::identity_reduction(src.base));
      out.push_back(std::move(l));
    }
    return out;
  }();
  return corpus;
}

std::vector<compilers::QdnfInstance> theorem2_corpus() {
  auto corpus = io::exhaustive_qdnf_corpus(1, 2);
  auto extra = io::random_qdnf_corpus(2, 3, 200, 20261014);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  return corpus;
}

struct DomainOutcome {
  std::vector<bool> free_decisions;
  std::vector<std::vector<bool>> restricted;  // nonneg, capped, box
};

DomainOutcome& theorem2_outcomes(Verdict* c1) {
  static DomainOutcome out;
  static bool done = false;
  if (done) return out;
  done = true;
  const auto corpus = theorem2_corpus();
  std::size_t yes = 0;
  for (const auto& q : corpus) {
    const bool want = compilers::qdnf_oracle(q);
    const auto c = compilers::compile_theorem2(q);
    const auto ground = pricing::follower_ground_set(c.pricing);
    const auto sol = pricing::solve_pricing_over(c.pricing, ground);
    const bool got = pricing::decide(sol, Rational(c.k_star));
    out.free_decisions.push_back(got);
    yes += want ? 1 : 0;
    if (c1 && got != want) c1->fail("q with " + std::to_string(q.terms.size()) + " terms, n=" + std::to_string(q.n));
    if (c1 && !c.anomalies.empty()) c1->fail("compiler anomaly: " + c.anomalies.front());
    std::vector<bool> r;
    for (auto d : {DomainRestriction::NonNeg, DomainRestriction::CappedByValuation,
                   DomainRestriction::Box}) {
      auto inst = c.pricing;
      inst.domain = d;
      r.push_back(pricing::decide(pricing::solve_pricing_over(inst, ground), Rational(c.k_star)));
    }
    out.restricted.push_back(r);
  }
  if (c1) {
    c1->detail << corpus.size() << " instances (46 exhaustive n=1, 200 random n=2), " << yes
               << " true by oracle";
  }
  return out;
}

Verdict criterion1() {
  Verdict v;
  theorem2_outcomes(&v);
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto corpus = corpora::exhaustive_cnf(3, 3, 3);
  std::size_t sat = 0;
  for (const auto& f : corpus) {
    const auto src = problems::make_sat_instance(f);
    sat += ssp::solution_set(src).empty() ? 0 : 1;
    for (const auto& art : {problems::sat_to_vertex_cover(src), problems::sat_to_subset_sum(src)}) {
      const auto r = ssp::check_ssp_reduction(src, art);
      if (!r.passed()) v.fail(art.provenance.back().compiler + " check " + r.first_failure());
    }
  }
  v.detail << corpus.size() << " formulas x 2 reductions, " << sat << " satisfiable";
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto& corpus = lifted_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& l = corpus[i];
    const auto a = pricing::solve_pricing(l.min_vc.pricing);
    const auto b = pricing::solve_pricing(l.max_ss.pricing);
    const auto c = pricing::solve_pricing(l.feas_id.pricing);
    for (const auto* s : {&a, &b, &c}) {
      if (s->status != PricingStatus::Optimal || s->leader_value != l.value) {
        v.fail("instance " + std::to_string(i) + ": " + s->leader_value.str() + " vs " + l.value.str());
      }
    }
  }
  v.detail << corpus.size() << " sources x {lift-min/sat2vc, lift-max/sat2ss, lift-feas/identity}";
  return v;
}

std::vector<pricing::PriceVector> sample_prices(const PricingInstance& inst,
                                                const exact::Integer& M, Rng& rng,
                                                std::size_t count) {
  std::vector<pricing::PriceVector> out;
  const long scale = std::max<long>(4, 2 * M.get_si());
  for (std::size_t k = 0; k < count; ++k) {
    pricing::PriceVector d;
    for (auto e : inst.leader_set) {
      const long den = static_cast<long>(rng.between(1, 6));
      const long lo = k % 2 == 0 ? -scale : 0;
      const long hi = k % 2 == 0 ? scale : 12;
      d[e] = Rational(rng.between(lo * den, hi * den), den);
    }
    out.push_back(std::move(d));
  }
  return out;
}

Verdict criterion4_and_5(bool follower_bounds) {
  Verdict v;
  Rng rng(follower_bounds ? 404 : 505);
  std::size_t samples = 0, reasonable = 0;
  for (const auto& l : lifted_corpus()) {
    for (const auto* lift : {&l.max_ss, &l.min_vc}) {
      const auto& inst = lift->pricing;
      const auto ground = pricing::follower_ground_set(inst);
      const auto solutions = ssp::solution_set(inst.base);
      const Rational bound(lift->params.alpha_pi * lift->params.M_lift);
      for (const auto& d : sample_prices(inst, lift->params.M_lift, rng, 50)) {
        ++samples;
        const auto r = pricing::best_response(inst, ground, d);
        if (!r) {
          v.fail("empty ground");
          continue;
        }
        if (follower_bounds) {
          const bool ok = inst.follower_minimizes() ? r->follower_value <= bound
                                                    : r->follower_value >= bound;
          if (!ok) v.fail("follower " + r->follower_value.str() + " vs " + bound.str());
        } else if (r->leader_value.sign() >= 0) {
          ++reasonable;
          const auto s = pricing::best_response(inst, solutions, d);
          if (!s || s->leader_value != r->leader_value) v.fail("collapse mismatch");
        }
      }
    }
  }
  if (follower_bounds) {
    v.detail << samples << " price vectors over 240 lifted instances";
  } else {
    v.detail << reasonable << " of " << samples << " sampled price vectors reasonable";
    if (reasonable == 0) v.fail("no reasonable samples");
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto& t2 = theorem2_outcomes(nullptr);
  for (std::size_t i = 0; i < t2.free_decisions.size(); ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (t2.restricted[i][k] != t2.free_decisions[i]) v.fail("thm2 instance " + std::to_string(i));
    }
  }
  std::size_t min_checks = 0;
  for (const auto& l : lifted_corpus()) {
    auto inst = l.min_vc.pricing;
    const auto ground = pricing::follower_ground_set(inst);
    for (const Rational& t : {l.value, l.value + 1}) {
      inst.domain = DomainRestriction::Free;
      const bool free = pricing::decide(pricing::solve_pricing_over(inst, ground), t);
      inst.domain = DomainRestriction::LowerCap;
      const bool capped = pricing::decide(pricing::solve_pricing_over(inst, ground), t);
      if (free != capped) v.fail("min-lifted lowercap");
      ++min_checks;
    }
  }
  v.detail << t2.free_decisions.size() << " compiled instances x 4 domains, " << min_checks
           << " min-lifted free/lowercap decisions";
  return v;
}

bool verify_ray(const exact::LinearProgram& lp, const oracle::Vec& r) {
  for (const auto& row : oracle::rows_of(lp)) {
    Rational s;
    for (std::size_t i = 0; i < r.size(); ++i) s += row.a[i] * r[i];
    if (s > 0) return false;
  }
  Rational c;
  for (std::size_t i = 0; i < r.size(); ++i) c += lp.objective[i] * r[i];
  return c > 0;
}

bool verify_farkas(const exact::LinearProgram& lp, const oracle::Vec& y) {
  const auto rows = oracle::rows_of(lp);
  if (y.size() != rows.size()) return false;
  Rational yb;
  oracle::Vec ya(lp.num_vars);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (y[k].sign() < 0) return false;
    yb += y[k] * rows[k].b;
    for (std::size_t i = 0; i < lp.num_vars; ++i) ya[i] += y[k] * rows[k].a[i];
  }
  for (const auto& x : ya) {
    if (!x.is_zero()) return false;
  }
  return yb < 0;
}

Verdict criterion7() {
  Verdict v;
  Rng rng(7777);
  std::size_t counts[3] = {0, 0, 0};
  for (int k = 0; k < 500; ++k) {
    const auto lp = corpora::random_lp(rng);
    const auto got = exact::solve_lp(lp);
    const auto want = oracle::brute_force_lp(lp);
    ++counts[static_cast<int>(want.status)];
    const std::string id = "lp " + std::to_string(k);
    if (got.status != want.status) {
      v.fail(id + " status");
      continue;
    }
    switch (got.status) {
      case exact::LpStatus::Optimal:
        if (got.optimal_value != want.value) v.fail(id + " value");
        if (!exact::satisfies(lp, got.witness)) v.fail(id + " witness");
        if (exact::evaluate_objective(lp, got.witness) != got.optimal_value) v.fail(id + " objective");
        break;
      case exact::LpStatus::Unbounded:
        if (!verify_ray(lp, want.ray) || !exact::satisfies(lp, want.point)) v.fail(id + " ray");
        break;
      case exact::LpStatus::Infeasible:
        if (!verify_farkas(lp, want.farkas)) v.fail(id + " farkas");
        break;
    }
  }
  v.detail << "500 LPs: " << counts[0] << " optimal, " << counts[1] << " infeasible, " << counts[2]
           << " unbounded";
  if (counts[0] == 0 || counts[1] == 0 || counts[2] == 0) v.fail("a status class is missing");
  return v;
}

SetFamily where(const ssp::LopInstance& inst, const std::function<bool(const exact::Integer&)>& keep) {
  SetFamily out;
  inst.family->for_each([&](const Subset& f) {
    if (keep(inst.weight(f))) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Verdict criterion8() {
  Verdict v;
  std::size_t compared = 0, nonempty = 0;
  for (const auto& l : lifted_corpus()) {
    const auto plain = problems::sat_to_vertex_cover(l.source.base);
    const auto zero = corpora::zero_weight_vertex_cover(plain);
    if (!ssp::check_ssp_reduction(l.source.base, zero).passed()) v.fail("zero-weight target not certified");
    for (const auto* art : {&zero, &plain}) {
      const auto lifted = compilers::weight_lift(*art);
      const auto& t = art->target.threshold;
      const auto& t2 = lifted.target.threshold;
      const auto before = where(art->target, [&](const exact::Integer& w) { return w == t; });
      const auto after = where(lifted.target, [&](const exact::Integer& w) { return w <= t2; });
      if (before != after) v.fail("solution family changed");
      nonempty += before.empty() ? 0 : 1;
      ++compared;
    }
  }
  v.detail << compared << " targets (zero-weight and unit-weight literal vertices), " << nonempty
           << " with solutions";
  return v;
}

Verdict criterion9() {
  Verdict v;
  PricingInstance inst;
  inst.base.universe = ssp::make_universe({"e1", "e2"});
  inst.base.family = std::make_shared<ssp::ExplicitFamily>(2, SetFamily{{0, 1}, {1}});
  inst.base.weights = {0, 0};
  inst.base.threshold = 0;
  inst.valuation = {4, 1};
  pricing::set_partition(inst, {0});
  const auto sol = pricing::solve_pricing(inst);
  if (sol.status != PricingStatus::Optimal || sol.leader_value != 4) v.fail("value " + sol.leader_value.str());
  if (sol.response != Subset{0, 1}) v.fail("follower did not resolve toward the leader");
  v.detail << "leader value " << sol.leader_value.str() << ", response "
           << ssp::format_subset(inst.base.universe, sol.response);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"qdnf compiler equivalence sweep", criterion1},
      {"SSP certification of both reductions", criterion2},
      {"meta-reduction value preservation", criterion3},
      {"follower bounds under random prices", [] { return criterion4_and_5(true); }},
      {"ground-set collapse for reasonable prices", [] { return criterion4_and_5(false); }},
      {"decision robustness across price domains", criterion6},
      {"LP oracle equivalence", criterion7},
      {"weight transform keeps solution families", criterion8},
      {"optimistic tie-breaking", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = criteria[i].second();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu [%s]: %s  (%s; %.1fs)\n", i + 1, criteria[i].first,
                v.pass ? "PASS" : "FAIL", v.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
