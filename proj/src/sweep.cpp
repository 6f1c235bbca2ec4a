#include "pricelab/io/sweep.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "pricelab/compilers/theorem2.hpp"
#include "pricelab/errors.hpp"
#include "pricelab/pricing/pricing.hpp"
#include "pricelab/rng.hpp"

namespace pricelab::io {

using compilers::QdnfInstance;

namespace {

std::vector<std::vector<int>> all_terms(std::size_t n) {
  const std::size_t vars = 2 * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) total *= 3;
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> term;
    std::size_t c = code;
    for (std::size_t v = 1; v <= vars; ++v, c /= 3) {
      if (c % 3 == 1) term.push_back(static_cast<int>(v));
      if (c % 3 == 2) term.push_back(-static_cast<int>(v));
    }
    out.push_back(std::move(term));
  }
  return out;
}

void choose(const std::vector<std::vector<int>>& terms, std::size_t start, std::size_t left,
            std::vector<std::vector<int>>& current, std::size_t n,
            std::vector<QdnfInstance>& out) {
  out.push_back({n, current});
  if (left == 0) return;
  for (std::size_t i = start; i < terms.size(); ++i) {
    current.push_back(terms[i]);
    choose(terms, i + 1, left - 1, current, n, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<QdnfInstance> exhaustive_qdnf_corpus(std::size_t n, std::size_t max_terms) {
  const auto terms = all_terms(n);
  std::vector<QdnfInstance> out;
  std::vector<std::vector<int>> current;
  choose(terms, 0, max_terms, current, n, out);
  return out;
}

std::vector<QdnfInstance> random_qdnf_corpus(std::size_t n, std::size_t max_terms,
                                             std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<QdnfInstance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    QdnfInstance q{n, {}};
    const auto m = rng.below(max_terms + 1);
    for (std::uint64_t t = 0; t < m; ++t) {
      std::vector<int> term;
      for (std::size_t v = 1; v <= 2 * n; ++v) {
        if (!rng.coin()) continue;
        term.push_back(rng.coin() ? static_cast<int>(v) : -static_cast<int>(v));
      }
      q.terms.push_back(std::move(term));
    }
    out.push_back(std::move(q));
  }
  return out;
}

bool SweepRecord::domains_agree() const {
  for (const auto& [name, d] : domain_decisions) {
    if (!pricing || d != *pricing) return false;
  }
  return true;
}

SweepRecord verify_instance(std::size_t id, const QdnfInstance& q, const SweepSpec& spec) {
  SweepRecord rec;
  rec.id = id;
  rec.instance = q;
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.oracle = compilers::qdnf_oracle(q);
    auto compiled = compilers::compile_theorem2(q);
    rec.k_star = exact::to_string(compiled.k_star);
    rec.anomalies = compiled.anomalies;
    auto& inst = compiled.pricing;
    if (spec.inject_fault && *spec.inject_fault == id) {
      inst.threshold = *rec.oracle ? exact::Rational(compiled.k_star + 1) : exact::Rational(0);
      rec.fault_injected = true;
    }
    const auto ground = pricing::follower_ground_set(inst, spec.cap);
    const auto sol = pricing::solve_pricing_over(inst, ground);
    rec.status = pricing::to_string(sol.status);
    if (sol.status == pricing::PricingStatus::Optimal) rec.leader_value = sol.leader_value.str();
    rec.pricing = pricing::decide(sol, inst.threshold);
    if (spec.check_domains) {
      using pricing::DomainRestriction;
      for (auto d : {DomainRestriction::NonNeg, DomainRestriction::CappedByValuation,
                     DomainRestriction::Box}) {
        auto restricted = inst;
        restricted.domain = d;
        const auto s = pricing::solve_pricing_over(restricted, ground);
        rec.domain_decisions.emplace_back(pricing::to_string(d),
                                          pricing::decide(s, restricted.threshold));
      }
    }
  } catch (const ResourceError& e) {
    rec.error = std::string("resource: ") + e.what();
  } catch (const NoFollowerSolutionError& e) {
    rec.error = std::string("no-follower-solution: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

VerificationReport run_sweep(const SweepSpec& spec) {
  std::vector<QdnfInstance> corpus;
  if (spec.exhaustive) corpus = exhaustive_qdnf_corpus(spec.n, spec.max_terms);
  if (spec.count > 0) {
    auto extra = random_qdnf_corpus(spec.n, spec.max_terms, spec.count, spec.seed);
    corpus.insert(corpus.end(), extra.begin(), extra.end());
  }
  return run_sweep(corpus, spec);
}

VerificationReport run_sweep(const std::vector<QdnfInstance>& corpus, const SweepSpec& spec) {
  VerificationReport report;
  report.spec = spec;
  report.records.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      report.records[i] = verify_instance(i, corpus[i], spec);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(spec.jobs, corpus.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : report.records) {
    ++report.total;
    if (r.matched()) ++report.matches;
    if (r.mismatched()) ++report.mismatches;
    if (!r.error.empty()) ++report.errors;
    if (!r.domains_agree()) ++report.domain_disagreements;
    if (!r.anomalies.empty()) ++report.anomalies;
  }
  return report;
}

namespace {

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const VerificationReport& report) {
  const auto& s = report.spec;
  Json spec{{"n", s.n},
            {"max_terms", s.max_terms},
            {"exhaustive", s.exhaustive},
            {"count", s.count},
            {"seed", s.seed},
            {"cap", s.cap.max_dimension},
            {"check_domains", s.check_domains},
            {"inject_fault", s.inject_fault ? Json(*s.inject_fault) : Json(nullptr)}};
  Json records = Json::array();
  Json failures = Json::array();
  for (const auto& r : report.records) {
    Json rec{{"id", r.id},
             {"oracle", optional_bool(r.oracle)},
             {"pricing", optional_bool(r.pricing)},
             {"status", r.status},
             {"leader_value", r.leader_value},
             {"k_star", r.k_star},
             {"match", r.matched()}};
    if (!r.domain_decisions.empty()) {
      Json doms = Json::object();
      for (const auto& [name, d] : r.domain_decisions) doms[name] = d;
      rec["domains"] = doms;
    }
    if (!r.anomalies.empty()) rec["anomalies"] = r.anomalies;
    if (!r.error.empty()) rec["error"] = r.error;
    if (r.fault_injected) rec["fault_injected"] = true;
    if (s.timings) rec["millis"] = r.millis;
    records.push_back(std::move(rec));
    if (r.mismatched() || !r.domains_agree() || !r.error.empty()) {
      Json fail{{"id", r.id}, {"qdnf", to_json(r.instance)}};
      try {
        fail["compiled"] = to_json(compilers::compile_theorem2(r.instance).pricing);
      } catch (const std::exception& e) {
        fail["compiled_error"] = e.what();
      }
      failures.push_back(std::move(fail));
    }
  }
  return Json{{"spec", spec},
              {"summary",
               {{"total", report.total},
                {"matches", report.matches},
                {"mismatches", report.mismatches},
                {"errors", report.errors},
                {"domain_disagreements", report.domain_disagreements},
                {"anomalies", report.anomalies}}},
              {"records", records},
              {"failures", failures}};
}

std::string render(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

}  // namespace pricelab::io
