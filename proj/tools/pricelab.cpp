// pricelab: solve, compile and verify Stackelberg pricing instances.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pricelab/compilers/lifts.hpp"
#include "pricelab/compilers/theorem2.hpp"
#include "pricelab/errors.hpp"
#include "pricelab/io/document.hpp"
#include "pricelab/io/sweep.hpp"
#include "pricelab/problems/reductions.hpp"

using namespace pricelab;

namespace {

enum Exit : int {
  kOk = 0,
  kDecisionFalse = 1,
  kUnbounded = 2,
  kNoFollowerSolution = 3,
  kUsage = 10,
  kCap = 11,
  kCertification = 12,
  kInternal = 13,
};

struct Globals {
  std::size_t cap = ssp::kDefaultEnumerationCap;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

pricing::DomainRestriction domain_named(const std::string& s) {
  using pricing::DomainRestriction;
  for (auto d : {DomainRestriction::Free, DomainRestriction::NonNeg,
                 DomainRestriction::CappedByValuation, DomainRestriction::Box,
                 DomainRestriction::LowerCap}) {
    if (s == pricing::to_string(d)) return d;
  }
  throw ArgumentError("unknown domain '" + s + "'");
}

int run_solve(const Globals& g, const std::string& path, const std::string& domain,
              const std::string& threshold, const std::string& ground) {
  auto inst = io::as_pricing(io::read_document_file(path));
  if (!domain.empty()) inst.domain = domain_named(domain);
  if (!threshold.empty()) inst.threshold = exact::Rational::parse(threshold);
  if (!ground.empty()) {
    if (ground == "feasible-sets") {
      inst.ground = pricing::FollowerGround::FeasibleSets;
    } else if (ground == "solution-sets") {
      inst.ground = pricing::FollowerGround::SolutionSets;
    } else {
      throw ArgumentError("unknown ground '" + ground + "'");
    }
  }
  inst.validate();
  const auto sol = pricing::solve_pricing(inst, {g.cap});
  const auto& u = inst.base.universe;

  io::Json report{{"status", pricing::to_string(sol.status)},
                  {"threshold", inst.threshold.str()},
                  {"domain", pricing::to_string(inst.domain)}};
  std::cout << "status: " << pricing::to_string(sol.status) << "\n";
  int code = kOk;
  switch (sol.status) {
    case pricing::PricingStatus::NoFollowerSolution:
      code = kNoFollowerSolution;
      break;
    case pricing::PricingStatus::Unbounded:
      code = kUnbounded;
      report["decision"] = true;
      break;
    case pricing::PricingStatus::Optimal: {
      const bool yes = pricing::decide(sol, inst.threshold);
      code = yes ? kOk : kDecisionFalse;
      std::cout << "leader_value: " << sol.leader_value.str() << "\n";
      std::cout << "decision: " << (yes ? "true" : "false") << " (threshold "
                << inst.threshold.str() << ")\n";
      std::cout << "prices:";
      io::Json prices = io::Json::object();
      for (const auto& [e, v] : sol.prices) {
        std::cout << " " << u[e].label << "=" << v.str();
        prices[u[e].label] = v.str();
      }
      std::cout << "\nresponse: " << ssp::format_subset(u, sol.response) << "\n";
      report["leader_value"] = sol.leader_value.str();
      report["follower_value"] = sol.follower_value.str();
      report["decision"] = yes;
      report["prices"] = prices;
      io::Json resp = io::Json::array();
      for (auto e : sol.response) resp.push_back(u[e].label);
      report["response"] = resp;
      break;
    }
  }
  if (!g.out.empty()) emit(g, report.dump(2) + "\n");
  return code;
}

ssp::LopInstance sat_source(const io::Document& doc, std::optional<pricing::PricingInstance>& sp) {
  if (doc.kind == io::DocumentKind::Pricing) {
    sp = io::as_pricing(doc);
    return sp->base;
  }
  return io::as_lop(doc);
}

std::string param(const ssp::Provenance& prov, const std::string& key) {
  if (prov.empty()) return "";
  for (const auto& [k, v] : prov.back().parameters) {
    if (k == key) return v;
  }
  return "";
}

void report_params(const ssp::Provenance& prov, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    const auto v = param(prov, k);
    if (!v.empty()) std::cerr << k << " = " << v << "\n";
  }
}

io::Document lift(const std::string& pipeline, const io::Document& doc, ssp::EnumerationCap cap) {
  io::ArtifactBundle bundle;
  if (pipeline == "lift-feas" && doc.kind == io::DocumentKind::Pricing) {
    bundle.source_pricing = io::as_pricing(doc);
    bundle.artifact = ssp::identity_reduction(bundle.source_pricing->base);
    bundle.artifact.provenance = doc.provenance;
  } else {
    bundle = io::as_artifact(doc);
  }
  if (!bundle.source_pricing) {
    throw ArgumentError("the artifact carries no source pricing instance to lift");
  }
  compilers::LiftResult r;
  if (pipeline == "lift-max") {
    r = compilers::lift_max(*bundle.source_pricing, bundle.artifact, cap);
  } else if (pipeline == "lift-min") {
    r = compilers::lift_min(*bundle.source_pricing, bundle.artifact, cap);
  } else {
    r = compilers::lift_feas(*bundle.source_pricing, bundle.artifact, cap);
  }
  auto out = io::make_document(r.pricing, r.provenance);
  report_params(out.provenance, {"M_lift", "alpha_pi", "threshold"});
  return out;
}

int run_compile(const Globals& g, const std::string& pipeline, const std::string& path) {
  const auto doc = io::read_document_file(path);
  const ssp::EnumerationCap cap{g.cap};
  io::Document out;
  if (pipeline == "thm2") {
    auto c = compilers::compile_theorem2(io::as_qdnf(doc));
    auto prov = doc.provenance;
    prov.insert(prov.end(), c.provenance.begin(), c.provenance.end());
    out = io::make_document(c.pricing, prov);
    std::cerr << "M = " << c.M << "\nk_star = " << c.k_star << "\n";
    for (const auto& a : c.anomalies) std::cerr << "anomaly: " << a << "\n";
  } else if (pipeline == "sat2vc" || pipeline == "sat2ss") {
    io::ArtifactBundle bundle;
    const auto sat = sat_source(doc, bundle.source_pricing);
    bundle.artifact = pipeline == "sat2vc" ? problems::sat_to_vertex_cover(sat)
                                           : problems::sat_to_subset_sum(sat);
    auto prov = doc.provenance;
    prov.insert(prov.end(), bundle.artifact.provenance.begin(), bundle.artifact.provenance.end());
    bundle.artifact.provenance = prov;
    ssp::require_certified(sat, bundle.artifact, cap);
    out = io::make_document(bundle);
    report_params(out.provenance, {"base", "t"});
  } else if (pipeline == "lift-max" || pipeline == "lift-min" || pipeline == "lift-feas") {
    out = lift(pipeline, doc, cap);
  } else if (pipeline == "weight-lift") {
    auto bundle = io::as_artifact(doc);
    bundle.artifact = compilers::weight_lift(bundle.artifact);
    out = io::make_document(bundle);
    report_params(out.provenance, {"K", "t_prime"});
  } else {
    throw ArgumentError("unknown pipeline '" + pipeline + "'");
  }
  emit(g, io::serialize(out));
  return kOk;
}

int run_oracle(const Globals& g, const std::string& path) {
  const bool v = compilers::qdnf_oracle(io::as_qdnf(io::read_document_file(path)));
  std::cout << (v ? "true" : "false") << "\n";
  if (!g.out.empty()) emit(g, io::Json{{"oracle", v}}.dump(2) + "\n");
  return v ? kOk : kDecisionFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bilevel pricing: solver, hardness compilers and verification sweeps"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cap", g.cap, "Enumeration cap (log2 of enumerated points)")->capture_default_str();
  app.add_option("--seed", g.seed, "Corpus seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->capture_default_str();
  app.add_option("--out", g.out, "Write output here instead of stdout");

  std::string path, domain, threshold, ground, pipeline;
  auto* solve = app.add_subcommand("solve", "Solve a pricing document");
  solve->fallthrough();
  solve->add_option("path", path, "Pricing document")->required();
  solve->add_option("--domain", domain, "free | nonneg | capped | box | lowercap");
  solve->add_option("--threshold", threshold, "Decision threshold (a/b)");
  solve->add_option("--ground", ground, "feasible-sets | solution-sets");

  auto* compile = app.add_subcommand("compile", "Run one compiler step");
  compile->fallthrough();
  compile->add_option("pipeline", pipeline,
                      "thm2 | sat2vc | sat2ss | lift-max | lift-min | lift-feas | weight-lift")
      ->required()
      ->check(CLI::IsMember({"thm2", "sat2vc", "sat2ss", "lift-max", "lift-min", "lift-feas",
                             "weight-lift"}));
  compile->add_option("source", path, "Source document")->required();

  auto* oracle = app.add_subcommand("oracle", "Decide a qdnf document by brute force");
  oracle->fallthrough();
  oracle->add_option("path", path, "qdnf document")->required();

  io::SweepSpec spec;
  std::size_t fault = 0;
  bool no_exhaustive = false;
  auto* sweep = app.add_subcommand("verify-sweep", "Oracle vs compiled-pricing sweep");
  sweep->fallthrough();
  sweep->add_option("--n", spec.n, "Block size n")->capture_default_str();
  sweep->add_option("--max-terms", spec.max_terms, "Maximum DNF terms")->capture_default_str();
  sweep->add_option("--count", spec.count, "Random instances")->capture_default_str();
  sweep->add_flag("--no-exhaustive", no_exhaustive, "Skip the exhaustive corpus");
  sweep->add_flag("--check-domains", spec.check_domains, "Compare decisions across price domains");
  sweep->add_flag("--timings", spec.timings, "Include per-instance timings");
  auto* fault_opt = sweep->add_option("--inject-fault", fault, "Corrupt this instance id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(g, path, domain, threshold, ground);
    if (*compile) return run_compile(g, pipeline, path);
    if (*oracle) return run_oracle(g, path);
    if (*sweep) {
      spec.exhaustive = !no_exhaustive;
      spec.seed = g.seed;
      spec.jobs = g.jobs;
      spec.cap = {g.cap};
      if (*fault_opt) spec.inject_fault = fault;
      const auto report = io::run_sweep(spec);
      emit(g, io::render(report));
      std::cerr << report.matches << "/" << report.total << " matched, " << report.mismatches
                << " mismatched, " << report.errors << " errors\n";
      return report.exit_code();
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error (cap " << e.cap() << "): " << e.what() << "\n";
    return kCap;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed [" << e.check() << "]: " << e.what() << "\n";
    return kCertification;
  } catch (const NoFollowerSolutionError& e) {
    std::cerr << e.what() << "\n";
    return kNoFollowerSolution;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
