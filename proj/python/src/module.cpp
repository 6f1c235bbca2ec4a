#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pricelab/compilers/lifts.hpp"
#include "pricelab/compilers/theorem2.hpp"
#include "pricelab/errors.hpp"
#include "pricelab/io/document.hpp"
#include "pricelab/io/sweep.hpp"
#include "pricelab/problems/reductions.hpp"

namespace py = pybind11;
using namespace pricelab;

namespace {

io::Document load(const std::string& text) { return io::parse_document(text); }

std::string dump(const io::Document& doc) { return io::serialize(doc); }

pricing::DomainRestriction domain_named(const std::string& s) {
  using pricing::DomainRestriction;
  for (auto d : {DomainRestriction::Free, DomainRestriction::NonNeg,
                 DomainRestriction::CappedByValuation, DomainRestriction::Box,
                 DomainRestriction::LowerCap}) {
    if (s == pricing::to_string(d)) return d;
  }
  throw ArgumentError("unknown domain '" + s + "'");
}

std::string solve(const std::string& text, const std::optional<std::string>& domain,
                  const std::optional<std::string>& threshold, std::size_t cap) {
  auto inst = io::as_pricing(load(text));
  if (domain) inst.domain = domain_named(*domain);
  if (threshold) inst.threshold = exact::Rational::parse(*threshold);
  const auto sol = pricing::solve_pricing(inst, {cap});
  const auto& u = inst.base.universe;
  io::Json out{{"status", pricing::to_string(sol.status)}, {"threshold", inst.threshold.str()}};
  if (sol.status == pricing::PricingStatus::Optimal) {
    io::Json prices = io::Json::object();
    for (const auto& [e, v] : sol.prices) prices[u[e].label] = v.str();
    io::Json resp = io::Json::array();
    for (auto e : sol.response) resp.push_back(u[e].label);
    out["leader_value"] = sol.leader_value.str();
    out["follower_value"] = sol.follower_value.str();
    out["prices"] = prices;
    out["response"] = resp;
  }
  if (sol.status != pricing::PricingStatus::NoFollowerSolution) {
    out["decision"] = pricing::decide(sol, inst.threshold);
  }
  return out.dump();
}

std::string compile_theorem2(const std::string& text) {
  const auto doc = load(text);
  auto c = compilers::compile_theorem2(io::as_qdnf(doc));
  auto prov = doc.provenance;
  prov.insert(prov.end(), c.provenance.begin(), c.provenance.end());
  return dump(io::make_document(c.pricing, prov));
}

std::string reduce(const std::string& pipeline, const std::string& text, std::size_t cap) {
  const auto doc = load(text);
  io::ArtifactBundle bundle;
  ssp::LopInstance sat;
  if (doc.kind == io::DocumentKind::Pricing) {
    bundle.source_pricing = io::as_pricing(doc);
    sat = bundle.source_pricing->base;
  } else {
    sat = io::as_lop(doc);
  }
  if (pipeline == "sat2vc") {
    bundle.artifact = problems::sat_to_vertex_cover(sat);
  } else if (pipeline == "sat2ss") {
    bundle.artifact = problems::sat_to_subset_sum(sat);
  } else {
    throw ArgumentError("unknown reduction '" + pipeline + "'");
  }
  auto prov = doc.provenance;
  prov.insert(prov.end(), bundle.artifact.provenance.begin(), bundle.artifact.provenance.end());
  bundle.artifact.provenance = prov;
  ssp::require_certified(sat, bundle.artifact, {cap});
  return dump(io::make_document(bundle));
}

std::string lift(const std::string& mode, const std::string& text, std::size_t cap) {
  const auto doc = load(text);
  io::ArtifactBundle bundle;
  if (doc.kind == io::DocumentKind::Pricing) {
    bundle.source_pricing = io::as_pricing(doc);
    bundle.artifact = ssp::identity_reduction(bundle.source_pricing->base);
    bundle.artifact.provenance = doc.provenance;
  } else {
    bundle = io::as_artifact(doc);
  }
  if (!bundle.source_pricing) throw ArgumentError("the artifact carries no source pricing instance");
  compilers::LiftResult r;
  if (mode == "max") {
    r = compilers::lift_max(*bundle.source_pricing, bundle.artifact, {cap});
  } else if (mode == "min") {
    r = compilers::lift_min(*bundle.source_pricing, bundle.artifact, {cap});
  } else if (mode == "feas") {
    r = compilers::lift_feas(*bundle.source_pricing, bundle.artifact, {cap});
  } else {
    throw ArgumentError("unknown lift mode '" + mode + "'");
  }
  return dump(io::make_document(r.pricing, r.provenance));
}

std::string weight_lift(const std::string& text) {
  auto bundle = io::as_artifact(load(text));
  bundle.artifact = compilers::weight_lift(bundle.artifact);
  return dump(io::make_document(bundle));
}

std::string check_reduction(const std::string& text, std::size_t cap) {
  const auto bundle = io::as_artifact(load(text));
  if (!bundle.source_pricing) throw ArgumentError("the artifact carries no source instance");
  const auto r = ssp::check_ssp_reduction(bundle.source_pricing->base, bundle.artifact, {cap});
  return io::Json{{"passed", r.passed()},
                  {"yes_equivalence", r.yes_equivalence},
                  {"family_equality", r.family_equality},
                  {"no_strictly_better", r.no_strictly_better},
                  {"first_failure", r.first_failure()}}
      .dump();
}

std::string verify_sweep(std::size_t n, std::size_t max_terms, bool exhaustive, std::size_t count,
                         std::uint64_t seed, std::size_t jobs, bool check_domains) {
  io::SweepSpec spec;
  spec.n = n;
  spec.max_terms = max_terms;
  spec.exhaustive = exhaustive;
  spec.count = count;
  spec.seed = seed;
  spec.jobs = jobs;
  spec.check_domains = check_domains;
  return io::to_json(io::run_sweep(spec)).dump();
}

}  // namespace

PYBIND11_MODULE(_pricelab, m) {
  m.doc() = "Exact bilevel pricing over JSON documents";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);
  py::register_exception<NoFollowerSolutionError>(m, "NoFollowerSolutionError", PyExc_RuntimeError);

  m.attr("DEFAULT_CAP") = ssp::kDefaultEnumerationCap;
  const std::size_t cap = ssp::kDefaultEnumerationCap;

  m.def("qdnf_oracle", [](const std::string& text) { return compilers::qdnf_oracle(io::as_qdnf(load(text))); },
        py::arg("document"));
  m.def("compile_theorem2", &compile_theorem2, py::arg("document"));
  m.def("solve", &solve, py::arg("document"), py::arg("domain") = std::nullopt,
        py::arg("threshold") = std::nullopt, py::arg("cap") = cap);
  m.def("reduce", &reduce, py::arg("pipeline"), py::arg("document"), py::arg("cap") = cap);
  m.def("lift", &lift, py::arg("mode"), py::arg("document"), py::arg("cap") = cap);
  m.def("weight_lift", &weight_lift, py::arg("document"));
  m.def("check_reduction", &check_reduction, py::arg("document"), py::arg("cap") = cap);
  m.def("parse_dimacs", [](const std::string& text) { return dump(io::make_document(io::parse_dimacs(text))); },
        py::arg("text"));
  m.def("verify_sweep", &verify_sweep, py::arg("n") = 1, py::arg("max_terms") = 2,
        py::arg("exhaustive") = true, py::arg("count") = 0, py::arg("seed") = 1, py::arg("jobs") = 1,
        py::arg("check_domains") = false, py::call_guard<py::gil_scoped_release>());
}
