#include "pricelab/io/document.hpp"

#include <fstream>
#include <sstream>

#include "pricelab/errors.hpp"

namespace pricelab::io {

using exact::Integer;
using exact::Rational;
using ssp::ElementId;

const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Qdnf: return "qdnf";
    case DocumentKind::Cnf: return "cnf";
    case DocumentKind::Lop: return "lop";
    case DocumentKind::Pricing: return "pricing";
    case DocumentKind::ReductionArtifact: return "reduction-artifact";
  }
  return "?";
}

DocumentKind parse_kind(std::string_view s) {
  for (auto k : {DocumentKind::Qdnf, DocumentKind::Cnf, DocumentKind::Lop, DocumentKind::Pricing,
                 DocumentKind::ReductionArtifact}) {
    if (s == to_string(k)) return k;
  }
  throw ParseError("unknown document kind '" + std::string(s) + "'", "kind");
}

namespace {

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'", path);
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array", path);
  return j;
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError("expected a string", path);
  return j.get<std::string>();
}

long long int64(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", path);
  return j.get<long long>();
}

std::size_t count(const Json& j, const std::string& path) {
  const long long v = int64(j, path);
  if (v < 0) throw ParseError("expected a nonnegative integer", path);
  return static_cast<std::size_t>(v);
}

Integer integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) throw ParseError("expected an integer string", path);
  try {
    return exact::parse_integer(j.get<std::string>());
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), path);
  }
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected a rational string \"n/d\"", path);
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), path);
  }
}

std::vector<Integer> integers(const Json& j, const std::string& path) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(integer(j[i], idx(path, i)));
  return out;
}

ssp::Subset ids(const Json& j, const std::string& path) {
  ssp::Subset out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    out.push_back(static_cast<ElementId>(count(j[i], idx(path, i))));
  }
  return out;
}

std::vector<std::pair<ElementId, ElementId>> pairs(const Json& j, const std::string& path) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const auto p = ids(j[i], idx(path, i));
    if (p.size() != 2) throw ParseError("expected a pair", idx(path, i));
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

std::vector<std::vector<int>> literal_lists(const Json& j, const std::string& path) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const std::string p = idx(path, i);
    std::vector<int> lits;
    for (std::size_t k = 0; k < array(j[i], p).size(); ++k) {
      lits.push_back(static_cast<int>(int64(j[i][k], idx(p, k))));
    }
    out.push_back(std::move(lits));
  }
  return out;
}

Json strings(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(exact::to_string(x));
  return out;
}

template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), path);
  }
}

ssp::Sense parse_sense(const std::string& s, const std::string& path) {
  for (auto v : {ssp::Sense::Min, ssp::Sense::Max, ssp::Sense::Feasibility}) {
    if (s == ssp::to_string(v)) return v;
  }
  throw ParseError("unknown sense '" + s + "'", path);
}

pricing::DomainRestriction parse_domain(const std::string& s, const std::string& path) {
  using pricing::DomainRestriction;
  for (auto v : {DomainRestriction::Free, DomainRestriction::NonNeg,
                 DomainRestriction::CappedByValuation, DomainRestriction::Box,
                 DomainRestriction::LowerCap}) {
    if (s == pricing::to_string(v)) return v;
  }
  throw ParseError("unknown domain '" + s + "'", path);
}

pricing::FollowerGround parse_ground(const std::string& s, const std::string& path) {
  using pricing::FollowerGround;
  for (auto v : {FollowerGround::FeasibleSets, FollowerGround::SolutionSets}) {
    if (s == pricing::to_string(v)) return v;
  }
  throw ParseError("unknown ground '" + s + "'", path);
}

ssp::Certification parse_certification(const std::string& s, const std::string& path) {
  using ssp::Certification;
  for (auto v : {Certification::None, Certification::Checked, Certification::ShippedCompiler}) {
    if (s == ssp::to_string(v)) return v;
  }
  throw ParseError("unknown certification '" + s + "'", path);
}

Json labels(const std::vector<ssp::UniverseElement>& u) {
  Json out = Json::array();
  for (const auto& e : u) out.push_back(e.label);
  return out;
}

std::vector<ssp::UniverseElement> universe_from(const Json& j, const std::string& path) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) names.push_back(str(j[i], idx(path, i)));
  return ssp::make_universe(names);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json to_json(const compilers::QdnfInstance& q) {
  Json terms = Json::array();
  for (const auto& t : q.terms) terms.push_back(t);
  return Json{{"n", q.n}, {"terms", terms}};
}

Json to_json(const problems::CnfFormula& f) {
  Json clauses = Json::array();
  for (const auto& c : f.clauses) clauses.push_back(c);
  return Json{{"num_vars", f.num_vars}, {"clauses", clauses}};
}

Json to_json(const ssp::LopInstance& inst) {
  Json family;
  if (const auto* sat = dynamic_cast<const problems::SatFamily*>(inst.family.get())) {
    family = to_json(sat->formula());
    family = Json{{"type", "cnf"}, {"num_vars", family["num_vars"]}, {"clauses", family["clauses"]}};
  } else if (const auto* vc = dynamic_cast<const problems::VertexCoverFamily*>(inst.family.get())) {
    Json edges = Json::array(), excl = Json::array();
    for (auto [a, b] : vc->edges()) edges.push_back({a, b});
    for (auto [a, b] : vc->exclusive_pairs()) excl.push_back({a, b});
    family = Json{{"type", "vertex-cover"},
                  {"vertices", vc->universe_size()},
                  {"edges", edges},
                  {"exclusive_pairs", excl}};
  } else if (const auto* ss = dynamic_cast<const problems::SubsetSumFamily*>(inst.family.get())) {
    family = Json{{"type", "subset-sum"},
                  {"items", strings(ss->items())},
                  {"capacity", exact::to_string(ss->capacity())}};
  } else if (const auto* ex = dynamic_cast<const ssp::ExplicitFamily*>(inst.family.get())) {
    family = Json{{"type", "explicit"}, {"sets", ex->sets()}};
  } else {
    throw ArgumentError("cannot serialize this family type");
  }
  return Json{{"universe", labels(inst.universe)},
              {"family", family},
              {"weights", strings(inst.weights)},
              {"threshold", exact::to_string(inst.threshold)},
              {"sense", ssp::to_string(inst.sense)}};
}

Json to_json(const pricing::PricingInstance& inst) {
  return Json{{"base", to_json(inst.base)},
              {"leader_set", inst.leader_set},
              {"valuation", strings(inst.valuation)},
              {"domain", pricing::to_string(inst.domain)},
              {"threshold", inst.threshold.str()},
              {"ground", pricing::to_string(inst.ground)}};
}

Json to_json(const ArtifactBundle& bundle) {
  const auto& art = bundle.artifact;
  Json out{{"source_universe", labels(art.source_universe)},
           {"target", to_json(art.target)},
           {"embedding", art.embedding},
           {"certification", ssp::to_string(art.certification)}};
  if (bundle.source_pricing) out["source_pricing"] = to_json(*bundle.source_pricing);
  return out;
}

Json to_json(const ssp::Provenance& prov) {
  Json out = Json::array();
  for (const auto& step : prov) {
    Json params = Json::object();
    for (const auto& [k, v] : step.parameters) params[k] = v;
    out.push_back(Json{{"step", step.compiler}, {"params", params}});
  }
  return out;
}

Json to_json(const pricing::PriceVector& d) {
  Json out = Json::object();
  for (const auto& [e, v] : d) out[std::to_string(e)] = v.str();
  return out;
}

compilers::QdnfInstance qdnf_from_json(const Json& j, const std::string& path) {
  compilers::QdnfInstance q;
  q.n = count(field(j, "n", path), path + ".n");
  q.terms = literal_lists(field(j, "terms", path), path + ".terms");
  guarded(path, [&] { q.validate(); return 0; });
  return q;
}

problems::CnfFormula cnf_from_json(const Json& j, const std::string& path) {
  problems::CnfFormula f;
  f.num_vars = count(field(j, "num_vars", path), path + ".num_vars");
  f.clauses = literal_lists(field(j, "clauses", path), path + ".clauses");
  guarded(path, [&] { f.validate(); return 0; });
  return f;
}

ssp::LopInstance lop_from_json(const Json& j, const std::string& path) {
  ssp::LopInstance inst;
  inst.universe = universe_from(field(j, "universe", path), path + ".universe");
  const std::string fpath = path + ".family";
  const Json& fam = field(j, "family", path);
  const std::string type = str(field(fam, "type", fpath), fpath + ".type");
  const std::size_t n = inst.universe.size();
  guarded(fpath, [&] {
    if (type == "cnf") {
      auto f = cnf_from_json(fam, fpath);
      if (2 * f.num_vars != n) throw ArgumentError("cnf family needs 2 literals per variable");
      inst.family = std::make_shared<problems::SatFamily>(std::move(f));
    } else if (type == "vertex-cover") {
      const auto v = count(field(fam, "vertices", fpath), fpath + ".vertices");
      if (v != n) throw ArgumentError("vertex count differs from universe size");
      auto edges = pairs(field(fam, "edges", fpath), fpath + ".edges");
      std::vector<std::pair<ElementId, ElementId>> excl;
      if (const Json* x = optional_field(fam, "exclusive_pairs")) {
        excl = pairs(*x, fpath + ".exclusive_pairs");
      }
      inst.family = std::make_shared<problems::VertexCoverFamily>(v, std::move(edges), std::move(excl));
    } else if (type == "subset-sum") {
      auto items = integers(field(fam, "items", fpath), fpath + ".items");
      if (items.size() != n) throw ArgumentError("item count differs from universe size");
      auto cap = integer(field(fam, "capacity", fpath), fpath + ".capacity");
      inst.family = std::make_shared<problems::SubsetSumFamily>(std::move(items), std::move(cap));
    } else if (type == "explicit") {
      const std::string spath = fpath + ".sets";
      const Json& sets = array(field(fam, "sets", fpath), spath);
      ssp::SetFamily family;
      for (std::size_t i = 0; i < sets.size(); ++i) family.push_back(ids(sets[i], idx(spath, i)));
      inst.family = std::make_shared<ssp::ExplicitFamily>(n, std::move(family));
    } else {
      throw ParseError("unknown family type '" + type + "'", fpath + ".type");
    }
    return 0;
  });
  inst.weights = integers(field(j, "weights", path), path + ".weights");
  inst.threshold = integer(field(j, "threshold", path), path + ".threshold");
  inst.sense = parse_sense(str(field(j, "sense", path), path + ".sense"), path + ".sense");
  guarded(path, [&] { inst.validate(); return 0; });
  return inst;
}

pricing::PricingInstance pricing_from_json(const Json& j, const std::string& path) {
  pricing::PricingInstance inst;
  inst.base = lop_from_json(field(j, "base", path), path + ".base");
  inst.valuation = integers(field(j, "valuation", path), path + ".valuation");
  auto leader = ids(field(j, "leader_set", path), path + ".leader_set");
  guarded(path + ".leader_set", [&] { pricing::set_partition(inst, std::move(leader)); return 0; });
  inst.domain = parse_domain(str(field(j, "domain", path), path + ".domain"), path + ".domain");
  inst.threshold = rational(field(j, "threshold", path), path + ".threshold");
  inst.ground = parse_ground(str(field(j, "ground", path), path + ".ground"), path + ".ground");
  guarded(path, [&] { inst.validate(); return 0; });
  return inst;
}

ArtifactBundle artifact_from_json(const Json& j, const std::string& path) {
  ArtifactBundle b;
  auto& art = b.artifact;
  art.source_universe = universe_from(field(j, "source_universe", path), path + ".source_universe");
  art.target = lop_from_json(field(j, "target", path), path + ".target");
  art.embedding = ids(field(j, "embedding", path), path + ".embedding");
  art.certification = parse_certification(
      str(field(j, "certification", path), path + ".certification"), path + ".certification");
  guarded(path, [&] { art.validate(); return 0; });
  if (const Json* sp = optional_field(j, "source_pricing")) {
    b.source_pricing = pricing_from_json(*sp, path + ".source_pricing");
    if (b.source_pricing->base.universe != art.source_universe) {
      throw ParseError("source pricing universe differs from source_universe",
                       path + ".source_pricing");
    }
  }
  return b;
}

ssp::Provenance provenance_from_json(const Json& j, const std::string& path) {
  ssp::Provenance prov;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const std::string p = idx(path, i);
    ssp::ProvenanceStep step;
    step.compiler = str(field(j[i], "step", p), p + ".step");
    const Json& params = field(j[i], "params", p);
    if (!params.is_object()) throw ParseError("expected an object", p + ".params");
    for (const auto& [k, v] : params.items()) {
      step.parameters.emplace_back(k, str(v, p + ".params." + k));
    }
    prov.push_back(std::move(step));
  }
  return prov;
}

Document make_document(const compilers::QdnfInstance& q, ssp::Provenance prov) {
  return {kSchemaVersion, DocumentKind::Qdnf, to_json(q), std::move(prov)};
}
Document make_document(const problems::CnfFormula& f, ssp::Provenance prov) {
  return {kSchemaVersion, DocumentKind::Cnf, to_json(f), std::move(prov)};
}
Document make_document(const ssp::LopInstance& inst, ssp::Provenance prov) {
  return {kSchemaVersion, DocumentKind::Lop, to_json(inst), std::move(prov)};
}
Document make_document(const pricing::PricingInstance& inst, ssp::Provenance prov) {
  return {kSchemaVersion, DocumentKind::Pricing, to_json(inst), std::move(prov)};
}
Document make_document(const ArtifactBundle& bundle) {
  return {kSchemaVersion, DocumentKind::ReductionArtifact, to_json(bundle),
          bundle.artifact.provenance};
}

std::string serialize(const Document& doc) {
  Json j{{"schema_version", doc.schema_version},
         {"kind", to_string(doc.kind)},
         {"payload", doc.payload},
         {"provenance", to_json(doc.provenance)}};
  return j.dump(2) + "\n";
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto offset = e.byte == 0 ? 0 : e.byte - 1;
    auto [line, col] = line_column(text, offset);
    throw ParseError("malformed JSON", std::to_string(line) + ":" + std::to_string(col));
  }
  Document doc;
  doc.schema_version = str(field(j, "schema_version", ""), "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    throw ParseError("unsupported schema version '" + doc.schema_version + "'", "schema_version");
  }
  doc.kind = parse_kind(str(field(j, "kind", ""), "kind"));
  doc.payload = field(j, "payload", "");
  if (const Json* p = optional_field(j, "provenance")) doc.provenance = provenance_from_json(*p);
  return doc;
}

Document read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_document_file(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(doc);
}

namespace {

void expect_kind(const Document& doc, DocumentKind k) {
  if (doc.kind != k) {
    throw ParseError(std::string("expected a ") + to_string(k) + " document, got " +
                         to_string(doc.kind),
                     "kind");
  }
}

}  // namespace

compilers::QdnfInstance as_qdnf(const Document& doc) {
  expect_kind(doc, DocumentKind::Qdnf);
  return qdnf_from_json(doc.payload);
}

problems::CnfFormula as_cnf(const Document& doc) {
  expect_kind(doc, DocumentKind::Cnf);
  return cnf_from_json(doc.payload);
}

ssp::LopInstance as_lop(const Document& doc) {
  if (doc.kind == DocumentKind::Cnf) return problems::make_sat_instance(as_cnf(doc));
  expect_kind(doc, DocumentKind::Lop);
  return lop_from_json(doc.payload);
}

pricing::PricingInstance as_pricing(const Document& doc) {
  expect_kind(doc, DocumentKind::Pricing);
  return pricing_from_json(doc.payload);
}

ArtifactBundle as_artifact(const Document& doc) {
  expect_kind(doc, DocumentKind::ReductionArtifact);
  auto b = artifact_from_json(doc.payload);
  b.artifact.provenance = doc.provenance;
  return b;
}

problems::CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t expected = 0;
  problems::CnfFormula f;
  problems::Clause current;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
    const std::string where = std::to_string(lineno) + ":1";
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("bad problem line", where);
      }
      header = true;
      f.num_vars = static_cast<std::size_t>(vars);
      expected = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header) throw ParseError("clause before problem line", where);
    do {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", where);
      }
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<problems::Literal>(lit));
      }
    } while (ls >> tok);
  }
  if (!header) throw ParseError("missing problem line", "1:1");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (f.clauses.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     std::to_string(lineno) + ":1");
  }
  guarded("dimacs", [&] { f.validate(); return 0; });
  return f;
}

std::string to_dimacs(const problems::CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (auto lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace pricelab::io
