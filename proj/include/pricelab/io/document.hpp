#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pricelab/compilers/qdnf.hpp"
#include "pricelab/pricing/pricing.hpp"
#include "pricelab/problems/families.hpp"
#include "pricelab/ssp/reduction.hpp"

namespace pricelab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum class DocumentKind { Qdnf, Cnf, Lop, Pricing, ReductionArtifact };

const char* to_string(DocumentKind k);
DocumentKind parse_kind(std::string_view s);

struct Document {
  std::string schema_version = kSchemaVersion;
  DocumentKind kind = DocumentKind::Lop;
  Json payload;
  ssp::Provenance provenance;
};

/// Reduction artifact plus, when known, the pricing instance over its source.
struct ArtifactBundle {
  ssp::SspReductionArtifact artifact;
  std::optional<pricing::PricingInstance> source_pricing;
};

Json to_json(const compilers::QdnfInstance& q);
Json to_json(const problems::CnfFormula& f);
Json to_json(const ssp::LopInstance& inst);
Json to_json(const pricing::PricingInstance& inst);
Json to_json(const ArtifactBundle& bundle);
Json to_json(const ssp::Provenance& prov);
Json to_json(const pricing::PriceVector& d);

// Readers throw ParseError whose where() is the JSON path of the offending field.
compilers::QdnfInstance qdnf_from_json(const Json& j, const std::string& path = "payload");
problems::CnfFormula cnf_from_json(const Json& j, const std::string& path = "payload");
ssp::LopInstance lop_from_json(const Json& j, const std::string& path = "payload");
pricing::PricingInstance pricing_from_json(const Json& j, const std::string& path = "payload");
ArtifactBundle artifact_from_json(const Json& j, const std::string& path = "payload");
ssp::Provenance provenance_from_json(const Json& j, const std::string& path = "provenance");

Document make_document(const compilers::QdnfInstance& q, ssp::Provenance prov = {});
Document make_document(const problems::CnfFormula& f, ssp::Provenance prov = {});
Document make_document(const ssp::LopInstance& inst, ssp::Provenance prov = {});
Document make_document(const pricing::PricingInstance& inst, ssp::Provenance prov = {});
Document make_document(const ArtifactBundle& bundle);

std::string serialize(const Document& doc);
/// Syntax errors are reported as "line:column".
Document parse_document(std::string_view text);

Document read_document_file(const std::string& path);
void write_document_file(const std::string& path, const Document& doc);

/// Pulls the typed value out of a document; kind mismatch is a ParseError at "kind".
compilers::QdnfInstance as_qdnf(const Document& doc);
problems::CnfFormula as_cnf(const Document& doc);
/// Accepts lop and cnf documents.
ssp::LopInstance as_lop(const Document& doc);
pricing::PricingInstance as_pricing(const Document& doc);
ArtifactBundle as_artifact(const Document& doc);

/// DIMACS "p cnf" text. Comment lines start with 'c'.
problems::CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const problems::CnfFormula& f);

}  // namespace pricelab::io
