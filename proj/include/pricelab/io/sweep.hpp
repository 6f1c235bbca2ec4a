#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pricelab/compilers/qdnf.hpp"
#include "pricelab/io/document.hpp"
#include "pricelab/ssp/lop.hpp"

namespace pricelab::io {

/// Every DNF over the 2n variables with at most `max_terms` distinct consistent
/// terms (the empty term included), each term set listed once.
std::vector<compilers::QdnfInstance> exhaustive_qdnf_corpus(std::size_t n, std::size_t max_terms);

/// `count` instances with 0..max_terms terms; each variable enters a term with
/// probability 1/2 and a uniform sign.
std::vector<compilers::QdnfInstance> random_qdnf_corpus(std::size_t n, std::size_t max_terms,
                                                        std::size_t count, std::uint64_t seed);

struct SweepSpec {
  std::size_t n = 1;
  std::size_t max_terms = 2;
  bool exhaustive = true;
  std::size_t count = 0;  // random instances, appended after the exhaustive part
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  ssp::EnumerationCap cap;
  /// Also decide under nonneg, capped and box prices and compare with free.
  bool check_domains = false;
  /// Index of an instance whose compiled threshold is corrupted.
  std::optional<std::size_t> inject_fault;
  bool timings = false;
};

struct SweepRecord {
  std::size_t id = 0;
  compilers::QdnfInstance instance;
  std::optional<bool> oracle;
  std::optional<bool> pricing;
  std::string status;
  std::string leader_value;
  std::string k_star;
  std::vector<std::pair<std::string, bool>> domain_decisions;
  std::vector<std::string> anomalies;
  std::string error;
  bool fault_injected = false;
  double millis = 0;

  bool matched() const { return oracle && pricing && *oracle == *pricing; }
  bool mismatched() const { return oracle && pricing && *oracle != *pricing; }
  bool domains_agree() const;
};

struct VerificationReport {
  SweepSpec spec;
  std::vector<SweepRecord> records;
  std::size_t total = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
  std::size_t domain_disagreements = 0;
  std::size_t anomalies = 0;

  bool ok() const { return mismatches == 0 && domain_disagreements == 0; }
  int exit_code() const { return ok() ? 0 : 1; }
};

SweepRecord verify_instance(std::size_t id, const compilers::QdnfInstance& q, const SweepSpec& spec);

VerificationReport run_sweep(const SweepSpec& spec);
VerificationReport run_sweep(const std::vector<compilers::QdnfInstance>& corpus, const SweepSpec& spec);

/// Timings appear only when spec.timings is set; otherwise the text is a pure
/// function of (spec, seed).
Json to_json(const VerificationReport& report);
std::string render(const VerificationReport& report);

}  // namespace pricelab::io
