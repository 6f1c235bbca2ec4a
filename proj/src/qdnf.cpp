#include "pricelab/compilers/qdnf.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

#include "pricelab/errors.hpp"

namespace pricelab::compilers {

void QdnfInstance::validate() const {
  const auto nv = static_cast<long long>(2 * n);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    for (int lit : terms[t]) {
      if (lit == 0 || std::llabs(lit) > nv) {
        throw ArgumentError("qdnf term " + std::to_string(t) + ": literal " +
                            std::to_string(lit) + " out of range");
      }
      for (int other : terms[t]) {
        if (other == -lit) {
          throw ArgumentError("qdnf term " + std::to_string(t) + " contains " +
                              std::to_string(lit) + " and its negation");
        }
      }
    }
  }
}

namespace {

struct TermMask {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

}  // namespace

bool qdnf_oracle(const QdnfInstance& q, std::size_t max_n) {
  q.validate();
  if (q.n > max_n) {
    throw ResourceError("qdnf oracle: n = " + std::to_string(q.n) + " exceeds bound " +
                            std::to_string(max_n),
                        max_n);
  }
  // bit i-1 is a_i for i <= n, bit n + j - 1 is b_j
  std::vector<TermMask> masks;
  masks.reserve(q.terms.size());
  for (const auto& term : q.terms) {
    TermMask m;
    for (int lit : term) {
      const std::uint64_t bit = std::uint64_t{1} << (std::llabs(lit) - 1);
      (lit > 0 ? m.pos : m.neg) |= bit;
    }
    masks.push_back(m);
  }
  const std::uint64_t half = std::uint64_t{1} << q.n;
  for (std::uint64_t a = 0; a < half; ++a) {
    bool all = true;
    for (std::uint64_t b = 0; b < half && all; ++b) {
      const std::uint64_t x = a | (b << q.n);
      bool sat = false;
      for (const auto& m : masks) {
        if ((x & m.pos) == m.pos && (x & m.neg) == 0) {
          sat = true;
          break;
        }
      }
      all = sat;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace pricelab::compilers
