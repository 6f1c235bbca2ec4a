#pragma once

#include <cstddef>
#include <vector>

namespace pricelab::compilers {

/// ∃A ∀B φ(A, B) with φ in DNF and |A| = |B| = n. Literals are signed
/// integers: variables 1..n are a_1..a_n, n+1..2n are b_1..b_n.
struct QdnfInstance {
  std::size_t n = 0;
  std::vector<std::vector<int>> terms;

  /// Variables in range, no term with a literal and its negation.
  void validate() const;

  friend bool operator==(const QdnfInstance&, const QdnfInstance&) = default;
};

inline constexpr std::size_t kQdnfOracleMaxN = 12;

/// Brute force over all 4^n assignments; an empty DNF is false.
/// Throws ResourceError when n exceeds `max_n`.
bool qdnf_oracle(const QdnfInstance& q, std::size_t max_n = kQdnfOracleMaxN);

}  // namespace pricelab::compilers
