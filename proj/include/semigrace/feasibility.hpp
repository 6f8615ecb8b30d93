#pragma once

#include <cstdint>
#include <string>

namespace semigrace {

// Edge-count arithmetic for decomposing K_p^(m) into k copies of the family
// of all tau free trees of order p. k copies hold k*tau*(p-1) edges and
// K_p^(m) has m*p*(p-1)/2, so m = 2*k*tau/p, which for odd p is integral
// iff p divides k*tau. The smallest such k is p / gcd(p, tau).
struct FeasibilityReport {
  std::int64_t order = 0;
  std::int64_t tau = 0;
  std::int64_t gcd_value = 0;
  std::int64_t k_min = 0;
  std::int64_t m_min = 0;
  std::int64_t multigraph_edges = 0;  // m_min * p * (p-1) / 2
  std::int64_t family_edges = 0;      // k_min * tau * (p-1)

  bool balanced() const { return multigraph_edges == family_edges; }
};

// Throws DomainError for even p, p < 3, or tau < 1; RangeError if any
// intermediate product overflows 64 bits.
FeasibilityReport minimal_family_multiplicity(std::int64_t p, std::int64_t tau);

// True iff m*p*(p-1)/2 == k*tau*(p-1). Throws DomainError on non-positive
// arguments and RangeError on overflow.
bool edge_count_check(std::int64_t p, std::int64_t m, std::int64_t k,
                      std::int64_t tau);

}  // namespace semigrace
