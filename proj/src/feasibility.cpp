#include "semigrace/feasibility.hpp"

#include <numeric>

#include "semigrace/errors.hpp"

namespace semigrace {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw RangeError("edge count overflows 64-bit arithmetic: " +
                     std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

}  // namespace

FeasibilityReport minimal_family_multiplicity(std::int64_t p,
                                              std::int64_t tau) {
  if (p < 3 || p % 2 == 0) {
    throw DomainError("order must be odd and at least 3, got " +
                      std::to_string(p));
  }
  if (tau < 1) {
    throw DomainError("tree count must be positive, got " + std::to_string(tau));
  }
  FeasibilityReport r;
  r.order = p;
  r.tau = tau;
  r.gcd_value = std::gcd(p, tau);
  r.k_min = p / r.gcd_value;
  // k_min * tau is a multiple of p by construction.
  r.m_min = checked_mul(2, checked_mul(r.k_min, tau) / p);
  r.multigraph_edges = checked_mul(r.m_min, p * (p - 1) / 2);
  r.family_edges = checked_mul(checked_mul(r.k_min, tau), p - 1);
  return r;
}

bool edge_count_check(std::int64_t p, std::int64_t m, std::int64_t k,
                      std::int64_t tau) {
  if (p < 1 || m < 1 || k < 1 || tau < 1) {
    throw DomainError("edge count check needs positive arguments");
  }
  // Compare m*p*(p-1) with 2*k*tau*(p-1) to stay in integers.
  const std::int64_t lhs = checked_mul(checked_mul(m, p), p - 1);
  const std::int64_t rhs = checked_mul(checked_mul(2, checked_mul(k, tau)), p - 1);
  return lhs == rhs;
}

}  // namespace semigrace
