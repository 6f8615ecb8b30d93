#include <doctest.h>

#include <numeric>

#include "semigrace/errors.hpp"
#include "semigrace/feasibility.hpp"
#include "semigrace/trees.hpp"

using namespace semigrace;

TEST_CASE("minimal multiplicities for the known cases") {
  struct Row {
    std::int64_t p, tau, gcd, k, m;
  };
  for (const Row r : {Row{5, 3, 1, 5, 6}, Row{7, 11, 1, 7, 22},
                      Row{21, 2144505, 3, 7, 1429670},
                      Row{25, 104636890, 5, 5, 41854756}}) {
    CAPTURE(r.p);
    const auto rep = minimal_family_multiplicity(r.p, r.tau);
    CHECK(rep.gcd_value == r.gcd);
    CHECK(rep.k_min == r.k);
    CHECK(rep.m_min == r.m);
    CHECK(rep.balanced());
    CHECK(rep.multigraph_edges == r.m * r.p * (r.p - 1) / 2);
    CHECK(rep.family_edges == r.k * r.tau * (r.p - 1));
    CHECK(r.p % rep.k_min == 0);
  }
  // The p = 25 balance is past 32-bit range.
  CHECK(minimal_family_multiplicity(25, 104636890).family_edges == 12556426800);
}

TEST_CASE("feasibility errors") {
  CHECK_THROWS_AS(minimal_family_multiplicity(6, 6), DomainError);
  CHECK_THROWS_AS(minimal_family_multiplicity(1, 1), DomainError);
  CHECK_THROWS_AS(minimal_family_multiplicity(5, 0), DomainError);
  CHECK_THROWS_AS(edge_count_check(0, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(minimal_family_multiplicity(3, std::int64_t{1} << 62), RangeError);
}

TEST_CASE("edge_count_check") {
  CHECK(edge_count_check(5, 6, 5, 3));
  CHECK_FALSE(edge_count_check(5, 6, 5, 4));
  CHECK(edge_count_check(21, 1429670, 7, 2144505));
  CHECK(edge_count_check(25, 41854756, 5, 104636890));
}

TEST_CASE("reports balance for every odd order up to 15") {
  for (int p = 3; p <= 15; p += 2) {
    const std::int64_t tau = tree_count(p);
    const auto rep = minimal_family_multiplicity(p, tau);
    CHECK(edge_count_check(p, rep.m_min, rep.k_min, tau));
    if (std::gcd<std::int64_t>(p, tau) == 1) {
      CHECK(rep.k_min == p);
      CHECK(rep.m_min == 2 * tau);
    }
    // k_min really is minimal: no smaller k gives an integral multiplicity.
    for (std::int64_t k = 1; k < rep.k_min; ++k) CHECK((2 * k * tau) % p != 0);
  }
}

TEST_CASE("edge-count identity is scale free (property)") {
  for (std::int64_t p = 3; p <= 27; p += 2) {
    const std::int64_t tau = tree_count(static_cast<int>(p));
    const auto rep = minimal_family_multiplicity(p, tau);
    for (std::int64_t c = 1; c <= 12; ++c) {
      CHECK(edge_count_check(p, c * rep.m_min, c * rep.k_min, tau));
      CHECK_FALSE(edge_count_check(p, c * rep.m_min + 1, c * rep.k_min, tau));
    }
  }
}
