#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semigrace/labeling.hpp"
#include "semigrace/trees.hpp"

namespace semigrace {

// K_p^(m): p vertices labeled 1..p, every pair joined by m parallel edges.
struct MultigraphSpec {
  int order = 0;
  std::int64_t multiplicity = 0;

  // Throws ValidationError unless order >= 2 and multiplicity >= 1.
  void validate() const;
  std::int64_t edge_count() const;

  friend bool operator==(const MultigraphSpec&, const MultigraphSpec&) = default;
};

// x -> ((x + r - 1) mod p) + 1 on every label: one step "clockwise" per unit
// of r. Throws ValidationError on a graceful-convention labeling or r outside
// 0..p-1.
VertexLabeling rotate_labeling(const VertexLabeling& labeling, int r);

inline constexpr std::string_view kRotationConvention = "plus_r_mod_p_1_based";

struct EmbeddedTree {
  std::size_t tree_index = 0;
  int rotation = 0;
  VertexLabeling labeling;
};

// Number of times each unordered label pair {a,b}, 1 <= a < b <= p, is used.
class PairCoverageTable {
 public:
  explicit PairCoverageTable(int order);

  int order() const { return order_; }
  std::size_t size() const { return counts_.size(); }
  std::int64_t count(int a, int b) const { return counts_[index(a, b)]; }
  void add(int a, int b, std::int64_t times = 1) {
    counts_[index(a, b)] += times;
  }
  std::int64_t total() const;
  const std::vector<std::int64_t>& counts() const { return counts_; }

  PairCoverageTable& operator+=(const PairCoverageTable& other);
  friend bool operator==(const PairCoverageTable&,
                         const PairCoverageTable&) = default;

 private:
  std::size_t index(int a, int b) const;

  int order_;
  std::vector<std::int64_t> counts_;
};

struct PairMismatch {
  int a = 0;
  int b = 0;
  std::int64_t count = 0;
  std::int64_t expected = 0;
};

struct CoverReport {
  PairCoverageTable table;
  bool passed = false;
  std::vector<PairMismatch> mismatches;  // pairs with count != multiplicity
};

// Counts pair coverage of `embeddings` (each referring into `trees` by index)
// and compares every pair with spec.multiplicity. Throws ValidationError on a
// bad tree index, a labeling order different from spec.order, or a
// non-semigraceful convention.
CoverReport verify_cover(std::span<const EmbeddedTree> embeddings,
                         std::span<const Tree> trees,
                         const MultigraphSpec& spec);

struct RotationDecomposition {
  MultigraphSpec spec;  // multiplicity 2
  Tree tree;
  VertexLabeling base;
  std::vector<EmbeddedTree> copies;  // rotations 0..p-1, tree_index 0
};

// All p rotations of a semigraceful base labeling: a decomposition of
// K_p^(2) into p copies of the tree. Throws ValidationError if `base` is not
// semigraceful on `tree` (DomainError if p is even).
RotationDecomposition build_rotation_decomposition(const Tree& tree,
                                                   const VertexLabeling& base);

struct FamilyDecompositionCertificate {
  MultigraphSpec spec;  // multiplicity 2 * number of trees
  int catalog_order = 0;
  std::vector<Tree> trees;
  std::vector<VertexLabeling> bases;  // bases[i] belongs to trees[i]
  // family_copies[r] holds the rotation-r embedding of every tree.
  std::vector<std::vector<EmbeddedTree>> family_copies;

  std::vector<EmbeddedTree> all_embeddings() const;
};

// Rotation-grouped family decomposition. Requires p odd, one semigraceful
// base per catalog tree; throws ValidationError naming the canonical key of
// the first tree without a valid base.
FamilyDecompositionCertificate build_family_decomposition(
    int p, const TreeFamilyCatalog& catalog,
    std::span<const VertexLabeling> labelings);

// Same grouping, but without checking the bases beyond being bijections onto
// 1..p. Used when re-reading a certificate so that a bad base shows up as a
// failed cover rather than an exception.
FamilyDecompositionCertificate assemble_family_decomposition(
    int p, std::vector<Tree> trees, std::vector<VertexLabeling> bases);

struct FamilyVerdict {
  CoverReport cover;
  // Structural problems: wrong group sizes, repeated isomorphism classes,
  // a tree count that is not the number of free trees of order p.
  std::vector<std::string> problems;

  bool passed() const { return cover.passed && problems.empty(); }
};

// Recomputes every embedding from the certificate's bases and checks it is an
// exact cover of spec by p copies of the whole family.
FamilyVerdict verify_family_decomposition(
    const FamilyDecompositionCertificate& certificate);

// Labeling search failed on some tree of a family.
class LabelingSearchError : public std::runtime_error {
 public:
  LabelingSearchError(const std::string& what, SearchStatus status)
      : std::runtime_error(what), status_(status) {}
  SearchStatus status() const { return status_; }

 private:
  SearchStatus status_;
};

// Semigraceful base labeling for every catalog tree, in catalog order.
// Throws LabelingSearchError on the first tree without one.
std::vector<VertexLabeling> find_semigraceful_bases(
    const TreeFamilyCatalog& catalog,
    std::uint64_t budget = kDefaultSearchBudget);

struct EggletonCase {
  FamilyDecompositionCertificate certificate;
  FamilyVerdict verdict;
};

// Enumerate, label, decompose and verify for orders 5 and 7: K_5^(6) into 5
// copies of the order-5 family and K_7^(22) into 7 copies of the order-7
// family.
std::vector<EggletonCase> reproduce_eggleton(
    std::uint64_t budget = kDefaultSearchBudget);

}  // namespace semigrace
