#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "semigrace/trees.hpp"

namespace semigrace {

// Graceful labels run 0..p-1; semigraceful labels run 1..p.
enum class LabelConvention { graceful, semigraceful };

std::string_view to_string(LabelConvention convention);
std::optional<LabelConvention> parse_convention(std::string_view text);

// labels[v] is the label of vertex v. Construction checks that the labels are
// a bijection onto the convention's range.
class VertexLabeling {
 public:
  VertexLabeling(LabelConvention convention, std::vector<int> labels);

  LabelConvention convention() const { return convention_; }
  const std::vector<int>& labels() const { return labels_; }
  int order() const { return static_cast<int>(labels_.size()); }
  int operator[](VertexId v) const { return labels_[v]; }

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  LabelConvention convention_;
  std::vector<int> labels_;
};

// Induced edge labels, one per tree edge in the tree's edge order.
struct EdgeLabelMultiset {
  std::vector<int> values;

  std::vector<int> sorted() const;
  bool same_multiset(const EdgeLabelMultiset& other) const;
};

// Distance between positions s and t on a cycle of n evenly spaced points:
// min(|s-t|, n-|s-t|). Throws DomainError unless 1 <= s,t <= n.
int cyclic_distance(int n, int s, int t);

// Absolute differences under the graceful convention, cyclic distances with
// n = p under the semigraceful convention. Throws ValidationError when the
// labeling order differs from the tree order.
EdgeLabelMultiset induced_edge_labels(const Tree& tree,
                                      const VertexLabeling& labeling);

// Throws ValidationError on a semigraceful-convention labeling or order
// mismatch.
bool is_graceful_labeling(const Tree& tree, const VertexLabeling& labeling);

// Throws DomainError on even order; ValidationError on a graceful-convention
// labeling or order mismatch.
bool is_semigraceful_labeling(const Tree& tree, const VertexLabeling& labeling);

// Shifts a graceful labeling of an odd-order tree up by one. The result is
// semigraceful: the distinct differences 1..2n fold under dc_{2n+1} onto
// {1,1,...,n,n}. Throws ValidationError if the input is not graceful on `tree`
// or the order is even.
VertexLabeling graceful_to_semigraceful(const Tree& tree,
                                        const VertexLabeling& labeling);

// ---------------------------------------------------------------------------
// Search

enum class SearchStatus {
  found,
  exhausted,         // whole space searched, no labeling exists
  budget_exhausted,  // stopped at the node limit, outcome unknown
};

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<VertexLabeling> labeling;
  std::uint64_t nodes = 0;  // label assignments tried
  bool via_graceful = false;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Depth-first search for a graceful labeling. Deterministic: the vertex order
// and ascending candidate order depend only on the tree's vertex numbering.
SearchResult find_graceful_labeling(const Tree& tree,
                                    std::uint64_t budget = kDefaultSearchBudget);

// Tries the graceful search first and converts its result; if that fails,
// falls back to a direct search for a semigraceful labeling. Each phase gets
// its own `budget`. Throws DomainError on even order.
SearchResult find_semigraceful_labeling(
    const Tree& tree, std::uint64_t budget = kDefaultSearchBudget);

// The direct semigraceful search on its own, without the graceful phase.
SearchResult find_semigraceful_labeling_direct(
    const Tree& tree, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace semigrace
