#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace semigrace {

using VertexId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Centroid-rooted canonical level sequence. Root is at level 0; children are
// emitted in decreasing lexicographic order of their own level sequences. For
// a bicentroidal tree the smaller of the two centroid rootings is used.
using CanonicalKey = std::vector<int>;

// A free tree on vertex ids 0..order-1. Construction validates that the edge
// list really is a tree and computes the canonical key once.
class Tree {
 public:
  // Throws StructuralError if the edges do not form a tree on 0..order-1.
  static Tree from_edges(int order, std::vector<Edge> edges);

  // Builds the tree whose preorder level sequence is `levels` (root first,
  // root at level 0). Vertex i of the result is the i-th entry of the
  // sequence, so a tree rebuilt from its own canonical key has "canonical
  // vertex numbering". Throws StructuralError on a malformed sequence.
  static Tree from_level_sequence(std::span<const int> levels);

  int order() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const CanonicalKey& canonical_key() const { return key_; }

  std::vector<std::vector<VertexId>> adjacency() const;
  std::vector<int> degrees() const;

 private:
  Tree() = default;

  int order_ = 0;
  std::vector<Edge> edges_;
  CanonicalKey key_;
};

// Free function form of Tree::canonical_key(); also usable on a raw edge list.
const CanonicalKey& canonical_key(const Tree& tree);
CanonicalKey canonical_key(int order, std::span<const Edge> edges);

bool trees_isomorphic(const Tree& a, const Tree& b);

inline constexpr int kDefaultMaxOrder = 20;

struct TreeFamilyCatalog {
  int order = 0;
  // Sorted ascending by canonical key; each tree is in canonical vertex
  // numbering (vertex i is position i of its key).
  std::vector<Tree> trees;

  std::size_t count() const { return trees.size(); }
};

// Every free tree of order p exactly once, sorted by canonical key.
// Throws RangeError unless 1 <= p <= max_order.
TreeFamilyCatalog enumerate_trees(int p, int max_order = kDefaultMaxOrder);

// Highest order with a tabulated tree count.
inline constexpr int kTreeCountTableMax = 27;

// Number of free trees of order p (OEIS A000055), from the built-in table.
// Throws RangeError for p outside 1..kTreeCountTableMax.
std::int64_t tree_count(int p);

}  // namespace semigrace
