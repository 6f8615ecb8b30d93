// Free tree enumeration by centroid decomposition.
//
// A free tree of order p has either one centroid, all of whose branches have
// fewer than p/2 vertices, or (p even) two adjacent centroids whose joining
// edge splits the tree into two halves of p/2. So the free trees of order p
// are in bijection with
//   * multisets of rooted trees of total size p-1, each of size <= (p-1)/2,
//     hung below a common root; plus
//   * unordered pairs of rooted trees of size p/2 joined at their roots.
// Rooted trees are built once per call as classes (one id per isomorphism
// class), so every emitted free tree is new and no deduplication is needed.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "semigrace/errors.hpp"
#include "semigrace/trees.hpp"

namespace semigrace {
namespace {

struct RootedClass {
  int size = 1;
  // Relative level sequence, root at 0.
  std::vector<int> levels;
};

class RootedClasses {
 public:
  explicit RootedClasses(int max_size) {
    classes_.push_back({1, {0}});
    first_of_size_ = {0, 0, 1};
    std::vector<int> picked;
    for (int s = 2; s <= max_size; ++s) {
      const int last = static_cast<int>(classes_.size()) - 1;
      for_each_multiset(s - 1, last, s - 1, picked,
                        [&](const std::vector<int>& kids) {
                          classes_.push_back({s, hang_below_root(kids)});
                        });
      first_of_size_.push_back(static_cast<int>(classes_.size()));
    }
  }

  const RootedClass& operator[](int id) const { return classes_[id]; }

  // Ids of classes whose size is exactly s are [first(s), first(s+1)).
  int first(int s) const { return first_of_size_[s]; }
  int last_with_size_at_most(int s) const { return first_of_size_[s + 1] - 1; }

  // Calls visit() with every non-increasing id sequence drawn from
  // [0, max_id] whose sizes sum to `remaining` and each size <= bound.
  template <typename Visit>
  void for_each_multiset(int remaining, int max_id, int bound,
                         std::vector<int>& picked, Visit&& visit) const {
    if (remaining == 0) {
      visit(picked);
      return;
    }
    for (int id = max_id; id >= 0; --id) {
      const int sz = classes_[id].size;
      if (sz > remaining || sz > bound) continue;
      picked.push_back(id);
      for_each_multiset(remaining - sz, id, bound, picked, visit);
      picked.pop_back();
    }
  }

  std::vector<int> hang_below_root(const std::vector<int>& kids) const {
    std::vector<int> levels{0};
    for (int id : kids) {
      for (int level : classes_[id].levels) levels.push_back(level + 1);
    }
    return levels;
  }

 private:
  std::vector<RootedClass> classes_;
  std::vector<int> first_of_size_;
};

Tree canonical_numbering(const std::vector<int>& levels) {
  const Tree generated = Tree::from_level_sequence(levels);
  return Tree::from_level_sequence(generated.canonical_key());
}

}  // namespace

TreeFamilyCatalog enumerate_trees(int p, int max_order) {
  if (p < 1 || p > max_order) {
    throw RangeError("tree enumeration supports orders 1.." +
                     std::to_string(max_order) + ", got " + std::to_string(p));
  }
  TreeFamilyCatalog catalog;
  catalog.order = p;

  const RootedClasses rooted(p / 2);

  // Single centroid: every branch has at most (p-1)/2 vertices.
  const int bound = (p - 1) / 2;
  std::vector<int> picked;
  rooted.for_each_multiset(
      p - 1, rooted.last_with_size_at_most(std::max(bound, 0)), bound, picked,
      [&](const std::vector<int>& kids) {
        catalog.trees.push_back(canonical_numbering(rooted.hang_below_root(kids)));
      });

  // Two centroids: halves of size p/2 joined root to root.
  if (p % 2 == 0) {
    const int half = p / 2;
    for (int a = rooted.first(half); a < rooted.first(half + 1); ++a) {
      for (int b = a; b < rooted.first(half + 1); ++b) {
        std::vector<int> levels = rooted[a].levels;
        for (int level : rooted[b].levels) levels.push_back(level + 1);
        catalog.trees.push_back(canonical_numbering(levels));
      }
    }
  }

  std::sort(catalog.trees.begin(), catalog.trees.end(),
            [](const Tree& x, const Tree& y) {
              return x.canonical_key() < y.canonical_key();
            });
  const auto dup = std::adjacent_find(
      catalog.trees.begin(), catalog.trees.end(),
      [](const Tree& x, const Tree& y) { return trees_isomorphic(x, y); });
  if (dup != catalog.trees.end()) {
    throw std::logic_error("tree enumeration produced a duplicate at order " +
                           std::to_string(p));
  }
  return catalog;
}

}  // namespace semigrace
