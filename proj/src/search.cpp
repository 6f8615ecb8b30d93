// Backtracking searches for graceful and semigraceful labelings.
//
// Internal vertices are labeled in breadth-first order from a maximum-degree
// vertex, visiting higher-degree neighbours first, and leaves come last, so
// every vertex after the first has its tree parent already labeled. Sibling
// leaves take increasing labels. A partial labeling is pruned as soon
// as some induced edge label exceeds its target multiplicity (1 for graceful,
// 2 for semigraceful), or as soon as some edge label that is still needed has
// no pair of labels left that could realize it. Candidates are tried in
// ascending order and the first complete labeling wins.

#include <algorithm>
#include <cstdlib>
#include <string>

#include "semigrace/errors.hpp"
#include "semigrace/labeling.hpp"

namespace semigrace {
namespace {

struct SearchOrder {
  std::vector<VertexId> vertices;  // labeling order
  std::vector<VertexId> parent;    // parent[v] precedes v; root has -1
  // For a leaf, the sibling leaf labeled just before it (-1 if none). Sibling
  // leaves are interchangeable, so their labels are forced to increase.
  std::vector<VertexId> previous_sibling_leaf;
};

SearchOrder make_search_order(const Tree& tree) {
  const int p = tree.order();
  const auto adj = tree.adjacency();
  const auto deg = tree.degrees();
  auto by_degree = [&](VertexId a, VertexId b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  };

  SearchOrder out;
  out.parent.assign(p, -1);
  out.previous_sibling_leaf.assign(p, -1);
  VertexId root = 0;
  for (VertexId v = 1; v < p; ++v) {
    if (by_degree(v, root)) root = v;
  }
  // Internal vertices first (they form a subtree containing the root), then
  // the leaves grouped by parent.
  std::vector<bool> seen(p, false);
  seen[root] = true;
  out.vertices.push_back(root);
  std::vector<VertexId> leaves, next;
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    const VertexId v = out.vertices[i];
    next.clear();
    for (VertexId w : adj[v]) {
      if (!seen[w]) next.push_back(w);
    }
    std::sort(next.begin(), next.end(), by_degree);
    VertexId last_leaf = -1;
    for (VertexId w : next) {
      seen[w] = true;
      out.parent[w] = v;
      if (deg[w] > 1) {
        out.vertices.push_back(w);
      } else {
        leaves.push_back(w);
        out.previous_sibling_leaf[w] = last_leaf;
        last_leaf = w;
      }
    }
  }
  out.vertices.insert(out.vertices.end(), leaves.begin(), leaves.end());
  return out;
}

class Backtracker {
 public:
  Backtracker(const Tree& tree, LabelConvention convention,
              std::uint64_t budget)
      : p_(tree.order()),
        convention_(convention),
        budget_(budget),
        order_(make_search_order(tree)),
        labels_(p_, -1),
        owner_(p_ + 1, -1),
        open_(p_, 0),
        free_edges_(p_ - 1),
        edge_label_count_(p_, 0) {
    const auto deg = tree.degrees();
    children_.resize(p_);
    for (VertexId v = 0; v < p_; ++v) {
      children_[v] = deg[v] - (order_.parent[v] >= 0 ? 1 : 0);
    }
  }

  SearchResult run() {
    SearchResult result;
    const bool ok = descend(0);
    result.nodes = nodes_;
    if (ok) {
      result.status = SearchStatus::found;
      result.labeling.emplace(convention_, labels_);
    } else {
      result.status = out_of_budget_ ? SearchStatus::budget_exhausted
                                     : SearchStatus::exhausted;
    }
    return result;
  }

 private:
  bool graceful() const { return convention_ == LabelConvention::graceful; }

  int induced(int a, int b) const {
    const int d = std::abs(a - b);
    if (graceful()) return d;
    return 2 * d <= p_ ? d : p_ - d;
  }

  // A label can still carry one more edge if it is unused or its vertex has
  // an unlabeled neighbour. In labeling order the only unlabeled neighbours
  // of a labeled vertex are its children.
  bool label_open(int x) const {
    return owner_[x] < 0 || open_[owner_[x]] > 0;
  }

  bool pair_realizable(int a, int b) const {
    const bool a_used = owner_[a] >= 0;
    const bool b_used = owner_[b] >= 0;
    // Two labeled vertices are never joined by an unlabeled edge.
    if (a_used && b_used) return false;
    if (!a_used && !b_used) return free_edges_ > 0;
    return label_open(a) && label_open(b);
  }

  bool needed_labels_realizable() const {
    if (graceful()) {
      for (int d = 1; d < p_; ++d) {
        if (edge_label_count_[d] > 0) continue;
        bool ok = false;
        for (int a = 0; a + d < p_ && !ok; ++a) ok = pair_realizable(a, a + d);
        if (!ok) return false;
      }
    } else {
      for (int d = 1; 2 * d < p_; ++d) {
        if (edge_label_count_[d] >= 2) continue;
        bool ok = false;
        for (int a = 1; a <= p_ && !ok; ++a) {
          ok = pair_realizable(a, (a - 1 + d) % p_ + 1);
        }
        if (!ok) return false;
      }
    }
    return true;
  }

  void assign(VertexId v, int x) {
    labels_[v] = x;
    owner_[x] = v;
    open_[v] = children_[v];
    free_edges_ -= children_[v];
    if (order_.parent[v] >= 0) --open_[order_.parent[v]];
  }

  void unassign(VertexId v, int x) {
    if (order_.parent[v] >= 0) ++open_[order_.parent[v]];
    free_edges_ += children_[v];
    open_[v] = 0;
    owner_[x] = -1;
    labels_[v] = -1;
  }

  bool descend(int depth) {
    if (depth == p_) return true;
    const VertexId v = order_.vertices[depth];
    const VertexId parent = order_.parent[v];
    const int cap = graceful() ? 1 : 2;
    int lo = graceful() ? 0 : 1;
    int hi = graceful() ? p_ - 1 : p_;
    // Rotating labels preserves cyclic distances, so some semigraceful
    // labeling (if any) gives the first vertex label 1.
    if (!graceful() && depth == 0) hi = 1;
    if (const VertexId prev = order_.previous_sibling_leaf[v]; prev >= 0) {
      lo = std::max(lo, labels_[prev] + 1);
    }

    for (int x = lo; x <= hi; ++x) {
      if (owner_[x] >= 0) continue;
      int d = 0;
      if (parent >= 0) {
        d = induced(x, labels_[parent]);
        if (edge_label_count_[d] >= cap) continue;
      }
      if (nodes_ >= budget_) {
        out_of_budget_ = true;
        return false;
      }
      ++nodes_;
      assign(v, x);
      if (parent >= 0) ++edge_label_count_[d];
      if (needed_labels_realizable() && descend(depth + 1)) return true;
      if (parent >= 0) --edge_label_count_[d];
      unassign(v, x);
      if (out_of_budget_) return false;
    }
    return false;
  }

  int p_;
  LabelConvention convention_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  SearchOrder order_;
  std::vector<int> labels_;
  std::vector<VertexId> owner_;  // owner_[label], -1 if unused
  std::vector<int> children_;
  std::vector<int> open_;        // unlabeled neighbours of a labeled vertex
  int free_edges_;               // edges with both ends unlabeled
  // Index 0 stays at 0: a zero induced label would need a repeated label.
  std::vector<int> edge_label_count_;
};

void require_odd(const Tree& tree) {
  if (tree.order() % 2 == 0) {
    throw DomainError("semigraceful labelings are defined for odd order, got " +
                      std::to_string(tree.order()));
  }
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted:
      return "exhausted";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

SearchResult find_graceful_labeling(const Tree& tree, std::uint64_t budget) {
  return Backtracker(tree, LabelConvention::graceful, budget).run();
}

SearchResult find_semigraceful_labeling_direct(const Tree& tree,
                                               std::uint64_t budget) {
  require_odd(tree);
  return Backtracker(tree, LabelConvention::semigraceful, budget).run();
}

SearchResult find_semigraceful_labeling(const Tree& tree,
                                        std::uint64_t budget) {
  require_odd(tree);
  SearchResult graceful = find_graceful_labeling(tree, budget);
  if (graceful.status == SearchStatus::found) {
    SearchResult out;
    out.status = SearchStatus::found;
    out.labeling = graceful_to_semigraceful(tree, *graceful.labeling);
    out.nodes = graceful.nodes;
    out.via_graceful = true;
    return out;
  }
  SearchResult direct = find_semigraceful_labeling_direct(tree, budget);
  direct.nodes += graceful.nodes;
  return direct;
}

}  // namespace semigrace
