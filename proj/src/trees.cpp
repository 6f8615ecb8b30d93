#include "semigrace/trees.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "semigrace/errors.hpp"

namespace semigrace {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void validate_tree_edges(int order, std::span<const Edge> edges) {
  if (order < 1) {
    throw StructuralError("tree order must be positive, got " +
                          std::to_string(order));
  }
  if (static_cast<int>(edges.size()) != order - 1) {
    throw StructuralError("tree of order " + std::to_string(order) +
                          " needs " + std::to_string(order - 1) +
                          " edges, got " + std::to_string(edges.size()));
  }
  DisjointSets components(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
      throw StructuralError("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} has a vertex id outside 0.." +
                            std::to_string(order - 1));
    }
    if (e.u == e.v) {
      throw StructuralError("self-loop at vertex " + std::to_string(e.u));
    }
    // With exactly order-1 edges, a repeated pair or any cycle shows up as an
    // edge inside one component; if none does, the graph is connected.
    if (!components.unite(e.u, e.v)) {
      throw StructuralError("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) +
                            "} closes a cycle or repeats an edge");
    }
  }
}

std::vector<std::vector<VertexId>> build_adjacency(int order,
                                                  std::span<const Edge> edges) {
  std::vector<std::vector<VertexId>> adj(order);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Breadth-first order from `root` together with each vertex's parent (the
// root is its own parent).
void bfs(const std::vector<std::vector<VertexId>>& adj, VertexId root,
         std::vector<VertexId>& order, std::vector<VertexId>& parent) {
  const int n = static_cast<int>(adj.size());
  order.clear();
  order.reserve(n);
  parent.assign(n, -1);
  parent[root] = root;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    for (VertexId w : adj[v]) {
      if (parent[w] == -1) {
        parent[w] = v;
        order.push_back(w);
      }
    }
  }
}

std::vector<VertexId> centroids(const std::vector<std::vector<VertexId>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<VertexId> order, parent;
  bfs(adj, 0, order, parent);
  std::vector<int> size(n, 1);
  std::vector<int> heaviest_child(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    if (v != parent[v]) {
      size[parent[v]] += size[v];
      heaviest_child[parent[v]] = std::max(heaviest_child[parent[v]], size[v]);
    }
  }
  std::vector<VertexId> result;
  for (VertexId v = 0; v < n; ++v) {
    const int branch = std::max(n - size[v], heaviest_child[v]);
    if (2 * branch <= n) result.push_back(v);
  }
  return result;
}

CanonicalKey rooted_level_sequence(
    const std::vector<std::vector<VertexId>>& adj, VertexId root) {
  const int n = static_cast<int>(adj.size());
  std::vector<VertexId> order, parent;
  bfs(adj, root, order, parent);

  std::vector<std::vector<int>> seq(n);
  std::vector<const std::vector<int>*> kids;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    kids.clear();
    std::size_t total = 1;
    for (VertexId w : adj[v]) {
      if (w != parent[v]) {
        kids.push_back(&seq[w]);
        total += seq[w].size();
      }
    }
    std::sort(kids.begin(), kids.end(),
              [](const std::vector<int>* a, const std::vector<int>* b) {
                return *a > *b;
              });
    std::vector<int>& out = seq[v];
    out.reserve(total);
    out.push_back(0);
    for (const std::vector<int>* k : kids) {
      for (int level : *k) out.push_back(level + 1);
    }
    for (VertexId w : adj[v]) {
      if (w != parent[v]) std::vector<int>().swap(seq[w]);
    }
  }
  return std::move(seq[root]);
}

CanonicalKey key_of_valid_tree(int order, std::span<const Edge> edges) {
  const auto adj = build_adjacency(order, edges);
  CanonicalKey best;
  for (VertexId c : centroids(adj)) {
    CanonicalKey candidate = rooted_level_sequence(adj, c);
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

constexpr std::array<std::int64_t, kTreeCountTableMax + 1> kTreeCounts = {
    1,        1,        1,         1,         2,         3,
    6,        11,       23,        47,        106,       235,
    551,      1301,     3159,      7741,      19320,     48629,
    123867,   317955,   823065,    2144505,   5623756,   14828074,
    39299897, 104636890, 279793450, 751065460};

}  // namespace

Tree Tree::from_edges(int order, std::vector<Edge> edges) {
  validate_tree_edges(order, edges);
  Tree tree;
  tree.order_ = order;
  tree.key_ = key_of_valid_tree(order, edges);
  tree.edges_ = std::move(edges);
  return tree;
}

Tree Tree::from_level_sequence(std::span<const int> levels) {
  if (levels.empty() || levels[0] != 0) {
    throw StructuralError("level sequence must start with the root at level 0");
  }
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<VertexId> last_at_level(n, -1);
  last_at_level[0] = 0;
  for (int i = 1; i < n; ++i) {
    const int level = levels[i];
    if (level < 1 || level > levels[i - 1] + 1) {
      throw StructuralError("level " + std::to_string(level) + " at position " +
                            std::to_string(i) + " is not reachable from level " +
                            std::to_string(levels[i - 1]));
    }
    edges.push_back({last_at_level[level - 1], i});
    last_at_level[level] = i;
  }
  return from_edges(n, std::move(edges));
}

std::vector<std::vector<VertexId>> Tree::adjacency() const {
  return build_adjacency(order_, edges_);
}

std::vector<int> Tree::degrees() const {
  std::vector<int> deg(order_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

const CanonicalKey& canonical_key(const Tree& tree) {
  return tree.canonical_key();
}

CanonicalKey canonical_key(int order, std::span<const Edge> edges) {
  validate_tree_edges(order, edges);
  return key_of_valid_tree(order, edges);
}

bool trees_isomorphic(const Tree& a, const Tree& b) {
  return a.canonical_key() == b.canonical_key();
}

std::int64_t tree_count(int p) {
  if (p < 1 || p > kTreeCountTableMax) {
    throw RangeError("tree count is tabulated for orders 1.." +
                     std::to_string(kTreeCountTableMax) + ", got " +
                     std::to_string(p));
  }
  return kTreeCounts[p];
}

}  // namespace semigrace
