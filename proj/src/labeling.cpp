#include "semigrace/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "semigrace/errors.hpp"

namespace semigrace {
namespace {

void require_order(const Tree& tree, const VertexLabeling& labeling) {
  if (labeling.order() != tree.order()) {
    throw ValidationError("labeling has " + std::to_string(labeling.order()) +
                          " labels but the tree has order " +
                          std::to_string(tree.order()));
  }
}

void require_convention(const VertexLabeling& labeling,
                        LabelConvention expected) {
  if (labeling.convention() != expected) {
    throw ValidationError("expected a " + std::string(to_string(expected)) +
                          " labeling, got " +
                          std::string(to_string(labeling.convention())));
  }
}

}  // namespace

std::string_view to_string(LabelConvention convention) {
  switch (convention) {
    case LabelConvention::graceful:
      return "graceful";
    case LabelConvention::semigraceful:
      return "semigraceful";
  }
  return "?";
}

std::optional<LabelConvention> parse_convention(std::string_view text) {
  if (text == "graceful") return LabelConvention::graceful;
  if (text == "semigraceful") return LabelConvention::semigraceful;
  return std::nullopt;
}

VertexLabeling::VertexLabeling(LabelConvention convention,
                               std::vector<int> labels)
    : convention_(convention), labels_(std::move(labels)) {
  const int p = order();
  if (p == 0) throw ValidationError("labeling must have at least one label");
  const int lo = convention_ == LabelConvention::graceful ? 0 : 1;
  std::vector<bool> seen(p, false);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    const int label = labels_[v];
    if (label < lo || label >= lo + p) {
      throw ValidationError("label " + std::to_string(label) + " of vertex " +
                            std::to_string(v) + " is outside " +
                            std::to_string(lo) + ".." +
                            std::to_string(lo + p - 1));
    }
    if (seen[label - lo]) {
      throw ValidationError("label " + std::to_string(label) +
                            " is used more than once");
    }
    seen[label - lo] = true;
  }
}

std::vector<int> EdgeLabelMultiset::sorted() const {
  std::vector<int> out = values;
  std::sort(out.begin(), out.end());
  return out;
}

bool EdgeLabelMultiset::same_multiset(const EdgeLabelMultiset& other) const {
  return sorted() == other.sorted();
}

int cyclic_distance(int n, int s, int t) {
  if (n < 1 || s < 1 || s > n || t < 1 || t > n) {
    throw DomainError("cyclic distance needs 1 <= s,t <= n; got n=" +
                      std::to_string(n) + " s=" + std::to_string(s) +
                      " t=" + std::to_string(t));
  }
  const int d = std::abs(s - t);
  return 2 * d <= n ? d : n - d;
}

EdgeLabelMultiset induced_edge_labels(const Tree& tree,
                                      const VertexLabeling& labeling) {
  require_order(tree, labeling);
  const int p = tree.order();
  EdgeLabelMultiset out;
  out.values.reserve(tree.edges().size());
  for (const Edge& e : tree.edges()) {
    const int a = labeling[e.u];
    const int b = labeling[e.v];
    out.values.push_back(labeling.convention() == LabelConvention::graceful
                             ? std::abs(a - b)
                             : cyclic_distance(p, a, b));
  }
  return out;
}

bool is_graceful_labeling(const Tree& tree, const VertexLabeling& labeling) {
  require_convention(labeling, LabelConvention::graceful);
  const std::vector<int> diffs = induced_edge_labels(tree, labeling).sorted();
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

bool is_semigraceful_labeling(const Tree& tree,
                              const VertexLabeling& labeling) {
  if (tree.order() % 2 == 0) {
    throw DomainError("semigraceful labelings are defined for odd order, got " +
                      std::to_string(tree.order()));
  }
  require_convention(labeling, LabelConvention::semigraceful);
  const std::vector<int> got = induced_edge_labels(tree, labeling).sorted();
  const int n = tree.order() / 2;
  for (int i = 0; i < 2 * n; ++i) {
    if (got[i] != i / 2 + 1) return false;
  }
  return true;
}

VertexLabeling graceful_to_semigraceful(const Tree& tree,
                                        const VertexLabeling& labeling) {
  if (tree.order() % 2 == 0) {
    throw ValidationError("graceful-to-semigraceful needs odd order, got " +
                          std::to_string(tree.order()));
  }
  if (!is_graceful_labeling(tree, labeling)) {
    throw ValidationError("input labeling is not graceful on this tree");
  }
  std::vector<int> shifted = labeling.labels();
  for (int& label : shifted) ++label;
  return VertexLabeling(LabelConvention::semigraceful, std::move(shifted));
}

}  // namespace semigrace
