#include "semigrace/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semigrace/errors.hpp"

namespace semigrace {
namespace {

std::string key_to_string(const CanonicalKey& key) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) os << ',';
    os << key[i];
  }
  os << ']';
  return os.str();
}

std::vector<std::vector<EmbeddedTree>> rotation_groups(
    int p, const std::vector<VertexLabeling>& bases) {
  std::vector<std::vector<EmbeddedTree>> groups(p);
  for (int r = 0; r < p; ++r) {
    groups[r].reserve(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
      groups[r].push_back({i, r, rotate_labeling(bases[i], r)});
    }
  }
  return groups;
}

}  // namespace

void MultigraphSpec::validate() const {
  if (order < 2 || multiplicity < 1) {
    throw ValidationError("multigraph needs order >= 2 and multiplicity >= 1; "
                          "got order " + std::to_string(order) +
                          ", multiplicity " + std::to_string(multiplicity));
  }
}

std::int64_t MultigraphSpec::edge_count() const {
  return multiplicity * order * (order - 1) / 2;
}

VertexLabeling rotate_labeling(const VertexLabeling& labeling, int r) {
  if (labeling.convention() != LabelConvention::semigraceful) {
    throw ValidationError("rotation applies to labels 1..p (semigraceful "
                          "convention)");
  }
  const int p = labeling.order();
  if (r < 0 || r >= p) {
    throw ValidationError("rotation " + std::to_string(r) + " outside 0.." +
                          std::to_string(p - 1));
  }
  std::vector<int> out = labeling.labels();
  for (int& x : out) x = (x + r - 1) % p + 1;
  return VertexLabeling(LabelConvention::semigraceful, std::move(out));
}

PairCoverageTable::PairCoverageTable(int order)
    : order_(order),
      counts_(static_cast<std::size_t>(order) * (order - 1) / 2, 0) {
  if (order < 2) throw ValidationError("coverage table needs order >= 2");
}

std::size_t PairCoverageTable::index(int a, int b) const {
  if (a > b) std::swap(a, b);
  // Rows a = 1..p-1 hold pairs (a, a+1..p).
  const std::size_t row = static_cast<std::size_t>(a - 1);
  return row * order_ - row * (row + 1) / 2 + static_cast<std::size_t>(b - a - 1);
}

std::int64_t PairCoverageTable::total() const {
  std::int64_t sum = 0;
  for (std::int64_t c : counts_) sum += c;
  return sum;
}

PairCoverageTable& PairCoverageTable::operator+=(
    const PairCoverageTable& other) {
  if (other.order_ != order_) {
    throw ValidationError("cannot add coverage tables of different orders");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

CoverReport verify_cover(std::span<const EmbeddedTree> embeddings,
                         std::span<const Tree> trees,
                         const MultigraphSpec& spec) {
  spec.validate();
  CoverReport report{PairCoverageTable(spec.order), false, {}};
  for (const EmbeddedTree& e : embeddings) {
    if (e.tree_index >= trees.size()) {
      throw ValidationError("embedding refers to tree " +
                            std::to_string(e.tree_index) + " of " +
                            std::to_string(trees.size()));
    }
    const Tree& tree = trees[e.tree_index];
    if (e.labeling.order() != spec.order || tree.order() != spec.order) {
      throw ValidationError("embedding order " +
                            std::to_string(e.labeling.order()) +
                            " does not match multigraph order " +
                            std::to_string(spec.order));
    }
    if (e.labeling.convention() != LabelConvention::semigraceful) {
      throw ValidationError("embeddings must use labels 1..p");
    }
    for (const Edge& edge : tree.edges()) {
      report.table.add(e.labeling[edge.u], e.labeling[edge.v]);
    }
  }
  for (int a = 1; a <= spec.order; ++a) {
    for (int b = a + 1; b <= spec.order; ++b) {
      const std::int64_t c = report.table.count(a, b);
      if (c != spec.multiplicity) {
        report.mismatches.push_back({a, b, c, spec.multiplicity});
      }
    }
  }
  report.passed = report.mismatches.empty();
  return report;
}

RotationDecomposition build_rotation_decomposition(const Tree& tree,
                                                   const VertexLabeling& base) {
  if (!is_semigraceful_labeling(tree, base)) {
    throw ValidationError("base labeling is not semigraceful on tree " +
                          key_to_string(tree.canonical_key()));
  }
  const int p = tree.order();
  RotationDecomposition out{{p, 2}, tree, base, {}};
  out.copies.reserve(p);
  for (int r = 0; r < p; ++r) out.copies.push_back({0, r, rotate_labeling(base, r)});
  return out;
}

std::vector<EmbeddedTree> FamilyDecompositionCertificate::all_embeddings()
    const {
  std::vector<EmbeddedTree> out;
  for (const auto& group : family_copies) {
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

FamilyDecompositionCertificate assemble_family_decomposition(
    int p, std::vector<Tree> trees, std::vector<VertexLabeling> bases) {
  if (p % 2 == 0 || p < 3) {
    throw ValidationError("family decomposition needs odd order >= 3, got " +
                          std::to_string(p));
  }
  if (bases.size() != trees.size()) {
    throw ValidationError(std::to_string(trees.size()) + " trees but " +
                          std::to_string(bases.size()) + " base labelings");
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].order() != p || bases[i].order() != p) {
      throw ValidationError("tree " + key_to_string(trees[i].canonical_key()) +
                            " or its base labeling is not of order " +
                            std::to_string(p));
    }
    if (bases[i].convention() != LabelConvention::semigraceful) {
      throw ValidationError("base labeling of tree " +
                            key_to_string(trees[i].canonical_key()) +
                            " does not use labels 1..p");
    }
  }
  FamilyDecompositionCertificate cert;
  cert.spec = {p, 2 * static_cast<std::int64_t>(trees.size())};
  cert.catalog_order = p;
  cert.family_copies = rotation_groups(p, bases);
  cert.trees = std::move(trees);
  cert.bases = std::move(bases);
  return cert;
}

FamilyDecompositionCertificate build_family_decomposition(
    int p, const TreeFamilyCatalog& catalog,
    std::span<const VertexLabeling> labelings) {
  if (p % 2 == 0 || p < 3) {
    throw ValidationError("family decomposition needs odd order >= 3, got " +
                          std::to_string(p));
  }
  if (catalog.order != p) {
    throw ValidationError("catalog order " + std::to_string(catalog.order) +
                          " differs from " + std::to_string(p));
  }
  for (std::size_t i = 0; i < catalog.trees.size(); ++i) {
    const Tree& tree = catalog.trees[i];
    if (i >= labelings.size()) {
      throw ValidationError("missing base labeling for tree " +
                            key_to_string(tree.canonical_key()));
    }
    bool ok = false;
    try {
      ok = is_semigraceful_labeling(tree, labelings[i]);
    } catch (const std::invalid_argument&) {
      ok = false;
    }
    if (!ok) {
      throw ValidationError("base labeling is not semigraceful on tree " +
                            key_to_string(tree.canonical_key()));
    }
  }
  if (labelings.size() != catalog.trees.size()) {
    throw ValidationError(std::to_string(labelings.size()) +
                          " base labelings for " +
                          std::to_string(catalog.trees.size()) + " trees");
  }
  return assemble_family_decomposition(
      p, catalog.trees,
      std::vector<VertexLabeling>(labelings.begin(), labelings.end()));
}

FamilyVerdict verify_family_decomposition(
    const FamilyDecompositionCertificate& certificate) {
  const int p = certificate.spec.order;
  const std::size_t n_trees = certificate.trees.size();
  FamilyVerdict verdict{verify_cover(certificate.all_embeddings(),
                                     certificate.trees, certificate.spec),
                        {}};
  auto& problems = verdict.problems;

  if (certificate.catalog_order != p) {
    problems.push_back("catalog order " +
                       std::to_string(certificate.catalog_order) +
                       " differs from multigraph order " + std::to_string(p));
  }
  if (certificate.spec.multiplicity != 2 * static_cast<std::int64_t>(n_trees)) {
    problems.push_back("multiplicity " +
                       std::to_string(certificate.spec.multiplicity) +
                       " is not twice the number of trees (" +
                       std::to_string(n_trees) + ")");
  }
  if (p >= 1 && p <= kTreeCountTableMax &&
      static_cast<std::int64_t>(n_trees) != tree_count(p)) {
    problems.push_back("family has " + std::to_string(n_trees) +
                       " trees; order " + std::to_string(p) + " has " +
                       std::to_string(tree_count(p)));
  }
  std::set<CanonicalKey> keys;
  for (const Tree& t : certificate.trees) {
    if (!keys.insert(t.canonical_key()).second) {
      problems.push_back("isomorphism class " +
                         key_to_string(t.canonical_key()) + " appears twice");
    }
  }
  if (certificate.family_copies.size() != static_cast<std::size_t>(p)) {
    problems.push_back(std::to_string(certificate.family_copies.size()) +
                       " family copies instead of " + std::to_string(p));
  }
  for (std::size_t r = 0; r < certificate.family_copies.size(); ++r) {
    const auto& group = certificate.family_copies[r];
    std::vector<bool> present(n_trees, false);
    for (const EmbeddedTree& e : group) {
      if (e.tree_index < n_trees) present[e.tree_index] = true;
      if (e.rotation != static_cast<int>(r) ||
          (e.tree_index < n_trees &&
           !(e.labeling == rotate_labeling(certificate.bases[e.tree_index],
                                           static_cast<int>(r))))) {
        problems.push_back("copy " + std::to_string(r) +
                           " holds an embedding that is not the rotation-" +
                           std::to_string(r) + " image of its base");
        break;
      }
    }
    if (group.size() != n_trees ||
        std::find(present.begin(), present.end(), false) != present.end()) {
      problems.push_back("copy " + std::to_string(r) +
                         " is not one embedding of every tree");
    }
  }
  return verdict;
}

std::vector<VertexLabeling> find_semigraceful_bases(
    const TreeFamilyCatalog& catalog, std::uint64_t budget) {
  std::vector<VertexLabeling> bases;
  bases.reserve(catalog.trees.size());
  for (const Tree& tree : catalog.trees) {
    SearchResult found = find_semigraceful_labeling(tree, budget);
    if (found.status != SearchStatus::found) {
      throw LabelingSearchError(
          "no semigraceful labeling for tree " +
              key_to_string(tree.canonical_key()) + " (" +
              std::string(to_string(found.status)) + " after " +
              std::to_string(found.nodes) + " nodes)",
          found.status);
    }
    bases.push_back(std::move(*found.labeling));
  }
  return bases;
}

std::vector<EggletonCase> reproduce_eggleton(std::uint64_t budget) {
  std::vector<EggletonCase> out;
  for (int p : {5, 7}) {
    const TreeFamilyCatalog catalog = enumerate_trees(p);
    const auto bases = find_semigraceful_bases(catalog, budget);
    FamilyDecompositionCertificate cert =
        build_family_decomposition(p, catalog, bases);
    FamilyVerdict verdict = verify_family_decomposition(cert);
    out.push_back({std::move(cert), std::move(verdict)});
  }
  return out;
}

}  // namespace semigrace
