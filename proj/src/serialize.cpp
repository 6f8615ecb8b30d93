#include "semigrace/serialize.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "semigrace/errors.hpp"

namespace semigrace {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

std::int64_t int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string string_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_string()) {
    throw FormatError(std::string("field \"") + name + "\" must be a string");
  }
  return v.get<std::string>();
}

const json& array_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_array()) {
    throw FormatError(std::string("field \"") + name + "\" must be an array");
  }
  return v;
}

std::vector<int> int_array(const json& arr, const char* what) {
  std::vector<int> out;
  out.reserve(arr.size());
  for (const json& x : arr) {
    if (!x.is_number_integer()) {
      throw FormatError(std::string(what) + " must contain integers only");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

void require_version(const json& doc, const char* kind) {
  if (int_field(doc, "format_version") != kFormatVersion) {
    throw FormatError("unsupported format_version " +
                      field(doc, "format_version").dump());
  }
  if (string_field(doc, "kind") != kind) {
    throw FormatError("expected a \"" + std::string(kind) + "\" document, got \"" +
                      string_field(doc, "kind") + "\"");
  }
}

bool parse_int(std::string_view text, int& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

// "v:l" tokens, required to list v = 0, 1, 2, ... in order.
std::vector<int> labels_from_pairs(const std::vector<std::string>& pairs) {
  std::vector<int> labels;
  labels.reserve(pairs.size());
  for (const std::string& token : pairs) {
    const auto colon = token.find(':');
    int vertex = 0, label = 0;
    if (colon == std::string::npos ||
        !parse_int(std::string_view(token).substr(0, colon), vertex) ||
        !parse_int(std::string_view(token).substr(colon + 1), label)) {
      throw FormatError("labeling entry \"" + token +
                        "\" is not of the form vertex:label");
    }
    if (vertex != static_cast<int>(labels.size())) {
      throw FormatError("labeling entries must list vertices 0,1,2,... in "
                        "order; found vertex " + std::to_string(vertex) +
                        " at position " + std::to_string(labels.size()));
    }
    labels.push_back(label);
  }
  return labels;
}

std::vector<std::string> pairs_from_labels(const VertexLabeling& labeling) {
  std::vector<std::string> out;
  out.reserve(labeling.order());
  for (int v = 0; v < labeling.order(); ++v) {
    out.push_back(std::to_string(v) + ":" + std::to_string(labeling[v]));
  }
  return out;
}

json edges_to_json(const Tree& tree) {
  json edges = json::array();
  for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
  return edges;
}

std::vector<Edge> edges_from_json(const json& arr) {
  std::vector<Edge> edges;
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw FormatError("edges must be [u, v] integer pairs");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return edges;
}

bool has_canonical_numbering(const Tree& tree) {
  return Tree::from_level_sequence(tree.canonical_key()).edges() == tree.edges();
}

json tree_record(const Tree& tree, const VertexLabeling& base) {
  json rec = {{"canonical_key", tree.canonical_key()},
              {"base_labeling", labeling_to_json(base)}};
  if (!has_canonical_numbering(tree)) rec["edges"] = edges_to_json(tree);
  return rec;
}

json certificate_header(const char* kind, const MultigraphSpec& spec,
                        int catalog_order) {
  return {{"format_version", kFormatVersion},
          {"kind", kind},
          {"multigraph",
           {{"order", spec.order}, {"multiplicity", spec.multiplicity}}},
          {"catalog_order", catalog_order},
          {"copies", spec.order},
          {"rotation_convention", std::string(kRotationConvention)}};
}

}  // namespace

std::string format_edge_list(const Tree& tree) {
  std::ostringstream os;
  os << tree.order() << '\n';
  for (const Edge& e : tree.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Tree parse_edge_list(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      int x = 0;
      if (!parse_int(tok, x)) {
        throw FormatError("edge list: \"" + tok + "\" is not an integer");
      }
      row.push_back(x);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty() || rows[0].size() != 1) {
    throw FormatError("edge list must start with a line holding the order");
  }
  const int order = rows[0][0];
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) {
      throw FormatError("edge list: line " + std::to_string(i + 1) +
                        " must hold exactly two vertex ids");
    }
    edges.push_back({rows[i][0], rows[i][1]});
  }
  return Tree::from_edges(order, std::move(edges));
}

std::string format_labeling(const VertexLabeling& labeling) {
  std::string out(to_string(labeling.convention()));
  for (const std::string& pair : pairs_from_labels(labeling)) out += ' ' + pair;
  return out;
}

VertexLabeling parse_labeling(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  if (!(is >> tag)) throw FormatError("empty labeling");
  const auto convention = parse_convention(tag);
  if (!convention) throw FormatError("unknown label convention \"" + tag + "\"");
  std::vector<std::string> pairs;
  for (std::string tok; is >> tok;) pairs.push_back(tok);
  return VertexLabeling(*convention, labels_from_pairs(pairs));
}

json labeling_to_json(const VertexLabeling& labeling) {
  return {{"convention", std::string(to_string(labeling.convention()))},
          {"labels", pairs_from_labels(labeling)}};
}

VertexLabeling labeling_from_json(const json& doc) {
  const std::string tag = string_field(doc, "convention");
  const auto convention = parse_convention(tag);
  if (!convention) throw FormatError("unknown label convention \"" + tag + "\"");
  std::vector<std::string> pairs;
  for (const json& x : array_field(doc, "labels")) {
    if (!x.is_string()) throw FormatError("labels must be \"vertex:label\" strings");
    pairs.push_back(x.get<std::string>());
  }
  return VertexLabeling(*convention, labels_from_pairs(pairs));
}

json catalog_to_json(const TreeFamilyCatalog& catalog) {
  json trees = json::array();
  for (std::size_t i = 0; i < catalog.trees.size(); ++i) {
    const Tree& t = catalog.trees[i];
    trees.push_back({{"index", i},
                     {"canonical_key", t.canonical_key()},
                     {"edges", edges_to_json(t)}});
  }
  return {{"format_version", kFormatVersion},
          {"kind", "catalog"},
          {"order", catalog.order},
          {"count", catalog.trees.size()},
          {"trees", std::move(trees)}};
}

TreeFamilyCatalog catalog_from_json(const json& doc) {
  require_version(doc, "catalog");
  TreeFamilyCatalog catalog;
  catalog.order = static_cast<int>(int_field(doc, "order"));
  for (const json& rec : array_field(doc, "trees")) {
    Tree t = Tree::from_edges(catalog.order,
                              edges_from_json(array_field(rec, "edges")));
    if (t.canonical_key() !=
        int_array(array_field(rec, "canonical_key"), "canonical_key")) {
      throw FormatError("catalog entry's canonical_key does not match its edges");
    }
    catalog.trees.push_back(std::move(t));
  }
  if (int_field(doc, "count") != static_cast<std::int64_t>(catalog.trees.size())) {
    throw FormatError("catalog count does not match its tree list");
  }
  return catalog;
}

json certificate_to_json(const FamilyDecompositionCertificate& cert) {
  json doc = certificate_header("family", cert.spec, cert.catalog_order);
  json trees = json::array();
  for (std::size_t i = 0; i < cert.trees.size(); ++i) {
    trees.push_back(tree_record(cert.trees[i], cert.bases[i]));
  }
  doc["trees"] = std::move(trees);
  return doc;
}

json certificate_to_json(const RotationDecomposition& decomposition) {
  json doc = certificate_header("rotation", decomposition.spec,
                                decomposition.tree.order());
  doc["trees"] = json::array({tree_record(decomposition.tree, decomposition.base)});
  return doc;
}

CertificateVerdict verify_certificate(const json& doc) {
  if (!doc.is_object()) throw FormatError("certificate must be a JSON object");
  if (int_field(doc, "format_version") != kFormatVersion) {
    throw FormatError("unsupported format_version " +
                      field(doc, "format_version").dump());
  }
  CertificateVerdict verdict;
  verdict.kind = string_field(doc, "kind");
  if (verdict.kind != "family" && verdict.kind != "rotation") {
    throw FormatError("unknown certificate kind \"" + verdict.kind + "\"");
  }
  if (string_field(doc, "rotation_convention") != kRotationConvention) {
    throw FormatError("unknown rotation convention \"" +
                      string_field(doc, "rotation_convention") + "\"");
  }
  const json& mg = field(doc, "multigraph");
  verdict.spec.order = static_cast<int>(int_field(mg, "order"));
  verdict.spec.multiplicity = int_field(mg, "multiplicity");
  const int catalog_order = static_cast<int>(int_field(doc, "catalog_order"));
  const json& records = array_field(doc, "trees");
  verdict.tree_count = records.size();

  // Parse everything first so schema errors win over semantic ones.
  struct Record {
    std::vector<int> key;
    std::optional<std::vector<Edge>> edges;
    const json* labeling;
  };
  std::vector<Record> parsed;
  for (const json& rec : records) {
    Record r{int_array(array_field(rec, "canonical_key"), "canonical_key"),
             std::nullopt, &field(rec, "base_labeling")};
    if (rec.contains("edges")) r.edges = edges_from_json(array_field(rec, "edges"));
    labels_from_pairs([&] {
      std::vector<std::string> pairs;
      for (const json& x : array_field(*r.labeling, "labels")) {
        if (!x.is_string()) {
          throw FormatError("labels must be \"vertex:label\" strings");
        }
        pairs.push_back(x.get<std::string>());
      }
      return pairs;
    }());
    if (!parse_convention(string_field(*r.labeling, "convention"))) {
      throw FormatError("unknown label convention");
    }
    parsed.push_back(std::move(r));
  }

  const int p = verdict.spec.order;
  if (p < 2 || verdict.spec.multiplicity < 1) {
    verdict.problems.push_back("multigraph order must be >= 2 and multiplicity >= 1");
    return verdict;
  }

  std::vector<Tree> trees;
  std::vector<VertexLabeling> bases;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const Record& r = parsed[i];
    const std::string where = "tree " + std::to_string(i);
    try {
      const Tree canonical = Tree::from_level_sequence(r.key);
      if (canonical.canonical_key() != r.key) {
        verdict.problems.push_back(where + ": canonical_key is not canonical");
        continue;
      }
      Tree tree = r.edges ? Tree::from_edges(static_cast<int>(r.key.size()), *r.edges)
                          : canonical;
      if (tree.canonical_key() != r.key) {
        verdict.problems.push_back(where + ": edges do not match canonical_key");
        continue;
      }
      if (tree.order() != p) {
        verdict.problems.push_back(where + ": order " +
                                   std::to_string(tree.order()) +
                                   " differs from multigraph order " +
                                   std::to_string(p));
        continue;
      }
      VertexLabeling base = labeling_from_json(*r.labeling);
      if (base.order() != p) {
        verdict.problems.push_back(where + ": labeling has " +
                                   std::to_string(base.order()) + " labels");
        continue;
      }
      if (base.convention() != LabelConvention::semigraceful) {
        verdict.problems.push_back(where + ": base labeling must use labels 1..p");
        continue;
      }
      trees.push_back(std::move(tree));
      bases.push_back(std::move(base));
    } catch (const StructuralError& e) {
      verdict.problems.push_back(where + ": " + e.what());
    } catch (const ValidationError& e) {
      verdict.problems.push_back(where + ": " + e.what());
    }
  }
  if (!verdict.problems.empty()) return verdict;

  if (verdict.kind == "rotation") {
    if (trees.size() != 1) {
      verdict.problems.push_back("rotation certificate must hold exactly one tree");
      return verdict;
    }
    if (catalog_order != p) {
      verdict.problems.push_back("catalog_order differs from multigraph order");
    }
    std::vector<EmbeddedTree> copies;
    for (int r = 0; r < p; ++r) copies.push_back({0, r, rotate_labeling(bases[0], r)});
    verdict.cover = verify_cover(copies, trees, verdict.spec);
    return verdict;
  }

  if (p % 2 == 0 || p < 3) {
    verdict.problems.push_back("family certificates need odd order >= 3");
    return verdict;
  }
  FamilyDecompositionCertificate cert =
      assemble_family_decomposition(p, std::move(trees), std::move(bases));
  cert.spec = verdict.spec;
  cert.catalog_order = catalog_order;
  FamilyVerdict family = verify_family_decomposition(cert);
  verdict.cover = std::move(family.cover);
  verdict.problems = std::move(family.problems);
  return verdict;
}

}  // namespace semigrace
