#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semigrace/decomposition.hpp"
#include "semigrace/labeling.hpp"
#include "semigrace/trees.hpp"

namespace semigrace {

inline constexpr int kFormatVersion = 1;

// Edge-list text: a line "p", then p-1 lines "u v" with 0-based ids.
// Blank lines and lines starting with '#' are ignored when reading.
std::string format_edge_list(const Tree& tree);
// Throws FormatError on bad syntax, StructuralError if the edges are not a
// tree.
Tree parse_edge_list(std::istream& in);

// "<convention> 0:l0 1:l1 ..." on one line.
std::string format_labeling(const VertexLabeling& labeling);
// Throws FormatError on bad syntax, ValidationError on a non-bijection.
VertexLabeling parse_labeling(const std::string& text);

nlohmann::json labeling_to_json(const VertexLabeling& labeling);
// Throws FormatError unless the pairs are "v:l" strings sorted by v and
// covering 0..p-1; ValidationError if the labels are not a bijection.
VertexLabeling labeling_from_json(const nlohmann::json& doc);

nlohmann::json catalog_to_json(const TreeFamilyCatalog& catalog);
TreeFamilyCatalog catalog_from_json(const nlohmann::json& doc);

// Certificates store each tree by canonical key and its base labeling only.
// Embeddings are rebuilt from the bases and the rotation rule when verifying.
// A tree whose vertex numbering is not the canonical one also carries its
// edge list so the labeling keeps its meaning.
nlohmann::json certificate_to_json(const FamilyDecompositionCertificate& cert);
nlohmann::json certificate_to_json(const RotationDecomposition& decomposition);

struct CertificateVerdict {
  std::string kind;  // "family" or "rotation"
  MultigraphSpec spec;
  std::size_t tree_count = 0;
  std::optional<CoverReport> cover;  // absent if the trees could not be built
  std::vector<std::string> problems;

  bool passed() const {
    return problems.empty() && cover.has_value() && cover->passed;
  }
};

// Independent re-check of a certificate document. Throws FormatError on a
// schema violation; every semantic defect ends up in problems or in the
// cover report.
CertificateVerdict verify_certificate(const nlohmann::json& doc);

}  // namespace semigrace
