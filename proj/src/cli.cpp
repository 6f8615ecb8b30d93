#include "semigrace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "semigrace/decomposition.hpp"
#include "semigrace/errors.hpp"
#include "semigrace/feasibility.hpp"
#include "semigrace/labeling.hpp"
#include "semigrace/serialize.hpp"
#include "semigrace/trees.hpp"

namespace semigrace::cli {

using nlohmann::json;

namespace {

std::uint64_t resolve_budget(std::uint64_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string(kBudgetEnv) +
                          " must be a positive integer, got \"" + env + "\"");
  }
  return kDefaultSearchBudget;
}

// Compact form of a canonical key: digits run together while every level is
// a single digit, comma-separated otherwise.
std::string key_text(const CanonicalKey& key) {
  const bool wide = std::any_of(key.begin(), key.end(), [](int x) { return x > 9; });
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(key[i]);
  }
  return out;
}

std::string multigraph_name(const MultigraphSpec& spec) {
  return "K_" + std::to_string(spec.order) + "^(" +
         std::to_string(spec.multiplicity) + ")";
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << doc.dump(1) << '\n';
  if (!out) throw ValidationError("failed writing " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return parse_edge_list(in);
}

// Catalog for `order`, or the single tree of a --tree-file.
TreeFamilyCatalog trees_for(int order, int max_order,
                            const std::optional<std::string>& tree_file) {
  if (!tree_file) return enumerate_trees(order, max_order);
  TreeFamilyCatalog one;
  one.trees.push_back(read_tree_file(*tree_file));
  one.order = one.trees.front().order();
  if (order != 0 && order != one.order) {
    throw ValidationError("--order " + std::to_string(order) +
                          " does not match the tree file's order " +
                          std::to_string(one.order));
  }
  return one;
}

void report_cover_failure(std::ostream& os, const CoverReport& cover) {
  for (const PairMismatch& m : cover.mismatches) {
    os << "  pair {" << m.a << "," << m.b << "}: covered " << m.count
       << " times, expected " << m.expected;
    if (m.count < m.expected) {
      os << " (deficit " << m.expected - m.count << ")";
    } else {
      os << " (excess " << m.count - m.expected << ")";
    }
    os << '\n';
  }
}

int search_exit(SearchStatus status) {
  return status == SearchStatus::budget_exhausted ? kExitBudget : kExitFailed;
}

}  // namespace

CommandOutcome cmd_trees(const TreesOptions& options) {
  const TreeFamilyCatalog catalog = enumerate_trees(options.order, options.max_order);
  CommandOutcome outcome;
  std::ostringstream os;
  const std::size_t n = catalog.count();
  os << "order " << options.order << ": " << n << (n == 1 ? " tree" : " trees");
  if (options.order <= kTreeCountTableMax) {
    const auto expected = tree_count(options.order);
    if (static_cast<std::int64_t>(n) == expected) {
      os << " (matches tabulated count)";
    } else {
      os << " (MISMATCH: tabulated count is " << expected << ")";
      outcome.exit_code = kExitFailed;
    }
  }
  os << '\n';
  json doc = catalog_to_json(catalog);
  if (options.output_path) {
    write_json_file(*options.output_path, doc);
    os << "catalog written to " << *options.output_path << '\n';
  }
  outcome.human_report = os.str();
  outcome.document = std::move(doc);
  return outcome;
}

CommandOutcome cmd_label(const LabelOptions& options) {
  const auto convention = parse_convention(options.mode);
  if (!convention) {
    throw ValidationError("--mode must be graceful or semigraceful, got \"" +
                          options.mode + "\"");
  }
  const TreeFamilyCatalog catalog =
      trees_for(options.order, options.max_order, options.tree_file);
  if (*convention == LabelConvention::semigraceful && catalog.order % 2 == 0) {
    throw DomainError("semigraceful labelings need odd order, got " +
                      std::to_string(catalog.order));
  }
  const std::uint64_t budget = resolve_budget(options.budget);

  CommandOutcome outcome;
  std::ostringstream os;
  json records = json::array();
  std::size_t verified = 0, exhausted = 0, out_of_budget = 0;
  os << std::left << std::setw(6) << "index" << std::setw(22) << "canonical_key"
     << std::setw(12) << "nodes" << "labeling\n";
  for (std::size_t i = 0; i < catalog.trees.size(); ++i) {
    const Tree& tree = catalog.trees[i];
    const SearchResult found = *convention == LabelConvention::graceful
                                    ? find_graceful_labeling(tree, budget)
                                    : find_semigraceful_labeling(tree, budget);
    json rec = {{"index", i},
                {"canonical_key", tree.canonical_key()},
                {"status", std::string(to_string(found.status))},
                {"nodes", found.nodes}};
    os << std::setw(6) << i << std::setw(22) << key_text(tree.canonical_key())
       << std::setw(12) << found.nodes;
    if (found.status == SearchStatus::found) {
      const bool ok = *convention == LabelConvention::graceful
                          ? is_graceful_labeling(tree, *found.labeling)
                          : is_semigraceful_labeling(tree, *found.labeling);
      if (!ok) {
        throw std::logic_error("search returned a labeling its predicate rejects");
      }
      ++verified;
      rec["labeling"] = labeling_to_json(*found.labeling);
      os << format_labeling(*found.labeling) << '\n';
    } else {
      (found.status == SearchStatus::exhausted ? exhausted : out_of_budget) += 1;
      os << "NONE (" << to_string(found.status) << ")\n";
    }
    records.push_back(std::move(rec));
  }
  os << verified << (verified == 1 ? " labeling" : " labelings") << ", all verified";
  if (exhausted) os << "; " << exhausted << " tree(s) have no " << options.mode << " labeling";
  if (out_of_budget) os << "; " << out_of_budget << " search(es) hit the budget of " << budget;
  os << '\n';

  outcome.exit_code = exhausted ? kExitFailed : out_of_budget ? kExitBudget : kExitOk;
  outcome.human_report = os.str();
  outcome.document = json{{"format_version", kFormatVersion},
                          {"kind", "labelings"},
                          {"order", catalog.order},
                          {"mode", options.mode},
                          {"budget", budget},
                          {"labelings", std::move(records)}};
  return outcome;
}

CommandOutcome cmd_decompose(const DecomposeOptions& options) {
  const int scopes = int(options.family) + int(options.tree_index.has_value()) +
                     int(options.tree_file.has_value());
  if (scopes != 1) {
    throw ValidationError("choose exactly one of --family, --tree, --tree-file");
  }
  const std::uint64_t budget = resolve_budget(options.budget);
  const TreeFamilyCatalog catalog =
      trees_for(options.order, options.max_order, options.tree_file);
  const int p = catalog.order;
  if (p % 2 == 0 || p < 3) {
    throw DomainError("decompositions need odd order >= 3, got " + std::to_string(p));
  }

  CommandOutcome outcome;
  std::ostringstream os;
  json doc;
  bool passed = false;
  try {
    if (options.family) {
      const auto bases = find_semigraceful_bases(catalog, budget);
      const auto cert = build_family_decomposition(p, catalog, bases);
      const FamilyVerdict verdict = verify_family_decomposition(cert);
      passed = verdict.passed();
      os << multigraph_name(cert.spec) << ": " << p << " family copies of "
         << cert.trees.size() << " trees, " << cert.spec.order * (p - 1) / 2
         << " pairs, target coverage " << cert.spec.multiplicity << '\n';
      for (const auto& problem : verdict.problems) os << "  " << problem << '\n';
      report_cover_failure(os, verdict.cover);
      doc = certificate_to_json(cert);
    } else {
      std::size_t index = 0;
      if (options.tree_index) {
        if (*options.tree_index < 0 ||
            static_cast<std::size_t>(*options.tree_index) >= catalog.trees.size()) {
          throw ValidationError("--tree must be in 0.." +
                                std::to_string(catalog.trees.size() - 1));
        }
        index = static_cast<std::size_t>(*options.tree_index);
      }
      const Tree& tree = catalog.trees[index];
      const SearchResult found = find_semigraceful_labeling(tree, budget);
      if (found.status != SearchStatus::found) {
        throw LabelingSearchError("no semigraceful labeling for tree " +
                                      key_text(tree.canonical_key()) + " (" +
                                      std::string(to_string(found.status)) + ")",
                                  found.status);
      }
      const auto rotation = build_rotation_decomposition(tree, *found.labeling);
      std::vector<Tree> one{tree};
      const CoverReport cover = verify_cover(rotation.copies, one, rotation.spec);
      passed = cover.passed;
      os << multigraph_name(rotation.spec) << ": " << p << " rotations of tree "
         << key_text(tree.canonical_key()) << ", base "
         << format_labeling(rotation.base) << '\n';
      report_cover_failure(os, cover);
      doc = certificate_to_json(rotation);
    }
  } catch (const LabelingSearchError& e) {
    outcome.exit_code = search_exit(e.status());
    outcome.human_report = std::string(e.what()) + '\n';
    return outcome;
  }
  os << (passed ? "verified: exact cover\n" : "FAILED: not an exact cover\n");
  if (options.output_path) {
    write_json_file(*options.output_path, doc);
    os << "certificate written to " << *options.output_path << '\n';
  }
  outcome.exit_code = passed ? kExitOk : kExitFailed;
  outcome.human_report = os.str();
  outcome.document = std::move(doc);
  return outcome;
}

CommandOutcome cmd_verify(const std::string& certificate_path) {
  const json doc = read_json_file(certificate_path);
  const CertificateVerdict verdict = verify_certificate(doc);
  CommandOutcome outcome;
  std::ostringstream os;
  os << verdict.kind << " certificate for " << multigraph_name(verdict.spec)
     << " with " << verdict.tree_count
     << (verdict.tree_count == 1 ? " tree" : " trees") << '\n';
  for (const auto& problem : verdict.problems) os << "  " << problem << '\n';
  if (verdict.cover) report_cover_failure(os, *verdict.cover);
  if (verdict.passed()) {
    os << "verified: all " << verdict.cover->table.size()
       << " pairs covered exactly " << verdict.spec.multiplicity << " times\n";
  } else {
    os << "FAILED\n";
    outcome.exit_code = kExitFailed;
  }
  outcome.human_report = os.str();
  json result = {{"kind", verdict.kind},
                 {"order", verdict.spec.order},
                 {"multiplicity", verdict.spec.multiplicity},
                 {"passed", verdict.passed()},
                 {"problems", verdict.problems}};
  if (verdict.cover) {
    json mismatches = json::array();
    for (const auto& m : verdict.cover->mismatches) {
      mismatches.push_back({{"pair", {m.a, m.b}},
                            {"count", m.count},
                            {"expected", m.expected}});
    }
    result["mismatches"] = std::move(mismatches);
  }
  outcome.document = std::move(result);
  return outcome;
}

CommandOutcome cmd_feasibility(const FeasibilityOptions& options) {
  std::vector<FeasibilityReport> rows;
  if (options.table) {
    for (int p = 3; p <= kTreeCountTableMax; p += 2) {
      rows.push_back(minimal_family_multiplicity(p, tree_count(p)));
    }
  } else {
    if (!options.order) throw ValidationError("--order or --table is required");
    const int p = *options.order;
    std::int64_t tau = 0;
    if (options.tau) {
      tau = *options.tau;
    } else if (p >= 1 && p <= options.max_order) {
      tau = static_cast<std::int64_t>(enumerate_trees(p, options.max_order).count());
    } else {
      tau = tree_count(p);
    }
    rows.push_back(minimal_family_multiplicity(p, tau));
  }

  CommandOutcome outcome;
  std::ostringstream os;
  json doc = json::array();
  os << std::right << std::setw(4) << "p" << std::setw(12) << "tau"
     << std::setw(6) << "gcd" << std::setw(7) << "k_min" << std::setw(12)
     << "m_min" << std::setw(15) << "edges(K_p^m)" << std::setw(15)
     << "edges(k*T(p))" << '\n';
  for (const auto& r : rows) {
    os << std::setw(4) << r.order << std::setw(12) << r.tau << std::setw(6)
       << r.gcd_value << std::setw(7) << r.k_min << std::setw(12) << r.m_min
       << std::setw(15) << r.multigraph_edges << std::setw(15) << r.family_edges
       << '\n';
    if (!r.balanced()) outcome.exit_code = kExitFailed;
    doc.push_back({{"p", r.order},
                   {"tau", r.tau},
                   {"gcd", r.gcd_value},
                   {"k_min", r.k_min},
                   {"m_min", r.m_min},
                   {"multigraph_edges", r.multigraph_edges},
                   {"family_edges", r.family_edges},
                   {"balanced", r.balanced()}});
  }
  outcome.human_report = os.str();
  outcome.document = std::move(doc);
  return outcome;
}

CommandOutcome cmd_eggleton(const EggletonOptions& options) {
  const std::uint64_t budget = resolve_budget(options.budget);
  CommandOutcome outcome;
  std::vector<EggletonCase> cases;
  try {
    cases = reproduce_eggleton(budget);
  } catch (const LabelingSearchError& e) {
    outcome.exit_code = search_exit(e.status());
    outcome.human_report = std::string(e.what()) + '\n';
    return outcome;
  }

  std::filesystem::create_directories(options.output_dir);
  std::ostringstream os;
  json summary = json::array();
  os << std::left << std::setw(12) << "multigraph" << std::setw(8) << "copies"
     << std::setw(7) << "trees" << std::setw(7) << "pairs" << std::setw(10)
     << "coverage" << std::setw(10) << "built" << std::setw(10) << "reread"
     << "file\n";
  bool all_ok = true;
  for (const EggletonCase& c : cases) {
    const auto& spec = c.certificate.spec;
    const std::string path =
        (std::filesystem::path(options.output_dir) /
         ("eggleton_K" + std::to_string(spec.order) + ".json"))
            .string();
    write_json_file(path, certificate_to_json(c.certificate));
    const CertificateVerdict reread = verify_certificate(read_json_file(path));
    const bool ok = c.verdict.passed() && reread.passed();
    all_ok = all_ok && ok;
    os << std::setw(12) << multigraph_name(spec) << std::setw(8) << spec.order
       << std::setw(7) << c.certificate.trees.size() << std::setw(7)
       << c.verdict.cover.table.size() << std::setw(10) << spec.multiplicity
       << std::setw(10) << (c.verdict.passed() ? "verified" : "FAILED")
       << std::setw(10) << (reread.passed() ? "verified" : "FAILED") << path
       << '\n';
    summary.push_back({{"order", spec.order},
                       {"multiplicity", spec.multiplicity},
                       {"trees", c.certificate.trees.size()},
                       {"verified", c.verdict.passed()},
                       {"reverified", reread.passed()},
                       {"certificate", path}});
  }
  os << (all_ok ? "both decompositions verified\n" : "verification FAILED\n");
  outcome.exit_code = all_ok ? kExitOk : kExitFailed;
  outcome.human_report = os.str();
  outcome.document = std::move(summary);
  return outcome;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free trees, semigraceful labelings and cyclic decompositions "
               "of complete multigraphs"};
  app.require_subcommand(1);
  bool machine = false;
  int max_order = kDefaultMaxOrder;
  app.add_flag("--machine", machine, "Print the structured document instead of the report");
  app.add_option("--max-order", max_order, "Largest order enumerated directly")
      ->check(CLI::Range(1, 40));

  TreesOptions trees_opt;
  auto* trees = app.add_subcommand("trees", "Enumerate the free trees of an order");
  trees->add_option("--order", trees_opt.order, "Tree order")->required();
  trees->add_option("--output", trees_opt.output_path, "Write the catalog here");

  LabelOptions label_opt;
  auto* label = app.add_subcommand("label", "Find a labeling for every tree of an order");
  label->add_option("--order", label_opt.order, "Tree order");
  label->add_option("--mode", label_opt.mode, "graceful or semigraceful");
  label->add_option("--budget", label_opt.budget, "Node limit per search");
  label->add_option("--tree-file", label_opt.tree_file, "Label one tree from an edge-list file");

  DecomposeOptions dec_opt;
  auto* decompose = app.add_subcommand("decompose", "Build and verify a cyclic decomposition");
  decompose->add_option("--order", dec_opt.order, "Multigraph order (odd)");
  decompose->add_flag("--family", dec_opt.family, "Decompose into copies of the whole family");
  decompose->add_option("--tree", dec_opt.tree_index, "Catalog index of a single tree");
  decompose->add_option("--tree-file", dec_opt.tree_file, "Single tree from an edge-list file");
  decompose->add_option("--output", dec_opt.output_path, "Write the certificate here");
  decompose->add_option("--budget", dec_opt.budget, "Node limit per search");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate from the file alone");
  verify->add_option("certificate", verify_path, "Certificate file")->required();

  FeasibilityOptions feas_opt;
  auto* feasibility = app.add_subcommand("feasibility", "Minimal multiplicity arithmetic");
  feasibility->add_option("--order", feas_opt.order, "Odd order p");
  feasibility->add_option("--tau", feas_opt.tau, "Number of free trees of order p");
  feasibility->add_flag("--table", feas_opt.table, "All odd p with a tabulated tree count");

  EggletonOptions egg_opt;
  auto* eggleton = app.add_subcommand("eggleton", "Decompose K_5^(6) and K_7^(22) and verify");
  eggleton->add_option("--output-dir", egg_opt.output_dir, "Directory for the certificates");
  eggleton->add_option("--budget", egg_opt.budget, "Node limit per search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  CommandOutcome outcome;
  try {
    if (trees->parsed()) {
      trees_opt.max_order = max_order;
      outcome = cmd_trees(trees_opt);
    } else if (label->parsed()) {
      label_opt.max_order = max_order;
      outcome = cmd_label(label_opt);
    } else if (decompose->parsed()) {
      dec_opt.max_order = max_order;
      outcome = cmd_decompose(dec_opt);
    } else if (verify->parsed()) {
      outcome = cmd_verify(verify_path);
    } else if (feasibility->parsed()) {
      feas_opt.max_order = max_order;
      outcome = cmd_feasibility(feas_opt);
    } else if (eggleton->parsed()) {
      outcome = cmd_eggleton(egg_opt);
    }
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (machine && outcome.document) {
    out << outcome.document->dump(1) << '\n';
  } else {
    out << outcome.human_report;
  }
  return outcome.exit_code;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("semigrace");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace semigrace::cli
