// ldlat: build, inspect and compare lower dismantlable lattices.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ldlat/blocks.hpp"
#include "ldlat/dsl.hpp"
#include "ldlat/io.hpp"
#include "ldlat/treeiso.hpp"
#include "ldlat/verify.hpp"
#include "ldlat/zdg.hpp"

namespace {

using nlohmann::json;
using namespace ldlat;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kInternal = 3 };

struct Globals {
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
};

/// Unreadable file or similar problem outside the library's error codes.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  AdjunctExpr expr;
  Lattice lattice;
};

Loaded load_lattice(const std::string& path) {
  auto expr = dsl::parse(read_file(path));
  auto lattice = dsl::elaborate(expr);
  return {std::move(expr), std::move(lattice)};
}

std::vector<std::string> sorted_labels(const Lattice& l, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(l.label(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

bool lower_dismantlable(const Lattice& l) { return !l.is_trivial() && is_lower_dismantlable(l); }

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_build(const Globals& g, const std::string& path) {
  const auto [expr, l] = load_lattice(path);
  const auto cls = classify(l);
  const bool ld = lower_dismantlable(l);
  const bool top_reducible = l.lower_covers(l.top()).size() >= 2;
  if (g.dot && !g.json) {
    std::cout << io::lattice_to_dot(l, expr.name);
    return kOk;
  }
  json doc{{"command", "build"},
           {"name", expr.name},
           {"n", l.size()},
           {"atoms", sorted_labels(l, cls.atoms)},
           {"adjunct_elements", sorted_labels(l, cls.adjunct_elements)},
           {"lower_dismantlable", ld},
           {"top_join_reducible", top_reducible}};
  std::ostringstream text;
  text << "lattice " << expr.name << ": " << l.size() << " elements\n"
       << "atoms: " << join(doc["atoms"]) << "\n"
       << "adjunct elements: " << join(doc["adjunct_elements"]) << "\n"
       << "lower dismantlable: " << (ld ? "yes" : "no") << "\n"
       << "top join-reducible: " << (top_reducible ? "yes" : "no") << "\n";
  emit(g, doc, text.str());
  return kOk;
}

int cmd_zdg(const Globals& g, const std::string& path) {
  const auto [expr, l] = load_lattice(path);
  const auto graph = zero_divisor_graph(l);
  if (g.dot && !g.json) {
    std::cout << io::graph_to_dot(graph, expr.name);
    return kOk;
  }
  json doc = io::graph_to_json(graph);
  doc["command"] = "zdg";
  doc["vertex_count"] = graph.size();
  doc["edge_count"] = graph.edge_count();
  doc["warnings"] = json::array();
  std::ostringstream text;
  text << "zero-divisor graph of " << expr.name << ": " << graph.size() << " vertices, " << graph.edge_count()
       << " edges\n";
  if (graph.empty()) {
    doc["warnings"].push_back("empty graph: no element meets another nonzero element in 0");
    doc["connected"] = nullptr;
    doc["diameter"] = nullptr;
    text << "warning: empty graph\n";
  } else {
    const auto r = connectivity_report(graph);
    doc["connected"] = r.connected;
    doc["diameter"] = r.diameter ? json(*r.diameter) : json();
    text << "connected: " << (r.connected ? "yes" : "no");
    if (r.diameter) text << ", diameter " << *r.diameter;
    text << "\n";
    for (const auto& [a, b] : graph.label_edges()) text << "  " << a << " -- " << b << "\n";
  }
  emit(g, doc, text.str());
  return kOk;
}

std::string describe_partition(const ClassPartition& p) {
  std::string out;
  for (const auto& c : p.classes) {
    out += "  {" + join(c.members, ", ") + "}";
    if (c.has_adjunct) out += "  adjunct: " + c.adjunct_member.value_or("?");
    out += "\n";
  }
  return out;
}

int cmd_analyze(const Globals& g, const std::string& path) {
  const auto [expr, l] = load_lattice(path);
  const bool ld = lower_dismantlable(l);
  const auto block = basic_block(l);
  std::vector<std::string> block_labels(block.labels().begin(), block.labels().end());
  std::sort(block_labels.begin(), block_labels.end());

  auto classes = neighborhood_classes(zero_divisor_graph(l));
  annotate_adjuncts(classes, l);

  json doc{{"command", "analyze"},
           {"name", expr.name},
           {"n", l.size()},
           {"lower_dismantlable", ld},
           {"basic_block_size", block.size()},
           {"basic_block", block_labels},
           {"classes", io::partition_to_json(classes)},
           {"ssc", nullptr},
           {"peel", nullptr}};
  std::ostringstream text;
  text << "lattice " << expr.name << ": " << l.size() << " elements\n"
       << "basic block: " << block.size() << " elements {" << join(block_labels, ", ") << "}\n"
       << "neighbourhood classes of the zero-divisor graph:\n"
       << describe_partition(classes);

  if (ld) {
    const auto peeled = peel_order(tree_of_lattice(l));
    doc["peel"] = io::partition_to_json(peeled);
    text << "branch peeling of the tree:\n" << describe_partition(peeled);
    if (l.lower_covers(l.top()).size() >= 2) {
      const auto r = ssc_equivalence_report(l);
      doc["ssc"] = {{"basic_block_is_self", r.basic_block_is_self},
                    {"ssc", r.ssc},
                    {"all_classes_singleton", r.all_classes_singleton}};
      text << "basic block is L: " << r.basic_block_is_self << ", SSC: " << r.ssc
           << ", singleton classes: " << r.all_classes_singleton << "\n";
    }
  }
  emit(g, doc, text.str());
  return kOk;
}

void require_class(const Lattice& l, const std::string& which) {
  if (!lower_dismantlable(l) || l.lower_covers(l.top()).size() < 2) {
    throw Error(ErrorCode::NotInClass,
                which + " is not a lower dismantlable lattice with a join-reducible top");
  }
}

int cmd_iso(const Globals& g, const std::string& path_a, const std::string& path_b, bool want_witness) {
  const auto a = load_lattice(path_a);
  const auto b = load_lattice(path_b);
  require_class(a.lattice, "first input");
  require_class(b.lattice, "second input");
  const auto ga = zero_divisor_graph(a.lattice);
  const auto gb = zero_divisor_graph(b.lattice);
  const bool iso = iso_decide(ga, gb);

  json doc{{"command", "iso"}, {"isomorphic", iso}, {"witness", nullptr}, {"verified", nullptr}};
  std::ostringstream text;
  text << (iso ? "isomorphic" : "not isomorphic") << "\n";
  if (iso && want_witness) {
    // A tree isomorphism of the reconstructed trees restricts to an
    // isomorphism of the graphs.
    const auto ta = *recognize(ga);
    const auto tb = *recognize(gb);
    const auto nodes = *tree_isomorphism(ta, tb);
    IsoWitness f{IsoWitness::Kind::GraphIso, {}};
    for (Node v = 0; v < ta.size(); ++v) {
      if (v != ta.root()) f.map[ta.label(v)] = tb.label(nodes[v]);
    }
    const auto phi = align_adjuncts(a.lattice, b.lattice, f);
    const auto psi = lift_to_lattice_iso(a.lattice, b.lattice, phi);
    const bool ok = is_lattice_isomorphism(a.lattice, b.lattice, psi);
    doc["witness"] = io::witness_to_json(psi);
    doc["verified"] = ok;
    for (const auto& [from, to] : psi.map) text << "  " << from << " -> " << to << "\n";
    text << "witness verified: " << (ok ? "yes" : "no") << "\n";
    if (!ok) {
      emit(g, doc, text.str());
      return kInternal;
    }
  }
  emit(g, doc, text.str());
  return iso ? kOk : kNegative;
}

int cmd_recognize(const Globals& g, const std::string& path) {
  json input;
  try {
    input = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidGraph, std::string("malformed JSON: ") + e.what());
  }
  const auto graph = io::graph_from_json(input);
  const auto tree = recognize(graph);
  json doc{{"command", "recognize"}, {"in_class", tree.has_value()}, {"adl", nullptr}, {"tree", nullptr}};
  if (!tree) {
    emit(g, doc, "not in class: the graph is not the non-ancestor graph of a rooted tree\n");
    return kNegative;
  }
  const auto lattice = lattice_of_tree(*tree);
  const auto adl = dsl::serialize(adjunct_representation(lattice, "recognized"));
  json parents = json::object();
  for (Node v = 0; v < tree->size(); ++v) {
    if (v != tree->root()) parents[tree->label(v)] = tree->label(tree->parent(v));
  }
  doc["adl"] = adl;
  doc["tree"] = {{"root", tree->label(tree->root())}, {"parent", parents}};
  if (g.dot && !g.json) {
    std::cout << io::lattice_to_dot(lattice, "recognized");
    return kOk;
  }
  emit(g, doc, adl);
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, const verify::Options& options) {
  const auto names = verify::expand_suite(suite);
  json results = json::array();
  std::ostringstream text;
  bool theorem_failed = false;
  bool conjecture_failed = false;
  for (const auto& name : names) {
    const auto r = verify::run_suite(name, options);
    results.push_back({{"suite", r.suite},
                       {"instances", r.instances},
                       {"violations", r.violations},
                       {"passed", r.passed()},
                       {"counterexample", r.counterexample ? json(*r.counterexample) : json()}});
    text << r.suite << ": " << r.instances << " instances, " << r.violations << " violations\n";
    if (r.counterexample) text << *r.counterexample;
    if (!r.passed()) (name == "block-confluence" ? conjecture_failed : theorem_failed) = true;
  }
  json doc{{"command", "verify"},
           {"max_nodes", options.max_nodes},
           {"root_min_children", options.root_min_children},
           {"seed", options.seed},
           {"suites", results},
           {"passed", !theorem_failed && !conjecture_failed}};
  emit(g, doc, text.str());
  if (theorem_failed) return kInternal;
  return conjecture_failed ? kNegative : kOk;
}

int report_error(const Globals& g, int code, const std::string& kind, const std::string& message,
                 std::optional<SourcePos> pos = std::nullopt) {
  if (g.json) {
    json err{{"code", kind}, {"message", message}};
    if (pos) {
      err["line"] = pos->line;
      err["column"] = pos->column;
    }
    std::cout << json{{"error", err}, {"exit_code", code}}.dump(2) << "\n";
  } else {
    std::cerr << "ldlat: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower dismantlable lattices and their zero-divisor graphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit a single JSON document");
  app.add_flag("--dot", g.dot, "Emit Graphviz DOT where a graph or diagram is produced");
  app.add_option("--seed", g.seed, "Seed for randomized relabelings");

  std::string file_a, file_b;
  bool witness = false;

  auto* build = app.add_subcommand("build", "Parse and elaborate an .adl file and classify its elements");
  build->add_option("file", file_a, ".adl source")->required();
  auto* zdg = app.add_subcommand("zdg", "Zero-divisor graph of an .adl lattice");
  zdg->add_option("file", file_a, ".adl source")->required();
  auto* analyze = app.add_subcommand("analyze", "Basic block, SSC report and neighbourhood classes");
  analyze->add_option("file", file_a, ".adl source")->required();
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two lattices from their zero-divisor graphs");
  iso->add_option("first", file_a, ".adl source")->required();
  iso->add_option("second", file_b, ".adl source")->required();
  iso->add_flag("--witness", witness, "Construct and verify a lattice isomorphism");
  auto* rec = app.add_subcommand("recognize", "Rebuild a lattice from a graph given as JSON {vertices, edges}");
  rec->add_option("graph", file_a, "graph JSON")->required();

  std::string suite = "all";
  verify::Options options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* ver = app.add_subcommand("verify", "Run an exhaustive verification suite");
  ver->add_option("--suite", suite, "t1 | lift | corollary | ssc | diam | block-confluence | thm704 | lemma400 | all")
      ->capture_default_str();
  ver->add_option("--max-nodes", options.max_nodes, "Largest rooted tree (|L| - 1)")->capture_default_str();
  ver->add_option("--root-min-children", options.root_min_children, "Minimum number of children of the root")
      ->capture_default_str();
  ver->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  options.seed = g.seed;

  try {
    if (*build) return cmd_build(g, file_a);
    if (*zdg) return cmd_zdg(g, file_a);
    if (*analyze) return cmd_analyze(g, file_a);
    if (*iso) return cmd_iso(g, file_a, file_b, witness);
    if (*rec) return cmd_recognize(g, file_a);
    if (*ver) return cmd_verify(g, suite, options);
  } catch (const DiagnosticError& e) {
    return report_error(g, kInputError, std::string(to_string(e.code())), e.what(), e.pos());
  } catch (const Error& e) {
    const bool internal = e.code() == ErrorCode::InternalInconsistency || e.code() == ErrorCode::BudgetExceeded;
    return report_error(g, internal ? kInternal : kInputError, std::string(to_string(e.code())), e.what());
  } catch (const InputError& e) {
    return report_error(g, kInputError, "InputError", e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(g, kInputError, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return report_error(g, kInternal, "Internal", e.what());
  }
  return kInputError;
}
