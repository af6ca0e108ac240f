#include "ilx/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ilx/graph.hpp"
#include "ilx/model.hpp"
#include "ilx/parser.hpp"
#include "ilx/reasoner.hpp"
#include "ilx/turtle.hpp"
#include "ilx/validate.hpp"

namespace ilx {

namespace {

constexpr int kOk = 0;
constexpr int kInputErrors = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) {
    err << "ilx: cannot read '" << path << "'\n";
    throw Failure{kUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool valid_namespace(const std::string& iri) {
  return !iri.empty() && (iri.back() == '#' || iri.back() == '/') &&
         iri.find_first_of(" <>\"{}|^`\\") == std::string::npos;
}

// Parses, builds and validates a lexicon. Diagnostics are printed when
// `verbose` is set or when there are errors.
LexiconModel load_lexicon(const std::string& path, std::ostream& err, bool verbose,
                          std::vector<Diagnostic>* findings = nullptr) {
  const std::string text = read_file(path, err);
  BuildResult built = build_model_from_text(text, path);
  std::vector<Diagnostic> diags = std::move(built.diagnostics);
  if (built.model) {
    auto more = validate_lexicon(*built.model);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  sort_diagnostics(diags);
  const bool errors = has_errors(diags);
  if (verbose || errors) render_all(err, diags);
  if (findings) *findings = diags;
  if (errors) throw Failure{kInputErrors};
  return std::move(*built.model);
}

struct LoadedGraphs {
  std::vector<SemGraph> graphs;
  std::map<std::string, SourceSpan> spans;  // graph local name -> declaration
  Namespaces ns;
};

LoadedGraphs load_graphs(const LexiconModel& model, const std::string& path, std::ostream& err) {
  const std::string text = read_file(path, err);
  ParseResult parsed = parse(text, path);
  std::vector<Diagnostic> diags = std::move(parsed.diagnostics);
  LoadedGraphs out{{}, {}, Namespaces::for_model(model)};
  std::set<std::string> prefixes;
  for (const auto& s : parsed.statements) {
    if (const auto* p = std::get_if<PrefixDecl>(&s.payload)) {
      if (is_reserved_prefix(p->label.text) || !prefixes.insert(p->label.text).second) {
        diags.push_back(Diagnostic::error(codes::kDuplicate, p->label.text,
                                          "prefix '" + p->label.text + "' is reserved or declared twice",
                                          p->label.span));
      } else {
        out.ns.bind(p->label.text, p->iri);
      }
    } else if (const auto* g = std::get_if<GraphDecl>(&s.payload)) {
      out.spans.emplace(g->name.text, s.span);
    } else {
      diags.push_back(Diagnostic::error(codes::kSyntax, "",
                                        "graph files may contain only '@prefix' and 'graph' statements",
                                        s.span));
    }
  }
  GraphBuildResult built = build_graphs(model, parsed.statements);
  diags.insert(diags.end(), built.diagnostics.begin(), built.diagnostics.end());
  sort_diagnostics(diags);
  if (has_errors(diags)) {
    render_all(err, diags);
    throw Failure{kInputErrors};
  }
  out.graphs = std::move(built.graphs);
  return out;
}

int cmd_check(const std::string& lexicon, std::ostream& err) {
  load_lexicon(lexicon, err, true);
  return kOk;
}

int cmd_infer(const std::string& lexicon, const std::string& graph_path, const std::string& explain_fact,
              bool no_derived, std::ostream& out, std::ostream& err) {
  const LexiconModel model = load_lexicon(lexicon, err, false);
  LoadedGraphs loaded = load_graphs(model, graph_path, err);

  std::optional<Fact> fact;
  if (!explain_fact.empty()) {
    fact = parse_fact(model, explain_fact);
    if (!fact) {
      err << "ilx: cannot read fact '" << explain_fact
          << "' (expected 'node relation node', 'node : Class' or 'node = node')\n";
      return kUsage;
    }
  }

  if (loaded.graphs.empty() && !fact) {
    out << export_graph_turtle(SemGraph{}, !no_derived, loaded.ns);
    return kOk;
  }
  for (const auto& graph : loaded.graphs) {
    Saturation sat = saturate(model, graph);
    if (fact) {
      try {
        out << explain(sat.graph, sat.derivations, *fact);
        return kOk;
      } catch (const std::out_of_range&) {
        continue;
      }
    }
    if (loaded.graphs.size() > 1) out << "# graph " << graph.name.str() << '\n';
    out << export_graph_turtle(sat.graph, !no_derived, loaded.ns);
  }
  if (fact) {
    err << "ilx: '" << explain_fact << "' does not hold in any saturated graph\n";
    return kInputErrors;
  }
  return kOk;
}

int cmd_validate_graph(const std::string& lexicon, const std::string& graph_path, bool strict,
                       std::ostream& err) {
  const LexiconModel model = load_lexicon(lexicon, err, false);
  LoadedGraphs loaded = load_graphs(model, graph_path, err);
  SaturateOptions options;
  options.slot_range_typing = !strict;
  std::vector<Diagnostic> diags;
  for (const auto& graph : loaded.graphs) {
    Saturation sat = saturate(model, graph, options);
    for (auto& d : validate_graph(model, sat.graph, strict ? GraphCheckMode::Strict : GraphCheckMode::Lenient)) {
      if (!d.span) d.span = loaded.spans.at(graph.name.local);
      diags.push_back(std::move(d));
    }
  }
  sort_diagnostics(diags);
  render_all(err, diags);
  return has_errors(diags) ? kInputErrors : kOk;
}

int cmd_export(const std::string& lexicon, const std::string& ns_lexicon, const std::string& ns_data,
               bool meta, std::ostream& out, std::ostream& err) {
  for (const auto* iri : {&ns_lexicon, &ns_data}) {
    if (!iri->empty() && !valid_namespace(*iri)) {
      err << "ilx: namespace IRI '" << *iri << "' must end in '#' or '/'\n";
      return kUsage;
    }
  }
  if (meta) {
    out << meta_ontology_turtle();
    return kOk;
  }
  if (lexicon.empty()) {
    err << "ilx: export needs a lexicon file (or --meta)\n";
    return kUsage;
  }
  const LexiconModel model = load_lexicon(lexicon, err, false);
  auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
  out << export_lexicon_turtle(model, Namespaces::for_model(model, opt(ns_lexicon), opt(ns_data)));
  return kOk;
}

int cmd_stats(const std::string& lexicon, std::ostream& out, std::ostream& err) {
  const LexiconModel model = load_lexicon(lexicon, err, false);
  std::size_t slots = 0;
  std::map<ClassKind, std::size_t> kinds;
  for (const auto& c : model.classes()) {
    slots += c.declared_slots.size();
    ++kinds[classify_class(model, c.name)];
  }
  auto row = [&](std::string_view label, std::size_t n) {
    out << label << std::string(12 - label.size(), ' ') << n << '\n';
  };
  row("classes", model.classes().size());
  row("relations", model.relations().size());
  row("slots", slots);
  row("chains", model.chains().size());
  row("primitive", kinds[ClassKind::Primitive]);
  row("void", kinds[ClassKind::SemanticallyVoid]);
  row("derived", kinds[ClassKind::Derived]);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ilx: interlingual lexicon toolchain (parse, validate, saturate, export)", "ilx"};
  app.require_subcommand(1);

  std::string lexicon, graph, explain_fact, ns_lexicon, ns_data;
  bool no_derived = false, strict = false, meta = false;

  auto* check = app.add_subcommand("check", "Parse, build and validate a lexicon");
  check->add_option("lexicon", lexicon, "Lexicon .ilx file")->required();

  auto* infer = app.add_subcommand("infer", "Saturate graphs and print them as Turtle");
  infer->add_option("lexicon", lexicon, "Lexicon .ilx file")->required();
  infer->add_option("graph", graph, "Graph .ilx file")->required();
  infer->add_option("--explain", explain_fact, "Print the proof tree of a fact, e.g. \"k hasTime t\"");
  infer->add_flag("--no-derived", no_derived, "Print asserted facts only");

  auto* validate = app.add_subcommand("validate-graph", "Saturate graphs and check slot completeness");
  validate->add_option("lexicon", lexicon, "Lexicon .ilx file")->required();
  validate->add_option("graph", graph, "Graph .ilx file")->required();
  validate->add_flag("--strict", strict, "Also require fillers to be typed by the slot range");

  auto* exp = app.add_subcommand("export", "Export a lexicon as Turtle");
  exp->add_option("lexicon", lexicon, "Lexicon .ilx file");
  exp->add_option("--ns-lexicon", ns_lexicon, "Namespace IRI for lexicon terms");
  exp->add_option("--ns-data", ns_data, "Namespace IRI for data nodes");
  exp->add_flag("--meta", meta, "Print the meta-ontology document");

  auto* stats = app.add_subcommand("stats", "Print lexicon counts");
  stats->add_option("lexicon", lexicon, "Lexicon .ilx file")->required();

  std::vector<std::string> argv_storage{"ilx"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(lexicon, err);
    if (infer->parsed()) return cmd_infer(lexicon, graph, explain_fact, no_derived, out, err);
    if (validate->parsed()) return cmd_validate_graph(lexicon, graph, strict, err);
    if (exp->parsed()) return cmd_export(lexicon, ns_lexicon, ns_data, meta, out, err);
    if (stats->parsed()) return cmd_stats(lexicon, out, err);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    err << "ilx: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ilx
