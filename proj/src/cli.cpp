#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "alonzo/cli.hpp"
#include "alonzo/corpus.hpp"
#include "alonzo/model.hpp"

namespace alonzo {

FileWriter disk_writer() {
  return [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    return static_cast<bool>(out);
  };
}

namespace {

Workspace load(const Inputs& in) {
  std::vector<std::string> paths;
  if (in.corpus)
    for (const auto& e : corpus_entries()) paths.push_back(e.path);
  paths.insert(paths.end(), in.paths.begin(), in.paths.end());
  return load_sources(paths, in.corpus ? corpus_reader(in.read) : in.read);
}

std::string diagnostics_text(std::vector<Diagnostic> ds) {
  std::stable_sort(ds.begin(), ds.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.span.file, a.span.line, a.span.col_begin) <
           std::tie(b.span.file, b.span.line, b.span.col_begin);
  });
  std::string out;
  for (const auto& d : ds) out += format_diagnostic(d) + "\n";
  return out;
}

CommandResult failure(const std::vector<Diagnostic>& ds) {
  return {kExitCheckFailed, {}, diagnostics_text(ds)};
}

CommandResult failure(const Error& e, int code = kExitCheckFailed) {
  return {code, {}, "error: " + std::string(error_code_name(e.code())) + ": " + e.what() + "\n"};
}

}  // namespace

CommandResult cmd_check(const Inputs& in) {
  Workspace ws = load(in);
  std::vector<Diagnostic> ds = ws.diagnostics;
  for (auto& d : ws.open_obligation_diagnostics()) ds.push_back(std::move(d));
  if (!ds.empty()) return failure(ds);
  std::ostringstream out;
  out << "ok: " << ws.theory_order.size() << " theories, " << ws.morphism_order.size()
      << " morphisms\n";
  return {kExitOk, out.str(), {}};
}

CommandResult cmd_transport(const Inputs& in, const TransportOptions& opts, const FileWriter& write) {
  Workspace ws = load(in);
  if (!ws.ok()) return failure(ws.diagnostics);
  try {
    const Morphism& m = ws.graph.morphism(opts.via);
    const Theory& src = ws.graph.theory(m.source);
    const Theory& tgt = ws.graph.theory(m.target);
    if (m.open_count() > 0)
      throw Error(ErrorCode::OpenObligations,
                  "morphism " + m.id + " has " + std::to_string(m.open_count()) + " open obligations");
    Expr stmt = transported_statement(m, src, tgt, opts.item);
    CommandResult r;
    r.out = print_compact(stmt, tgt.notations()) + "\n";
    if (!opts.write) return r;

    std::string name = opts.as ? *opts.as : opts.item + "@" + m.id;
    Theory updated = transport(m, src, tgt, opts.item, opts.as);
    const BlockLocation& loc = ws.theory_locations.at(tgt.name());
    if (tgt.has_item(name)) {
      r.out += "unchanged: " + tgt.name() + " already has " + name + "\n";
      return r;
    }
    if (in.corpus && corpus_reader()(loc.file) && !disk_reader()(loc.file))
      throw Error(ErrorCode::IoError, "cannot write bundled file " + loc.file);
    std::istringstream lines(ws.texts.at(loc.file));
    std::string text;
    int no = 0;
    for (std::string line; std::getline(lines, line);) {
      if (++no == loc.end_line) text += render_item_source(updated, name);
      text += line + "\n";
    }
    if (!write(loc.file, text)) throw Error(ErrorCode::IoError, "cannot write " + loc.file);
    r.out += "wrote " + name + " to " + tgt.name() + " in " + loc.file + "\n";
    return r;
  } catch (const Error& e) {
    return failure(e);
  }
}

CommandResult cmd_render(const Inputs& in, const RenderOptions& opts) {
  Workspace ws = load(in);
  if (!ws.ok()) return failure(ws.diagnostics);
  CommandResult r;
  std::string sep;
  auto emit = [&](const std::string& block) {
    r.out += sep + block;
    sep = "\n";
  };
  if (opts.theory) {
    if (!ws.graph.has_theory(*opts.theory))
      return failure(Error(ErrorCode::UnknownTheory, "unknown theory " + *opts.theory));
    const Theory& t = ws.graph.theory(*opts.theory);
    emit(opts.latex ? render_theory_latex(t) : render_theory_source(t));
    return r;
  }
  for (const auto& name : ws.theory_order) {
    const Theory& t = ws.graph.theory(name);
    emit(opts.latex ? render_theory_latex(t) : render_theory_source(t));
  }
  for (const auto& id : ws.morphism_order) {
    const Morphism& m = ws.graph.morphism(id);
    const Theory& s = ws.graph.theory(m.source);
    const Theory& t = ws.graph.theory(m.target);
    emit(opts.latex ? render_morphism_latex(m, s, t) : render_morphism_source(m, s, t));
  }
  return r;
}

CommandResult cmd_countermodel(const Inputs& in, const CountermodelOptions& opts) {
  Workspace ws = load(in);
  if (!ws.ok()) return failure(ws.diagnostics);
  try {
    if (ws.theory_order.empty() && !opts.theory)
      throw Error(ErrorCode::UnknownTheory, "no theory to search");
    const Theory& t = ws.graph.theory(opts.theory ? *opts.theory : ws.theory_order.front());
    std::optional<Expr> conjecture;
    if (const Axiom* a = t.find_axiom(opts.conjecture)) conjecture = a->sentence;
    else if (const Theorem* th = t.find_theorem(opts.conjecture)) conjecture = th->sentence;
    else
      conjecture = parse_expr(opts.conjecture, t.vocabulary(), t.notations(), {},
                              SourceSpan{"<conjecture>", 1, 1, 2});
    SearchOptions so;
    so.max_size = opts.max_size;
    so.node_budget = opts.budget;
    auto model = find_countermodel(t, *conjecture, so);
    if (!model) return {kExitOk, "none up to size " + std::to_string(opts.max_size) + "\n", {}};
    return {kExitOk, format_model(t, *model), {}};
  } catch (const Error& e) {
    bool refused = e.code() == ErrorCode::InfiniteOnlyTheory ||
                   e.code() == ErrorCode::SearchSpaceTooLarge;
    if (e.span()) return failure(std::vector<Diagnostic>{{*e.span(), e.code(), e.what()}});
    return failure(e, refused ? kExitRefused : kExitCheckFailed);
  }
}

CommandResult cmd_graph_stats(const Inputs& in, const GraphStatsOptions& opts) {
  Workspace ws = load(in);
  if (!ws.ok()) return failure(ws.diagnostics);
  TheoryGraph g = ws.graph;
  if (opts.graph) {
    const GraphDecl* decl = ws.find_graph(*opts.graph);
    if (!decl) return failure(Error(ErrorCode::UnknownItem, "unknown graph " + *opts.graph));
    g = ws.graph.subgraph(decl->theories, decl->morphisms);
  }
  ValidationReport rep = validate(g);
  std::size_t inclusions = 0, obligations = 0, discharged = 0, model = 0, asserted = 0;
  for (const auto& m : rep.morphisms) {
    inclusions += m.inclusion;
    discharged += m.discharged;
    model += m.model;
    asserted += m.asserted;
    obligations += m.discharged + m.model + m.asserted + m.open;
  }
  CommandResult r;
  if (opts.json) {
    nlohmann::ordered_json j;
    j["theories"] = g.theories().size();
    j["morphisms"] = g.morphisms().size();
    j["inclusions"] = inclusions;
    j["obligations"] = obligations;
    j["discharged"] = discharged;
    j["model"] = model;
    j["asserted"] = asserted;
    j["open"] = rep.open_count();
    j["type_errors"] = rep.error_count();
    j["dangling"] = rep.dangling;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& m : rep.morphisms) {
      nlohmann::ordered_json e;
      e["id"] = m.id;
      e["source"] = m.source;
      e["target"] = m.target;
      e["kind"] = m.inclusion ? "inclusion" : "general";
      e["discharged"] = m.discharged;
      e["model"] = m.model;
      e["asserted"] = m.asserted;
      e["open"] = m.open;
      e["open_axioms"] = m.open_axioms;
      j["edges"].push_back(e);
    }
    r.out = j.dump(2) + "\n";
    return r;
  }
  std::ostringstream out;
  out << "theories=" << g.theories().size() << "\n"
      << "morphisms=" << g.morphisms().size() << "\n"
      << "inclusions=" << inclusions << "\n"
      << "obligations=" << obligations << "\n"
      << "discharged=" << discharged << "\n"
      << "model=" << model << "\n"
      << "asserted=" << asserted << "\n"
      << "open=" << rep.open_count() << "\n"
      << "type-errors=" << rep.error_count() << "\n"
      << "dangling=" << rep.dangling.size() << "\n";
  for (const auto& m : rep.morphisms)
    out << "edge " << m.id << " " << m.source << " -> " << m.target << " "
        << (m.inclusion ? "inclusion" : "general") << " discharged=" << m.discharged
        << " model=" << m.model << " asserted=" << m.asserted << " open=" << m.open << "\n";
  for (const auto& m : rep.morphisms)
    for (const auto& a : m.open_axioms) out << "open " << m.id << " " << a << "\n";
  for (const auto& d : rep.dangling) out << "dangling " << d << "\n";
  r.out = out.str();
  return r;
}

}  // namespace alonzo
