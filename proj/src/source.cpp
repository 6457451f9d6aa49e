#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "alonzo/model.hpp"
#include "alonzo/source.hpp"

namespace alonzo {

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  out << d.span.file;
  if (d.span.line > 0) out << ':' << d.span.line << ':' << d.span.col_begin;
  out << ": error: " << error_code_name(d.code) << ": " << d.message;
  return out.str();
}

const GraphDecl* Workspace::find_graph(const std::string& name) const {
  for (const auto& g : graphs)
    if (g.name == name) return &g;
  return nullptr;
}

std::vector<Diagnostic> Workspace::open_obligation_diagnostics() const {
  std::vector<Diagnostic> out;
  for (const auto& id : morphism_order) {
    if (!graph.has_morphism(id)) continue;
    const Morphism& m = graph.morphism(id);
    SourceSpan span;
    if (auto it = morphism_locations.find(id); it != morphism_locations.end())
      span = {it->second.file, it->second.line, 1, 2};
    for (const auto& o : m.obligations)
      if (is_open(o.status))
        out.push_back({span, ErrorCode::OpenObligations,
                       "morphism " + id + " leaves obligation " + o.axiom + " open"});
  }
  return out;
}

FileReader disk_reader() {
  return [](const std::string& path) -> std::optional<std::string> {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
}

namespace {

struct Line {
  int no = 0;
  std::string text;
  std::vector<std::string> words;
};

std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    else if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Column of byte offset `at`, counting UTF-8 code points.
int column(const std::string& text, std::size_t at) {
  int col = 1;
  for (std::size_t i = 0; i < at && i < text.size(); ++i)
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++col;
  return col;
}

const std::set<std::string> kTheoryWords = {"extends", "base",       "const",   "property",
                                            "axiom",   "define",     "theorem", "notation",
                                            "provenance", "end"};
const std::set<std::string> kMorphismWords = {"kind", "map", "obligation", "end"};
const std::set<std::string> kNotationWords = {"shape", "target", "order", "binder", "latex", "end"};
const std::set<std::string> kGraphWords = {"theories", "morphisms", "end"};

struct Chunk {
  std::string text;
  SourceSpan origin;
};

struct Deferred {
  std::string theory;
  std::string item;
  SourceSpan span;
};

// An identifier that is neither bound nor a constant can only be a free
// variable, so a statement that must be closed is not a sentence.
Expr parse_sentence(const std::string& what, const std::string& text, const Theory& t,
                    const SourceSpan& origin) {
  try {
    return parse_expr(text, t.vocabulary(), t.notations(), {}, origin);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnknownConstant ||
        std::string_view(e.what()).rfind("unknown identifier", 0) != 0)
      throw;
    std::string name = e.what();
    name = name.substr(name.find('\''));
    throw Error(ErrorCode::NotASentence, what + " is not a sentence: " + name + " is free", e.span());
  }
}

class Loader {
 public:
  Loader(Workspace& ws, const FileReader& read) : ws_(ws), read_(read) {}

  void load(const std::string& path) {
    file_ = path;
    auto text = read_(path);
    if (!text) {
      ws_.diagnostics.push_back({{path, 0, 0, 0}, ErrorCode::IoError, "cannot read " + path});
      return;
    }
    ws_.texts[path] = *text;
    lines_.clear();
    std::istringstream in(*text);
    int no = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      Line l;
      l.no = no;
      l.text = strip_comment(raw);
      l.words = split_words(l.text);
      lines_.push_back(std::move(l));
    }
    pos_ = 0;
    while (skip_blank()) {
      const Line& l = lines_[pos_];
      const std::string& w = l.words[0];
      if (w == "theory") theory_block();
      else if (w == "morphism") morphism_block();
      else if (w == "notation") top_notation_block();
      else if (w == "graph") graph_block();
      else {
        report(Error(ErrorCode::SyntaxError, "expected theory, morphism, notation or graph, found '" +
                                                 w + "'"),
               span(l, 0));
        ++pos_;
      }
    }
  }

  void finish() {
    for (const auto& d : deferred_) {
      if (!ws_.graph.has_theory(d.theory)) continue;
      const Theory& t = ws_.graph.theory(d.theory);
      std::optional<std::string> problem;
      if (const Theorem* th = t.find_theorem(d.item)) {
        if (const auto* p = std::get_if<Transported>(&th->proof))
          problem = provenance_problem(ws_.graph, t, *p, th->sentence);
      } else if (const Definition* def = t.find_definition(d.item)) {
        if (def->provenance) problem = provenance_problem(ws_.graph, t, *def->provenance, def->body);
      }
      if (problem) {
        ErrorCode code = problem->rfind("unknown", 0) == 0 ? ErrorCode::UnknownItem
                                                           : ErrorCode::TheoryMismatch;
        ws_.diagnostics.push_back({d.span, code, d.theory + "." + d.item + ": " + *problem});
      }
    }
  }

 private:
  SourceSpan span(const Line& l, std::size_t at, std::size_t len = 1) const {
    int c = column(l.text, at);
    return {file_, l.no, c, c + static_cast<int>(std::max<std::size_t>(len, 1))};
  }

  // Span of the k-th word of `l`.
  SourceSpan word_span(const Line& l, std::size_t k) const {
    std::size_t at = word_pos(l, k);
    std::size_t len = k < l.words.size() ? l.words[k].size() : 1;
    return span(l, at, len);
  }

  static std::size_t word_pos(const Line& l, std::size_t k) {
    std::size_t at = 0;
    for (std::size_t i = 0; i <= k && i < l.words.size(); ++i) {
      at = l.text.find(l.words[i], at);
      if (i < k) at += l.words[i].size();
    }
    return at == std::string::npos ? 0 : at;
  }

  void report(const Error& e, const SourceSpan& fallback) {
    Error located = e.located(fallback);
    ws_.diagnostics.push_back({*located.span(), located.code(), located.what()});
  }

  // Advances past blank lines; false at end of file.
  bool skip_blank() {
    while (pos_ < lines_.size() && lines_[pos_].words.empty()) ++pos_;
    return pos_ < lines_.size();
  }

  // The current line plus continuation lines up to the next line starting
  // with one of `stops`.
  std::vector<const Line*> collect(const std::set<std::string>& stops) {
    std::vector<const Line*> out{&lines_[pos_++]};
    while (pos_ < lines_.size() &&
           (lines_[pos_].words.empty() || !stops.count(lines_[pos_].words[0])))
      out.push_back(&lines_[pos_++]);
    while (out.size() > 1 && out.back()->words.empty()) out.pop_back();
    return out;
  }

  Chunk tail(const std::vector<const Line*>& ls, std::size_t at) const {
    Chunk c;
    c.text = ls[0]->text.substr(std::min(at, ls[0]->text.size()));
    for (std::size_t i = 1; i < ls.size(); ++i) c.text += "\n" + ls[i]->text;
    c.origin = span(*ls[0], at);
    return c;
  }

  std::string resolve(const std::string& rel) const {
    std::filesystem::path p(rel);
    if (p.is_absolute()) return rel;
    return (std::filesystem::path(file_).parent_path() / p).lexically_normal().string();
  }

  FiniteModel read_model(const std::string& rel, const Theory& t) {
    std::string path = resolve(rel);
    auto text = read_(path);
    if (!text) throw Error(ErrorCode::IoError, "cannot read model " + path);
    return parse_model(*text, t, path);
  }

  // Block-level `end` with nothing after it.
  static bool is_end(const Line& l) { return l.words.size() == 1 && l.words[0] == "end"; }

  void theory_block() {
    const Line& head = lines_[pos_++];
    BlockLocation loc{file_, head.no, 0};
    bool usable = true;
    std::string name;
    if (head.words.size() != 2) {
      report(Error(ErrorCode::SyntaxError, "expected 'theory NAME'"), span(head, 0));
      usable = false;
      name = head.words.size() > 1 ? head.words[1] : "";
    } else {
      name = head.words[1];
      if (ws_.graph.has_theory(name)) {
        report(Error(ErrorCode::DuplicateName, "theory " + name + " is already declared"),
               word_span(head, 1));
        usable = false;
      }
    }
    Theory t(name);
    while (true) {
      if (!skip_blank()) {
        report(Error(ErrorCode::SyntaxError, "theory " + name + " is missing 'end'"), span(head, 0));
        return;
      }
      const Line& l = lines_[pos_];
      const std::string& w = l.words[0];
      if (w == "end") {
        loc.end_line = l.no;
        ++pos_;
        break;
      }
      try {
        if (w == "theorem") theorem_statement(t);
        else if (w == "notation") t = t.add_notation(notation_body(t, 1));
        else if (w == "define") define_statement(t);
        else {
          auto stmt = collect(kTheoryWords);
          theory_statement(t, stmt);
        }
      } catch (const Error& e) {
        report(e, span(l, word_pos(l, 0), w.size()));
      }
    }
    if (!usable) return;
    ws_.graph = ws_.graph.add_theory(t);
    ws_.theory_order.push_back(name);
    ws_.theory_locations[name] = loc;
  }

  void theory_statement(Theory& t, const std::vector<const Line*>& stmt) {
    const Line& l = *stmt[0];
    const std::string& w = l.words[0];
    auto need = [&](std::size_t n, const char* form) {
      if (l.words.size() < n) throw Error(ErrorCode::SyntaxError, std::string("expected ") + form);
    };
    if (w == "extends") {
      need(2, "'extends THEORY ...'");
      for (std::size_t k = 1; k < l.words.size(); ++k) {
        std::string parent = l.words[k];
        while (!parent.empty() && parent.back() == ',') parent.pop_back();
        if (parent.empty()) continue;
        if (!ws_.graph.has_theory(parent))
          throw Error(ErrorCode::UnknownTheory, "unknown theory " + parent, word_span(l, k));
        t = t.extend(ws_.graph.theory(parent));
      }
    } else if (w == "base") {
      need(2, "'base TYPE ...'");
      for (std::size_t k = 1; k < l.words.size(); ++k) {
        try {
          t = t.add_base_type(l.words[k]);
        } catch (const Error& e) {
          throw e.located(word_span(l, k));
        }
      }
    } else if (w == "const") {
      need(4, "'const NAME : TYPE'");
      std::size_t colon = l.text.find(':', word_pos(l, 1) + l.words[1].size());
      if (colon == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected ':' after constant name");
      Chunk c = tail(stmt, colon + 1);
      Type ty = parse_type(c.text, t.base_signature(), c.origin);
      try {
        t = t.add_constant(l.words[1], ty);
      } catch (const Error& e) {
        throw e.located(word_span(l, 1));
      }
    } else if (w == "property") {
      if (l.words.size() != 2 || l.words[1] != "infinite-only")
        throw Error(ErrorCode::SyntaxError, "expected 'property infinite-only'");
      t = t.set_infinite_only(true);
    } else if (w == "axiom") {
      need(3, "'axiom NAME : SENTENCE'");
      std::size_t colon = l.text.find(':', word_pos(l, 1) + l.words[1].size());
      if (colon == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected ':' after axiom name");
      Chunk c = tail(stmt, colon + 1);
      Expr s = parse_sentence("axiom " + l.words[1], c.text, t, c.origin);
      try {
        t = t.add_axiom(l.words[1], s);
      } catch (const Error& e) {
        throw e.located(word_span(l, 1));
      }
    } else if (w == "provenance") {
      throw Error(ErrorCode::SyntaxError, "'provenance' must follow a definition");
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown directive '" + w + "'");
    }
  }

  void define_statement(Theory& t) {
    auto stmt = collect(kTheoryWords);
    const Line& l = *stmt[0];
    if (l.words.size() < 4) throw Error(ErrorCode::SyntaxError, "expected 'define NAME CONST := EXPR'");
    std::size_t name_end = word_pos(l, 1) + l.words[1].size();
    std::size_t assign = l.text.find(":=", name_end);
    if (assign == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected ':=' in definition");
    std::string constant = trim(std::string_view(l.text).substr(name_end, assign - name_end));
    if (constant.empty() || constant.find_first_of(" \t") != std::string::npos)
      throw Error(ErrorCode::SyntaxError, "expected a single constant name before ':='");
    Chunk c = tail(stmt, assign + 2);
    std::optional<Transported> provenance;
    if (skip_blank() && lines_[pos_].words[0] == "provenance") {
      const Line& p = lines_[pos_++];
      if (p.words.size() != 4)
        throw Error(ErrorCode::SyntaxError, "expected 'provenance THEORY MORPHISM ITEM'", span(p, 0));
      provenance = Transported{p.words[1], p.words[2], p.words[3]};
    }
    Expr body = parse_expr(c.text, t.vocabulary(), t.notations(), {}, c.origin);
    try {
      t = t.add_definition(l.words[1], constant, body, provenance);
    } catch (const Error& e) {
      throw e.located(word_span(l, 2));
    }
    if (provenance) deferred_.push_back({t.name(), l.words[1], word_span(l, 1)});
  }

  void theorem_statement(Theory& t) {
    std::set<std::string> stops = kTheoryWords;
    stops.insert("proof");
    auto stmt = collect(stops);
    const Line& l = *stmt[0];
    if (l.words.size() < 3) throw Error(ErrorCode::SyntaxError, "expected 'theorem NAME : SENTENCE'");
    std::string name = l.words[1];
    std::size_t colon = l.text.find(':', word_pos(l, 1) + name.size());
    if (colon == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected ':' after theorem name");
    Chunk c = tail(stmt, colon + 1);

    if (!skip_blank() || lines_[pos_].words[0] != "proof")
      throw Error(ErrorCode::SyntaxError, "theorem " + name + " needs a 'proof' line");
    const Line& p = lines_[pos_++];
    std::vector<std::string> prose;
    bool closed = false;
    while (pos_ < lines_.size()) {
      const Line& x = lines_[pos_++];
      if (is_end(x)) {
        closed = true;
        break;
      }
      prose.push_back(trim(x.text));
    }
    if (!closed) throw Error(ErrorCode::SyntaxError, "theorem " + name + " is missing 'end'");
    while (!prose.empty() && prose.back().empty()) prose.pop_back();
    while (!prose.empty() && prose.front().empty()) prose.erase(prose.begin());

    Expr s = parse_sentence("theorem " + name, c.text, t, c.origin);
    if (p.words.size() < 2) throw Error(ErrorCode::SyntaxError, "expected a proof status", span(p, 0));
    const std::string& status = p.words[1];
    ProofRecord proof;
    if (status == "traditional") {
      std::string text;
      for (const auto& line : prose) text += (text.empty() ? "" : "\n") + line;
      proof = Traditional{text};
    } else if (status == "assumed") {
      proof = Assumed{};
    } else if (status == "transported") {
      if (p.words.size() != 5)
        throw Error(ErrorCode::SyntaxError, "expected 'proof transported THEORY MORPHISM ITEM'",
                    span(p, 0));
      proof = Transported{p.words[2], p.words[3], p.words[4]};
    } else if (status == "model-checked") {
      if (p.words.size() < 3)
        throw Error(ErrorCode::SyntaxError, "expected model files after 'model-checked'", span(p, 0));
      ModelChecked mc;
      for (std::size_t k = 2; k < p.words.size(); ++k) {
        try {
          FiniteModel m = read_model(p.words[k], t);
          SentenceCheck r = check_sentence(t, m, s);
          if (!r.failed_axioms.empty())
            throw Error(ErrorCode::InvalidModel,
                        "model " + p.words[k] + " violates axiom " + r.failed_axioms.front());
          if (!r.value)
            throw Error(ErrorCode::InvalidModel,
                        "theorem " + name + " is false in model " + p.words[k]);
        } catch (const Error& e) {
          throw e.located(word_span(p, k));
        }
        mc.models.push_back(p.words[k]);
      }
      proof = mc;
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown proof status '" + status + "'", word_span(p, 1));
    }
    try {
      t = t.add_theorem(name, s, proof);
    } catch (const Error& e) {
      throw e.located(word_span(l, 1));
    }
    if (std::holds_alternative<Transported>(proof))
      deferred_.push_back({t.name(), name, word_span(l, 1)});
  }

  // Parses notation keys up to the block's `end`. The header is the current
  // line; its word `name_word` is the sugar name.
  NotationDef notation_body(const Theory& t, std::size_t name_word) {
    const Line& head = lines_[pos_++];
    if (head.words.size() <= name_word)
      throw Error(ErrorCode::SyntaxError, "expected a notation name", span(head, 0));
    NotationDef def;
    def.sugar_name = head.words[name_word];
    bool has_shape = false, has_target = false, has_order = false;
    std::optional<Error> pending;
    while (true) {
      if (!skip_blank())
        throw Error(ErrorCode::SyntaxError, "notation " + def.sugar_name + " is missing 'end'",
                    span(head, 0));
      const Line& l = lines_[pos_++];
      const std::string& w = l.words[0];
      if (w == "end") break;
      try {
        if (w == "shape") {
          auto s = l.words.size() == 2 ? shape_from_name(l.words[1]) : std::nullopt;
          if (!s) throw Error(ErrorCode::SyntaxError, "expected 'shape range|at|plain|bounds'");
          def.shape = *s;
          has_shape = true;
        } else if (w == "target") {
          if (l.words.size() != 2) throw Error(ErrorCode::SyntaxError, "expected 'target CONST'");
          def.target = l.words[1];
          has_target = true;
        } else if (w == "order") {
          def.argument_order.clear();
          for (std::size_t k = 1; k < l.words.size(); ++k) {
            auto s = slot_from_name(l.words[k]);
            if (!s)
              throw Error(ErrorCode::SyntaxError, "unknown slot '" + l.words[k] + "'", word_span(l, k));
            def.argument_order.push_back(*s);
          }
          has_order = true;
        } else if (w == "binder") {
          if (l.words.size() == 3 && l.words[1] == "in") {
            def.binder = l.words[2];
          } else {
            std::size_t at = word_pos(l, 0) + w.size();
            def.binder = parse_type(l.text.substr(at), t.base_signature(), span(l, at));
          }
        } else if (w == "latex") {
          def.latex = trim(std::string_view(l.text).substr(word_pos(l, 0) + w.size()));
        } else {
          throw Error(ErrorCode::SyntaxError, "unknown notation key '" + w + "'");
        }
      } catch (const Error& e) {
        if (!pending) pending = e.located(span(l, word_pos(l, 0), w.size()));
      }
    }
    if (pending) throw *pending;
    if (!has_shape || !has_target)
      throw Error(ErrorCode::SyntaxError, "notation " + def.sugar_name + " needs shape and target",
                  word_span(head, name_word));
    if (!has_order) def.argument_order = shape_slots(def.shape);
    return def;
  }

  void top_notation_block() {
    const Line& head = lines_[pos_];
    if (head.words.size() != 4 || head.words[2] != "for") {
      report(Error(ErrorCode::SyntaxError, "expected 'notation NAME for THEORY'"), span(head, 0));
      skip_to_end();
      return;
    }
    const std::string& theory = head.words[3];
    if (!ws_.graph.has_theory(theory)) {
      report(Error(ErrorCode::UnknownTheory, "unknown theory " + theory), word_span(head, 3));
      skip_to_end();
      return;
    }
    try {
      const Theory& t = ws_.graph.theory(theory);
      ws_.graph = ws_.graph.replace_theory(t.add_notation(notation_body(t, 1)));
    } catch (const Error& e) {
      report(e, span(head, 0));
    }
  }

  void skip_to_end() {
    ++pos_;
    while (pos_ < lines_.size() && !is_end(lines_[pos_])) ++pos_;
    if (pos_ < lines_.size()) ++pos_;
  }

  void morphism_block() {
    const Line& head = lines_[pos_++];
    BlockLocation loc{file_, head.no, 0};
    std::optional<Error> failure;
    auto fail = [&](const Error& e, const SourceSpan& at) {
      if (!failure) failure = e.located(at);
    };

    Morphism m;
    std::size_t arrow = head.text.find("->");
    std::size_t colon = head.text.find(':');
    if (head.words.size() < 2 || colon == std::string::npos || arrow == std::string::npos ||
        arrow < colon) {
      fail(Error(ErrorCode::SyntaxError, "expected 'morphism ID : SOURCE -> TARGET'"), span(head, 0));
    } else {
      m.id = trim(std::string_view(head.text).substr(word_pos(head, 0) + 8,
                                                     colon - word_pos(head, 0) - 8));
      m.source = trim(std::string_view(head.text).substr(colon + 1, arrow - colon - 1));
      m.target = trim(std::string_view(head.text).substr(arrow + 2));
      if (ws_.graph.has_morphism(m.id))
        fail(Error(ErrorCode::DuplicateName, "morphism " + m.id + " is already declared"),
             word_span(head, 1));
      for (const auto* end : {&m.source, &m.target})
        if (!ws_.graph.has_theory(*end))
          fail(Error(ErrorCode::UnknownTheory, "unknown theory " + *end),
               span(head, head.text.find(*end, colon), end->size()));
    }
    const bool ends_known = !failure;
    std::map<std::string, ObligationStatus> declared;
    std::map<std::string, SourceSpan> declared_at;

    while (true) {
      if (!skip_blank()) {
        report(Error(ErrorCode::SyntaxError, "morphism is missing 'end'"), span(head, 0));
        return;
      }
      const Line& l = lines_[pos_];
      if (l.words[0] == "end") {
        loc.end_line = l.no;
        ++pos_;
        break;
      }
      auto stmt = collect(kMorphismWords);
      try {
        morphism_statement(m, stmt, ends_known, declared, declared_at);
      } catch (const Error& e) {
        fail(e, span(l, word_pos(l, 0), l.words[0].size()));
      }
    }
    if (failure) {
      report(*failure, span(head, 0));
      return;
    }
    const Theory& src = ws_.graph.theory(m.source);
    const Theory& tgt = ws_.graph.theory(m.target);
    try {
      m = elaborate_morphism(m, src, tgt, declared);
    } catch (const Error& e) {
      SourceSpan at = span(head, 0);
      std::string msg = e.what();
      for (const auto& [axiom, where] : declared_at)
        if (msg.find(axiom) != std::string::npos) at = where;
      report(e, at);
      return;
    }
    ws_.graph = ws_.graph.add_morphism(m);
    ws_.morphism_order.push_back(m.id);
    ws_.morphism_locations[m.id] = loc;
  }

  void morphism_statement(Morphism& m, const std::vector<const Line*>& stmt, bool ends_known,
                          std::map<std::string, ObligationStatus>& declared,
                          std::map<std::string, SourceSpan>& declared_at) {
    const Line& l = *stmt[0];
    const std::string& w = l.words[0];
    if (w == "kind") {
      if (l.words.size() != 2 || (l.words[1] != "inclusion" && l.words[1] != "general"))
        throw Error(ErrorCode::SyntaxError, "expected 'kind inclusion' or 'kind general'");
      m.kind = l.words[1] == "inclusion" ? MorphismKind::Inclusion : MorphismKind::General;
      return;
    }
    if (!ends_known) return;
    const Theory& src = ws_.graph.theory(m.source);
    const Theory& tgt = ws_.graph.theory(m.target);
    if (w == "map") {
      if (l.words.size() < 5 || (l.words[1] != "type" && l.words[1] != "const"))
        throw Error(ErrorCode::SyntaxError, "expected 'map type T => TYPE' or 'map const c => EXPR'");
      const std::string& from = l.words[2];
      std::size_t arrow = l.text.find("=>", word_pos(l, 2) + from.size());
      if (arrow == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected '=>' in map");
      Chunk c = tail(stmt, arrow + 2);
      if (l.words[1] == "type") {
        if (!src.base_signature().has_base_type(from))
          throw Error(ErrorCode::UnknownBaseType, "unknown base type " + from + " in " + src.name(),
                      word_span(l, 2));
        m.type_map.insert_or_assign(from, parse_type(c.text, tgt.base_signature(), c.origin));
      } else {
        if (!src.vocabulary().has_constant(from))
          throw Error(ErrorCode::UnknownConstant, "unknown constant " + from + " in " + src.name(),
                      word_span(l, 2));
        std::string image = trim(c.text);
        if (is_infix_operator(image) && tgt.vocabulary().has_constant(image))
          m.const_map.insert_or_assign(from, tgt.vocabulary().constant(image));
        else
          m.const_map.insert_or_assign(
              from, parse_expr(c.text, tgt.vocabulary(), tgt.notations(), {}, c.origin));
      }
    } else if (w == "obligation") {
      if (l.words.size() < 4) throw Error(ErrorCode::SyntaxError, "expected 'obligation AXIOM := STATUS'");
      const std::string& axiom = l.words[1];
      std::size_t assign = l.text.find(":=", word_pos(l, 1) + axiom.size());
      if (assign == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected ':=' in obligation");
      Chunk c = tail(stmt, assign + 2);
      std::vector<std::string> words = split_words(c.text);
      if (words.empty()) throw Error(ErrorCode::SyntaxError, "expected an obligation status");
      ObligationStatus status;
      if (words[0] == "asserted") {
        std::size_t q1 = c.text.find('"');
        std::size_t q2 = c.text.rfind('"');
        if (q1 == std::string::npos || q2 == q1)
          throw Error(ErrorCode::SyntaxError, "expected a quoted justification after 'asserted'");
        std::string text = c.text.substr(q1 + 1, q2 - q1 - 1);
        std::replace(text.begin(), text.end(), '\n', ' ');
        status = Asserted{text};
      } else if (words[0] == "by-theorem" && words.size() == 2) {
        status = DischargedByTheorem{words[1]};
      } else if (words[0] == "by-axiom" && words.size() == 2) {
        status = DischargedByAxiom{words[1]};
      } else if (words[0] == "by-model" && words.size() >= 2) {
        const Axiom* ax = src.find_axiom(axiom);
        if (!ax) throw Error(ErrorCode::UnknownItem, "no axiom " + axiom + " in " + src.name());
        Expr sentence = translate_expr(m, ax->sentence, src, tgt);
        ModelEvidence ev;
        for (std::size_t k = 1; k < words.size(); ++k) {
          FiniteModel model = read_model(words[k], tgt);
          SentenceCheck r = check_sentence(tgt, model, sentence);
          if (!r.value)
            throw Error(ErrorCode::InvalidModel,
                        "obligation " + axiom + " is false in model " + words[k]);
          ev.models.push_back(words[k]);
        }
        status = ev;
      } else {
        throw Error(ErrorCode::SyntaxError, "unknown obligation status '" + words[0] + "'");
      }
      if (declared.count(axiom))
        throw Error(ErrorCode::DuplicateName, "obligation " + axiom + " is declared twice",
                    word_span(l, 1));
      declared[axiom] = status;
      declared_at[axiom] = word_span(l, 1);
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown directive '" + w + "'");
    }
  }

  void graph_block() {
    const Line& head = lines_[pos_++];
    GraphDecl g;
    g.span = word_span(head, 1);
    if (head.words.size() != 2) {
      report(Error(ErrorCode::SyntaxError, "expected 'graph NAME'"), span(head, 0));
    } else {
      g.name = head.words[1];
    }
    bool ok = head.words.size() == 2;
    if (ok && ws_.find_graph(g.name)) {
      report(Error(ErrorCode::DuplicateName, "graph " + g.name + " is already declared"), g.span);
      ok = false;
    }
    while (true) {
      if (!skip_blank()) {
        report(Error(ErrorCode::SyntaxError, "graph is missing 'end'"), span(head, 0));
        return;
      }
      const Line& l = lines_[pos_];
      const std::string& w = l.words[0];
      if (w == "end") {
        ++pos_;
        break;
      }
      auto stmt = collect(kGraphWords);
      if (w != "theories" && w != "morphisms") {
        report(Error(ErrorCode::SyntaxError, "unknown directive '" + w + "'"), span(l, 0));
        ok = false;
        continue;
      }
      for (const Line* x : stmt)
        for (std::size_t k = (x == stmt[0] ? 1 : 0); k < x->words.size(); ++k) {
          const std::string& name = x->words[k];
          bool known = w == "theories" ? ws_.graph.has_theory(name) : ws_.graph.has_morphism(name);
          if (!known) {
            report(Error(w == "theories" ? ErrorCode::UnknownTheory : ErrorCode::UnknownItem,
                         "unknown " + std::string(w == "theories" ? "theory " : "morphism ") + name),
                   word_span(*x, k));
            ok = false;
          }
          (w == "theories" ? g.theories : g.morphisms).push_back(name);
        }
    }
    if (!ok) return;
    try {
      ws_.graph.subgraph(g.theories, g.morphisms);
    } catch (const Error& e) {
      report(e, g.span);
      return;
    }
    ws_.graphs.push_back(std::move(g));
  }

  Workspace& ws_;
  const FileReader& read_;
  std::string file_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::vector<Deferred> deferred_;
};

}  // namespace

Workspace load_sources(const std::vector<std::string>& paths, const FileReader& read) {
  Workspace ws;
  Loader loader(ws, read);
  for (const auto& p : paths) loader.load(p);
  loader.finish();
  std::stable_sort(ws.diagnostics.begin(), ws.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.line, a.span.col_begin) <
                            std::tie(b.span.file, b.span.line, b.span.col_begin);
                   });
  return ws;
}

Workspace load_files(const std::vector<std::string>& paths) {
  return load_sources(paths, disk_reader());
}

}  // namespace alonzo
