#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "alonzo/model.hpp"

namespace alonzo {

namespace {

bool first_order(const Type& t) { return t.is_base() || t.is_bool(); }

// Splits a constant type into first-order arguments and a first-order result
// when it has that shape.
bool table_shape(const Type& ty, std::vector<Type>& args, std::optional<Type>& result) {
  args.clear();
  Type cur = ty;
  while (cur.is_fun() && first_order(cur.dom())) {
    args.push_back(cur.dom());
    cur = cur.cod();
  }
  if (!first_order(cur)) return false;
  result = cur;
  return true;
}

std::string atom_name(const FiniteModel& m, const Type& t, const Value& v) {
  if (v.is_undef()) return "_";
  if (t.is_bool()) return v.truth_value() ? "true" : "false";
  return m.carriers.at(t.name()).at(static_cast<std::size_t>(v.index()));
}

// Collects the table cells of a curried first-order function value; fails
// when some prefix is undefined.
bool table_cells(const Value& v, std::size_t depth, std::vector<Value>& out) {
  if (depth == 0) {
    out.push_back(v);
    return true;
  }
  if (v.kind() != Value::Kind::Func) return false;
  for (const auto& x : v.items())
    if (!table_cells(x, depth - 1, out)) return false;
  return true;
}

}  // namespace

std::string format_value(const FiniteModel& m, const Type& t, const Value& v) {
  if (v.is_undef()) return "_";
  switch (t.kind()) {
    case Type::Kind::Bool:
    case Type::Kind::Base:
      return atom_name(m, t, v);
    case Type::Kind::Fun: {
      Domains dom(m);
      const auto& points = dom.values(t.dom());
      std::string s = "{";
      bool first = true;
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (v.items()[i].is_undef()) continue;
        if (!first) s += ", ";
        first = false;
        s += format_value(m, t.dom(), points[i]) + " -> " + format_value(m, t.cod(), v.items()[i]);
      }
      return s + "}";
    }
    case Type::Kind::Prod:
      return "(" + format_value(m, t.first(), v.items()[0]) + ", " +
             format_value(m, t.second(), v.items()[1]) + ")";
    case Type::Kind::SetOf: {
      std::string s = "{";
      for (std::size_t i = 0; i < v.items().size(); ++i) {
        if (i) s += ", ";
        s += format_value(m, t.elem(), v.items()[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

std::string format_model(const Theory& t, const FiniteModel& m) {
  std::ostringstream out;
  out << "model " << (m.name.empty() ? "unnamed" : m.name) << " for " << t.name() << "\n";
  for (const auto& [b, elems] : m.carriers) {
    out << "  carrier " << b << " =";
    for (const auto& e : elems) out << ' ' << e;
    out << "\n";
  }
  // Same order as the search fills them in: small tables first.
  std::vector<std::pair<std::size_t, std::string>> order;
  Domains dom(m);
  for (const auto& [c, ty] : t.base_signature().constants()) {
    std::vector<Type> args;
    std::optional<Type> result;
    std::size_t cells = 1;
    if (table_shape(ty, args, result))
      for (const auto& a : args) cells *= dom.size(a);
    order.emplace_back(cells, c);
  }
  std::stable_sort(order.begin(), order.end());
  for (const auto& [cells, c] : order) {
    auto it = m.interp.find(c);
    if (it == m.interp.end()) continue;
    const Type& ty = t.base_signature().constant_type(c);
    const Value& v = it->second;
    std::vector<Type> args;
    std::optional<Type> result;
    std::vector<Value> flat;
    if (table_shape(ty, args, result) && args.empty()) {
      out << "  const " << c << " = " << atom_name(m, *result, v) << "\n";
    } else if (table_shape(ty, args, result) && table_cells(v, args.size(), flat)) {
      out << "  table " << c << "\n";
      std::size_t cols = dom.size(args.back());
      for (std::size_t i = 0; i < flat.size(); i += cols) {
        out << "   ";
        for (std::size_t j = 0; j < cols; ++j) out << ' ' << atom_name(m, *result, flat[i + j]);
        out << "\n";
      }
    } else {
      out << "  value " << c << " = " << format_value(m, ty, v) << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

class LiteralParser {
 public:
  LiteralParser(const std::string& text, const FiniteModel& m, Domains& dom)
      : m_(m), dom_(dom) {
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',') {
        toks_.emplace_back(1, c);
        ++i;
      } else if (text.compare(i, 2, "->") == 0) {
        toks_.push_back("->");
        i += 2;
      } else {
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
               std::string("{}(),").find(text[j]) == std::string::npos &&
               text.compare(j, 2, "->") != 0)
          ++j;
        toks_.push_back(text.substr(i, j - i));
        i = j;
      }
    }
  }

  Value parse(const Type& t) {
    Value v = value(t);
    if (pos_ != toks_.size()) fail("unexpected '" + toks_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) { throw Error(ErrorCode::InvalidModel, why); }
  const std::string& peek() {
    static const std::string end;
    return pos_ < toks_.size() ? toks_[pos_] : end;
  }
  std::string next() {
    if (pos_ >= toks_.size()) fail("unexpected end of value");
    return toks_[pos_++];
  }
  void expect(const std::string& s) {
    if (next() != s) fail("expected '" + s + "'");
  }

  Value value(const Type& t) {
    switch (t.kind()) {
      case Type::Kind::Bool: {
        std::string w = next();
        if (w == "true") return Value::truth(true);
        if (w == "false") return Value::truth(false);
        fail("expected true or false, found '" + w + "'");
      }
      case Type::Kind::Base: {
        std::string w = next();
        const auto& elems = m_.carriers.at(t.name());
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (elems[i] == w) return Value::elem(static_cast<int>(i));
        fail("'" + w + "' is not an element of " + t.name());
      }
      case Type::Kind::Prod: {
        expect("(");
        Value a = value(t.first());
        expect(",");
        Value b = value(t.second());
        expect(")");
        return Value::tuple(a, b);
      }
      case Type::Kind::SetOf: {
        expect("{");
        std::vector<Value> members;
        while (peek() != "}") {
          members.push_back(value(t.elem()));
          if (peek() == ",") next();
        }
        expect("}");
        return Value::set(std::move(members));
      }
      case Type::Kind::Fun: {
        expect("{");
        std::vector<Value> table(dom_.size(t.dom()), Value::undef());
        std::vector<bool> seen(table.size(), false);
        while (peek() != "}") {
          Value p = value(t.dom());
          expect("->");
          Value r = value(t.cod());
          std::size_t i = dom_.index_of(t.dom(), p);
          if (seen[i]) fail("point listed twice in function value");
          seen[i] = true;
          table[i] = r;
          if (peek() == ",") next();
        }
        expect("}");
        if (t.cod().is_bool())
          for (bool s : seen)
            if (!s) fail("predicate values must list every point");
        return Value::func(std::move(table));
      }
    }
    fail("bad type");
  }

  const FiniteModel& m_;
  Domains& dom_;
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

const std::set<std::string>& directives() {
  static const std::set<std::string> d = {"model", "carrier", "const", "table", "value", "end"};
  return d;
}

}  // namespace

std::optional<std::string> model_theory_name(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    auto w = split_words(line);
    if (w.empty()) continue;
    if (w.size() == 4 && w[0] == "model" && w[2] == "for") return w[3];
    return std::nullopt;
  }
  return std::nullopt;
}

FiniteModel parse_model(std::string_view text, const Theory& t, const std::string& file) {
  FiniteModel m;
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) lines.push_back(line.substr(0, line.find('#')));
  }
  int lineno = 0;
  auto located = [&](ErrorCode code, const std::string& why) {
    int width = lineno > 0 ? static_cast<int>(lines[lineno - 1].size()) + 1 : 1;
    return Error(code, why, SourceSpan{file, lineno, 1, std::max(width, 2)});
  };
  const Signature& sig = t.base_signature();
  bool header = false, ended = false;

  struct PendingTable {
    std::string name;
    int line;
    std::vector<std::vector<std::string>> rows;
  };
  std::optional<PendingTable> table;

  auto finish_table = [&]() {
    if (!table) return;
    const Type& ty = sig.constant_type(table->name);
    std::vector<Type> args;
    std::optional<Type> result;
    table_shape(ty, args, result);
    Domains dom(m);
    std::size_t rows = 1;
    for (std::size_t i = 0; i + 1 < args.size(); ++i) rows *= dom.size(args[i]);
    std::size_t cols = dom.size(args.back());
    int saved = lineno;
    lineno = table->line;
    if (table->rows.size() != rows)
      throw located(ErrorCode::InvalidModel, "table " + table->name + " needs " +
                                                 std::to_string(rows) + " rows, found " +
                                                 std::to_string(table->rows.size()));
    std::vector<Value> cells;
    for (const auto& row : table->rows) {
      if (row.size() != cols)
        throw located(ErrorCode::InvalidModel, "table " + table->name + " needs " +
                                                   std::to_string(cols) + " columns per row");
      for (const auto& w : row) {
        if (w == "_") {
          if (result->is_bool())
            throw located(ErrorCode::InvalidModel,
                          "predicate table " + table->name + " cannot leave cells undefined");
          cells.push_back(Value::undef());
          continue;
        }
        try {
          LiteralParser lp(w, m, dom);
          cells.push_back(lp.parse(*result));
        } catch (const Error& err) {
          throw located(err.code(), err.what());
        }
      }
    }
    // Rebuild the curried value from the flat cells.
    std::function<Value(std::size_t, std::size_t)> build = [&](std::size_t arg,
                                                               std::size_t offset) -> Value {
      if (arg == args.size()) return cells[offset];
      std::size_t stride = 1;
      for (std::size_t i = arg + 1; i < args.size(); ++i) stride *= dom.size(args[i]);
      std::vector<Value> tab;
      for (std::size_t k = 0; k < dom.size(args[arg]); ++k) tab.push_back(build(arg + 1, offset + k * stride));
      return Value::func(std::move(tab));
    };
    m.interp[table->name] = build(0, 0);
    table.reset();
    lineno = saved;
  };

  auto require_constant = [&](const std::string& c) -> const Type& {
    if (!sig.has_constant(c))
      throw located(ErrorCode::ModelDoesNotMatchSignature,
                    t.vocabulary().has_constant(c)
                        ? "'" + c + "' is a defined constant of " + t.name() +
                              " and is evaluated, not interpreted"
                        : "theory " + t.name() + " has no constant '" + c + "'");
    if (m.interp.count(c)) throw located(ErrorCode::InvalidModel, "'" + c + "' interpreted twice");
    return sig.constant_type(c);
  };

  for (const auto& raw : lines) {
    ++lineno;
    auto w = split_words(raw);
    if (w.empty()) continue;
    if (ended) throw located(ErrorCode::SyntaxError, "text after 'end'");
    if (table && !directives().count(w[0])) {
      table->rows.push_back(w);
      continue;
    }
    finish_table();
    if (!header) {
      if (w.size() != 4 || w[0] != "model" || w[2] != "for")
        throw located(ErrorCode::SyntaxError, "expected 'model <name> for <theory>'");
      if (w[3] != t.name())
        throw located(ErrorCode::ModelDoesNotMatchSignature,
                      "model is for theory " + w[3] + ", not " + t.name());
      m.name = w[1];
      m.theory = w[3];
      header = true;
      continue;
    }
    if (w[0] == "end") {
      ended = true;
    } else if (w[0] == "carrier") {
      if (w.size() < 4 || w[2] != "=")
        throw located(ErrorCode::SyntaxError, "expected 'carrier <type> = <elements>'");
      if (!sig.has_base_type(w[1]))
        throw located(ErrorCode::ModelDoesNotMatchSignature,
                      "theory " + t.name() + " has no base type " + w[1]);
      std::vector<std::string> elems(w.begin() + 3, w.end());
      std::set<std::string> uniq(elems.begin(), elems.end());
      if (uniq.size() != elems.size())
        throw located(ErrorCode::InvalidModel, "carrier " + w[1] + " repeats an element");
      if (m.carriers.count(w[1]))
        throw located(ErrorCode::InvalidModel, "carrier " + w[1] + " declared twice");
      m.carriers[w[1]] = elems;
    } else if (w[0] == "table") {
      if (w.size() != 2) throw located(ErrorCode::SyntaxError, "expected 'table <constant>'");
      const Type& ty = require_constant(w[1]);
      std::vector<Type> args;
      std::optional<Type> result;
      if (!table_shape(ty, args, result) || args.empty())
        throw located(ErrorCode::InvalidModel,
                      "'" + w[1] + "' : " + ty.to_string() + " cannot be given as a table");
      table = PendingTable{w[1], lineno, {}};
    } else if (w[0] == "const" || w[0] == "value") {
      if (w.size() < 4 || (w[2] != "=" && w[2] != ":="))
        throw located(ErrorCode::SyntaxError,
                      "expected '" + w[0] + " <constant> = <value>' or ':= <expression>'");
      const Type& ty = require_constant(w[1]);
      std::size_t at = raw.find(w[2], raw.find(w[1]) + w[1].size());
      std::string rest = raw.substr(at + w[2].size());
      try {
        if (w[2] == ":=") {
          SourceSpan origin{file, lineno, static_cast<int>(at + w[2].size()) + 1, 0};
          Expr e = parse_expr(rest, t.vocabulary(), t.notations(), {}, origin);
          Type et = type_of(e, t.vocabulary());
          if (et != ty)
            throw Error(ErrorCode::TypeMismatch, "expression has type " + et.to_string() +
                                                     ", constant has type " + ty.to_string());
          Evaluator ev(m, &t);
          Value v = ev.eval(e);
          if (v.is_undef())
            throw Error(ErrorCode::InvalidModel, "expression for '" + w[1] + "' is undefined");
          m.interp[w[1]] = v;
        } else {
          Domains dom(m);
          LiteralParser lp(rest, m, dom);
          m.interp[w[1]] = lp.parse(ty);
        }
      } catch (const Error& err) {
        if (err.span()) throw;
        throw located(err.code(), err.what());
      }
    } else if (w[0] == "model") {
      throw located(ErrorCode::SyntaxError, "only one model per file");
    } else {
      throw located(ErrorCode::SyntaxError, "unknown directive '" + w[0] + "'");
    }
  }
  finish_table();
  if (!header) throw located(ErrorCode::SyntaxError, "empty model file");
  if (!ended) throw located(ErrorCode::SyntaxError, "missing 'end'");
  lineno = 0;
  check_model(t, m);
  return m;
}

}  // namespace alonzo
