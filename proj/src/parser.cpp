#include <cctype>
#include <set>

#include "alonzo/notation.hpp"

namespace alonzo {

namespace {

using K = Expr::Kind;

enum class TokKind { Ident, Number, Symbol, End };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int col;
};

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> kw = {
      "forall", "exists", "fun", "iota", "not", "and",  "or",
      "in",     "defined", "fst", "snd", "to",  "of",   "from"};
  return kw;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '@';
}

std::vector<Token> lex(std::string_view text, const SourceSpan& origin) {
  static constexpr std::string_view symbols[] = {"<=>", "=>", "->", "<=", ">=", ":=", "(", ")",
                                                 "{",   "}",  ",",  ".",  ":",  "=",  "<", ">",
                                                 "+",   "-",  "*",  "/", "\u00b7"};
  std::vector<Token> out;
  int line = origin.line > 0 ? origin.line : 1;
  int col = origin.col_begin > 0 ? origin.col_begin : 1;
  std::size_t i = 0;
  auto span_error = [&](const std::string& msg) {
    throw Error(ErrorCode::SyntaxError, msg, SourceSpan{origin.file, line, col, col + 1});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      ++i;
      while (i < text.size()) {
        if (ident_char(text[i])) {
          ++i;
        } else if (text[i] == '-' && i + 1 < text.size() &&
                   std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
          i += 2;
        } else {
          break;
        }
      }
      out.push_back({TokKind::Ident, std::string(text.substr(start, i - start)), line, col});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokKind::Number, std::string(text.substr(start, i - start)), line, col});
    } else {
      bool matched = false;
      for (auto sym : symbols) {
        if (text.substr(i, sym.size()) == sym) {
          out.push_back({TokKind::Symbol, std::string(sym), line, col});
          i += sym.size();
          matched = true;
          break;
        }
      }
      if (!matched) span_error(std::string("unexpected character '") + c + "'");
    }
    for (std::size_t k = start; k < i; ++k)
      if ((static_cast<unsigned char>(text[k]) & 0xC0) != 0x80) ++col;
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

bool is_relop(const Token& t) {
  if (t.kind == TokKind::Ident) return t.text == "in";
  return t.kind == TokKind::Symbol &&
         (t.text == "=" || t.text == "<" || t.text == "<=" || t.text == ">" || t.text == ">=");
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const Signature& sig, const NotationSet& notations,
         const TypeEnv& env, std::string file)
      : toks_(std::move(toks)), sig_(sig), notations_(notations), env_(env),
        file_(std::move(file)) {}

  Expr parse_top() {
    Expr e = parse_expr0();
    if (peek().kind != TokKind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

  Type parse_type_top() {
    Type t = parse_type();
    if (peek().kind != TokKind::End) fail("unexpected '" + peek().text + "' in type");
    return t;
  }

 private:
  // -- token helpers --------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& advance() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_symbol(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokKind::Symbol && t.text == s;
  }
  bool at_keyword(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokKind::Ident && t.text == s;
  }
  bool at_plain_ident(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokKind::Ident && !keywords().count(t.text);
  }

  SourceSpan span_of(const Token& t) const {
    int len = t.text.empty() ? 1 : static_cast<int>(t.text.size());
    return SourceSpan{file_, t.line, t.col, t.col + len};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg, span_of(peek()));
  }
  [[noreturn]] void fail_at(const Token& t, ErrorCode code, const std::string& msg) const {
    throw Error(code, msg, span_of(t));
  }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail("expected '" + std::string(s) + "'" + found());
    advance();
  }
  void expect_keyword(std::string_view s) {
    if (!at_keyword(s)) fail("expected '" + std::string(s) + "'" + found());
    advance();
  }
  std::string found() const {
    if (peek().kind == TokKind::End) return " at end of input";
    return ", found '" + peek().text + "'";
  }
  std::string expect_ident() {
    if (!at_plain_ident()) fail("expected an identifier" + found());
    return advance().text;
  }

  // -- types ------------------------------------------------------------------

  Type parse_type() {
    Type left = parse_prod_type();
    if (at_symbol("->")) {
      advance();
      return Type::fun(left, parse_type());
    }
    return left;
  }

  Type parse_prod_type() {
    Type left = parse_atom_type();
    if (at_symbol("*")) {
      advance();
      return Type::prod(left, parse_prod_type());
    }
    return left;
  }

  Type parse_atom_type() {
    const Token& t = peek();
    if (at_symbol("(")) {
      advance();
      Type inner = parse_type();
      expect_symbol(")");
      return inner;
    }
    if (at_symbol("{")) {
      advance();
      Type inner = parse_type();
      expect_symbol("}");
      return Type::set_of(inner);
    }
    if (t.kind == TokKind::Ident && !keywords().count(t.text)) {
      advance();
      if (t.text == "Bool") return Type::boolean();
      if (!sig_.has_base_type(t.text))
        fail_at(t, ErrorCode::UnknownBaseType, "unknown base type '" + t.text + "'");
      return Type::base(t.text);
    }
    fail("expected a type" + found());
  }

  // -- checked constructors ---------------------------------------------------

  [[noreturn]] void mismatch(const Token& at, const Type& expected,
                             const std::optional<Type>& found) const {
    fail_at(at, ErrorCode::TypeMismatch,
            "type mismatch: expected " + expected.to_string() + ", found " +
                (found ? found->to_string() : std::string("ill-typed term")));
  }

  Expr mk_app(const Token& at, const Expr& f, const Expr& a) const {
    const auto& ft = f.type();
    if (!ft || !ft->is_fun())
      fail_at(at, ErrorCode::TypeMismatch,
              "cannot apply a term of type " + (ft ? ft->to_string() : std::string("?")));
    if (!a.type() || *a.type() != ft->dom()) mismatch(at, ft->dom(), a.type());
    return Expr::app(f, a);
  }

  void expect_bool(const Token& at, const Expr& e) const {
    if (!e.type() || !e.type()->is_bool()) mismatch(at, Type::boolean(), e.type());
  }

  Expr mk_rel(const Token& op, const Expr& l, const Expr& r) const {
    if (op.text == "=") {
      if (!l.type() || !r.type() || *l.type() != *r.type()) mismatch(op, *l.type(), r.type());
      return Expr::eq(l, r);
    }
    if (op.text == "in") {
      Type want = Type::set_of(*l.type());
      if (!r.type() || *r.type() != want) mismatch(op, want, r.type());
      return Expr::member(l, r);
    }
    Expr c = lookup_constant(op, op.text);
    return mk_app(op, mk_app(op, c, l), r);
  }

  Expr lookup_constant(const Token& at, const std::string& name) const {
    if (!sig_.has_constant(name))
      fail_at(at, ErrorCode::UnknownConstant, "unknown constant '" + name + "'");
    return sig_.constant(name);
  }

  Expr lookup_ident(const Token& at) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == at.text) return Expr::var(*it);
    if (auto it = env_.find(at.text); it != env_.end()) return Expr::var(at.text, it->second);
    if (!sig_.has_constant(at.text))
      fail_at(at, ErrorCode::UnknownConstant, "unknown identifier '" + at.text + "'");
    return sig_.constant(at.text);
  }

  // -- expressions ------------------------------------------------------------

  Expr parse_expr0() { return parse_iff(); }

  Expr parse_iff() {
    Expr l = parse_implies();
    if (at_symbol("<=>")) {
      const Token& op = advance();
      Expr r = parse_iff();
      expect_bool(op, l);
      expect_bool(op, r);
      return Expr::iff(l, r);
    }
    return l;
  }

  Expr parse_implies() {
    Expr l = parse_or();
    if (at_symbol("=>")) {
      const Token& op = advance();
      Expr r = parse_implies();
      expect_bool(op, l);
      expect_bool(op, r);
      return Expr::implies(l, r);
    }
    return l;
  }

  Expr parse_or() {
    Expr l = parse_and();
    if (at_keyword("or")) {
      const Token& op = advance();
      Expr r = parse_or();
      expect_bool(op, l);
      expect_bool(op, r);
      return Expr::or_(l, r);
    }
    return l;
  }

  Expr parse_and() {
    Expr l = parse_not();
    if (at_keyword("and")) {
      const Token& op = advance();
      Expr r = parse_and();
      expect_bool(op, l);
      expect_bool(op, r);
      return Expr::and_(l, r);
    }
    return l;
  }

  Expr parse_not() {
    if (at_keyword("not")) {
      const Token& op = advance();
      Expr e = parse_not();
      expect_bool(op, e);
      return Expr::not_(e);
    }
    return parse_rel();
  }

  Expr parse_rel() {
    std::vector<Expr> operands{parse_add()};
    std::vector<Token> ops;
    while (is_relop(peek())) {
      ops.push_back(advance());
      operands.push_back(parse_add());
    }
    if (ops.empty()) return operands[0];
    // a R1 b R2 c  ~>  (a R1 b) and ((b R2 c) and ...)
    Expr out = mk_rel(ops.back(), operands[ops.size() - 1], operands[ops.size()]);
    for (std::size_t i = ops.size() - 1; i-- > 0;)
      out = Expr::and_(mk_rel(ops[i], operands[i], operands[i + 1]), out);
    return out;
  }

  Expr parse_add() {
    Expr l = parse_mul();
    while (at_symbol("+") || at_symbol("-")) {
      const Token& op = advance();
      Expr r = parse_mul();
      l = mk_app(op, mk_app(op, lookup_constant(op, op.text), l), r);
    }
    return l;
  }

  Expr parse_mul() {
    Expr l = parse_app();
    while (at_symbol("*") || at_symbol("/") || at_symbol("\u00b7")) {
      const Token& op = advance();
      Expr r = parse_app();
      l = mk_app(op, mk_app(op, lookup_constant(op, op.text), l), r);
    }
    return l;
  }

  Expr parse_app() {
    Expr e = parse_primary();
    while (at_symbol("(")) {
      const Token& open = advance();
      do {
        Expr a = parse_expr0();
        e = mk_app(open, e, a);
      } while (at_symbol(",") && (advance(), true));
      expect_symbol(")");
    }
    return e;
  }

  Expr parse_primary() {
    const Token& t = peek();
    if (t.kind == TokKind::Number) {
      advance();
      return lookup_constant(t, t.text);
    }
    if (t.kind == TokKind::Symbol) {
      if (t.text == "(") return parse_paren();
      if (t.text == "{") return parse_set_literal();
      fail("unexpected '" + t.text + "'");
    }
    if (t.kind == TokKind::End) fail("unexpected end of input");

    const std::string& w = t.text;
    if (w == "forall" || w == "exists" || w == "fun" || w == "iota") return parse_binder();
    if (w == "not") return parse_not();
    if (w == "defined" || w == "fst" || w == "snd") {
      advance();
      expect_symbol("(");
      Expr inner = parse_expr0();
      expect_symbol(")");
      if (w == "defined") return Expr::is_defined(inner);
      if (!inner.type() || !inner.type()->is_prod())
        fail_at(t, ErrorCode::TypeMismatch,
                "'" + w + "' expects a pair, found " +
                    (inner.type() ? inner.type()->to_string() : std::string("?")));
      return w == "fst" ? Expr::proj1(inner) : Expr::proj2(inner);
    }
    if (keywords().count(w)) fail("unexpected keyword '" + w + "'");
    if (const NotationDef* def = sugar_at_cursor()) return parse_sugar(*def);
    advance();
    return lookup_ident(t);
  }

  Expr parse_paren() {
    advance();  // (
    if (peek().kind == TokKind::Symbol && is_infix_operator(peek().text) && at_symbol(")", 1)) {
      const Token& op = advance();
      advance();
      return lookup_constant(op, op.text);
    }
    Expr first = parse_expr0();
    if (at_symbol(",")) {
      advance();
      Expr second = parse_expr0();
      expect_symbol(")");
      return Expr::pair(first, second);
    }
    expect_symbol(")");
    return first;
  }

  Expr parse_set_literal() {
    const Token& open = advance();  // {
    if (at_symbol(":")) {
      advance();
      Type elem = parse_type();
      expect_symbol("}");
      return Expr::set_lit(elem, {});
    }
    std::vector<Expr> members{parse_expr0()};
    while (at_symbol(",")) {
      advance();
      members.push_back(parse_expr0());
    }
    expect_symbol("}");
    Type elem = *members[0].type();
    for (const auto& m : members)
      if (!m.type() || *m.type() != elem) mismatch(open, elem, m.type());
    return Expr::set_lit(elem, std::move(members));
  }

  struct BinderGroup {
    Token at;
    std::string name;
    Type type;
    std::optional<Expr> guard;
  };

  Expr parse_binder() {
    const Token kw = advance();
    std::vector<BinderGroup> vars;
    std::size_t pushed = 0;
    for (;;) {
      std::vector<Token> names;
      names.push_back(peek());
      expect_ident();
      while (at_symbol(",") && at_plain_ident(1)) {
        advance();
        names.push_back(advance());
      }
      if (at_keyword("in")) {
        advance();
        if (names.size() != 1) fail_at(names[1], ErrorCode::SyntaxError,
                                       "a guarded binder takes exactly one variable");
        Expr guard = parse_add();
        if (!guard.type() || !guard.type()->is_set())
          fail_at(names[0], ErrorCode::TypeMismatch,
                  "binder guard must be a set, found " +
                      (guard.type() ? guard.type()->to_string() : std::string("?")));
        vars.push_back({names[0], names[0].text, guard.type()->elem(), guard});
        scope_.push_back({names[0].text, guard.type()->elem()});
        ++pushed;
      } else {
        expect_symbol(":");
        Type ty = parse_type();
        for (const auto& n : names) {
          vars.push_back({n, n.text, ty, std::nullopt});
          scope_.push_back({n.text, ty});
          ++pushed;
        }
      }
      if (at_symbol(",")) {
        advance();
        continue;
      }
      expect_symbol(".");
      break;
    }
    Expr body = parse_expr0();
    scope_.erase(scope_.end() - pushed, scope_.end());

    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      Expr var = Expr::var(it->name, it->type);
      if (kw.text == "fun") {
        body = it->guard ? Expr::guarded_abs(it->name, it->type, *it->guard, body)
                         : Expr::abs(it->name, it->type, body);
        continue;
      }
      if (!body.type() || !body.type()->is_bool())
        fail_at(kw, ErrorCode::NonBooleanBinderBody,
                "body of '" + kw.text + "' must be Boolean, found " +
                    (body.type() ? body.type()->to_string() : std::string("?")));
      if (it->guard) {
        Expr mem = Expr::member(var, *it->guard);
        body = kw.text == "forall" ? Expr::implies(mem, body) : Expr::and_(mem, body);
      }
      if (kw.text == "forall")
        body = Expr::forall(it->name, it->type, body);
      else if (kw.text == "exists")
        body = Expr::exists(it->name, it->type, body);
      else
        body = Expr::iota(it->name, it->type, body);
    }
    return body;
  }

  // -- notational definitions -------------------------------------------------

  bool active(const NotationDef& def) const {
    if (!def.target_type || !sig_.has_constant(def.target)) return false;
    if (sig_.constant_type(def.target) != *def.target_type) return false;
    if (def.guarded()) {
      const auto& g = std::get<std::string>(def.binder);
      if (!sig_.has_constant(g) || sig_.constant_type(g) != Type::set_of(*def.binder_type))
        return false;
    }
    return true;
  }

  const NotationDef* sugar_at_cursor() const {
    if (peek().kind != TokKind::Ident) return nullptr;
    const NotationDef* def = notations_.find(peek().text);
    if (!def || !active(*def)) return nullptr;
    switch (def->shape) {
      case NotationShape::BinderOverRange:
        return at_plain_ident(1) && at_symbol("=", 2) ? def : nullptr;
      case NotationShape::BinderAt:
        return at_plain_ident(1) && at_symbol("->", 2) ? def : nullptr;
      case NotationShape::BinderPlain:
        return at_plain_ident(1) && at_keyword("of", 2) ? def : nullptr;
      case NotationShape::BinderWithBounds:
        return at_keyword("from", 1) ? def : nullptr;
    }
    return nullptr;
  }

  Expr parse_sugar(const NotationDef& def) {
    const Token kw = advance();
    NotationInstance inst{{}, std::nullopt, std::nullopt, std::nullopt, Expr::var("_", Type::boolean())};
    const Type& alpha = *def.binder_type;
    auto with_var = [&](auto&& parse_body) {
      scope_.push_back({inst.var, alpha});
      inst.body = parse_body();
      scope_.pop_back();
    };
    switch (def.shape) {
      case NotationShape::BinderOverRange:
        inst.var = expect_ident();
        expect_symbol("=");
        inst.lo = parse_add();
        expect_keyword("to");
        inst.hi = parse_add();
        expect_keyword("of");
        with_var([&] { return parse_expr0(); });
        break;
      case NotationShape::BinderAt:
        inst.var = expect_ident();
        expect_symbol("->");
        inst.point = parse_add();
        expect_keyword("of");
        with_var([&] { return parse_expr0(); });
        break;
      case NotationShape::BinderPlain:
        inst.var = expect_ident();
        expect_keyword("of");
        with_var([&] { return parse_expr0(); });
        break;
      case NotationShape::BinderWithBounds: {
        expect_keyword("from");
        inst.lo = parse_add();
        expect_keyword("to");
        inst.hi = parse_add();
        expect_keyword("of");
        std::size_t dtok = find_differential();
        inst.var = toks_[dtok].text.substr(1);
        with_var([&] { return parse_add(); });
        if (pos_ != dtok) fail("expected 'd" + inst.var + "'" + found());
        advance();
        break;
      }
    }
    Expr out = expand_notation(def, inst);
    if (!out.type())
      fail_at(kw, ErrorCode::TypeMismatch,
              "operands of '" + def.sugar_name + "' do not fit " + def.target + " : " +
                  def.target_type->to_string());
    return out;
  }

  // Locates the `dx` token closing the bounds-shaped sugar that starts at the
  // cursor: an identifier beginning with 'd' that directly follows a complete
  // operand at parenthesis depth zero, skipping those claimed by nested
  // bounds-shaped sugars.
  std::size_t find_differential() const {
    int depth = 0;
    int pending = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind == TokKind::End) break;
      if (t.kind == TokKind::Symbol) {
        if (t.text == "(" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "}") {
          if (depth == 0) break;
          --depth;
        }
        continue;
      }
      if (depth != 0 || t.kind != TokKind::Ident) continue;
      if (const NotationDef* d = notations_.find(t.text);
          d && d->shape == NotationShape::BinderWithBounds && i + 1 < toks_.size() &&
          toks_[i + 1].kind == TokKind::Ident && toks_[i + 1].text == "from") {
        ++pending;
        continue;
      }
      if (i == pos_ || keywords().count(t.text) || t.text.size() < 2 || t.text[0] != 'd')
        continue;
      const Token& prev = toks_[i - 1];
      bool prev_ends_operand = prev.kind == TokKind::Number ||
                               (prev.kind == TokKind::Symbol && (prev.text == ")" || prev.text == "}")) ||
                               (prev.kind == TokKind::Ident && !keywords().count(prev.text));
      if (!prev_ends_operand) continue;
      if (pending == 0) return i;
      --pending;
    }
    fail("missing differential 'd<variable>' closing the integral-style notation");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  const NotationSet& notations_;
  const TypeEnv& env_;
  std::string file_;
  std::vector<Variable> scope_;
};

}  // namespace

Expr parse_expr(std::string_view text, const Signature& sig, const NotationSet& notations,
                const TypeEnv& env, const SourceSpan& origin) {
  Parser p(lex(text, origin), sig, notations, env, origin.file);
  return p.parse_top();
}

Type parse_type(std::string_view text, const Signature& sig, const SourceSpan& origin) {
  Parser p(lex(text, origin), sig, NotationSet{}, TypeEnv{}, origin.file);
  return p.parse_type_top();
}

}  // namespace alonzo
