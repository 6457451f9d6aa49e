#include <cctype>

#include "alonzo/notation.hpp"

namespace alonzo {

namespace {

using K = Expr::Kind;

// Binding strength, loosest first.
enum Level : int {
  kBinder = 0,
  kIff,
  kImplies,
  kOr,
  kAnd,
  kNot,
  kRel,
  kAdd,
  kMul,
  kApp,
  kAtom,
};

int infix_level(std::string_view op) {
  if (op == "*" || op == "/" || op == "\u00b7") return kMul;
  if (op == "+" || op == "-") return kAdd;
  return kRel;
}

bool is_relation_op(std::string_view op) { return infix_level(op) == kRel; }

struct Spine {
  Expr head;
  std::vector<Expr> args;
};

Spine spine(const Expr& e) {
  std::vector<Expr> rev;
  Expr h = e;
  while (h.is(K::App)) {
    rev.push_back(h.arg());
    h = h.fun();
  }
  return {h, std::vector<Expr>(rev.rbegin(), rev.rend())};
}

struct Relation {
  Expr lhs;
  std::string op;
  Expr rhs;
};

std::optional<Relation> as_relation(const Expr& e) {
  if (e.is(K::Eq)) return Relation{e.lhs(), "=", e.rhs()};
  if (e.is(K::Member)) return Relation{e.lhs(), "in", e.rhs()};
  if (e.is(K::App) && e.fun().is(K::App) && e.fun().fun().is(K::Const) &&
      is_infix_operator(e.fun().fun().name()) && is_relation_op(e.fun().fun().name()))
    return Relation{e.fun().arg(), e.fun().fun().name(), e.arg()};
  return std::nullopt;
}

// Recognizes the right-nested conjunction a R1 b and (b R2 c and ...) the
// parser produces for a chained relation.
bool chain_parts(const Expr& e, std::vector<Expr>& operands, std::vector<std::string>& ops) {
  if (auto r = as_relation(e)) {
    operands = {r->lhs, r->rhs};
    ops = {r->op};
    return true;
  }
  if (!e.is(K::And)) return false;
  auto first = as_relation(e.lhs());
  if (!first) return false;
  std::vector<Expr> rest_operands;
  std::vector<std::string> rest_ops;
  if (!chain_parts(e.rhs(), rest_operands, rest_ops)) return false;
  if (!alpha_equal(first->rhs, rest_operands.front())) return false;
  operands = {first->lhs};
  operands.insert(operands.end(), rest_operands.begin(), rest_operands.end());
  ops = {first->op};
  ops.insert(ops.end(), rest_ops.begin(), rest_ops.end());
  return true;
}

// Guarded quantifier patterns produced by `forall x in S.` and friends.
std::optional<std::pair<Expr, Expr>> guarded_quantifier(const Expr& e) {
  K want;
  if (e.is(K::Forall))
    want = K::Implies;
  else if (e.is(K::Exists) || e.is(K::Iota))
    want = K::And;
  else
    return std::nullopt;
  const Expr& b = e.body();
  if (!b.is(want) || !b.lhs().is(K::Member)) return std::nullopt;
  const Expr& x = b.lhs().lhs();
  const Expr& set = b.lhs().rhs();
  if (!x.is(K::Var) || x.name() != e.name() || x.decl_type() != e.decl_type())
    return std::nullopt;
  if (occurs_free(e.bound_var(), set)) return std::nullopt;
  return std::make_pair(set, b.rhs());
}

class Printer {
 public:
  Printer(const NotationSet& notations, bool latex) : notations_(notations), latex_(latex) {}

  std::string at(const Expr& e, int min_level) {
    int level = kAtom;
    std::string s = render(e, level);
    if (level < min_level) return "(" + s + ")";
    return s;
  }

 private:
  std::string render(const Expr& e, int& level) {
    level = kAtom;
    switch (e.kind()) {
      case K::Var:
        return latex_ ? latex_var(e.name()) : e.name();
      case K::Const:
        if (is_infix_operator(e.name())) return "(" + op_text(e.name()) + ")";
        return latex_ ? latex_const(e.name()) : e.name();
      case K::App:
        return render_app(e, level);
      case K::Eq:
      case K::Member:
        level = kRel;
        return render_chain(e);
      case K::And: {
        std::vector<Expr> operands;
        std::vector<std::string> ops;
        if (chain_parts(e, operands, ops)) {
          level = kRel;
          return render_chain(e);
        }
        level = kAnd;
        return at(e.lhs(), kAnd + 1) + (latex_ ? " \\wedge " : " and ") + at(e.rhs(), kAnd);
      }
      case K::Or:
        level = kOr;
        return at(e.lhs(), kOr + 1) + (latex_ ? " \\vee " : " or ") + at(e.rhs(), kOr);
      case K::Implies:
        level = kImplies;
        return at(e.lhs(), kImplies + 1) + (latex_ ? " \\Rightarrow " : " => ") +
               at(e.rhs(), kImplies);
      case K::Iff:
        level = kIff;
        return at(e.lhs(), kIff + 1) + (latex_ ? " \\Leftrightarrow " : " <=> ") +
               at(e.rhs(), kIff);
      case K::Not:
        level = kNot;
        return (latex_ ? "\\neg " : "not ") + at(e.child(0), kNot);
      case K::Abs:
      case K::Iota:
      case K::Forall:
      case K::Exists:
      case K::GuardedAbs:
        level = kBinder;
        return render_binder(e);
      case K::IsDefined:
        if (latex_) return at(e.child(0), kAtom) + "\\downarrow";
        return "defined(" + at(e.child(0), kBinder) + ")";
      case K::Pair:
        return "(" + at(e.lhs(), kBinder) + ", " + at(e.rhs(), kBinder) + ")";
      case K::Proj1:
      case K::Proj2: {
        std::string f = e.is(K::Proj1) ? "fst" : "snd";
        if (latex_) f = "\\mathsf{" + f + "}";
        return f + "(" + at(e.child(0), kBinder) + ")";
      }
      case K::SetLit: {
        if (e.arity() == 0)
          return latex_ ? "\\emptyset_{" + latex_type(e.decl_type()) + "}"
                        : "{:" + e.decl_type().to_string() + "}";
        std::string s = latex_ ? "\\{" : "{";
        for (std::size_t i = 0; i < e.arity(); ++i) {
          if (i) s += ", ";
          s += at(e.child(i), kBinder);
        }
        return s + (latex_ ? "\\}" : "}");
      }
    }
    return "?";
  }

  std::string op_text(const std::string& op) const {
    if (!latex_) return op;
    if (op == "\u00b7") return "\\cdot";
    if (op == "<=") return "\\leq";
    if (op == ">=") return "\\geq";
    if (op == "in") return "\\in";
    return op;
  }

  std::string render_chain(const Expr& e) {
    std::vector<Expr> operands;
    std::vector<std::string> ops;
    chain_parts(e, operands, ops);
    std::string s = at(operands[0], kAdd);
    for (std::size_t i = 0; i < ops.size(); ++i)
      s += " " + op_text(ops[i]) + " " + at(operands[i + 1], kAdd);
    return s;
  }

  std::string render_app(const Expr& e, int& level) {
    Spine sp = spine(e);
    if (sp.head.is(K::Const)) {
      for (const auto& def : notations_.defs())
        if (auto s = try_sugar(def, sp)) {
          level = kBinder;
          return *s;
        }
      const std::string& name = sp.head.name();
      if (is_infix_operator(name) && sp.args.size() == 2) {
        int lv = infix_level(name);
        level = lv;
        if (lv == kRel) return render_chain(e);
        if (latex_ && name == "/") {
          level = kAtom;
          return "\\frac{" + at(sp.args[0], kBinder) + "}{" + at(sp.args[1], kBinder) + "}";
        }
        return at(sp.args[0], lv) + " " + op_text(name) + " " + at(sp.args[1], lv + 1);
      }
      if (latex_ && name == "abs" && sp.args.size() == 1)
        return "|" + at(sp.args[0], kBinder) + "|";
    }
    level = kApp;
    std::string s = at(sp.head, kAtom) + "(";
    for (std::size_t i = 0; i < sp.args.size(); ++i) {
      if (i) s += ", ";
      s += at(sp.args[i], kBinder);
    }
    return s + ")";
  }

  // Renames the bound variable of a binder-shaped construct when printing its
  // name would capture a constant or another variable of the same name.
  std::pair<std::string, Expr> printable_binder(const Variable& v, const Expr& body) {
    std::set<std::string> clash;
    collect_constant_names(body, clash);
    for (const auto& fv : free_vars(body))
      if (!(fv == v)) clash.insert(fv.name);
    if (!clash.count(v.name)) return {v.name, body};
    std::set<std::string> avoid = clash;
    collect_var_names(body, avoid);
    std::string renamed = fresh_name(v.name, avoid);
    return {renamed, substitute(body, v, Expr::var(renamed, v.type))};
  }

  std::string binder_word(K kind) const {
    switch (kind) {
      case K::Forall: return latex_ ? "\\forall" : "forall";
      case K::Exists: return latex_ ? "\\exists" : "exists";
      case K::Iota: return latex_ ? "\\iota" : "iota";
      default: return latex_ ? "\\lambda" : "fun";
    }
  }

  std::string header(const std::string& word, const std::string& vars, const std::string& rest,
                     bool guarded) const {
    if (latex_) {
      return word + "\\, " + vars + (guarded ? " \\in " + rest : "{:}" + rest) + ".\\; ";
    }
    return word + " " + vars + (guarded ? " in " + rest : ":" + rest) + ". ";
  }

  std::string type_text(const Type& t) const { return latex_ ? latex_type(t) : t.to_string(); }

  std::string render_binder(const Expr& e) {
    std::string word = binder_word(e.kind());
    if (e.is(K::GuardedAbs)) {
      std::string guard = at(e.guard(), kAdd);
      auto [name, body] = printable_binder(e.bound_var(), e.body());
      return header(word, var_text(name), guard, true) + at(body, kBinder);
    }
    if (auto g = guarded_quantifier(e)) {
      std::string guard = at(g->first, kAdd);
      auto [name, body] = printable_binder(e.bound_var(), g->second);
      return header(word, var_text(name), guard, true) + at(body, kBinder);
    }
    // Fold directly nested binders of the same kind and type.
    std::vector<std::string> names;
    Expr cur = e;
    for (;;) {
      auto [name, body] = printable_binder(cur.bound_var(), cur.body());
      names.push_back(name);
      if (body.kind() == e.kind() && body.decl_type() == e.decl_type() &&
          !guarded_quantifier(body)) {
        cur = body;
        continue;
      }
      cur = body;
      break;
    }
    std::string vars;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) vars += ", ";
      vars += var_text(names[i]);
    }
    return header(word, vars, type_text(e.decl_type()), false) + at(cur, kBinder);
  }

  std::string var_text(const std::string& name) const {
    return latex_ ? latex_var(name) : name;
  }

  std::optional<std::string> try_sugar(const NotationDef& def, const Spine& sp) {
    if (!def.target_type || sp.head.name() != def.target ||
        sp.head.decl_type() != *def.target_type || sp.args.size() != def.argument_order.size())
      return std::nullopt;
    const Type& alpha = *def.binder_type;
    std::optional<Expr> lo, hi, point, fn;
    for (std::size_t i = 0; i < sp.args.size(); ++i) {
      switch (def.argument_order[i]) {
        case NotationSlot::Lo: lo = sp.args[i]; break;
        case NotationSlot::Hi: hi = sp.args[i]; break;
        case NotationSlot::Point: point = sp.args[i]; break;
        case NotationSlot::Body: fn = sp.args[i]; break;
      }
    }
    if (def.guarded()) {
      if (!fn->is(K::GuardedAbs) || fn->decl_type() != alpha || !fn->guard().is(K::Const) ||
          fn->guard().name() != std::get<std::string>(def.binder))
        return std::nullopt;
    } else if (!fn->is(K::Abs) || fn->decl_type() != alpha) {
      return std::nullopt;
    }
    auto [var, body] = printable_binder(fn->bound_var(), fn->body());
    const std::string kw = latex_ ? (def.latex.empty() ? "\\operatorname{" + def.sugar_name + "}"
                                                       : def.latex)
                                  : def.sugar_name;
    std::string v = var_text(var);
    switch (def.shape) {
      case NotationShape::BinderOverRange:
        if (latex_)
          return kw + "_{" + v + "=" + at(*lo, kAdd) + "}^{" + at(*hi, kAdd) + "} " +
                 at(body, kBinder);
        return kw + " " + v + " = " + at(*lo, kAdd) + " to " + at(*hi, kAdd) + " of " +
               at(body, kBinder);
      case NotationShape::BinderAt:
        if (latex_) return kw + "_{" + v + " \\to " + at(*point, kAdd) + "} " + at(body, kBinder);
        return kw + " " + v + " -> " + at(*point, kAdd) + " of " + at(body, kBinder);
      case NotationShape::BinderPlain:
        if (latex_) return kw + "_{" + v + " \\to \\infty} " + at(body, kBinder);
        return kw + " " + v + " of " + at(body, kBinder);
      case NotationShape::BinderWithBounds:
        if (latex_)
          return kw + "_{" + at(*lo, kAdd) + "}^{" + at(*hi, kAdd) + "} " + at(body, kAdd) +
                 " \\, d" + v;
        return kw + " from " + at(*lo, kAdd) + " to " + at(*hi, kAdd) + " of " +
               at(body, kAdd) + " d" + var;
    }
    return std::nullopt;
  }

  static std::string escape_name(const std::string& name) {
    std::string out;
    for (char c : name) {
      if (c == '-')
        out += "{-}";
      else if (c == '_')
        out += "\\_";
      else
        out += c;
    }
    return out;
  }

  static std::string latex_var(const std::string& name) {
    if (name.size() == 1) return name;
    std::size_t digits = name.size();
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1]))) --digits;
    if (digits == 1 && digits < name.size()) return name.substr(0, 1) + "_{" + name.substr(1) + "}";
    return "\\mathit{" + escape_name(name) + "}";
  }

  static std::string latex_const(const std::string& name) {
    bool numeral = !name.empty();
    for (char c : name) numeral = numeral && std::isdigit(static_cast<unsigned char>(c));
    if (numeral) return name;
    return "\\mathsf{" + escape_name(name) + "}";
  }

  const NotationSet& notations_;
  bool latex_;
};

void latex_type_into(const Type& t, int ctx, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::Bool: out += "\\mathsf{Bool}"; return;
    case Type::Kind::Base: out += t.name(); return;
    case Type::Kind::SetOf:
      out += "\\{";
      latex_type_into(t.elem(), 0, out);
      out += "\\}";
      return;
    case Type::Kind::Fun:
      if (ctx > 0) out += '(';
      latex_type_into(t.dom(), 1, out);
      out += " \\rightarrow ";
      latex_type_into(t.cod(), 0, out);
      if (ctx > 0) out += ')';
      return;
    case Type::Kind::Prod:
      if (ctx > 1) out += '(';
      latex_type_into(t.first(), 2, out);
      out += " \\times ";
      latex_type_into(t.second(), 1, out);
      if (ctx > 1) out += ')';
      return;
  }
}

}  // namespace

std::string latex_type(const Type& t) {
  std::string out;
  latex_type_into(t, 0, out);
  return out;
}

std::string print_compact(const Expr& e, const NotationSet& notations) {
  return Printer(notations, false).at(e, kBinder);
}

std::string print_latex(const Expr& e, const NotationSet& notations) {
  return Printer(notations, true).at(e, kBinder);
}

}  // namespace alonzo
