#include "alonzo/expr.hpp"

#include <algorithm>
#include <cassert>

namespace alonzo {

namespace {

using K = Expr::Kind;

bool is_bool(const std::optional<Type>& t) { return t && t->is_bool(); }

std::optional<Type> synthesize(K kind, const std::optional<Type>& decl,
                               const std::vector<Expr>& ch) {
  switch (kind) {
    case K::Var:
    case K::Const:
      return decl;
    case K::App: {
      const auto& f = ch[0].type();
      const auto& a = ch[1].type();
      if (f && a && f->is_fun() && f->dom() == *a) return f->cod();
      return std::nullopt;
    }
    case K::Abs:
      if (ch[0].type()) return Type::fun(*decl, *ch[0].type());
      return std::nullopt;
    case K::GuardedAbs: {
      const auto& g = ch[0].type();
      if (g && g->is_set() && g->elem() == *decl && ch[1].type())
        return Type::fun(*decl, *ch[1].type());
      return std::nullopt;
    }
    case K::Eq:
      if (ch[0].type() && ch[1].type() && *ch[0].type() == *ch[1].type())
        return Type::boolean();
      return std::nullopt;
    case K::Iota:
      if (is_bool(ch[0].type())) return decl;
      return std::nullopt;
    case K::Not:
    case K::Forall:
    case K::Exists:
      if (is_bool(ch[0].type())) return Type::boolean();
      return std::nullopt;
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff:
      if (is_bool(ch[0].type()) && is_bool(ch[1].type())) return Type::boolean();
      return std::nullopt;
    case K::IsDefined:
      if (ch[0].type()) return Type::boolean();
      return std::nullopt;
    case K::Pair:
      if (ch[0].type() && ch[1].type()) return Type::prod(*ch[0].type(), *ch[1].type());
      return std::nullopt;
    case K::Proj1:
      if (ch[0].type() && ch[0].type()->is_prod()) return ch[0].type()->first();
      return std::nullopt;
    case K::Proj2:
      if (ch[0].type() && ch[0].type()->is_prod()) return ch[0].type()->second();
      return std::nullopt;
    case K::SetLit:
      for (const auto& m : ch)
        if (!m.type() || *m.type() != *decl) return std::nullopt;
      return Type::set_of(*decl);
    case K::Member: {
      const auto& e = ch[0].type();
      const auto& s = ch[1].type();
      if (e && s && s->is_set() && s->elem() == *e) return Type::boolean();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

Expr Expr::make(Kind kind, std::string name, std::optional<Type> decl,
                std::vector<Expr> children) {
  auto type = synthesize(kind, decl, children);
  std::size_t size = 1, depth = 0;
  for (const auto& c : children) {
    size += c.size();
    depth = std::max(depth, c.depth());
  }
  return Expr(std::make_shared<const Rep>(Rep{kind, std::move(name), std::move(decl),
                                              std::move(children), std::move(type), size,
                                              depth + 1}));
}

Expr Expr::var(std::string name, Type type) {
  return make(K::Var, std::move(name), std::move(type), {});
}
Expr Expr::constant(std::string name, Type type) {
  return make(K::Const, std::move(name), std::move(type), {});
}
Expr Expr::app(Expr fun, Expr arg) {
  return make(K::App, {}, std::nullopt, {std::move(fun), std::move(arg)});
}
Expr Expr::app(Expr fun, std::initializer_list<Expr> args) {
  return app(std::move(fun), std::span<const Expr>(args.begin(), args.size()));
}
Expr Expr::app(Expr fun, std::span<const Expr> args) {
  for (const auto& a : args) fun = app(std::move(fun), a);
  return fun;
}
Expr Expr::abs(std::string bound, Type type, Expr body) {
  return make(K::Abs, std::move(bound), std::move(type), {std::move(body)});
}
Expr Expr::eq(Expr lhs, Expr rhs) {
  return make(K::Eq, {}, std::nullopt, {std::move(lhs), std::move(rhs)});
}
Expr Expr::iota(std::string bound, Type type, Expr body) {
  return make(K::Iota, std::move(bound), std::move(type), {std::move(body)});
}
Expr Expr::not_(Expr e) { return make(K::Not, {}, std::nullopt, {std::move(e)}); }
Expr Expr::and_(Expr l, Expr r) {
  return make(K::And, {}, std::nullopt, {std::move(l), std::move(r)});
}
Expr Expr::or_(Expr l, Expr r) {
  return make(K::Or, {}, std::nullopt, {std::move(l), std::move(r)});
}
Expr Expr::implies(Expr l, Expr r) {
  return make(K::Implies, {}, std::nullopt, {std::move(l), std::move(r)});
}
Expr Expr::iff(Expr l, Expr r) {
  return make(K::Iff, {}, std::nullopt, {std::move(l), std::move(r)});
}
Expr Expr::forall(std::string bound, Type type, Expr body) {
  return make(K::Forall, std::move(bound), std::move(type), {std::move(body)});
}
Expr Expr::exists(std::string bound, Type type, Expr body) {
  return make(K::Exists, std::move(bound), std::move(type), {std::move(body)});
}
Expr Expr::is_defined(Expr e) { return make(K::IsDefined, {}, std::nullopt, {std::move(e)}); }
Expr Expr::pair(Expr l, Expr r) {
  return make(K::Pair, {}, std::nullopt, {std::move(l), std::move(r)});
}
Expr Expr::proj1(Expr e) { return make(K::Proj1, {}, std::nullopt, {std::move(e)}); }
Expr Expr::proj2(Expr e) { return make(K::Proj2, {}, std::nullopt, {std::move(e)}); }
Expr Expr::set_lit(Type elem, std::vector<Expr> members) {
  return make(K::SetLit, {}, std::move(elem), std::move(members));
}
Expr Expr::member(Expr e, Expr set) {
  return make(K::Member, {}, std::nullopt, {std::move(e), std::move(set)});
}
Expr Expr::guarded_abs(std::string bound, Type type, Expr guard, Expr body) {
  return make(K::GuardedAbs, std::move(bound), std::move(type),
              {std::move(guard), std::move(body)});
}

Expr Expr::with_children(std::vector<Expr> children) const {
  assert(children.size() == arity() || is(K::SetLit));
  return make(kind(), name(), rep_->decl_type, std::move(children));
}

Expr Expr::with_binder(std::string name, Type type, std::vector<Expr> children) const {
  return make(kind(), std::move(name), std::move(type), std::move(children));
}

bool Expr::is_binder() const {
  switch (kind()) {
    case K::Abs:
    case K::Iota:
    case K::Forall:
    case K::Exists:
    case K::GuardedAbs:
      return true;
    default:
      return false;
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity() ||
      a.size() != b.size())
    return false;
  if (a.rep_->decl_type.has_value() != b.rep_->decl_type.has_value()) return false;
  if (a.rep_->decl_type && *a.rep_->decl_type != *b.rep_->decl_type) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.child(i) == b.child(i))) return false;
  return true;
}

std::string_view kind_name(Expr::Kind kind) {
  switch (kind) {
    case K::Var: return "Var";
    case K::Const: return "Const";
    case K::App: return "App";
    case K::Abs: return "Abs";
    case K::Eq: return "Eq";
    case K::Iota: return "Iota";
    case K::Not: return "Not";
    case K::And: return "And";
    case K::Or: return "Or";
    case K::Implies: return "Implies";
    case K::Iff: return "Iff";
    case K::Forall: return "Forall";
    case K::Exists: return "Exists";
    case K::IsDefined: return "IsDefined";
    case K::Pair: return "Pair";
    case K::Proj1: return "Proj1";
    case K::Proj2: return "Proj2";
    case K::SetLit: return "SetLit";
    case K::Member: return "Member";
    case K::GuardedAbs: return "GuardedAbs";
  }
  return "?";
}

}  // namespace alonzo
