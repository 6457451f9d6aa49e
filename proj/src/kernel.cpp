#include "alonzo/kernel.hpp"

#include <algorithm>
#include <vector>

namespace alonzo {

using K = Expr::Kind;

// ---------------------------------------------------------------------------
// Signature

void Signature::add_base_type(const std::string& name) {
  if (!base_types_.insert(name).second)
    throw Error(ErrorCode::DuplicateName, "base type '" + name + "' is already declared");
}

void Signature::add_constant(const std::string& name, const Type& type) {
  if (constants_.count(name))
    throw Error(ErrorCode::ConstantExists, "constant '" + name + "' already exists");
  check_type(type);
  constants_.emplace(name, type);
}

const Type& Signature::constant_type(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end())
    throw Error(ErrorCode::UnknownConstant, "unknown constant '" + name + "'");
  return it->second;
}

void Signature::check_type(const Type& t) const {
  std::set<std::string> names;
  t.collect_base_types(names);
  for (const auto& n : names)
    if (!base_types_.count(n))
      throw Error(ErrorCode::UnknownBaseType, "unknown base type '" + n + "'");
}

// ---------------------------------------------------------------------------
// debug rendering

namespace {

void debug_into(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case K::Var:
      out += e.name();
      return;
    case K::Const:
      out += '[' + e.name() + ']';
      return;
    default:
      break;
  }
  out += '(';
  out += kind_name(e.kind());
  if (e.is_binder()) out += ' ' + e.name() + ':' + e.decl_type().to_string();
  if (e.is(K::SetLit)) out += ' ' + e.decl_type().to_string();
  for (const auto& c : e.children()) {
    out += ' ';
    debug_into(c, out);
  }
  out += ')';
}

}  // namespace

std::string debug_string(const Expr& e) {
  std::string out;
  debug_into(e, out);
  return out;
}

// ---------------------------------------------------------------------------
// type_of

namespace {

class TypeChecker {
 public:
  TypeChecker(const Signature& sig, const TypeEnv& env) : sig_(sig), env_(env) {}

  Type check(const Expr& e) {
    switch (e.kind()) {
      case K::Var: {
        sig_.check_type(e.decl_type());
        if (!is_bound(e.bound_var())) {
          auto it = env_.find(e.name());
          if (it != env_.end() && it->second != e.decl_type())
            mismatch(it->second, e.decl_type(), e);
        }
        return e.decl_type();
      }
      case K::Const: {
        const Type& declared = sig_.constant_type(e.name());
        if (declared != e.decl_type()) mismatch(declared, e.decl_type(), e);
        return declared;
      }
      case K::App: {
        Type f = check(e.fun());
        Type a = check(e.arg());
        if (!f.is_fun())
          throw Error(ErrorCode::TypeMismatch, "expected a function type, found " +
                                                   f.to_string() + " at " + debug_string(e.fun()));
        if (f.dom() != a) mismatch(f.dom(), a, e.arg());
        return f.cod();
      }
      case K::Abs:
        return Type::fun(e.decl_type(), in_scope(e));
      case K::GuardedAbs: {
        Type g = check(e.guard());
        Type want = Type::set_of(e.decl_type());
        if (g != want) mismatch(want, g, e.guard());
        return Type::fun(e.decl_type(), in_scope(e));
      }
      case K::Iota:
      case K::Forall:
      case K::Exists: {
        Type b = in_scope(e);
        if (!b.is_bool())
          throw Error(ErrorCode::NonBooleanBinderBody,
                      std::string(kind_name(e.kind())) + " body has type " + b.to_string() +
                          " at " + debug_string(e));
        return e.is(K::Iota) ? e.decl_type() : Type::boolean();
      }
      case K::Eq: {
        Type l = check(e.lhs());
        Type r = check(e.rhs());
        if (l != r) mismatch(l, r, e.rhs());
        return Type::boolean();
      }
      case K::Not:
        expect_bool(e.child(0));
        return Type::boolean();
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff:
        expect_bool(e.child(0));
        expect_bool(e.child(1));
        return Type::boolean();
      case K::IsDefined:
        check(e.child(0));
        return Type::boolean();
      case K::Pair:
        return Type::prod(check(e.child(0)), check(e.child(1)));
      case K::Proj1:
      case K::Proj2: {
        Type p = check(e.child(0));
        if (!p.is_prod())
          throw Error(ErrorCode::TypeMismatch, "expected a product type, found " +
                                                   p.to_string() + " at " +
                                                   debug_string(e.child(0)));
        return e.is(K::Proj1) ? p.first() : p.second();
      }
      case K::SetLit: {
        sig_.check_type(e.decl_type());
        for (const auto& m : e.children()) {
          Type t = check(m);
          if (t != e.decl_type()) mismatch(e.decl_type(), t, m);
        }
        return Type::set_of(e.decl_type());
      }
      case K::Member: {
        Type x = check(e.lhs());
        Type s = check(e.rhs());
        Type want = Type::set_of(x);
        if (s != want) mismatch(want, s, e.rhs());
        return Type::boolean();
      }
    }
    return Type::boolean();
  }

 private:
  Type in_scope(const Expr& binder) {
    sig_.check_type(binder.decl_type());
    bound_.push_back(binder.bound_var());
    Type t = check(binder.body());
    bound_.pop_back();
    return t;
  }

  void expect_bool(const Expr& e) {
    Type t = check(e);
    if (!t.is_bool()) mismatch(Type::boolean(), t, e);
  }

  bool is_bound(const Variable& v) const {
    return std::find(bound_.begin(), bound_.end(), v) != bound_.end();
  }

  [[noreturn]] static void mismatch(const Type& expected, const Type& found, const Expr& at) {
    throw Error(ErrorCode::TypeMismatch, "type mismatch: expected " + expected.to_string() +
                                             ", found " + found.to_string() + " at " +
                                             debug_string(at));
  }

  const Signature& sig_;
  const TypeEnv& env_;
  std::vector<Variable> bound_;
};

}  // namespace

Type type_of(const Expr& e, const Signature& sig, const TypeEnv& env) {
  return TypeChecker(sig, env).check(e);
}

// ---------------------------------------------------------------------------
// free variables

namespace {

void free_into(const Expr& e, std::vector<Variable>& bound, std::set<Variable>& out) {
  switch (e.kind()) {
    case K::Var: {
      Variable v = e.bound_var();
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(std::move(v));
      return;
    }
    case K::Const:
      return;
    default:
      break;
  }
  if (e.is_binder()) {
    if (e.is(K::GuardedAbs)) free_into(e.guard(), bound, out);
    bound.push_back(e.bound_var());
    free_into(e.body(), bound, out);
    bound.pop_back();
    return;
  }
  for (const auto& c : e.children()) free_into(c, bound, out);
}

bool free_in(const Variable& x, const Expr& e) {
  switch (e.kind()) {
    case K::Var:
      return e.name() == x.name && e.decl_type() == x.type;
    case K::Const:
      return false;
    default:
      break;
  }
  if (e.is_binder()) {
    if (e.is(K::GuardedAbs) && free_in(x, e.guard())) return true;
    if (e.name() == x.name && e.decl_type() == x.type) return false;
    return free_in(x, e.body());
  }
  for (const auto& c : e.children())
    if (free_in(x, c)) return true;
  return false;
}

}  // namespace

std::set<Variable> free_vars(const Expr& e) {
  std::set<Variable> out;
  std::vector<Variable> bound;
  free_into(e, bound, out);
  return out;
}

bool occurs_free(const Variable& x, const Expr& e) { return free_in(x, e); }

void collect_var_names(const Expr& e, std::set<std::string>& out) {
  if (e.is(K::Var) || e.is_binder()) out.insert(e.name());
  for (const auto& c : e.children()) collect_var_names(c, out);
}

void collect_constant_names(const Expr& e, std::set<std::string>& out) {
  if (e.is(K::Const)) out.insert(e.name());
  for (const auto& c : e.children()) collect_constant_names(c, out);
}

bool is_sentence(const Expr& e, const Signature& sig) {
  if (!free_vars(e).empty()) return false;
  try {
    return type_of(e, sig).is_bool();
  } catch (const Error&) {
    return false;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  for (int k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// substitution

namespace {

class Substituter {
 public:
  Substituter(const Variable& x, const Expr& value) : x_(x), value_(value) {
    for (const auto& v : free_vars(value)) value_free_names_.insert(v.name);
  }

  Expr run(const Expr& e) const {
    if (!free_in(x_, e)) return e;
    if (e.is(K::Var)) return value_;
    if (e.is_binder()) return binder(e);
    std::vector<Expr> ch;
    ch.reserve(e.arity());
    for (const auto& c : e.children()) ch.push_back(run(c));
    return e.with_children(std::move(ch));
  }

 private:
  Expr binder(const Expr& e) const {
    std::vector<Expr> ch;
    if (e.is(K::GuardedAbs)) ch.push_back(run(e.guard()));
    Variable bound = e.bound_var();
    Expr body = e.body();
    if (!(bound == x_) && free_in(x_, body)) {
      if (value_free_names_.count(bound.name)) {
        std::set<std::string> avoid = value_free_names_;
        collect_var_names(body, avoid);
        avoid.insert(x_.name);
        std::string renamed = fresh_name(bound.name, avoid);
        body = Substituter(bound, Expr::var(renamed, bound.type)).run(body);
        bound.name = renamed;
      }
      body = run(body);
    }
    ch.push_back(std::move(body));
    return e.with_binder(bound.name, bound.type, std::move(ch));
  }

  const Variable& x_;
  const Expr& value_;
  std::set<std::string> value_free_names_;
};

}  // namespace

Expr substitute(const Expr& e, const Variable& x, const Expr& value) {
  return Substituter(x, value).run(e);
}

Expr substitute(const Expr& e, const std::string& x, const Expr& value) {
  if (!value.type()) {
    // Without a synthesizable type we fall back to matching by name only.
    for (const auto& v : free_vars(e))
      if (v.name == x) return substitute(e, v, value);
    return e;
  }
  return substitute(e, Variable{x, *value.type()}, value);
}

// ---------------------------------------------------------------------------
// alpha equality

namespace {

long lookup(const std::vector<Variable>& stack, const Expr& var) {
  for (std::size_t i = stack.size(); i-- > 0;)
    if (stack[i].name == var.name() && stack[i].type == var.decl_type())
      return static_cast<long>(stack.size() - i);
  return -1;
}

bool alpha(const Expr& a, const Expr& b, std::vector<Variable>& sa, std::vector<Variable>& sb) {
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  switch (a.kind()) {
    case K::Var: {
      long ia = lookup(sa, a), ib = lookup(sb, b);
      if (ia != ib) return false;
      if (ia >= 0) return true;
      return a.name() == b.name() && a.decl_type() == b.decl_type();
    }
    case K::Const:
      return a.name() == b.name() && a.decl_type() == b.decl_type();
    case K::SetLit:
      if (a.decl_type() != b.decl_type()) return false;
      break;
    default:
      break;
  }
  if (a.is_binder()) {
    if (a.decl_type() != b.decl_type()) return false;
    if (a.is(K::GuardedAbs) && !alpha(a.guard(), b.guard(), sa, sb)) return false;
    sa.push_back(a.bound_var());
    sb.push_back(b.bound_var());
    bool ok = alpha(a.body(), b.body(), sa, sb);
    sa.pop_back();
    sb.pop_back();
    return ok;
  }
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!alpha(a.child(i), b.child(i), sa, sb)) return false;
  return true;
}

void key_into(const Expr& e, std::vector<Variable>& stack, std::string& out) {
  switch (e.kind()) {
    case K::Var: {
      long i = lookup(stack, e);
      if (i >= 0)
        out += '#' + std::to_string(i);
      else
        out += "v:" + e.name() + ':' + e.decl_type().to_string();
      return;
    }
    case K::Const:
      out += "c:" + e.name() + ':' + e.decl_type().to_string();
      return;
    default:
      break;
  }
  out += '(';
  out += kind_name(e.kind());
  if (e.is_binder() || e.is(K::SetLit)) out += ' ' + e.decl_type().to_string();
  if (e.is_binder()) {
    if (e.is(K::GuardedAbs)) {
      out += ' ';
      key_into(e.guard(), stack, out);
    }
    stack.push_back(e.bound_var());
    out += ' ';
    key_into(e.body(), stack, out);
    stack.pop_back();
  } else {
    for (const auto& c : e.children()) {
      out += ' ';
      key_into(c, stack, out);
    }
  }
  out += ')';
}

}  // namespace

bool alpha_equal(const Expr& a, const Expr& b) {
  if (a.same_node(b)) return true;
  std::vector<Variable> sa, sb;
  return alpha(a, b, sa, sb);
}

std::string canonical_key(const Expr& e) {
  std::string out;
  std::vector<Variable> stack;
  key_into(e, stack, out);
  return out;
}

}  // namespace alonzo
