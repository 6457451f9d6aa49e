#include "term_gen.hpp"

namespace alonzo::testing {

TermGen::TermGen(Signature sig, GenConfig cfg, std::uint64_t seed)
    : sig_(std::move(sig)), cfg_(std::move(cfg)), rng_(seed) {
  if (cfg_.binder_types.empty())
    for (const auto& b : sig_.base_types()) cfg_.binder_types.push_back(Type::base(b));
  if (cfg_.binder_types.empty()) cfg_.binder_types.push_back(Type::boolean());
  if (cfg_.side_types.empty()) cfg_.side_types = cfg_.binder_types;
}

Expr TermGen::term(const Type& t, const std::vector<Variable>& free) {
  scope_ = free;
  Expr e = gen(t, cfg_.max_depth);
  scope_.clear();
  return e;
}

const Type& TermGen::pick(const std::vector<Type>& ts) { return ts[roll(static_cast<int>(ts.size()))]; }

const std::string& TermGen::pick_name() {
  return cfg_.var_names[roll(static_cast<int>(cfg_.var_names.size()))];
}

std::vector<Expr> TermGen::visible_vars(const Type& t) const {
  std::vector<Expr> out;
  for (std::size_t i = 0; i < scope_.size(); ++i) {
    bool shadowed = false;
    for (std::size_t j = i + 1; j < scope_.size(); ++j) shadowed |= scope_[j].name == scope_[i].name;
    if (!shadowed && scope_[i].type == t) out.push_back(Expr::var(scope_[i]));
  }
  return out;
}

// Heads (constants or variables) that yield `t` after one or more arguments.
bool TermGen::app_candidates(const Type& t, std::vector<std::pair<Expr, Type>>& heads) {
  auto consider = [&](const Expr& head, const Type& full) {
    Type ty = full;
    while (ty.is_fun()) {
      ty = ty.cod();
      if (ty == t) {
        heads.emplace_back(head, full);
        return;
      }
    }
  };
  for (const auto& [name, ty] : sig_.constants()) consider(Expr::constant(name, ty), ty);
  for (std::size_t i = 0; i < scope_.size(); ++i) {
    bool shadowed = false;
    for (std::size_t j = i + 1; j < scope_.size(); ++j) shadowed |= scope_[j].name == scope_[i].name;
    if (!shadowed) consider(Expr::var(scope_[i]), scope_[i].type);
  }
  return !heads.empty();
}

Expr TermGen::bind(Expr::Kind kind, const Type& t, const Type& body_type, int depth) {
  std::string name = pick_name();
  scope_.push_back({name, t});
  Expr body = gen(body_type, depth - 1);
  scope_.pop_back();
  switch (kind) {
    case Expr::Kind::Forall: return Expr::forall(name, t, body);
    case Expr::Kind::Exists: return Expr::exists(name, t, body);
    case Expr::Kind::Iota: return Expr::iota(name, t, body);
    default: return Expr::abs(name, t, body);
  }
}

Expr TermGen::leaf(const Type& t, int depth) {
  std::vector<Expr> atoms = visible_vars(t);
  for (const auto& [name, ty] : sig_.constants())
    if (ty == t) atoms.push_back(Expr::constant(name, ty));
  if (!atoms.empty()) return atoms[roll(static_cast<int>(atoms.size()))];
  switch (t.kind()) {
    case Type::Kind::Bool: {
      const Type& s = pick(cfg_.side_types);
      return Expr::eq(leaf(s, 0), leaf(s, 0));
    }
    case Type::Kind::Fun: return bind(Expr::Kind::Abs, t.dom(), t.cod(), std::max(depth, 1));
    case Type::Kind::Prod: return Expr::pair(leaf(t.first(), 0), leaf(t.second(), 0));
    case Type::Kind::SetOf: return Expr::set_lit(t.elem(), {});
    case Type::Kind::Base: {
      // No atom of this base type: describe one.
      std::string name = pick_name();
      scope_.push_back({name, t});
      Expr body = Expr::eq(Expr::var(name, t), Expr::var(name, t));
      scope_.pop_back();
      return Expr::iota(name, t, body);
    }
  }
  return Expr::eq(leaf(t, 0), leaf(t, 0));
}

Expr TermGen::gen(const Type& t, int depth) {
  if (depth <= 1 || chance(0.15)) return leaf(t, depth);
  std::vector<std::pair<Expr, Type>> heads;
  bool can_apply = app_candidates(t, heads);
  auto apply = [&]() {
    auto [e, ty] = heads[roll(static_cast<int>(heads.size()))];
    while (true) {
      Type dom = ty.dom();
      Expr arg = dom.is_fun() && chance(cfg_.lambda_bias) ? bind(Expr::Kind::Abs, dom.dom(), dom.cod(), depth - 1)
                                                          : gen(dom, depth - 1);
      e = Expr::app(e, arg);
      ty = ty.cod();
      if (ty == t) return e;
    }
  };
  switch (t.kind()) {
    case Type::Kind::Bool: {
      int options = 12;
      switch (roll(options)) {
        case 0: return Expr::not_(gen(t, depth - 1));
        case 1: return Expr::and_(gen(t, depth - 1), gen(t, depth - 1));
        case 2: return Expr::or_(gen(t, depth - 1), gen(t, depth - 1));
        case 3: return Expr::implies(gen(t, depth - 1), gen(t, depth - 1));
        case 4: return Expr::iff(gen(t, depth - 1), gen(t, depth - 1));
        case 5: return bind(Expr::Kind::Forall, pick(cfg_.binder_types), t, depth);
        case 6: return bind(Expr::Kind::Exists, pick(cfg_.binder_types), t, depth);
        case 7: {
          const Type& s = pick(cfg_.side_types);
          return Expr::eq(gen(s, depth - 1), gen(s, depth - 1));
        }
        case 8: return Expr::is_defined(gen(pick(cfg_.side_types), depth - 1));
        case 9: {
          const Type& s = pick(cfg_.binder_types);
          return Expr::member(gen(s, depth - 1), gen(Type::set_of(s), depth - 1));
        }
        default:
          if (can_apply) return apply();
          return leaf(t, depth);
      }
    }
    case Type::Kind::Fun: {
      if (!cfg_.guard_sets.empty() && chance(0.2)) {
        const std::string& set = cfg_.guard_sets[roll(static_cast<int>(cfg_.guard_sets.size()))];
        if (sig_.has_constant(set) && sig_.constant_type(set) == Type::set_of(t.dom())) {
          std::string name = pick_name();
          scope_.push_back({name, t.dom()});
          Expr body = gen(t.cod(), depth - 1);
          scope_.pop_back();
          return Expr::guarded_abs(name, t.dom(), sig_.constant(set), body);
        }
      }
      if (can_apply && chance(0.3)) return apply();
      return bind(Expr::Kind::Abs, t.dom(), t.cod(), depth);
    }
    case Type::Kind::Prod:
      if (chance(0.7)) return Expr::pair(gen(t.first(), depth - 1), gen(t.second(), depth - 1));
      if (can_apply) return apply();
      return Expr::pair(gen(t.first(), depth - 1), gen(t.second(), depth - 1));
    case Type::Kind::SetOf: {
      if (can_apply && chance(0.3)) return apply();
      std::vector<Expr> members;
      int n = roll(3);
      for (int i = 0; i < n; ++i) members.push_back(gen(t.elem(), depth - 1));
      return Expr::set_lit(t.elem(), members);
    }
    case Type::Kind::Base: {
      int r = roll(10);
      if (r < 6 && can_apply) return apply();
      if (r < 8) return bind(Expr::Kind::Iota, t, Type::boolean(), depth);
      if (r < 9) {
        const Type& s = pick(cfg_.binder_types);
        Expr p = gen(Type::prod(t, s), depth - 1);
        return Expr::proj1(p);
      }
      return leaf(t, depth);
    }
  }
  return leaf(t, depth);
}

}  // namespace alonzo::testing
