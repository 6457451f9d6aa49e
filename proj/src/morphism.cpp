#include "alonzo/morphism.hpp"

namespace alonzo {

std::string obligation_status_name(const ObligationStatus& s) {
  struct {
    std::string operator()(const DischargedByAxiom&) const { return "axiom"; }
    std::string operator()(const DischargedByTheorem&) const { return "theorem"; }
    std::string operator()(const ModelEvidence&) const { return "model"; }
    std::string operator()(const Asserted&) const { return "asserted"; }
    std::string operator()(const Open&) const { return "open"; }
  } v;
  return std::visit(v, s);
}

const Obligation* Morphism::obligation(const std::string& axiom) const {
  for (const auto& o : obligations)
    if (o.axiom == axiom) return &o;
  return nullptr;
}

std::size_t Morphism::open_count() const {
  std::size_t n = 0;
  for (const auto& o : obligations) n += is_open(o.status);
  return n;
}

Type translate_type(const Morphism& m, const Type& t) {
  if (m.is_inclusion()) return t;
  switch (t.kind()) {
    case Type::Kind::Bool:
      return t;
    case Type::Kind::Base: {
      auto it = m.type_map.find(t.name());
      if (it == m.type_map.end())
        throw Error(ErrorCode::UnmappedBaseType,
                    "morphism " + m.id + " does not map base type " + t.name());
      return it->second;
    }
    case Type::Kind::Fun:
      return Type::fun(translate_type(m, t.dom()), translate_type(m, t.cod()));
    case Type::Kind::Prod:
      return Type::prod(translate_type(m, t.first()), translate_type(m, t.second()));
    case Type::Kind::SetOf:
      return Type::set_of(translate_type(m, t.elem()));
  }
  return t;
}

namespace {

using K = Expr::Kind;

class Translator {
 public:
  Translator(const Morphism& m, const Theory& source, const Theory& target)
      : m_(m), source_(source), target_(target) {}

  Expr go(const Expr& e) {
    switch (e.kind()) {
      case K::Var:
        return Expr::var(target_name(e.bound_var()), translate_type(m_, e.decl_type()));
      case K::Const:
        return constant(e);
      case K::SetLit: {
        std::vector<Expr> kids;
        for (const auto& c : e.children()) kids.push_back(go(c));
        return Expr::set_lit(translate_type(m_, e.decl_type()), std::move(kids));
      }
      default:
        break;
    }
    if (e.is_binder()) return binder(e);
    std::vector<Expr> kids;
    for (const auto& c : e.children()) kids.push_back(go(c));
    return e.with_children(std::move(kids));
  }

 private:
  std::string target_name(const Variable& v) const {
    for (auto it = renames_.rbegin(); it != renames_.rend(); ++it)
      if (it->first == v) return it->second;
    return v.name;
  }

  // Distinct source variables can collapse onto one target variable when
  // two base types share an image; rename the binder when that would capture.
  Expr binder(const Expr& e) {
    Variable v = e.bound_var();
    Type ty = translate_type(m_, v.type);
    std::string name = v.name;
    std::set<std::string> clash;
    for (const auto& fv : free_vars(e.body()))
      if (!(fv == v) && translate_type(m_, fv.type) == ty) clash.insert(target_name(fv));
    if (clash.count(name)) {
      std::set<std::string> avoid = clash;
      collect_var_names(e, avoid);
      name = fresh_name(name, avoid);
    }
    std::vector<Expr> kids;
    if (e.is(K::GuardedAbs)) kids.push_back(go(e.guard()));
    renames_.push_back({v, name});
    kids.push_back(go(e.body()));
    renames_.pop_back();
    return e.with_binder(name, ty, std::move(kids));
  }

  Expr constant(const Expr& c) {
    const std::string& name = c.name();
    if (!m_.is_inclusion()) {
      auto it = m_.const_map.find(name);
      if (it != m_.const_map.end()) return it->second;
    } else if (target_.vocabulary().has_constant(name) &&
               target_.vocabulary().constant_type(name) == c.decl_type()) {
      return c;
    }
    if (const Definition* d = source_.definition_of(name)) {
      Transported wanted{source_.name(), m_.id, d->name};
      for (const auto& td : target_.definitions())
        if (td.provenance && *td.provenance == wanted)
          return Expr::constant(td.constant, td.type);
      auto cached = inlined_.find(name);
      if (cached != inlined_.end()) return cached->second;
      // Bodies are closed, so they translate independently of the scope.
      Translator inner(m_, source_, target_);
      Expr body = inner.go(d->body);
      inlined_.emplace(name, body);
      return body;
    }
    throw Error(ErrorCode::UnmappedConstant,
                "morphism " + m_.id + " does not map constant '" + name + "'");
  }

  const Morphism& m_;
  const Theory& source_;
  const Theory& target_;
  std::vector<std::pair<Variable, std::string>> renames_;
  std::map<std::string, Expr> inlined_;
};

[[noreturn]] void ill_formed(const Morphism& m, const std::string& why) {
  throw Error(ErrorCode::IllFormedMorphism, "morphism " + m.id + ": " + why);
}

}  // namespace

Expr translate_expr(const Morphism& m, const Expr& e, const Theory& source,
                    const Theory& target) {
  return Translator(m, source, target).go(e);
}

void check_morphism(const Morphism& m, const Theory& source, const Theory& target) {
  if (m.source != source.name() || m.target != target.name())
    throw Error(ErrorCode::TheoryMismatch, "morphism " + m.id + " is declared from " + m.source +
                                               " to " + m.target + ", not from " +
                                               source.name() + " to " + target.name());
  const Signature& src = source.base_signature();
  const Signature& tgt = target.vocabulary();
  if (m.is_inclusion()) {
    if (!m.type_map.empty() || !m.const_map.empty())
      ill_formed(m, "an inclusion cannot carry explicit maps");
    for (const auto& b : src.base_types())
      if (!tgt.has_base_type(b))
        ill_formed(m, "inclusion target " + target.name() + " lacks base type " + b);
    for (const auto& [c, ty] : src.constants())
      if (!tgt.has_constant(c) || tgt.constant_type(c) != ty)
        ill_formed(m, "inclusion target " + target.name() + " lacks constant '" + c + "' : " +
                          ty.to_string());
    return;
  }
  for (const auto& [b, img] : m.type_map) {
    if (!src.has_base_type(b)) ill_formed(m, "maps unknown base type " + b);
    try {
      tgt.check_type(img);
    } catch (const Error& err) {
      ill_formed(m, "image of " + b + ": " + err.what());
    }
  }
  for (const auto& b : src.base_types())
    if (!m.type_map.count(b))
      throw Error(ErrorCode::UnmappedBaseType,
                  "morphism " + m.id + " does not map base type " + b);
  for (const auto& [c, img] : m.const_map) {
    if (!source.vocabulary().has_constant(c)) ill_formed(m, "maps unknown constant '" + c + "'");
    Type want = translate_type(m, source.vocabulary().constant_type(c));
    Type got = [&] {
      try {
        return type_of(img, tgt);
      } catch (const Error& err) {
        ill_formed(m, "image of '" + c + "' does not type-check: " + err.what());
      }
    }();
    if (got != want)
      ill_formed(m, "image of '" + c + "' has type " + got.to_string() + ", expected " +
                        want.to_string());
    if (!free_vars(img).empty()) ill_formed(m, "image of '" + c + "' is not closed");
  }
  for (const auto& [c, ty] : src.constants())
    if (!m.const_map.count(c))
      throw Error(ErrorCode::UnmappedConstant,
                  "morphism " + m.id + " does not map constant '" + c + "'");
}

std::vector<Obligation> generate_obligations(const Morphism& m, const Theory& source,
                                             const Theory& target) {
  std::vector<Obligation> out;
  Translator tr(m, source, target);
  for (const auto& ax : source.axioms()) {
    Expr s = tr.go(ax.sentence);
    ObligationStatus status = Open{};
    for (const auto& ta : target.axioms())
      if (alpha_equal(ta.sentence, s)) {
        status = DischargedByAxiom{ta.name};
        break;
      }
    if (is_open(status))
      for (const auto& tt : target.theorems())
        if (alpha_equal(tt.sentence, s)) {
          status = DischargedByTheorem{tt.name};
          break;
        }
    out.push_back({ax.name, s, status});
  }
  return out;
}

Morphism elaborate_morphism(Morphism m, const Theory& source, const Theory& target,
                            const std::map<std::string, ObligationStatus>& declared) {
  check_morphism(m, source, target);
  m.obligations = generate_obligations(m, source, target);
  for (const auto& [axiom, status] : declared) {
    Obligation* ob = nullptr;
    for (auto& o : m.obligations)
      if (o.axiom == axiom) ob = &o;
    if (!ob)
      throw Error(ErrorCode::UnknownItem, "morphism " + m.id + ": source theory " +
                                              source.name() + " has no axiom '" + axiom + "'");
    if (const auto* t = std::get_if<DischargedByTheorem>(&status); t && !target.find_theorem(t->theorem))
      throw Error(ErrorCode::UnknownItem, "morphism " + m.id + ": target theory " +
                                              target.name() + " has no theorem '" + t->theorem +
                                              "'");
    if (const auto* a = std::get_if<DischargedByAxiom>(&status); a && !target.find_axiom(a->axiom))
      throw Error(ErrorCode::UnknownItem, "morphism " + m.id + ": target theory " +
                                              target.name() + " has no axiom '" + a->axiom + "'");
    ob->status = status;
  }
  return m;
}

Expr transported_statement(const Morphism& m, const Theory& source, const Theory& target,
                           const std::string& item) {
  Translator tr(m, source, target);
  if (const Theorem* t = source.find_theorem(item)) return tr.go(t->sentence);
  if (const Axiom* a = source.find_axiom(item)) return tr.go(a->sentence);
  if (const Definition* d = source.find_definition(item)) return tr.go(d->body);
  throw Error(ErrorCode::UnknownItem, "theory " + source.name() + " has no theorem or definition '" +
                                          item + "'");
}

Theory transport(const Morphism& m, const Theory& source, const Theory& target,
                 const std::string& item, const std::optional<std::string>& as) {
  if (m.source != source.name() || m.target != target.name())
    throw Error(ErrorCode::TheoryMismatch, "morphism " + m.id + " does not go from " +
                                               source.name() + " to " + target.name());
  if (m.open_count() > 0) {
    std::string names;
    for (const auto& o : m.obligations)
      if (is_open(o.status)) names += (names.empty() ? "" : ", ") + o.axiom;
    throw Error(ErrorCode::OpenObligations,
                "morphism " + m.id + " has open obligations: " + names);
  }
  Expr stmt = transported_statement(m, source, target, item);
  Transported prov{source.name(), m.id, item};
  std::string name = as.value_or(item + "@" + m.id);

  if (const Definition* d = source.find_definition(item)) {
    std::string constant = as.value_or(d->constant + "@" + m.id);
    if (const Definition* existing = target.find_definition(name);
        existing && existing->provenance == prov && existing->constant == constant &&
        alpha_equal(existing->body, stmt))
      return target;
    if (target.has_item(name))
      throw Error(ErrorCode::NameClash, "theory " + target.name() + " already has an item named '" +
                                            name + "'; choose another name");
    if (target.vocabulary().has_constant(constant))
      throw Error(ErrorCode::NameClash, "theory " + target.name() + " already has a constant '" +
                                            constant + "'; choose another name");
    return target.add_definition(name, constant, stmt, prov);
  }

  if (const Theorem* existing = target.find_theorem(name)) {
    const auto* p = std::get_if<Transported>(&existing->proof);
    if (p && *p == prov && alpha_equal(existing->sentence, stmt)) return target;
  }
  if (target.has_item(name))
    throw Error(ErrorCode::NameClash, "theory " + target.name() + " already has an item named '" +
                                          name + "'; choose another name");
  return target.add_theorem(name, stmt, prov);
}

Morphism compose(const Morphism& m1, const Morphism& m2, const Theory& source,
                 const Theory& middle, const Theory& target) {
  if (m1.target != m2.source)
    throw Error(ErrorCode::TheoryMismatch, "cannot compose " + m1.id + " (to " + m1.target +
                                               ") with " + m2.id + " (from " + m2.source + ")");
  Morphism out;
  out.id = m1.id + ";" + m2.id;
  out.source = m1.source;
  out.target = m2.target;
  out.kind = m1.is_inclusion() && m2.is_inclusion() ? MorphismKind::Inclusion
                                                    : MorphismKind::General;
  if (!out.is_inclusion()) {
    const Signature& src = source.base_signature();
    for (const auto& b : src.base_types())
      out.type_map.emplace(b, translate_type(m2, translate_type(m1, Type::base(b))));
    for (const auto& [c, ty] : src.constants())
      out.const_map.emplace(
          c, translate_expr(m2, translate_expr(m1, Expr::constant(c, ty), source, middle), middle,
                            target));
  }
  out.obligations = generate_obligations(out, source, target);
  if (m1.open_count() == 0 && m2.open_count() == 0)
    for (auto& o : out.obligations)
      if (is_open(o.status)) o.status = Asserted{"follows from " + m1.id + " and " + m2.id};
  return out;
}

Morphism identity_morphism(const Theory& t, const std::string& id) {
  Morphism m;
  m.id = id;
  m.source = m.target = t.name();
  for (const auto& b : t.base_signature().base_types()) m.type_map.emplace(b, Type::base(b));
  for (const auto& [c, ty] : t.base_signature().constants())
    m.const_map.emplace(c, Expr::constant(c, ty));
  return elaborate_morphism(m, t, t);
}

}  // namespace alonzo
