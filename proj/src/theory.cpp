#include "alonzo/theory.hpp"

namespace alonzo {

std::string proof_status_name(const ProofRecord& p) {
  struct {
    std::string operator()(const Traditional&) const { return "traditional"; }
    std::string operator()(const ModelChecked&) const { return "model-checked"; }
    std::string operator()(const Assumed&) const { return "assumed"; }
    std::string operator()(const Transported&) const { return "transported"; }
  } v;
  return std::visit(v, p);
}

const Axiom* Theory::find_axiom(const std::string& name) const {
  for (const auto& a : axioms_)
    if (a.name == name) return &a;
  return nullptr;
}

const Definition* Theory::find_definition(const std::string& name) const {
  for (const auto& d : definitions_)
    if (d.name == name) return &d;
  return nullptr;
}

const Definition* Theory::definition_of(const std::string& constant) const {
  for (const auto& d : definitions_)
    if (d.constant == constant) return &d;
  return nullptr;
}

const Theorem* Theory::find_theorem(const std::string& name) const {
  for (const auto& t : theorems_)
    if (t.name == name) return &t;
  return nullptr;
}

bool Theory::has_item(const std::string& name) const {
  for (const auto& i : items_)
    if (i.name == name) return true;
  return false;
}

void Theory::require_fresh_item(const std::string& name) const {
  if (has_item(name))
    throw Error(ErrorCode::DuplicateName, "theory " + name_ + " already has an item named '" +
                                              name + "'");
}

Theory Theory::add_base_type(const std::string& name) const {
  Theory t = *this;
  t.base_.add_base_type(name);
  t.vocab_.add_base_type(name);
  return t;
}

Theory Theory::add_constant(const std::string& name, const Type& type) const {
  Theory t = *this;
  t.vocab_.add_constant(name, type);
  t.base_.add_constant(name, type);
  return t;
}

namespace {

void require_sentence(const Expr& s, const Signature& sig, const std::string& what) {
  Type ty = type_of(s, sig);
  if (!ty.is_bool())
    throw Error(ErrorCode::NotASentence,
                what + " has type " + ty.to_string() + ", not Bool");
  auto fv = free_vars(s);
  if (!fv.empty())
    throw Error(ErrorCode::NotASentence,
                what + " has free variable '" + fv.begin()->name + "'");
}

}  // namespace

Theory Theory::add_axiom(const std::string& name, const Expr& sentence) const {
  require_fresh_item(name);
  require_sentence(sentence, vocab_, "axiom " + name);
  Theory t = *this;
  t.axioms_.push_back({name, sentence});
  t.items_.push_back({ItemKind::Axiom, name});
  return t;
}

Theory Theory::add_definition(const std::string& name, const std::string& constant,
                              const Expr& body, std::optional<Transported> provenance) const {
  require_fresh_item(name);
  if (vocab_.has_constant(constant))
    throw Error(ErrorCode::ConstantExists,
                "constant '" + constant + "' already exists in " + name_);
  Type ty = type_of(body, vocab_);
  auto fv = free_vars(body);
  if (!fv.empty())
    throw Error(ErrorCode::NotClosed, "definition " + name + " has free variable '" +
                                          fv.begin()->name + "'");
  Theory t = *this;
  t.vocab_.add_constant(constant, ty);
  t.definitions_.push_back({name, constant, ty, body, std::move(provenance)});
  t.items_.push_back({ItemKind::Definition, name});
  return t;
}

Theory Theory::add_theorem(const std::string& name, const Expr& sentence,
                           ProofRecord proof) const {
  require_fresh_item(name);
  require_sentence(sentence, vocab_, "theorem " + name);
  Theory t = *this;
  t.theorems_.push_back({name, sentence, std::move(proof)});
  t.items_.push_back({ItemKind::Theorem, name});
  return t;
}

Theory Theory::add_notation(const NotationDef& def) const {
  Theory t = *this;
  t.notations_ = register_notation(notations_, def, vocab_);
  return t;
}

Theory Theory::set_infinite_only(bool flag) const {
  Theory t = *this;
  t.infinite_only_ = flag;
  return t;
}

Theory Theory::extend(const Theory& parent) const {
  Theory t = *this;
  for (const auto& b : parent.base_.base_types())
    if (!t.vocab_.has_base_type(b)) t = t.add_base_type(b);
  for (const auto& [c, ty] : parent.base_.constants()) {
    if (t.vocab_.has_constant(c)) {
      if (t.vocab_.constant_type(c) != ty)
        throw Error(ErrorCode::ConstantExists, "constant '" + c + "' from " + parent.name() +
                                                   " clashes with an existing constant");
      continue;
    }
    t = t.add_constant(c, ty);
  }
  for (const auto& ref : parent.items_) {
    if (ref.kind == ItemKind::Axiom) {
      const Axiom& a = *parent.find_axiom(ref.name);
      if (const Axiom* mine = t.find_axiom(a.name); mine && alpha_equal(mine->sentence, a.sentence))
        continue;
      t = t.add_axiom(a.name, a.sentence);
    } else if (ref.kind == ItemKind::Definition) {
      const Definition& d = *parent.find_definition(ref.name);
      if (const Definition* mine = t.find_definition(d.name);
          mine && mine->constant == d.constant && alpha_equal(mine->body, d.body))
        continue;
      t = t.add_definition(d.name, d.constant, d.body, d.provenance);
    }
  }
  for (const auto& def : parent.notations_.defs())
    if (!t.notations_.find(def.sugar_name)) t = t.add_notation(def);
  t.infinite_only_ = t.infinite_only_ || parent.infinite_only_;
  return t;
}

Expr Theory::defining_axiom(const Definition& d) {
  return Expr::eq(Expr::constant(d.constant, d.type), d.body);
}

Signature replay_vocabulary(const Theory& t) {
  Signature sig = t.base_signature();
  for (const auto& d : t.definitions()) sig.add_constant(d.constant, type_of(d.body, sig));
  return sig;
}

}  // namespace alonzo
