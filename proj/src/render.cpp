#include <sstream>

#include "alonzo/source.hpp"

namespace alonzo {

namespace {

// Index into t.items() after which each notation can be registered: its
// target and guard set must already exist.
std::vector<std::pair<std::size_t, const NotationDef*>> notation_slots(const Theory& t) {
  std::vector<std::pair<std::size_t, const NotationDef*>> out;
  auto introduced = [&](const std::string& c) -> std::size_t {
    const auto& items = t.items();
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].kind == ItemKind::Definition && t.find_definition(items[i].name)->constant == c)
        return i + 1;
    return 0;
  };
  for (const auto& def : t.notations().defs()) {
    std::size_t at = introduced(def.target);
    if (def.guarded()) at = std::max(at, introduced(std::get<std::string>(def.binder)));
    out.emplace_back(at, &def);
  }
  return out;
}

std::string notation_source(const NotationDef& def) {
  std::ostringstream out;
  out << "  notation " << def.sugar_name << "\n";
  out << "    shape " << shape_name(def.shape) << "\n";
  out << "    target " << def.target << "\n";
  out << "    order";
  for (auto s : def.argument_order) out << ' ' << slot_name(s);
  out << "\n";
  if (def.guarded())
    out << "    binder in " << std::get<std::string>(def.binder) << "\n";
  else
    out << "    binder " << std::get<Type>(def.binder).to_string() << "\n";
  if (!def.latex.empty()) out << "    latex " << def.latex << "\n";
  out << "  end\n";
  return out.str();
}

std::string proof_source(const ProofRecord& p) {
  std::ostringstream out;
  if (const auto* t = std::get_if<Traditional>(&p)) {
    out << "  proof traditional\n";
    std::istringstream lines(t->text);
    for (std::string l; std::getline(lines, l);) out << "    " << l << "\n";
  } else if (const auto* m = std::get_if<ModelChecked>(&p)) {
    out << "  proof model-checked";
    for (const auto& f : m->models) out << ' ' << f;
    out << "\n";
  } else if (const auto* tr = std::get_if<Transported>(&p)) {
    out << "  proof transported " << tr->source_theory << ' ' << tr->morphism << ' '
        << tr->source_item << "\n";
  } else {
    out << "  proof assumed\n";
  }
  out << "  end\n";
  return out.str();
}

std::string latex_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}')
      out += '\\';
    out += c;
  }
  return out;
}

std::string latex_constant(const std::string& name, const Type& type) {
  std::string s = print_latex(Expr::constant(name, type));
  if (s.size() > 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

std::string image_source(const Expr& e, const NotationSet& notations) {
  if (e.kind() == Expr::Kind::Const && is_infix_operator(e.name())) return e.name();
  return print_compact(e, notations);
}

std::string obligation_source(const Obligation& o) {
  if (const auto* a = std::get_if<DischargedByAxiom>(&o.status)) return "by-axiom " + a->axiom;
  if (const auto* t = std::get_if<DischargedByTheorem>(&o.status)) return "by-theorem " + t->theorem;
  if (const auto* m = std::get_if<ModelEvidence>(&o.status)) {
    std::string s = "by-model";
    for (const auto& f : m->models) s += " " + f;
    return s;
  }
  if (const auto* a = std::get_if<Asserted>(&o.status)) return "asserted \"" + a->justification + "\"";
  return {};
}

}  // namespace

std::string render_item_source(const Theory& t, const std::string& item) {
  std::ostringstream out;
  const NotationSet& n = t.notations();
  if (const Axiom* a = t.find_axiom(item)) {
    out << "  axiom " << a->name << " : " << print_compact(a->sentence, n) << "\n";
  } else if (const Definition* d = t.find_definition(item)) {
    out << "  define " << d->name << ' ' << d->constant << " := " << print_compact(d->body, n) << "\n";
    if (d->provenance)
      out << "  provenance " << d->provenance->source_theory << ' ' << d->provenance->morphism << ' '
          << d->provenance->source_item << "\n";
  } else if (const Theorem* th = t.find_theorem(item)) {
    out << "  theorem " << th->name << " : " << print_compact(th->sentence, n) << "\n";
    out << proof_source(th->proof);
  } else {
    throw Error(ErrorCode::UnknownItem, "no item " + item + " in " + t.name());
  }
  return out.str();
}

std::string render_theory_source(const Theory& t) {
  std::ostringstream out;
  out << "theory " << t.name() << "\n";
  if (t.infinite_only()) out << "  property infinite-only\n";
  const Signature& sig = t.base_signature();
  if (!sig.base_types().empty()) {
    out << "  base";
    for (const auto& b : sig.base_types()) out << ' ' << b;
    out << "\n";
  }
  for (const auto& [c, ty] : sig.constants()) out << "  const " << c << " : " << ty.to_string() << "\n";
  auto slots = notation_slots(t);
  auto emit_notations = [&](std::size_t at) {
    for (const auto& [where, def] : slots)
      if (where == at) out << notation_source(*def);
  };
  emit_notations(0);
  const auto& items = t.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << render_item_source(t, items[i].name);
    emit_notations(i + 1);
  }
  out << "end\n";
  return out.str();
}

std::string render_morphism_source(const Morphism& m, const Theory& source, const Theory& target) {
  (void)source;
  std::ostringstream out;
  out << "morphism " << m.id << " : " << m.source << " -> " << m.target << "\n";
  if (m.is_inclusion()) out << "  kind inclusion\n";
  for (const auto& [b, ty] : m.type_map) out << "  map type " << b << " => " << ty.to_string() << "\n";
  for (const auto& [c, e] : m.const_map)
    out << "  map const " << c << " => " << image_source(e, target.notations()) << "\n";
  for (const auto& o : m.obligations) {
    std::string s = obligation_source(o);
    if (!s.empty()) out << "  obligation " << o.axiom << " := " << s << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string render_theory_latex(const Theory& t) {
  std::ostringstream out;
  const NotationSet& n = t.notations();
  out << "\\begin{alonzotheory}{" << latex_text(t.name()) << "}\n";
  for (const auto& b : t.base_signature().base_types()) out << "  \\alonzobasetype{" << b << "}\n";
  for (const auto& [c, ty] : t.base_signature().constants())
    out << "  \\alonzoconstant{" << latex_constant(c, ty) << "}{" << latex_type(ty) << "}\n";
  for (const auto& ref : t.items()) {
    switch (ref.kind) {
      case ItemKind::Axiom: {
        const Axiom& a = *t.find_axiom(ref.name);
        out << "  \\alonzoaxiom{" << latex_text(a.name) << "}{" << print_latex(a.sentence, n) << "}\n";
        break;
      }
      case ItemKind::Definition: {
        const Definition& d = *t.find_definition(ref.name);
        out << "  \\alonzodefinition{" << latex_text(d.name) << "}{" << latex_constant(d.constant, d.type)
            << "}{" << latex_type(d.type) << "}{" << print_latex(d.body, n) << "}\n";
        break;
      }
      case ItemKind::Theorem: {
        const Theorem& th = *t.find_theorem(ref.name);
        out << "  \\alonzotheorem{" << latex_text(th.name) << "}{" << print_latex(th.sentence, n)
            << "}{" << proof_status_name(th.proof) << "}\n";
        break;
      }
    }
  }
  out << "\\end{alonzotheory}\n";
  return out.str();
}

std::string render_morphism_latex(const Morphism& m, const Theory& source, const Theory& target) {
  std::ostringstream out;
  out << "\\begin{alonzomorphism}{" << latex_text(m.id) << "}{" << latex_text(m.source) << "}{"
      << latex_text(m.target) << "}\n";
  for (const auto& [b, ty] : m.type_map) out << "  \\alonzomaptype{" << b << "}{" << latex_type(ty) << "}\n";
  for (const auto& [c, e] : m.const_map)
    out << "  \\alonzomapconst{" << latex_constant(c, source.vocabulary().constant_type(c)) << "}{"
        << print_latex(e, target.notations()) << "}\n";
  for (const auto& o : m.obligations)
    out << "  \\alonzoobligation{" << latex_text(o.axiom) << "}{" << print_latex(o.sentence, target.notations())
        << "}{" << obligation_status_name(o.status) << "}\n";
  out << "\\end{alonzomorphism}\n";
  return out.str();
}

}  // namespace alonzo
