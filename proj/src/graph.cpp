#include <algorithm>
#include <functional>

#include "alonzo/graph.hpp"

namespace alonzo {

TheoryGraph TheoryGraph::add_theory(const Theory& t) const {
  if (has_theory(t.name()))
    throw Error(ErrorCode::DuplicateName, "theory " + t.name() + " is already in the graph");
  TheoryGraph g = *this;
  g.theories_.emplace(t.name(), t);
  return g;
}

TheoryGraph TheoryGraph::add_morphism(const Morphism& m) const {
  if (has_morphism(m.id))
    throw Error(ErrorCode::DuplicateName, "morphism " + m.id + " is already in the graph");
  for (const auto* end : {&m.source, &m.target})
    if (!has_theory(*end))
      throw Error(ErrorCode::DanglingEndpoint,
                  "morphism " + m.id + " refers to unknown theory " + *end);
  TheoryGraph g = *this;
  g.morphisms_.emplace(m.id, m);
  return g;
}

TheoryGraph TheoryGraph::replace_theory(const Theory& t) const {
  theory(t.name());
  TheoryGraph g = *this;
  g.theories_.insert_or_assign(t.name(), t);
  return g;
}

const Theory& TheoryGraph::theory(const std::string& name) const {
  auto it = theories_.find(name);
  if (it == theories_.end()) throw Error(ErrorCode::UnknownTheory, "unknown theory " + name);
  return it->second;
}

const Morphism& TheoryGraph::morphism(const std::string& id) const {
  auto it = morphisms_.find(id);
  if (it == morphisms_.end()) throw Error(ErrorCode::UnknownItem, "unknown morphism " + id);
  return it->second;
}

TheoryGraph TheoryGraph::subgraph(const std::vector<std::string>& theories,
                                  const std::vector<std::string>& morphisms) const {
  TheoryGraph g;
  for (const auto& t : theories) g = g.add_theory(theory(t));
  for (const auto& m : morphisms) g = g.add_morphism(morphism(m));
  return g;
}

std::vector<Path> paths(const TheoryGraph& g, const std::string& from, const std::string& to,
                        int max_length) {
  g.theory(from);
  g.theory(to);
  std::vector<Path> out;
  Path current;
  std::function<void(const std::string&)> walk = [&](const std::string& at) {
    if (at == to) out.push_back(current);
    if (static_cast<int>(current.size()) >= max_length) return;
    for (const auto& [id, m] : g.morphisms()) {
      if (m.source != at) continue;
      current.push_back(id);
      walk(m.target);
      current.pop_back();
    }
  };
  walk(from);
  std::sort(out.begin(), out.end());
  return out;
}

Expr translate_along(const TheoryGraph& g, const Path& path, const Expr& e) {
  Expr cur = e;
  for (const auto& id : path) {
    const Morphism& m = g.morphism(id);
    cur = translate_expr(m, cur, g.theory(m.source), g.theory(m.target));
  }
  return cur;
}

namespace {

bool shorter_path(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<AvailableItem> available_items(const TheoryGraph& g, const std::string& theory,
                                           int max_length) {
  g.theory(theory);
  // Paths ending at `theory`, grouped by origin.
  std::map<std::string, std::vector<Path>> incoming;
  Path current;
  std::function<void(const std::string&)> walk = [&](const std::string& at) {
    incoming[at].push_back(Path(current.rbegin(), current.rend()));
    if (static_cast<int>(current.size()) >= max_length) return;
    for (const auto& [id, m] : g.morphisms()) {
      if (m.target != at) continue;
      current.push_back(id);
      walk(m.source);
      current.pop_back();
    }
  };
  walk(theory);

  std::map<std::tuple<std::string, std::string, std::string>, AvailableItem> found;
  for (auto& [origin, ps] : incoming) {
    std::sort(ps.begin(), ps.end(), shorter_path);
    const Theory& src = g.theory(origin);
    for (const auto& ref : src.items()) {
      if (ref.kind == ItemKind::Axiom) continue;
      Expr stmt = ref.kind == ItemKind::Theorem ? src.find_theorem(ref.name)->sentence
                                                : src.find_definition(ref.name)->body;
      for (const auto& p : ps) {
        Expr translated = stmt;
        try {
          translated = translate_along(g, p, stmt);
        } catch (const Error&) {
          continue;
        }
        auto key = std::make_tuple(origin, ref.name, canonical_key(translated));
        auto it = found.find(key);
        if (it == found.end())
          found.emplace(key, AvailableItem{origin, ref.name, ref.kind, translated, p});
        else if (shorter_path(p, it->second.path))
          it->second.path = p;
      }
    }
  }
  std::vector<AvailableItem> out;
  for (auto& [key, item] : found) out.push_back(std::move(item));
  std::stable_sort(out.begin(), out.end(), [](const AvailableItem& a, const AvailableItem& b) {
    return std::tie(a.origin, a.item, a.path) < std::tie(b.origin, b.item, b.path);
  });
  return out;
}

std::size_t ValidationReport::open_count() const {
  std::size_t n = 0;
  for (const auto& m : morphisms) n += m.open;
  return n;
}

std::size_t ValidationReport::error_count() const {
  std::size_t n = 0;
  for (const auto& t : theories) n += t.errors.size();
  return n;
}

namespace {

std::vector<std::string> check_theory(const Theory& t) {
  std::vector<std::string> errors;
  Signature sig = t.base_signature();
  auto check = [&](const std::string& what, const Expr& s) {
    try {
      if (!type_of(s, sig).is_bool()) errors.push_back(what + " is not Boolean");
      else if (!free_vars(s).empty()) errors.push_back(what + " is not closed");
    } catch (const Error& err) {
      errors.push_back(what + ": " + err.what());
    }
  };
  for (const auto& ref : t.items()) {
    switch (ref.kind) {
      case ItemKind::Axiom:
        check("axiom " + ref.name, t.find_axiom(ref.name)->sentence);
        break;
      case ItemKind::Theorem:
        check("theorem " + ref.name, t.find_theorem(ref.name)->sentence);
        break;
      case ItemKind::Definition: {
        const Definition& d = *t.find_definition(ref.name);
        try {
          Type ty = type_of(d.body, sig);
          if (ty != d.type) errors.push_back("definition " + d.name + " changed type");
          sig.add_constant(d.constant, ty);
        } catch (const Error& err) {
          errors.push_back("definition " + d.name + ": " + err.what());
        }
        break;
      }
    }
  }
  if (!(sig == t.vocabulary())) errors.push_back("vocabulary does not replay");
  return errors;
}

}  // namespace

std::optional<std::string> provenance_problem(const TheoryGraph& g, const Theory& t,
                                              const Transported& p, const Expr& stored) {
  if (!g.has_morphism(p.morphism)) return "unknown morphism " + p.morphism;
  if (!g.has_theory(p.source_theory)) return "unknown theory " + p.source_theory;
  const Morphism& m = g.morphism(p.morphism);
  if (m.source != p.source_theory || m.target != t.name())
    return "morphism " + m.id + " does not go from " + p.source_theory + " to " + t.name();
  try {
    Expr again = transported_statement(m, g.theory(p.source_theory), t, p.source_item);
    if (!alpha_equal(again, stored))
      return "does not match the translation of " + p.source_theory + "." + p.source_item +
             " along " + m.id;
  } catch (const Error& err) {
    return err.what();
  }
  return std::nullopt;
}

ValidationReport validate(const TheoryGraph& g) {
  ValidationReport r;
  for (const auto& [id, m] : g.morphisms()) {
    MorphismSummary s;
    s.id = id;
    s.source = m.source;
    s.target = m.target;
    s.inclusion = m.is_inclusion();
    for (const auto& o : m.obligations) {
      if (std::holds_alternative<DischargedByAxiom>(o.status) ||
          std::holds_alternative<DischargedByTheorem>(o.status))
        ++s.discharged;
      else if (std::holds_alternative<ModelEvidence>(o.status))
        ++s.model;
      else if (std::holds_alternative<Asserted>(o.status))
        ++s.asserted;
      else {
        ++s.open;
        s.open_axioms.push_back(o.axiom);
      }
    }
    r.morphisms.push_back(std::move(s));
    for (const auto* end : {&m.source, &m.target})
      if (!g.has_theory(*end)) r.dangling.push_back("morphism " + id + ": unknown theory " + *end);
  }
  for (const auto& [name, t] : g.theories()) {
    r.theories.push_back({name, check_theory(t)});
    for (const auto& th : t.theorems())
      if (const auto* p = std::get_if<Transported>(&th.proof))
        if (auto problem = provenance_problem(g, t, *p, th.sentence))
          r.dangling.push_back(name + "." + th.name + ": " + *problem);
    // Definitions inherited through `extends` keep provenance naming another
    // target, so only those transported into this theory are checked.
    for (const auto& d : t.definitions())
      if (d.provenance && g.has_morphism(d.provenance->morphism) &&
          g.morphism(d.provenance->morphism).target == name)
        if (auto problem = provenance_problem(g, t, *d.provenance, d.body))
          r.dangling.push_back(name + "." + d.name + ": " + *problem);
  }
  return r;
}

}  // namespace alonzo
