#include "fixtures.hpp"

namespace alonzo::testing {

Signature oracle_signature() {
  Signature sig;
  sig.add_base_type("M");
  Type m = Type::base("M");
  Type b = Type::boolean();
  sig.add_constant("e", m);
  sig.add_constant("op", Type::curried(std::vector<Type>{m, m}, m));
  sig.add_constant("k", Type::fun(m, m));
  sig.add_constant("p", Type::fun(m, b));
  sig.add_constant("r", Type::curried(std::vector<Type>{m, m}, b));
  sig.add_constant("S", Type::set_of(m));
  sig.add_constant("h", Type::fun(Type::fun(m, b), m));
  sig.add_constant("c", Type::prod(m, m));
  return sig;
}

GenConfig oracle_config(int max_depth) {
  Type m = Type::base("M");
  Type b = Type::boolean();
  GenConfig cfg;
  cfg.max_depth = max_depth;
  cfg.binder_types = {m, m, b, Type::fun(m, b), Type::set_of(m), Type::prod(m, m)};
  cfg.side_types = cfg.binder_types;
  cfg.var_names = {"x", "y", "e"};
  cfg.guard_sets = {"S"};
  return cfg;
}

namespace {

Value random_value(Domains& d, const Type& t, std::mt19937_64& rng) {
  auto roll = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  switch (t.kind()) {
    case Type::Kind::Bool: return Value::truth(roll(2) == 1);
    case Type::Kind::Base: return Value::elem(roll(static_cast<int>(d.size(t))));
    case Type::Kind::Prod: return Value::tuple(random_value(d, t.first(), rng), random_value(d, t.second(), rng));
    case Type::Kind::SetOf: {
      std::vector<Value> members;
      for (const auto& v : d.values(t.elem()))
        if (roll(2)) members.push_back(v);
      return Value::set(std::move(members));
    }
    case Type::Kind::Fun: {
      std::vector<Value> table;
      for (std::size_t i = 0; i < d.size(t.dom()); ++i)
        table.push_back(!t.cod().is_bool() && roll(4) == 0 ? Value::undef() : random_value(d, t.cod(), rng));
      return Value::func(std::move(table));
    }
  }
  return Value::undef();
}

}  // namespace

FiniteModel random_model(const Signature& sig, std::mt19937_64& rng, int max_size) {
  FiniteModel m;
  m.name = "random";
  for (const auto& b : sig.base_types()) {
    int n = std::uniform_int_distribution<int>(1, max_size)(rng);
    for (int i = 0; i < n; ++i) m.carriers[b].push_back(std::to_string(i));
  }
  Domains d(m);
  for (const auto& [name, ty] : sig.constants()) m.interp[name] = random_value(d, ty, rng);
  return m;
}

Oracle oracle_for(const Signature& sig, const FiniteModel& m) {
  std::map<std::string, int> sizes;
  for (const auto& [b, names] : m.carriers) sizes[b] = static_cast<int>(names.size());
  Domains d(m);
  std::map<std::string, OVal> interp;
  for (const auto& [name, ty] : sig.constants()) interp[name] = decode(d, ty, m.interp.at(name));
  return Oracle(sizes, interp);
}

Theory theory_of(const std::string& name, const Signature& sig) {
  Theory t(name);
  for (const auto& b : sig.base_types()) t = t.add_base_type(b);
  for (const auto& [c, ty] : sig.constants()) t = t.add_constant(c, ty);
  return t;
}

}  // namespace alonzo::testing
