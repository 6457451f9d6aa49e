#include <algorithm>

#include "alonzo/model.hpp"

namespace alonzo {

// ---------------------------------------------------------------------------
// Value

Value Value::func(std::vector<Value> table) {
  return Value(Kind::Func, 0, std::make_shared<const std::vector<Value>>(std::move(table)));
}

Value Value::tuple(Value a, Value b) {
  return Value(Kind::Tuple, 0,
               std::make_shared<const std::vector<Value>>(std::vector<Value>{a, b}));
}

Value Value::set(std::vector<Value> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Value(Kind::Set, 0, std::make_shared<const std::vector<Value>>(std::move(members)));
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.atom_ <=> b.atom_; c != 0) return c;
  if (a.items_ == b.items_) return std::strong_ordering::equal;
  if (!a.items_) return std::strong_ordering::less;
  if (!b.items_) return std::strong_ordering::greater;
  return std::lexicographical_compare_three_way(a.items_->begin(), a.items_->end(),
                                                b.items_->begin(), b.items_->end());
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

namespace {

bool contains_unknown(const Value& v) {
  if (v.is_unknown()) return true;
  if (v.kind() == Value::Kind::Func || v.kind() == Value::Kind::Tuple ||
      v.kind() == Value::Kind::Set)
    for (const auto& x : v.items())
      if (contains_unknown(x)) return true;
  return false;
}

[[noreturn]] void too_large(const Type& t, std::size_t limit) {
  throw Error(ErrorCode::SearchSpaceTooLarge,
              "type " + t.to_string() + " has more than " + std::to_string(limit) + " values");
}

}  // namespace

// ---------------------------------------------------------------------------
// Domains

Domains::Domains(const FiniteModel& m, std::size_t limit) : model_(m), limit_(limit) {}

Domains::Entry& Domains::entry(const Type& t) {
  auto it = cache_.find(t);
  if (it != cache_.end()) return it->second;
  Entry e;
  switch (t.kind()) {
    case Type::Kind::Bool:
      e.values = {Value::truth(false), Value::truth(true)};
      break;
    case Type::Kind::Base: {
      auto c = model_.carriers.find(t.name());
      if (c == model_.carriers.end())
        throw Error(ErrorCode::ModelDoesNotMatchSignature,
                    "model has no carrier for base type " + t.name());
      for (std::size_t i = 0; i < c->second.size(); ++i)
        e.values.push_back(Value::elem(static_cast<int>(i)));
      break;
    }
    case Type::Kind::Fun: {
      const std::size_t points = entry(t.dom()).values.size();
      std::vector<Value> choices = entry(t.cod()).values;
      if (!t.cod().is_bool()) choices.push_back(Value::undef());
      double count = 1;
      for (std::size_t i = 0; i < points; ++i) {
        count *= static_cast<double>(choices.size());
        if (count > static_cast<double>(limit_)) too_large(t, limit_);
      }
      std::vector<std::size_t> odo(points, 0);
      for (;;) {
        std::vector<Value> table;
        table.reserve(points);
        for (auto k : odo) table.push_back(choices[k]);
        e.values.push_back(Value::func(std::move(table)));
        std::size_t i = points;
        while (i > 0 && ++odo[i - 1] == choices.size()) odo[--i] = 0;
        if (i == 0) break;
      }
      break;
    }
    case Type::Kind::Prod: {
      const auto left = entry(t.first()).values;
      const auto right = entry(t.second()).values;
      if (static_cast<double>(left.size()) * static_cast<double>(right.size()) >
          static_cast<double>(limit_))
        too_large(t, limit_);
      for (const auto& a : left)
        for (const auto& b : right) e.values.push_back(Value::tuple(a, b));
      break;
    }
    case Type::Kind::SetOf: {
      const auto elems = entry(t.elem()).values;
      if (elems.size() >= 63 || (std::size_t{1} << elems.size()) > limit_) too_large(t, limit_);
      for (std::size_t bits = 0; bits < (std::size_t{1} << elems.size()); ++bits) {
        std::vector<Value> members;
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (bits >> i & 1) members.push_back(elems[i]);
        e.values.push_back(Value::set(std::move(members)));
      }
      break;
    }
  }
  if (!t.is_base() && !t.is_bool())
    for (std::size_t i = 0; i < e.values.size(); ++i) e.index.emplace(e.values[i], i);
  return cache_.emplace(t, std::move(e)).first->second;
}

const std::vector<Value>& Domains::values(const Type& t) { return entry(t).values; }

std::size_t Domains::index_of(const Type& t, const Value& v) {
  if (t.is_base() || t.is_bool()) return static_cast<std::size_t>(v.index());
  const Entry& e = entry(t);
  auto it = e.index.find(v);
  if (it == e.index.end())
    throw Error(ErrorCode::InvalidModel, "value is not in the domain of " + t.to_string());
  return it->second;
}

bool Domains::well_formed(const Type& t, const Value& v) {
  switch (t.kind()) {
    case Type::Kind::Bool:
      return v.kind() == Value::Kind::Truth;
    case Type::Kind::Base:
      return v.kind() == Value::Kind::Elem && v.index() >= 0 &&
             static_cast<std::size_t>(v.index()) < size(t);
    case Type::Kind::Fun: {
      if (v.kind() != Value::Kind::Func || v.items().size() != size(t.dom())) return false;
      for (const auto& x : v.items()) {
        if (x.is_undef() && !t.cod().is_bool()) continue;
        if (!well_formed(t.cod(), x)) return false;
      }
      return true;
    }
    case Type::Kind::Prod:
      return v.kind() == Value::Kind::Tuple && well_formed(t.first(), v.items()[0]) &&
             well_formed(t.second(), v.items()[1]);
    case Type::Kind::SetOf:
      if (v.kind() != Value::Kind::Set) return false;
      for (const auto& x : v.items())
        if (!well_formed(t.elem(), x)) return false;
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Evaluator

Evaluator::Evaluator(const FiniteModel& m, const Theory* theory)
    : model_(m), theory_(theory), domains_(model_) {}

Value Evaluator::eval(const Expr& e, const ValueEnv& env) {
  env_ = &env;
  stack_.clear();
  Value v = go(e);
  env_ = nullptr;
  return v;
}

Value Evaluator::go(const Expr& e) {
  Value v = go_raw(e);
  if (v.is_undef() && e.type() && e.type()->is_bool()) return Value::truth(false);
  return v;
}

Value Evaluator::lookup(const Expr& v) {
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
    if (*it->name == v.name() && *it->type == v.decl_type()) return it->value;
  if (env_) {
    auto it = env_->find(v.name());
    if (it != env_->end()) return it->second;
  }
  throw Error(ErrorCode::InvalidModel, "no value for free variable '" + v.name() + "'");
}

Value Evaluator::constant(const Expr& c) {
  auto it = model_.interp.find(c.name());
  if (it != model_.interp.end()) return it->second;
  auto cached = defined_cache_.find(c.name());
  if (cached != defined_cache_.end()) return cached->second;
  const Definition* d = theory_ ? theory_->definition_of(c.name()) : nullptr;
  if (!d)
    throw Error(ErrorCode::ModelDoesNotMatchSignature,
                "model " + model_.name + " does not interpret constant '" + c.name() + "'");
  auto saved = std::move(stack_);
  stack_.clear();
  Value v = go(d->body);
  stack_ = std::move(saved);
  defined_cache_.emplace(c.name(), v);
  return v;
}

std::optional<bool> Evaluator::equal3(const Value& a, const Value& b) const {
  if (partial_ && (contains_unknown(a) || contains_unknown(b))) return std::nullopt;
  return a == b;
}

Value Evaluator::apply(const Type& fun_type, const Value& f, const Value& a) {
  if (f.is_undef() || a.is_undef()) return Value::undef();
  if (f.is_unknown() || a.is_unknown()) return Value::unknown();
  if (partial_ && contains_unknown(a)) return Value::unknown();
  return f.items()[domains_.index_of(fun_type.dom(), a)];
}

Value Evaluator::go_raw(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Var:
      return lookup(e);
    case K::Const:
      return constant(e);
    case K::App: {
      Value f = go(e.fun());
      if (f.is_undef()) return f;
      Value a = go(e.arg());
      return apply(*e.fun().type(), f, a);
    }
    case K::Abs:
    case K::GuardedAbs: {
      if (partial_) return Value::unknown();
      Value guard;
      if (e.is(K::GuardedAbs)) {
        guard = go(e.guard());
        if (guard.is_undef()) return guard;
      }
      const auto& dom = domains_.values(e.decl_type());
      // Predicates stay total: false outside the guard.
      const Value outside = e.body().type() && e.body().type()->is_bool() ? Value::truth(false)
                                                                           : Value::undef();
      std::vector<Value> table;
      table.reserve(dom.size());
      stack_.push_back({&e.name(), &e.decl_type(), Value()});
      for (const auto& d : dom) {
        if (e.is(K::GuardedAbs) &&
            !std::binary_search(guard.items().begin(), guard.items().end(), d)) {
          table.push_back(outside);
          continue;
        }
        stack_.back().value = d;
        table.push_back(go(e.body()));
      }
      stack_.pop_back();
      return Value::func(std::move(table));
    }
    case K::Eq: {
      Value l = go(e.lhs());
      Value r = go(e.rhs());
      if (l.is_undef() || r.is_undef()) return Value::truth(false);
      auto eq = equal3(l, r);
      return eq ? Value::truth(*eq) : Value::unknown();
    }
    case K::Iota: {
      if (partial_) return Value::unknown();
      const auto& dom = domains_.values(e.decl_type());
      stack_.push_back({&e.name(), &e.decl_type(), Value()});
      int count = 0;
      Value witness;
      for (const auto& d : dom) {
        stack_.back().value = d;
        if (go(e.body()).truth_value()) {
          witness = d;
          if (++count > 1) break;
        }
      }
      stack_.pop_back();
      return count == 1 ? witness : Value::undef();
    }
    case K::Not: {
      Value v = go(e.child(0));
      return v.is_unknown() ? v : Value::truth(!v.truth_value());
    }
    case K::And:
    case K::Or:
    case K::Implies: {
      // The left value that decides the connective on its own.
      const bool decisive = e.is(K::And) ? false : !e.is(K::Implies);
      const bool decided = e.is(K::And) ? false : true;
      Value l = go(e.lhs());
      if (!l.is_unknown() && l.truth_value() == decisive) return Value::truth(decided);
      Value r = go(e.rhs());
      const bool right_decisive = e.is(K::And) ? false : true;
      if (!r.is_unknown() && r.truth_value() == right_decisive) return Value::truth(decided);
      if (l.is_unknown() || r.is_unknown()) return Value::unknown();
      return Value::truth(!decided);
    }
    case K::Iff: {
      Value l = go(e.lhs());
      Value r = go(e.rhs());
      if (l.is_unknown() || r.is_unknown()) return Value::unknown();
      return Value::truth(l.truth_value() == r.truth_value());
    }
    case K::Forall:
    case K::Exists: {
      const bool decisive = e.is(K::Exists);
      const auto& dom = domains_.values(e.decl_type());
      stack_.push_back({&e.name(), &e.decl_type(), Value()});
      bool unknown = false;
      for (const auto& d : dom) {
        stack_.back().value = d;
        Value b = go(e.body());
        if (b.is_unknown()) {
          unknown = true;
        } else if (b.truth_value() == decisive) {
          stack_.pop_back();
          return Value::truth(decisive);
        }
      }
      stack_.pop_back();
      return unknown ? Value::unknown() : Value::truth(!decisive);
    }
    case K::IsDefined: {
      Value v = go(e.child(0));
      return v.is_unknown() ? v : Value::truth(!v.is_undef());
    }
    case K::Pair: {
      Value l = go(e.lhs());
      Value r = go(e.rhs());
      if (l.is_undef() || r.is_undef()) return Value::undef();
      if (l.is_unknown() || r.is_unknown()) return Value::unknown();
      return Value::tuple(l, r);
    }
    case K::Proj1:
    case K::Proj2: {
      Value p = go(e.child(0));
      if (!p.defined()) return p;
      return p.items()[e.is(K::Proj1) ? 0 : 1];
    }
    case K::SetLit: {
      std::vector<Value> members;
      bool unknown = false;
      for (const auto& c : e.children()) {
        Value v = go(c);
        if (v.is_undef()) return v;
        unknown = unknown || v.is_unknown();
        members.push_back(v);
      }
      return unknown ? Value::unknown() : Value::set(std::move(members));
    }
    case K::Member: {
      Value x = go(e.lhs());
      Value s = go(e.rhs());
      if (x.is_undef() || s.is_undef()) return Value::truth(false);
      if (partial_ && (contains_unknown(x) || contains_unknown(s))) return Value::unknown();
      return Value::truth(std::binary_search(s.items().begin(), s.items().end(), x));
    }
  }
  return Value::undef();
}

// ---------------------------------------------------------------------------
// Checking

void check_model(const Theory& t, const FiniteModel& m) {
  const Signature& sig = t.base_signature();
  auto mismatch = [&](const std::string& why) {
    throw Error(ErrorCode::ModelDoesNotMatchSignature,
                "model " + m.name + " does not match theory " + t.name() + ": " + why);
  };
  for (const auto& b : sig.base_types()) {
    auto it = m.carriers.find(b);
    if (it == m.carriers.end()) mismatch("no carrier for base type " + b);
    if (it->second.empty()) mismatch("carrier of " + b + " is empty");
  }
  for (const auto& [b, elems] : m.carriers)
    if (!sig.has_base_type(b)) mismatch("carrier for unknown base type " + b);
  Domains dom(m);
  for (const auto& [c, ty] : sig.constants()) {
    auto it = m.interp.find(c);
    if (it == m.interp.end()) mismatch("constant '" + c + "' is not interpreted");
    if (!dom.well_formed(ty, it->second))
      mismatch("interpretation of '" + c + "' is not a value of type " + ty.to_string());
  }
  for (const auto& [c, v] : m.interp)
    if (!sig.has_constant(c)) mismatch("interprets unknown or defined constant '" + c + "'");
}

SentenceCheck check_sentence(const Theory& t, const FiniteModel& m, const Expr& sentence) {
  check_model(t, m);
  if (!is_sentence(sentence, t.vocabulary()))
    throw Error(ErrorCode::NotASentence, "not a sentence over " + t.name() + ": " +
                                             debug_string(sentence));
  Evaluator ev(m, &t);
  SentenceCheck out;
  out.value = ev.eval(sentence).truth_value();
  for (const auto& ax : t.axioms())
    if (!ev.eval(ax.sentence).truth_value()) out.failed_axioms.push_back(ax.name);
  return out;
}

SentenceCheck check_sentence(const Theory& t, const FiniteModel& m, const std::string& name) {
  if (const Axiom* a = t.find_axiom(name)) return check_sentence(t, m, a->sentence);
  if (const Theorem* th = t.find_theorem(name)) return check_sentence(t, m, th->sentence);
  throw Error(ErrorCode::UnknownItem, "theory " + t.name() + " has no axiom or theorem '" +
                                          name + "'");
}

// ---------------------------------------------------------------------------
// Countermodel search

namespace {

// A constant whose type is a0 -> ... -> an-1 -> b over base or Bool types is
// searched cell by cell; any other constant is one cell ranging over its
// whole domain.
struct SearchConst {
  std::string name;
  Type type;
  std::vector<std::size_t> arg_sizes;
  bool table = false;
  std::vector<Value> choices;
  std::size_t cells = 1;
  std::vector<Value> assigned;
};

bool first_order(const Type& t) { return t.is_base() || t.is_bool(); }

Value build_value(const SearchConst& c, std::size_t arg, std::size_t offset) {
  if (arg == c.arg_sizes.size()) return c.assigned[offset];
  std::size_t stride = 1;
  for (std::size_t i = arg + 1; i < c.arg_sizes.size(); ++i) stride *= c.arg_sizes[i];
  std::vector<Value> table;
  for (std::size_t k = 0; k < c.arg_sizes[arg]; ++k)
    table.push_back(build_value(c, arg + 1, offset + k * stride));
  return Value::func(std::move(table));
}

std::vector<std::vector<int>> size_tuples(std::size_t k, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 1);
  if (k == 0) return {{}};
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && ++cur[i - 1] > max_size) cur[--i] = 1;
    if (i == 0) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int ma = *std::max_element(a.begin(), a.end());
    int mb = *std::max_element(b.begin(), b.end());
    if (ma != mb) return ma < mb;
    return a < b;
  });
  return out;
}

class Search {
 public:
  Search(const Theory& t, const Expr& conjecture, const SearchOptions& opts, SearchStats& stats)
      : t_(t), conjecture_(conjecture), opts_(opts), stats_(stats) {}

  std::optional<FiniteModel> run(const std::vector<int>& sizes) {
    FiniteModel m;
    m.name = "countermodel";
    m.theory = t_.name();
    std::size_t bi = 0;
    for (const auto& b : t_.base_signature().base_types()) {
      for (int i = 0; i < sizes[bi]; ++i) m.carriers[b].push_back(std::to_string(i));
      ++bi;
    }
    Domains dom(m);
    consts_.clear();
    for (const auto& [name, ty] : t_.base_signature().constants()) {
      SearchConst c{name, ty, {}, false, {}, 1, {}};
      Type cur = ty;
      std::vector<Type> args;
      while (cur.is_fun() && first_order(cur.dom())) {
        args.push_back(cur.dom());
        cur = cur.cod();
      }
      if (first_order(cur)) {
        c.table = true;
        for (const auto& a : args) {
          c.arg_sizes.push_back(dom.size(a));
          c.cells *= c.arg_sizes.back();
        }
        c.choices = dom.values(cur);
        if (cur.is_base() && !args.empty()) c.choices.push_back(Value::undef());
      } else {
        c.choices = dom.values(ty);
      }
      c.assigned.assign(c.cells, Value::unknown());
      consts_.push_back(std::move(c));
    }
    std::stable_sort(consts_.begin(), consts_.end(), [](const auto& a, const auto& b) {
      if (a.cells != b.cells) return a.cells < b.cells;
      return a.name < b.name;
    });
    ev_.emplace(m, &t_);
    for (const auto& c : consts_) ev_->set_constant(c.name, current(c));
    if (opts_.prune) ev_->set_partial(true);
    if (dfs(0, 0)) {
      FiniteModel out = ev_->model();
      return out;
    }
    return std::nullopt;
  }

 private:
  Value current(const SearchConst& c) const {
    if (!c.table) return c.assigned[0];
    return build_value(c, 0, 0);
  }

  bool refuted() {
    for (const auto& ax : t_.axioms()) {
      Value v = ev_->eval(ax.sentence);
      if (!v.is_unknown() && !v.truth_value()) return true;
    }
    Value v = ev_->eval(conjecture_);
    return !v.is_unknown() && v.truth_value();
  }

  bool verify() {
    ++stats_.candidates;
    ev_->set_partial(false);
    bool ok = true;
    for (const auto& ax : t_.axioms())
      if (!ev_->eval(ax.sentence).truth_value()) {
        ok = false;
        break;
      }
    ok = ok && !ev_->eval(conjecture_).truth_value();
    if (opts_.prune) ev_->set_partial(true);
    return ok;
  }

  bool dfs(std::size_t ci, std::size_t cell) {
    if (ci == consts_.size()) return verify();
    SearchConst& c = consts_[ci];
    if (cell == c.cells) return dfs(ci + 1, 0);
    for (const auto& choice : c.choices) {
      if (++stats_.nodes > opts_.node_budget)
        throw Error(ErrorCode::SearchSpaceTooLarge,
                    "countermodel search exceeded " + std::to_string(opts_.node_budget) +
                        " nodes");
      c.assigned[cell] = choice;
      ev_->set_constant(c.name, current(c));
      if (opts_.prune && refuted()) continue;
      if (dfs(ci, cell + 1)) return true;
    }
    c.assigned[cell] = Value::unknown();
    ev_->set_constant(c.name, current(c));
    return false;
  }

  const Theory& t_;
  const Expr& conjecture_;
  const SearchOptions& opts_;
  SearchStats& stats_;
  std::vector<SearchConst> consts_;
  std::optional<Evaluator> ev_;
};

}  // namespace

std::optional<FiniteModel> find_countermodel(const Theory& t, const Expr& conjecture,
                                             const SearchOptions& opts, SearchStats* stats) {
  if (t.infinite_only())
    throw Error(ErrorCode::InfiniteOnlyTheory,
                "theory " + t.name() + " has no finite models; countermodel search refused");
  if (!is_sentence(conjecture, t.vocabulary()))
    throw Error(ErrorCode::NotASentence, "conjecture is not a sentence over " + t.name());
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  for (const auto& sizes : size_tuples(t.base_signature().base_types().size(), opts.max_size)) {
    Search s(t, conjecture, opts, st);
    if (auto m = s.run(sizes)) return m;
  }
  return std::nullopt;
}

}  // namespace alonzo
