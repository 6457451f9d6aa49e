#include "alonzo/type.hpp"

#include <vector>

#include "alonzo/error.hpp"

namespace alonzo {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::UnknownBaseType: return "UnknownBaseType";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NonBooleanBinderBody: return "NonBooleanBinderBody";
    case ErrorCode::NotASentence: return "NotASentence";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ConstantExists: return "ConstantExists";
    case ErrorCode::IncompatibleShape: return "IncompatibleShape";
    case ErrorCode::DuplicateNotation: return "DuplicateNotation";
    case ErrorCode::UnmappedBaseType: return "UnmappedBaseType";
    case ErrorCode::UnmappedConstant: return "UnmappedConstant";
    case ErrorCode::IllFormedMorphism: return "IllFormedMorphism";
    case ErrorCode::OpenObligations: return "OpenObligations";
    case ErrorCode::NameClash: return "NameClash";
    case ErrorCode::TheoryMismatch: return "TheoryMismatch";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::UnknownTheory: return "UnknownTheory";
    case ErrorCode::UnknownItem: return "UnknownItem";
    case ErrorCode::ModelDoesNotMatchSignature: return "ModelDoesNotMatchSignature";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InfiniteOnlyTheory: return "InfiniteOnlyTheory";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

Type Type::boolean() {
  static const Type t(std::make_shared<const Rep>(Rep{Kind::Bool, {}, nullptr, nullptr}));
  return t;
}

Type Type::base(std::string name) {
  return Type(std::make_shared<const Rep>(Rep{Kind::Base, std::move(name), nullptr, nullptr}));
}

Type Type::fun(Type dom, Type cod) {
  return Type(std::make_shared<const Rep>(
      Rep{Kind::Fun, {}, std::make_shared<const Type>(std::move(dom)),
          std::make_shared<const Type>(std::move(cod))}));
}

Type Type::prod(Type left, Type right) {
  return Type(std::make_shared<const Rep>(
      Rep{Kind::Prod, {}, std::make_shared<const Type>(std::move(left)),
          std::make_shared<const Type>(std::move(right))}));
}

Type Type::set_of(Type elem) {
  return Type(std::make_shared<const Rep>(
      Rep{Kind::SetOf, {}, std::make_shared<const Type>(std::move(elem)), nullptr}));
}

int Type::arity() const {
  int n = 0;
  const Type* t = this;
  while (t->is_fun()) {
    ++n;
    t = &t->cod();
  }
  return n;
}

const Type& Type::final_codomain() const {
  const Type* t = this;
  while (t->is_fun()) t = &t->cod();
  return *t;
}

void Type::collect_base_types(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Bool: return;
    case Kind::Base: out.insert(name()); return;
    case Kind::SetOf: first().collect_base_types(out); return;
    case Kind::Fun:
    case Kind::Prod:
      first().collect_base_types(out);
      second().collect_base_types(out);
      return;
  }
}

namespace {

// Precedence: 0 = arrow, 1 = product, 2 = atomic.
void print_type(const Type& t, int ctx, std::string& out) {
  switch (t.kind()) {
    case Type::Kind::Bool: out += "Bool"; return;
    case Type::Kind::Base: out += t.name(); return;
    case Type::Kind::SetOf:
      out += '{';
      print_type(t.elem(), 0, out);
      out += '}';
      return;
    case Type::Kind::Fun:
      if (ctx > 0) out += '(';
      print_type(t.dom(), 1, out);
      out += " -> ";
      print_type(t.cod(), 0, out);
      if (ctx > 0) out += ')';
      return;
    case Type::Kind::Prod:
      if (ctx > 1) out += '(';
      print_type(t.first(), 2, out);
      out += " * ";
      print_type(t.second(), 1, out);
      if (ctx > 1) out += ')';
      return;
  }
}

}  // namespace

std::string Type::to_string() const {
  std::string out;
  print_type(*this, 0, out);
  return out;
}

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Type::Kind::Bool: return std::strong_ordering::equal;
    case Type::Kind::Base: return a.name().compare(b.name()) <=> 0;
    case Type::Kind::SetOf: return a.first() <=> b.first();
    case Type::Kind::Fun:
    case Type::Kind::Prod:
      if (auto c = a.first() <=> b.first(); c != 0) return c;
      return a.second() <=> b.second();
  }
  return std::strong_ordering::equal;
}

}  // namespace alonzo
