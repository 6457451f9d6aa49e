#include <algorithm>

#include "alonzo/notation.hpp"

namespace alonzo {

std::string_view shape_name(NotationShape shape) {
  switch (shape) {
    case NotationShape::BinderOverRange: return "range";
    case NotationShape::BinderAt: return "at";
    case NotationShape::BinderPlain: return "plain";
    case NotationShape::BinderWithBounds: return "bounds";
  }
  return "?";
}

std::optional<NotationShape> shape_from_name(std::string_view name) {
  for (auto s : {NotationShape::BinderOverRange, NotationShape::BinderAt,
                 NotationShape::BinderPlain, NotationShape::BinderWithBounds})
    if (shape_name(s) == name) return s;
  return std::nullopt;
}

std::string_view slot_name(NotationSlot slot) {
  switch (slot) {
    case NotationSlot::Lo: return "lo";
    case NotationSlot::Hi: return "hi";
    case NotationSlot::Point: return "point";
    case NotationSlot::Body: return "body";
  }
  return "?";
}

std::optional<NotationSlot> slot_from_name(std::string_view name) {
  for (auto s : {NotationSlot::Lo, NotationSlot::Hi, NotationSlot::Point, NotationSlot::Body})
    if (slot_name(s) == name) return s;
  return std::nullopt;
}

std::vector<NotationSlot> shape_slots(NotationShape shape) {
  switch (shape) {
    case NotationShape::BinderOverRange:
    case NotationShape::BinderWithBounds:
      return {NotationSlot::Lo, NotationSlot::Hi, NotationSlot::Body};
    case NotationShape::BinderAt:
      return {NotationSlot::Point, NotationSlot::Body};
    case NotationShape::BinderPlain:
      return {NotationSlot::Body};
  }
  return {};
}

const NotationDef* NotationSet::find(std::string_view sugar) const {
  for (const auto& d : defs_)
    if (d.sugar_name == sugar) return &d;
  return nullptr;
}

namespace {

[[noreturn]] void incompatible(const NotationDef& def, const std::string& why) {
  throw Error(ErrorCode::IncompatibleShape,
              "notation '" + def.sugar_name + "' is incompatible with '" + def.target + "': " + why);
}

}  // namespace

NotationSet register_notation(const NotationSet& set, NotationDef def, const Signature& sig) {
  if (set.find(def.sugar_name))
    throw Error(ErrorCode::DuplicateNotation,
                "notation '" + def.sugar_name + "' is already registered");
  const Type& target_type = sig.constant_type(def.target);

  auto slots = shape_slots(def.shape);
  auto order = def.argument_order;
  std::sort(slots.begin(), slots.end());
  std::sort(order.begin(), order.end());
  if (slots != order) incompatible(def, "argument order is not a permutation of the shape's slots");

  Type binder_type = Type::boolean();
  if (const auto* t = std::get_if<Type>(&def.binder)) {
    sig.check_type(*t);
    binder_type = *t;
  } else {
    const auto& guard = std::get<std::string>(def.binder);
    const Type& gt = sig.constant_type(guard);
    if (!gt.is_set()) incompatible(def, "binder guard '" + guard + "' is not a set constant");
    binder_type = gt.elem();
  }

  if (target_type.arity() != static_cast<int>(def.argument_order.size()))
    incompatible(def, "target has arity " + std::to_string(target_type.arity()) + ", shape '" +
                          std::string(shape_name(def.shape)) + "' needs " +
                          std::to_string(def.argument_order.size()));
  const Type* t = &target_type;
  for (auto slot : def.argument_order) {
    const Type& arg = t->dom();
    if (slot == NotationSlot::Body) {
      if (!arg.is_fun() || arg.dom() != binder_type)
        incompatible(def, "body argument must be a function from " + binder_type.to_string() +
                              ", found " + arg.to_string());
    } else if (arg != binder_type) {
      incompatible(def, std::string(slot_name(slot)) + " argument must have type " +
                            binder_type.to_string() + ", found " + arg.to_string());
    }
    t = &t->cod();
  }

  def.target_type = target_type;
  def.binder_type = binder_type;
  NotationSet out = set;
  out.defs_.push_back(std::move(def));
  return out;
}

Expr expand_notation(const NotationDef& def, const NotationInstance& inst) {
  const Type& alpha = *def.binder_type;
  Expr fn = def.guarded()
                ? Expr::guarded_abs(inst.var, alpha,
                                    Expr::constant(std::get<std::string>(def.binder),
                                                   Type::set_of(alpha)),
                                    inst.body)
                : Expr::abs(inst.var, alpha, inst.body);
  Expr out = Expr::constant(def.target, *def.target_type);
  for (auto slot : def.argument_order) {
    switch (slot) {
      case NotationSlot::Lo: out = Expr::app(out, *inst.lo); break;
      case NotationSlot::Hi: out = Expr::app(out, *inst.hi); break;
      case NotationSlot::Point: out = Expr::app(out, *inst.point); break;
      case NotationSlot::Body: out = Expr::app(out, fn); break;
    }
  }
  return out;
}

bool is_infix_operator(std::string_view name) {
  static constexpr std::string_view ops[] = {"+", "-", "*", "/", "\u00b7", "<", "<=", ">", ">="};
  return std::find(std::begin(ops), std::end(ops), name) != std::end(ops);
}

}  // namespace alonzo
