#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alonzo {

/// A location in a source text. Lines and columns are 1-based; col_end is
/// one past the last column covered on `line`.
struct SourceSpan {
  std::string file;
  int line = 0;
  int col_begin = 0;
  int col_end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ErrorCode {
  SyntaxError,
  UnknownConstant,
  UnknownBaseType,
  UnboundVariable,
  TypeMismatch,
  NonBooleanBinderBody,
  NotASentence,
  NotClosed,
  DuplicateName,
  ConstantExists,
  IncompatibleShape,
  DuplicateNotation,
  UnmappedBaseType,
  UnmappedConstant,
  IllFormedMorphism,
  OpenObligations,
  NameClash,
  TheoryMismatch,
  DanglingEndpoint,
  UnknownTheory,
  UnknownItem,
  ModelDoesNotMatchSignature,
  InvalidModel,
  InfiniteOnlyTheory,
  SearchSpaceTooLarge,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(message), code_(code), span_(std::move(span)) {}

  ErrorCode code() const { return code_; }
  const std::optional<SourceSpan>& span() const { return span_; }

  /// Returns a copy of this error located at `span` unless it already has one.
  Error located(const SourceSpan& span) const {
    if (span_) return *this;
    return Error(code_, what(), span);
  }

 private:
  ErrorCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace alonzo
