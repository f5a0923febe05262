#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolkl {

enum class ErrorKind {
  MalformedLine,
  DuplicateEdge,
  LabelBelow3,
  DisconnectedGraph,
  NotTreeOrCycle,
  InvalidWord,
  SearchBudgetExceeded,
  NoRoot,
  NotBelow,
  NotInQuotient,
  NotBoolean,
  ParabolicSubgroupTooLarge,
  NotTreeDiagram,
  NotCycleDiagram,
  InvalidWindow,
  NotBooleanWindow,
  NotComparable,
  WrongVariant,
  UnsupportedGraphShape,
  NotLeftmost,
  DegenerateExponent,
  TooManyPairs,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace boolkl
