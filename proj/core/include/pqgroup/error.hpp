#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pqgroup {

enum class ErrorKind {
  // group-core
  NotClosed,
  NoIdentity,
  NotLatin,
  NotAssociative,
  NoInverse,
  SizeCap,
  InvalidArgument,
  Parse,
  // subgroups
  NotSubgroup,
  MismatchedParent,
  NoSuchElement,
  OnlyOneSubgroup,
  NotPrime,
  // morphisms
  NotMultiplicative,
  IdentityNotPreserved,
  NotBijective,
  BudgetExceeded,
  NotNormal,
  NotCyclicSource,
  // products
  InvalidAction,
  IncompatibleAction,
  // recognition
  MeetNotTrivial,
  JoinNotFull,
  // classification
  UnsupportedOrder,
  BadOrder,
  NoNoncyclicGroup,
  HypothesisFailed,
  // a mathematical invariant failed; indicates a bug
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw GroupError(kind, what); }

}  // namespace pqgroup
