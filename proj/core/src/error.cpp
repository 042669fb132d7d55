#include "pqgroup/error.hpp"

namespace pqgroup {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::MismatchedParent: return "MismatchedParent";
    case ErrorKind::NoSuchElement: return "NoSuchElement";
    case ErrorKind::OnlyOneSubgroup: return "OnlyOneSubgroup";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::IdentityNotPreserved: return "IdentityNotPreserved";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotCyclicSource: return "NotCyclicSource";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::IncompatibleAction: return "IncompatibleAction";
    case ErrorKind::MeetNotTrivial: return "MeetNotTrivial";
    case ErrorKind::JoinNotFull: return "JoinNotFull";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::NoNoncyclicGroup: return "NoNoncyclicGroup";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace pqgroup
