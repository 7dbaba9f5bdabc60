#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hoagent {

enum class Errc {
  // construction of domains, contexts and subsets
  EmptyDomain,
  DuplicateElement,
  MixedOutcomeKinds,
  MissingMove,
  DuplicateMove,
  UnknownMove,
  UnknownOutcome,
  GroundMismatch,
  SignatureMismatch,
  // orders and choice functions
  AntisymmetryViolation,
  InvalidOrder,
  InvalidChoiceFunction,
  // agents
  NonNumericOutcomes,
  NegativeRadius,
  EmptyPermissibleSet,
  // reflexive agents
  DomainCodomainMismatch,
  NonBinaryCandidates,
  IncompleteOthers,
  IndexOutOfRange,
  ArityMismatch,
  // property checking
  BudgetExceeded,
  NonTotalSelection,
  NotAttainable,
  PreconditionViolated,
  ReconstructionMismatch,
  // front end
  ParseError,
  ValidationError,
  UnknownDemo,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above and a
/// detail string naming the offending element.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace hoagent
