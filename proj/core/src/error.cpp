#include "hoagent/error.hpp"

namespace hoagent {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyDomain: return "EmptyDomain";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::MixedOutcomeKinds: return "MixedOutcomeKinds";
    case Errc::MissingMove: return "MissingMove";
    case Errc::DuplicateMove: return "DuplicateMove";
    case Errc::UnknownMove: return "UnknownMove";
    case Errc::UnknownOutcome: return "UnknownOutcome";
    case Errc::GroundMismatch: return "GroundMismatch";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::AntisymmetryViolation: return "AntisymmetryViolation";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::InvalidChoiceFunction: return "InvalidChoiceFunction";
    case Errc::NonNumericOutcomes: return "NonNumericOutcomes";
    case Errc::NegativeRadius: return "NegativeRadius";
    case Errc::EmptyPermissibleSet: return "EmptyPermissibleSet";
    case Errc::DomainCodomainMismatch: return "DomainCodomainMismatch";
    case Errc::NonBinaryCandidates: return "NonBinaryCandidates";
    case Errc::IncompleteOthers: return "IncompleteOthers";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonTotalSelection: return "NonTotalSelection";
    case Errc::NotAttainable: return "NotAttainable";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ReconstructionMismatch: return "ReconstructionMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownDemo: return "UnknownDemo";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& detail) {
  std::string msg{to_string(code)};
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(Errc code, std::string detail)
    : std::runtime_error(format_message(code, detail)),
      code_(code),
      detail_(std::move(detail)) {}

}  // namespace hoagent
