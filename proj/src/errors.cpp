#include "sps/errors.hpp"

namespace sps {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyRoster: return "EmptyRoster";
    case ErrorKind::DuplicateStateLabel: return "DuplicateStateLabel";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MissingBottom: return "MissingBottom";
    case ErrorKind::MissingTop: return "MissingTop";
    case ErrorKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ErrorKind::DuplicateProperty: return "DuplicateProperty";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NotAntitone: return "NotAntitone";
    case ErrorKind::ComplementLawFailed: return "ComplementLawFailed";
    case ErrorKind::OrthoComFailed: return "OrthoComFailed";
    case ErrorKind::NotAClassicalState: return "NotAClassicalState";
    case ErrorKind::InternalTheoremViolation: return "InternalTheoremViolation";
    case ErrorKind::EmptyPartsList: return "EmptyPartsList";
    case ErrorKind::ProductTooLarge: return "ProductTooLarge";
    case ErrorKind::MutationInapplicable: return "MutationInapplicable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownStateLabel: return "UnknownStateLabel";
    case ErrorKind::DanglingPerpReference: return "DanglingPerpReference";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
  }
  return "UnknownError";
}

const char* equation_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingBottom:
    case ErrorKind::MissingTop: return "Eq.1";
    case ErrorKind::NotIntersectionClosed: return "Eq.2";
    case ErrorKind::DuplicateProperty: return "Eq.3";
    case ErrorKind::NotInvolutive: return "Eq.4";
    case ErrorKind::NotAntitone: return "Eq.5";
    case ErrorKind::ComplementLawFailed: return "Eq.6";
    case ErrorKind::OrthoComFailed: return "Eq.7";
    default: return "";
  }
}

namespace {
std::string compose_message(ErrorKind kind, const std::string& detail) {
  std::string msg = to_string(kind);
  const char* eq = equation_of(kind);
  if (*eq) {
    msg += " [";
    msg += eq;
    msg += "]";
  }
  msg += ": ";
  msg += detail;
  return msg;
}
}  // namespace

ValidationError::ValidationError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose_message(kind, detail)),
      kind_(kind),
      equation_(equation_of(kind)),
      detail_(detail) {}

}  // namespace sps
