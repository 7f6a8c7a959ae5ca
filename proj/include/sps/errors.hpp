#ifndef SPS_ERRORS_HPP
#define SPS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sps {

enum class ErrorKind {
  // structural
  EmptyRoster,
  DuplicateStateLabel,
  IndexOutOfRange,
  CapExceeded,
  // state property system axioms
  MissingBottom,         // Eq.1
  MissingTop,            // Eq.1
  NotIntersectionClosed, // Eq.2
  DuplicateProperty,     // Eq.3 (injectivity)
  // orthocomplementation axioms
  NotInvolutive,         // Eq.4
  NotAntitone,           // Eq.5
  ComplementLawFailed,   // Eq.6
  OrthoComFailed,        // Eq.7
  // construction
  NotAClassicalState,
  InternalTheoremViolation,
  EmptyPartsList,
  ProductTooLarge,
  MutationInapplicable,
  // instance documents
  SyntaxError,
  UnknownStateLabel,
  DanglingPerpReference,
  VersionMismatch,
};

const char* to_string(ErrorKind kind);

// "Eq.1".."Eq.7" for axiom violations, "" otherwise.
const char* equation_of(ErrorKind kind);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  const std::string& equation() const { return equation_; }
  const std::string& detail() const { return detail_; }

  // Offending properties / states, as labels, when applicable.
  std::vector<std::string> witness_properties;
  std::vector<std::string> witness_states;

 private:
  ErrorKind kind_;
  std::string equation_;
  std::string detail_;
};

}  // namespace sps

#endif  // SPS_ERRORS_HPP
