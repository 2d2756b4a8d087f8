#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

// Bad input shape (ragged frame, incompatible operator dims, ...).
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// psd_dominance was handed a matrix that is not self-adjoint within tolerance.
struct NotSelfAdjoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// douglas_factor called with range(K) not contained in range(L).
struct NoInclusion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation required a K-frame / frame and the input is not one.
struct NotKFrame : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAFrame : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation undefined for the zero operator (e.g. optimal bounds).
struct ZeroOperator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition of a super-space operation does not hold.
struct PreconditionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two decision routes of a certificate disagree beyond tolerance slack.
// Signals numerical breakdown of the instance, not a mathematical failure.
struct CharacterizationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consequence the theory guarantees failed numerically.  Thrown by the
// runtime assertions embedded in the checking ops; if you ever see one on a
// clean instance, either the tolerances are broken or the claim is.
struct PropositionViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// propcheck: requested property name is not registered.
struct UnknownProperty : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// instance_io: malformed or semantically invalid instance file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// generators: bad size/seed request (e.g. shift with d < 2).
struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace framekit
