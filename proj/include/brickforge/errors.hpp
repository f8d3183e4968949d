#pragma once

#include <stdexcept>

namespace brickforge {

// Edge valuations tie, so the 2-adic ordering of a brick is undefined.
struct NonCanonicalizable : std::domain_error {
  using std::domain_error::domain_error;
};

// A constructor's square hypothesis does not hold for the given inputs.
struct HypothesisNotMet : std::domain_error {
  using std::domain_error::domain_error;
};

// A construction produced a zero edge (the conjectures' trivial solution).
struct DegenerateEdge : std::domain_error {
  using std::domain_error::domain_error;
};

// An internal re-verification failed; indicates a bug, never user error.
struct VerificationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct CorruptCheckpoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint was taken for a different scan kind or different bounds.
struct BoundMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace brickforge
