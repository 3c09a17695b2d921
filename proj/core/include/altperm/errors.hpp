#pragma once

#include <stdexcept>

namespace altperm {

/// Parameter constraints on (r, n) are violated, or an operation was asked
/// to run outside its declared domain.
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two elements with different (r, n) were combined.
struct ParamMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// An alternating-only operation was applied to an element outside A_{r,n}.
struct NotAlternating : std::domain_error {
  using std::domain_error::domain_error;
};

/// A word of odd length was passed to the pair translation.
struct OddLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Window or word text did not parse.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive sweep would touch more elements than the configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The length generating function produced an odd coefficient before the
/// final halving. Signals a formula violation; must never fire.
struct NonIntegralHalving : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace altperm
