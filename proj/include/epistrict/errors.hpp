#pragma once

#include <stdexcept>
#include <string>

namespace epistrict {

/// Raised whenever a characteristic-2 field would be needed. Every
/// quantization step divides by two, so d = 2 is refused up front.
class CharacteristicTwoError : public std::domain_error {
 public:
  CharacteristicTwoError()
      : std::domain_error(
            "characteristic-2 obstruction: d = 2 is not supported because the "
            "Weyl kernel, the symplectic cocycle and the pair-groupoid "
            "symplectomorphism all require division by two") {}
};

/// Exhaustive enumeration would exceed the configured point budget.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Operands live in different fields or ambient spaces.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input (relation, algebra or groupoid files, selectors).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure that should satisfy an axiom system does not.
class AxiomFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace epistrict
