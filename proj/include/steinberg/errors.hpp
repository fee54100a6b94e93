#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

/// Malformed input: non-prime modulus, bad matrix, out-of-range index.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A field element was asked to live at a level its own level does not divide.
class LevelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The coefficient characteristic equals the defining characteristic.
class CharacteristicClash : public std::invalid_argument {
 public:
  explicit CharacteristicClash(const std::string& what)
      : std::invalid_argument(what + " (requires char k != char F_q)") {}
};

/// A vector handed to a Steinberg-coordinate routine is not in span{z eta}.
class NotInSteinberg : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal identity that must hold by construction failed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace steinberg
