#pragma once

#include <stdexcept>
#include <string>

namespace akr {

/// Argument outside the domain of an operator (bad degree, point off the
/// square, schedule too short, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A function lacks a derivative the requested operation needs and the
/// caller did not allow a finite-difference fallback.
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unknown catalog name.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace akr
