#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indrep {

/// Malformed matrix, word or fraction text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element was required to lie in Γ₀(4) but does not.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// BFS closure exceeded its element cap; carries how many elements were
/// found before giving up.
class GroupTooLarge : public std::runtime_error {
 public:
  GroupTooLarge(std::size_t partial, std::size_t cap)
      : std::runtime_error("group too large: more than " + std::to_string(cap) +
                           " elements (" + std::to_string(partial) + " found before stopping)"),
        partial_(partial),
        cap_(cap) {}

  std::size_t partial_count() const noexcept { return partial_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t partial_;
  std::size_t cap_;
};

/// A modulus above the configured enumeration bound was requested.
class ModulusBoundExceeded : public std::runtime_error {
 public:
  ModulusBoundExceeded(unsigned modulus, unsigned bound)
      : std::runtime_error("modulus " + std::to_string(modulus) + " exceeds bound " +
                           std::to_string(bound)),
        modulus_(modulus),
        bound_(bound) {}

  unsigned modulus() const noexcept { return modulus_; }
  unsigned bound() const noexcept { return bound_; }

 private:
  unsigned modulus_;
  unsigned bound_;
};

}  // namespace indrep
