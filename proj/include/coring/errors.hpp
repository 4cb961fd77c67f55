#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coring {

// Base class for everything this library throws on purpose.
struct coring_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or modulus disagreement between operands.
struct dimension_mismatch : coring_error {
  using coring_error::coring_error;
};

struct not_square : coring_error {
  using coring_error::coring_error;
};

// An enumeration would exceed the cap in force.  `needed` saturates at
// UINT64_MAX when the true count does not fit in 64 bits.
struct enumeration_too_large : coring_error {
  std::uint64_t needed;
  std::uint64_t cap;
  enumeration_too_large(std::uint64_t needed_, std::uint64_t cap_)
      : coring_error("enumeration needs " +
                     (needed_ == UINT64_MAX ? std::string("more than 2^64-1")
                                            : std::to_string(needed_)) +
                     " points but the cap is " + std::to_string(cap_)),
        needed(needed_), cap(cap_) {}
};

struct not_a_unit : coring_error {
  using coring_error::coring_error;
};

struct not_an_algebra_map : coring_error {
  using coring_error::coring_error;
};

struct not_grouplike : coring_error {
  using coring_error::coring_error;
};

struct not_an_automorphism : coring_error {
  using coring_error::coring_error;
};

struct not_a_comodule_iso : coring_error {
  using coring_error::coring_error;
};

struct invalid_datum : coring_error {
  using coring_error::coring_error;
};

struct not_galois : coring_error {
  using coring_error::coring_error;
};

// A map required to be bijective by a theorem hypothesis is not.
struct bijection_failure : coring_error {
  using coring_error::coring_error;
};

// Raised only when an internal cross-check fails; seeing one is a bug.
struct internal_check_failure : std::logic_error {
  using std::logic_error::logic_error;
};

// Workspace loading.
struct parse_error : coring_error {
  using coring_error::coring_error;
};

struct schema_error : coring_error {
  using coring_error::coring_error;
};

// A named workspace object failed an axiom checker.
struct axiom_error : coring_error {
  std::string object;
  std::string violation;
  axiom_error(std::string object_, std::string violation_)
      : coring_error(object_ + ": " + violation_),
        object(std::move(object_)), violation(std::move(violation_)) {}
};

} // namespace coring
