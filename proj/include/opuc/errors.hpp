#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opuc {

// A Schröder-type evaluation (or a Phi*-basis expansion) hit alpha_j = 0.
class ZeroVerblunsky : public std::domain_error {
 public:
  explicit ZeroVerblunsky(int index)
      : std::domain_error("ZeroVerblunsky(" + std::to_string(index) + ")"),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class UnsupportedFamily : public std::invalid_argument {
 public:
  explicit UnsupportedFamily(const std::string& what)
      : std::invalid_argument("UnsupportedFamily: " + what) {}
};

class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::length_error("enumeration cap of " + std::to_string(cap) +
                          " paths exceeded"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class PositivityViolation : public std::logic_error {
 public:
  explicit PositivityViolation(const std::string& what)
      : std::logic_error("PositivityViolation: " + what) {}
};

// Division in the symbolic ring whose quotient is not a (Laurent) polynomial.
class NotExact : public std::domain_error {
 public:
  explicit NotExact(const std::string& what)
      : std::domain_error("NotExact: " + what) {}
};

// |alpha_j| >= 1 observed by a numeric sequence accessor.
class OutsideDisk : public std::domain_error {
 public:
  explicit OutsideDisk(int index)
      : std::domain_error("|alpha_" + std::to_string(index) + "| >= 1"),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace opuc
