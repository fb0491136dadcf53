#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relaxed {

// Base of every error raised by the kernel. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a structural law. `witness` names the offending elements
// (a label, a pair or a triple) so callers can re-check the failure.
class ValidationError : public Error {
 public:
  ValidationError(std::string law, std::vector<std::string> witness)
      : Error(format(law, witness)), law_(std::move(law)), witness_(std::move(witness)) {}

  const std::string& law() const noexcept { return law_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  static std::string format(const std::string& law, const std::vector<std::string>& witness) {
    std::string out = law + ": witness (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ", ";
      out += witness[i];
    }
    return out + ")";
  }

  std::string law_;
  std::vector<std::string> witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A computation would exceed a configured size guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (e.g. an infinite notation where
// only the finite fragment is supported).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace relaxed
