#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diaop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (degree exceeds order,
/// eigenvalue collision, non-square-free input, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Eigenvalues a_m and a_k coincide, so the degree-m eigenvector is not unique.
class EigenvalueCollisionError : public PreconditionError {
public:
  EigenvalueCollisionError(std::size_t m, std::size_t k)
      : PreconditionError("eigenvalue collision: a_" + std::to_string(m) +
                          " = a_" + std::to_string(k)),
        m_(m), k_(k) {}

  std::size_t m() const noexcept { return m_; }
  std::size_t k() const noexcept { return k_; }

private:
  std::size_t m_;
  std::size_t k_;
};

/// Malformed textual input. Carries the 0-based character offset.
class ParseError : public Error {
public:
  ParseError(const std::string &input, std::size_t position,
             const std::string &what)
      : Error(format(input, position, what)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  static std::string format(const std::string &input, std::size_t position,
                            const std::string &what) {
    return "parse error at position " + std::to_string(position) + ": " +
           what + "\n  " + input + "\n  " + std::string(position, ' ') + "^";
  }

  std::size_t position_;
};

/// File missing, unreadable, or not matching the expected JSON schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

} // namespace diaop
