#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fst {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed grade text, set text or space document. `where` locates the
/// offending field (a JSON pointer or a character offset).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string where = {})
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Operands live over different universes or parameter sets.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was violated by its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap. Carries the exact count.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t count, std::uint64_t cap)
      : Error(what + ": " + std::to_string(count) + " candidates exceed cap " + std::to_string(cap)),
        count_(count),
        cap_(cap) {}
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

}  // namespace fst
