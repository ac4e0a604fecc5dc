#ifndef SEMTL_ERRORS_HPP
#define SEMTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semtl {

// Base class for every error the library raises on purpose.  The CLI maps
// UsageError to exit code 1 and everything else derived from Error to 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed .onto input.  Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A name used in an axiom or entailment that the signature does not declare.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

// Bundle manifests, sweep manifests, report CSVs.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Violated preconditions of learning/embedding/boosting operations
// (empty target training set, inconsistent target union, TBox mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad command-line invocations; everything else is a domain error.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace semtl

#endif  // SEMTL_ERRORS_HPP
