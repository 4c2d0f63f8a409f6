#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gral {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table ring failed one of the ring axioms at load time.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error("axiom violated: " + axiom + " at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class SearchCapExceeded : public Error {
 public:
  explicit SearchCapExceeded(std::size_t cap)
      : Error("exhaustive search exceeded state cap " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class NotDegreeZero : public Error {
 public:
  using Error::Error;
};

class NotInDn : public Error {
 public:
  using Error::Error;
};

class XNotRegular : public Error {
 public:
  using Error::Error;
};

class ZeroElement : public Error {
 public:
  using Error::Error;
};

class CoefficientRingNotVNR : public Error {
 public:
  using Error::Error;
};

/// Raised when a result that must exist fails re-verification.
class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotCornerIso : public Error {
 public:
  using Error::Error;
};

class RelationViolation : public Error {
 public:
  RelationViolation(std::string relation, const std::string& detail)
      : Error("relation (" + relation + ") violated: " + detail),
        relation_(std::move(relation)) {}
  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

class AssertionFailure : public Error {
 public:
  using Error::Error;
};

/// State cap for exhaustive searches. GRAL_SEARCH_CAP overrides the default
/// of 10^6.
std::size_t default_search_cap();

}  // namespace gral
