#pragma once

#include <stdexcept>
#include <string>

namespace wex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interface operation was called outside its contract, e.g. a kernel lift
/// of a morphism that does not compose to zero.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The input of a construction does not satisfy its hypotheses.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string clause, const std::string& detail)
      : Error(clause + ": " + detail), clause_(std::move(clause)) {}

  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// A step whose outcome the theory guarantees (given valid hypotheses) did not
/// hold. In an instance that passes the axiom suite this is a bug.
class ConclusionFailure : public Error {
 public:
  ConclusionFailure(std::string step, const std::string& detail)
      : Error(step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

/// The requested operation is outside what an instance supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace wex
