#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qramsey {

// Base of every error raised by the library. The CLI maps the concrete
// types onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class MalformedGraph6 : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// A finder ran to completion without producing a witness.
class NoWitness : public Error {
 public:
  using Error::Error;
};

// A Las Vegas sampler hit its sample cap. This is a probabilistic failure,
// not a proof that no set exists.
class SamplesExhausted : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

// Raised by the exhaustive engines when the work budget (counted in subsets
// examined) runs out. Carries the bracket established so far; an upper
// bound of 0 means "unbounded".
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower, std::size_t upper = 0)
      : Error(what), lower_(lower), upper_(upper) {}

  std::size_t lower() const noexcept { return lower_; }
  std::size_t upper() const noexcept { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

class CeilingExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

}  // namespace qramsey
