#pragma once

#include <stdexcept>
#include <string>

namespace paley {

enum class Err {
  NotPrime,
  DegreeTooLarge,
  EvenOrder,
  NotOneModFour,
  NotPrimePower,
  IndexOutOfRange,
  TooLarge,
  ConvergenceFailure,
  OrderMismatch,
  PresolveError,
  DimensionMismatch,
  SubsetTooLarge,
  CombinatorialBlowup,
  InfeasibleInput,
  ZeroTrace,
  NotRegular,
  EmptyGraph,
  SquareOrder,
  QTooSmall,
  DomainError,
  NoAugmentingPair,
  PreconditionViolated,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace paley
