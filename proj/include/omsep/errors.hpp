#pragma once

#include <stdexcept>
#include <string>

namespace omsep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoLoopDeletion : Error {
  explicit CoLoopDeletion(int e) : Error("cannot delete coloop " + std::to_string(e)) {}
};

struct LoopContraction : Error {
  explicit LoopContraction(int e) : Error("cannot contract loop " + std::to_string(e)) {}
};

struct NotCorank2 : Error {
  NotCorank2() : Error("restriction does not have corank 2") {}
};

// A search exceeded a configured count or time budget.
struct ResourceLimit : Error {
  using Error::Error;
};

// Input violates the circuit axioms or a format requirement.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace omsep
