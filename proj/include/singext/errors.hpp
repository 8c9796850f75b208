#pragma once

#include <stdexcept>
#include <string>

namespace singext {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad matrix text, unknown object, ill-typed relation.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A search or enumeration hit its configured cap.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class InfiniteGroup : public Error {
public:
  using Error::Error;
};

class NoStabilization : public Error {
public:
  using Error::Error;
};

/// A structural law that the caller promised does not hold
/// (non-commuting square, non-idempotent input, ...).
class ContractViolation : public Error {
public:
  using Error::Error;
};

} // namespace singext
