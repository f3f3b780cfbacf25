#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cello {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input (counts out of range, invalid limits, unreadable root).
class InputError : public Error {
 public:
  using Error::Error;
};

// Network failure or timeout. Callers may retry.
class TransportError : public Error {
 public:
  using Error::Error;
};

// A remote peer answered with something that is not the agreed wire format.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// An embedding endpoint violated its configured contract (e.g. wrong dims).
class ProviderContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Document parsed but violates the schema. `offenders` names the bad items.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::vector<std::string> offenders)
      : Error(what), offenders_(std::move(offenders)) {}
  const std::vector<std::string>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::string> offenders_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class TemplateError : public Error {
 public:
  using Error::Error;
};

// The model produced nothing usable.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cello
