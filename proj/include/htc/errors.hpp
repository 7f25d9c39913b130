#pragma once

#include <stdexcept>
#include <string>

namespace htc {

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A value was constructed that breaks a data invariant (degree bookkeeping,
/// inconsistent cuspidal labels, ...).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct NoTorsion : std::domain_error {
  using std::domain_error::domain_error;
};

/// A d-table could not be peeled: some residue went negative.
struct InconsistentTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unsatisfiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// JSON input that does not match a schema. `path` points at the first bad
/// field, e.g. "/data/3/local/factors/0/t".
struct SchemaError : std::runtime_error {
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path(std::move(path)) {}
  std::string path;
};

}  // namespace htc
