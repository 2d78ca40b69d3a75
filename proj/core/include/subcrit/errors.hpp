#pragma once

#include <stdexcept>
#include <string>

namespace subcrit {

/// Raised when an exact computation would exceed its configured work cap
/// (canonicalization order, brute-force order, solver core size).
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation needs a catalog that is certified complete.
class IncompleteCatalog : public std::runtime_error {
 public:
  explicit IncompleteCatalog(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace subcrit
