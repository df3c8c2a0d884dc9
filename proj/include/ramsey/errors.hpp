#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Thrown when an enumeration or search would exceed its configured budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for requests outside the supported parameter range (e.g. built-in
// critical colourings exist only for clique sizes 3 and 4).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a per-hyperedge colouring cannot be tiled because the
// hypergraph is not linear; carries one offending hyperedge pair.
class IllDefinedColouringError : public std::runtime_error {
 public:
  IllDefinedColouringError(const std::string& msg, std::vector<int> first,
                           std::vector<int> second)
      : std::runtime_error(msg),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::vector<int>& first_hyperedge() const { return first_; }
  const std::vector<int>& second_hyperedge() const { return second_; }

 private:
  std::vector<int> first_;
  std::vector<int> second_;
};

// Thrown when a claimed critical colouring contains a monochromatic clique;
// carries one such clique as a witness.
class ColouringValidationError : public std::runtime_error {
 public:
  ColouringValidationError(const std::string& msg, std::vector<int> clique,
                           std::string colour_name)
      : std::runtime_error(msg),
        clique_(std::move(clique)),
        colour_name_(std::move(colour_name)) {}

  const std::vector<int>& witness_clique() const { return clique_; }
  const std::string& colour_name() const { return colour_name_; }

 private:
  std::vector<int> clique_;
  std::string colour_name_;
};

}  // namespace ramsey
