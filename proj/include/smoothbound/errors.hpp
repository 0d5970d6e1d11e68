#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "smoothbound/bigint.hpp"

namespace smoothbound {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An evaluation point outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The prime table does not reach far enough for the requested query.
class TableTooSmall : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A configured work or memory guard was exceeded. Enumerations that were
// interrupted attach the partial count, which is a valid lower estimate.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what, std::optional<BigInt> partial = std::nullopt)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  const std::optional<BigInt>& partial_lower_estimate() const { return partial_; }

 private:
  std::optional<BigInt> partial_;
};

// A simplex weight is zero or negative on a coordinate that can be nonzero,
// so the region is unbounded in that direction.
class DegenerateWeight : public std::domain_error {
 public:
  DegenerateWeight(const std::string& what, std::size_t index)
      : std::domain_error(what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace smoothbound
