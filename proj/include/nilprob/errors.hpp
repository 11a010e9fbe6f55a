#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilprob {

/// Base of every error raised by the library. The CLI maps all of them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
 public:
  // law is one of "identity", "inverse", "associativity", "closure", "range".
  NotAGroup(std::string law, std::uint32_t a, std::uint32_t b, std::uint32_t c);

  const std::string& law() const noexcept { return law_; }
  std::uint32_t witness_a() const noexcept { return a_; }
  std::uint32_t witness_b() const noexcept { return b_; }
  std::uint32_t witness_c() const noexcept { return c_; }

 private:
  std::string law_;
  std::uint32_t a_, b_, c_;
};

class OrderExceeded : public Error {
 public:
  OrderExceeded(std::uint64_t order_lower_bound, std::uint64_t cap);
  std::uint64_t order_lower_bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, long double requested, long double budget);
  long double requested() const noexcept { return requested_; }
  long double budget() const noexcept { return budget_; }

 private:
  long double requested_, budget_;
};

class UnknownCatalogName : public Error {
 public:
  explicit UnknownCatalogName(const std::string& name)
      : Error("unknown catalog name: " + name) {}
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : Error("permutation degree mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidCounts : public Error {
 public:
  using Error::Error;
};

/// Malformed group-definition documents, bad element indices, mismatched parents.
class DefinitionError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilprob
