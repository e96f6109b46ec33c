#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wada {

enum class ErrorKind {
  InvalidArgument,
  FieldTooLarge,
  Overflow,
  NotADifferenceSet,
  NotAUnit,
  NotFrobeniusFixed,
  FNotDividingQ,
  OrbitShape,
  BudgetExhausted,
  SizeGuard,
  NotAnAutomorphism,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// The first nonzero residue whose difference count deviates from the expected lambda.
class NotADifferenceSet : public Error {
 public:
  NotADifferenceSet(std::int64_t alpha, std::uint64_t count, std::uint64_t expected);
  std::int64_t alpha() const noexcept { return alpha_; }
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t expected() const noexcept { return expected_; }

 private:
  std::int64_t alpha_;
  std::uint64_t count_;
  std::uint64_t expected_;
};

class NotFrobeniusFixed : public Error {
 public:
  NotFrobeniusFixed(std::int64_t element, std::int64_t image);
  /// Smallest element whose image under the multiplier leaves the set.
  std::int64_t element() const noexcept { return element_; }
  std::int64_t image() const noexcept { return image_; }

 private:
  std::int64_t element_;
  std::int64_t image_;
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::uint64_t nodes);
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace wada
