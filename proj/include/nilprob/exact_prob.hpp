#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "nilprob/bigint.hpp"

namespace nilprob {

/// A probability as a reduced fraction num/den with 0 <= num <= den.
class ExactProb {
 public:
  ExactProb() = default;  // 0/1

  /// Reduces; throws InvalidCounts unless 0 <= num <= den and den >= 1.
  ExactProb(BigInt num, BigInt den);

  static ExactProb zero() { return {}; }
  static ExactProb one() { return ExactProb(1, 1); }

  /// "num/den"; throws InvalidCounts on malformed text.
  static ExactProb parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  std::string to_string() const;
  double to_double() const;

  /// (1 + p) / 2
  ExactProb half_plus_half() const;
  ExactProb pow(unsigned e) const;

  friend ExactProb operator*(const ExactProb& a, const ExactProb& b);
  friend bool operator==(const ExactProb& a, const ExactProb& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactProb& a, const ExactProb& b);

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace nilprob
