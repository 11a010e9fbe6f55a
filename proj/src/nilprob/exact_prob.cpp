#include "nilprob/exact_prob.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nilprob/errors.hpp"

namespace nilprob {

ExactProb::ExactProb(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ < 1 || num_ < 0 || num_ > den_)
    throw InvalidCounts("not a probability: " + num_.str() + "/" + den_.str());
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

ExactProb ExactProb::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
    throw InvalidCounts("expected num/den, got \"" + std::string(text) + "\"");
  try {
    return ExactProb(BigInt(std::string(text.substr(0, slash))),
                     BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw InvalidCounts("expected num/den, got \"" + std::string(text) + "\"");
  }
}

std::string ExactProb::to_string() const { return num_.str() + "/" + den_.str(); }

double ExactProb::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_double_extended;
  return static_cast<double>(Float(num_) / Float(den_));
}

ExactProb ExactProb::half_plus_half() const { return ExactProb(den_ + num_, 2 * den_); }

ExactProb ExactProb::pow(unsigned e) const {
  return ExactProb(boost::multiprecision::pow(num_, e), boost::multiprecision::pow(den_, e));
}

ExactProb operator*(const ExactProb& a, const ExactProb& b) {
  return ExactProb(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const ExactProb& a, const ExactProb& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace nilprob
