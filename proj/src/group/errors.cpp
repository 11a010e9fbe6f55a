#include "nilprob/errors.hpp"

#include <sstream>

namespace nilprob {

NotAGroup::NotAGroup(std::string law, std::uint32_t a, std::uint32_t b, std::uint32_t c)
    : Error("not a group: " + law + " law fails at (" + std::to_string(a) + ", " +
            std::to_string(b) + ", " + std::to_string(c) + ")"),
      law_(std::move(law)),
      a_(a),
      b_(b),
      c_(c) {}

OrderExceeded::OrderExceeded(std::uint64_t order_lower_bound, std::uint64_t cap)
    : Error("group order " + std::to_string(order_lower_bound) + " exceeds the cap " +
            std::to_string(cap)),
      bound_(order_lower_bound) {}

namespace {
std::string budget_message(const std::string& what, long double requested, long double budget) {
  std::ostringstream out;
  out << what << " needs " << requested << " operations, budget is " << budget;
  return out.str();
}
}  // namespace

BudgetExceeded::BudgetExceeded(std::string what, long double requested, long double budget)
    : Error(budget_message(what, requested, budget)), requested_(requested), budget_(budget) {}

}  // namespace nilprob
