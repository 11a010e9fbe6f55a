#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilprob/bigint.hpp"
#include "nilprob/exact_prob.hpp"
#include "nilprob/group_table.hpp"
#include "nilprob/structure.hpp"

namespace nilprob {

// np(H; x_1, ..., x_L) is the fraction of tuples (y_1, ..., y_L) in H^L with
// [x_1 y_1, ..., x_L y_L] = 1. The usual k-nilpotence quantities use L = k+1;
// L = 1 (the probability that x_1 y_1 = 1) is allowed because the center
// recursion bottoms out there.
using ShiftTuple = std::vector<Element>;

struct Budgets {
  double tuples = 1e9;      // brute force: |H|^L tuples
  double shifts = 1e6;      // sup: [G:H]^L coset-representative tuples
  double fast_ops = 1e10;   // DP: L * |G| * |H| commutator evaluations
  std::uint32_t fast_order = kDefaultOrderCap;
};

enum class Method { brute_force, dp };
std::string to_string(Method m);

struct NpResult {
  ExactProb value;
  Method method = Method::dp;
  BigInt counted;
  BigInt total;
};
nlohmann::json to_json(const NpResult& r);

/// W_m(g): number of (y_1..y_m) in H^m with [x_1 y_1, ..., x_m y_m] = g.
struct CommutatorDistribution {
  std::uint32_t stage = 0;
  std::vector<BigInt> counts;  // indexed by element of G
  BigInt mass() const;
};

/// Plain enumeration of H^L. Throws BudgetExceeded when |H|^L > budgets.tuples.
NpResult np_bruteforce(const GroupTable& g, const SubgroupRef& h, std::span<const Element> shifts,
                       const Budgets& budgets = {});

/// Commutator-distribution DP; same value as np_bruteforce.
NpResult np_fast(const GroupTable& g, const SubgroupRef& h, std::span<const Element> shifts,
                 const Budgets& budgets = {});

/// np_k(G) = np(G; 1, ..., 1) with k+1 slots. k >= 1.
NpResult np_k(const GroupTable& g, std::uint32_t k, const Budgets& budgets = {});

/// Commuting probability: conjugacy classes / order.
ExactProb cp(const GroupTable& g);
ExactProb cp(const GroupTable& g, const SubgroupRef& h);

CommutatorDistribution commutator_distribution(const GroupTable& g, const SubgroupRef& h,
                                               std::span<const Element> shifts,
                                               const Budgets& budgets = {});

struct SupResult {
  ExactProb value;  // max over all k+1 shift coordinates
  ShiftTuple witness;
  ExactProb first_k_value;  // max with the last shift fixed to the identity
  ShiftTuple first_k_witness;
  std::uint64_t tuples_evaluated = 0;

  bool readings_differ() const { return value != first_k_value; }
};
nlohmann::json to_json(const SupResult& r);

/// Relative k-nilpotence of H in G. Since np depends on each x_i only through
/// x_i H, the maximum runs over least coset representatives; ties go to the
/// lexicographically smallest tuple. Throws BudgetExceeded when
/// [G:H]^(k+1) > budgets.shifts.
SupResult np_sup(const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                 const Budgets& budgets = {});

/// Visits every tuple of least coset representatives of length L in
/// lexicographic order with its count (out of |H|^L).
void enumerate_shift_tuples(
    const GroupTable& g, const SubgroupRef& h, std::uint32_t length, const Budgets& budgets,
    const std::function<void(std::span<const Element> shifts, const BigInt& count)>& visit);

/// |H|^L
BigInt total_tuples(const SubgroupRef& h, std::uint32_t length);

}  // namespace nilprob
