#pragma once

// Exhaustive verifiers. They share nothing with the construction code beyond
// raw field arithmetic and the plain data types they inspect.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "confexcess/confmat.hpp"
#include "confexcess/gf.hpp"
#include "confexcess/twoint.hpp"

namespace confexcess::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Every j-subset whose block intersection sizes are exactly {alpha, beta}.
/// Throws BudgetExceeded when C(v, j) > budget.
std::vector<twoint::PointSet> brute_force_two_intersection_sets(
    const twoint::BlockDesign& design, std::size_t j, std::size_t alpha, std::size_t beta,
    std::uint64_t budget = kDefaultBudget);

struct SignPattern {
  std::uint64_t row_mask = 0;  // bit i set: row i negated
  std::uint64_t col_mask = 0;
};

struct SwitchingOptimum {
  std::int64_t max_excess = 0;
  std::vector<SignPattern> witnesses;
};

/// Maximum excess over all 2^{2n} row/column negation patterns.
/// Throws BudgetExceeded when 2^{2n} > budget.
SwitchingOptimum brute_force_max_excess_switching(const confmat::SignedMatrix& w,
                                                  std::uint64_t budget = kDefaultBudget);

/// Least e >= 0 with base^e = target, by linear scan. NotInGroup for target 0
/// or a target outside the cyclic group of base.
std::uint64_t naive_discrete_log(const gf::Field& field, const gf::FieldElement& base,
                                 const gf::FieldElement& target);

}  // namespace confexcess::oracle
