#include "confexcess/oracle.hpp"

#include <limits>
#include <set>
#include <string>

#include "confexcess/errors.hpp"
#include "confexcess/numtheory.hpp"

namespace confexcess::oracle {

std::vector<twoint::PointSet> brute_force_two_intersection_sets(
    const twoint::BlockDesign& design, std::size_t j, std::size_t alpha, std::size_t beta,
    std::uint64_t budget) {
  const std::size_t v = design.v();
  const std::uint64_t subsets = binomial(v, j);
  if (subsets > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "C(" + std::to_string(v) + ", " + std::to_string(j) + ") exceeds the budget");
  }
  const std::set<std::size_t> wanted{alpha, beta};
  std::vector<twoint::PointSet> witnesses;
  if (j > v) return witnesses;

  // Lexicographic walk over j-combinations of {0..v-1}.
  std::vector<std::size_t> pick(j);
  for (std::size_t i = 0; i < j; ++i) pick[i] = i;
  std::vector<char> in(v, 0);
  while (true) {
    std::fill(in.begin(), in.end(), 0);
    for (auto x : pick) in[x] = 1;
    std::set<std::size_t> seen;
    for (const auto& block : design.blocks()) {
      std::size_t meet = 0;
      for (auto x : block) meet += static_cast<std::size_t>(in[x]);
      seen.insert(meet);
      if (seen.size() > wanted.size()) break;
    }
    if (seen == wanted) witnesses.push_back(pick);

    std::size_t i = j;
    while (i > 0 && pick[i - 1] == v - j + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t t = i; t < j; ++t) pick[t] = pick[t - 1] + 1;
  }
  return witnesses;
}

SwitchingOptimum brute_force_max_excess_switching(const confmat::SignedMatrix& w,
                                                  std::uint64_t budget) {
  const std::size_t n = w.order();
  if (2 * n >= 63 || (std::uint64_t{1} << (2 * n)) > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "2^" + std::to_string(2 * n) + " sign patterns exceed the budget");
  }
  SwitchingOptimum best{std::numeric_limits<std::int64_t>::min(), {}};
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t rows = 0; rows < patterns; ++rows) {
    for (std::uint64_t cols = 0; cols < patterns; ++cols) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const int rs = (rows >> i) & 1 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
          const int cs = (cols >> j) & 1 ? -1 : 1;
          total += rs * cs * w(i, j);
        }
      }
      if (total > best.max_excess) {
        best.max_excess = total;
        best.witnesses.clear();
      }
      if (total == best.max_excess) best.witnesses.push_back({rows, cols});
    }
  }
  return best;
}

std::uint64_t naive_discrete_log(const gf::Field& field, const gf::FieldElement& base,
                                 const gf::FieldElement& target) {
  if (field.is_zero(target)) throw Error(ErrorCode::NotInGroup, "target is zero");
  gf::FieldElement acc = field.one();
  for (std::uint64_t e = 0; e + 1 < field.order(); ++e) {
    if (acc == target) return e;
    acc = field.mul(acc, base);
  }
  throw Error(ErrorCode::NotInGroup, "target is not a power of base");
}

}  // namespace confexcess::oracle
