#pragma once

// Block designs, two-intersection sets and their duals, and the quartic
// construction of two-intersection sets for the design of translates of the
// nonzero squares in F_q, q = 4m^2 + 1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "confexcess/chars.hpp"
#include "confexcess/gf.hpp"

namespace confexcess::twoint {

/// Sorted point (or block) ids.
using PointSet = std::vector<std::size_t>;
/// Intersection size -> number of blocks.
using Histogram = std::map<std::size_t, std::size_t>;

/// Points are 0..v-1; blocks are sets of points. Flags are implicit.
class BlockDesign {
 public:
  BlockDesign(std::size_t v, std::vector<PointSet> blocks);

  std::size_t v() const { return v_; }
  std::size_t b() const { return blocks_.size(); }
  const std::vector<PointSet>& blocks() const { return blocks_; }
  const PointSet& block(std::size_t i) const { return blocks_.at(i); }

  /// k, when every block has the same size.
  std::optional<std::size_t> block_size() const;
  /// r, when every point lies in the same number of blocks.
  std::optional<std::size_t> replication() const;
  bool is_tactical() const { return block_size() && replication(); }
  /// lambda, when every pair of distinct points lies in exactly lambda blocks.
  std::optional<std::size_t> lambda() const;

  /// Points and blocks swapped: dual point i is block i, dual block p is the
  /// set of blocks through p.
  BlockDesign dual() const;

 private:
  std::size_t v_;
  std::vector<PointSet> blocks_;
};

struct TwoIntersectionSet {
  PointSet elements;
  std::size_t j = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;

  /// Same set with the roles of alpha and beta exchanged.
  TwoIntersectionSet swapped() const { return {elements, j, beta, alpha}; }
};

Histogram intersection_profile(const PointSet& subset, const BlockDesign& design);

/// Certifies that exactly two intersection sizes occur; alpha is the smaller.
/// Throws ProfileViolation otherwise.
TwoIntersectionSet certify_two_intersection(const BlockDesign& design, PointSet subset);

/// Complement with parameters (v - j; k - alpha, k - beta).
TwoIntersectionSet complement(const BlockDesign& design, const TwoIntersectionSet& d);

struct DualSets {
  PointSet alpha_perp;  // blocks meeting D in alpha points
  PointSet beta_perp;   // blocks meeting D in beta points
};

/// Partition of the blocks by intersection size, checked against the size
/// law |D_alpha^perp| = (r j - beta b) / (alpha - beta).
DualSets dual_sets(const BlockDesign& design, const TwoIntersectionSet& d);

struct DualParameters {
  std::int64_t j = 0;
  std::int64_t alpha = 0;  // attained at points outside D
  std::int64_t beta = 0;   // attained at points of D
};

/// Closed-form parameters of D_alpha^perp in the dual of a 2-design, verified
/// against the dual design and the pairwise balanced count
/// C(j,2) lambda = C(alpha,2)|D_alpha^perp| + C(beta,2)|D_beta^perp|.
DualParameters dual_parameters_2design(const BlockDesign& design, const TwoIntersectionSet& d);

/// Points and blocks are both indexed by the slots of tower.sub.elements;
/// block a is {x + a : x a nonzero square}.
BlockDesign qr_design_blocks(const gf::Tower& tower);

/// Same indexing, translates of the nonsquares.
BlockDesign nonsquare_design_blocks(const gf::Tower& tower);

struct AdmissiblePair {
  unsigned h = 0;
  std::uint64_t ell = 0;
  int epsilon = 0;
  int delta = 0;
  gf::FieldElement norm_param;
  gf::FieldElement t;
};

/// Both character conditions on (h, ell) for the given signs.
bool is_admissible(const chars::QuarticSetup& setup, unsigned h, std::uint64_t ell,
                   chars::Signs signs);

/// Smallest ell, then smallest h. SearchExhausted would mean a bug.
AdmissiblePair find_admissible_pair(const chars::QuarticSetup& setup, chars::Signs signs);

/// Every admissible (h, ell) with 1 <= ell <= q^2 - 2, in search order.
std::vector<AdmissiblePair> enumerate_admissible_pairs(const chars::QuarticSetup& setup,
                                                       chars::Signs signs);

/// (|T_0|, |T_1|) by enumeration over the odd powers of omega.
std::pair<std::uint64_t, std::uint64_t> count_T_sets(const gf::Tower& tower);

/// {x in F_q : 1 + x omega^ell lies in quartic class h or h + 1}, as slots.
PointSet quartic_window_set(const chars::QuarticSetup& setup, std::uint64_t ell, int h);

/// D_{ell,h} certified against the quadratic-residue design with parameters
/// (2m^2 - m + 1; m^2 - m, m^2). Throws ProfileViolation on failure.
TwoIntersectionSet build_D(const chars::QuarticSetup& setup, const BlockDesign& design,
                           const AdmissiblePair& pair);

/// Predicted |D_{ell,h} cap (S + s)| from the quartic class of u = 1 + t s + n s^2.
std::size_t predict_profile(const chars::QuarticSetup& setup, const AdmissiblePair& pair,
                            const gf::FieldElement& s);

}  // namespace confexcess::twoint
