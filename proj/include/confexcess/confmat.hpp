#pragma once

// Conference matrices: the Paley construction, exact verification, excess,
// the upper bound on excess, and sign switching driven by a two-intersection
// set and its dual.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confexcess/gf.hpp"
#include "confexcess/twoint.hpp"

namespace confexcess::confmat {

/// Square matrix with entries in {-1, 0, +1}, row-major.
class SignedMatrix {
 public:
  SignedMatrix() = default;
  explicit SignedMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  /// Throws BadParameter on a size mismatch or an entry outside {-1, 0, 1}.
  SignedMatrix(std::size_t n, std::vector<std::int8_t> entries);

  std::size_t order() const { return n_; }
  std::int8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  /// Throws BadParameter for values outside {-1, 0, 1}.
  void set(std::size_t i, std::size_t j, int value);
  const std::vector<std::int8_t>& entries() const { return entries_; }

  friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> entries_;
};

/// p/q in lowest terms with q > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  /// Cross-multiplied comparison.
  friend bool operator==(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den == static_cast<__int128>(y.num) * x.den;
  }
  bool equals(std::int64_t value) const { return num == value * den; }
};

/// W = [[0, 1^T], [1, -M]] with M_{ij} = eta(x_j - x_i), rows and columns of
/// the core ordered by tower.sub.elements.
SignedMatrix paley_conference(const gf::Tower& tower);

struct ConferenceCheck {
  bool ok = false;
  bool entries_valid = false;
  bool zero_diagonal = false;
  bool full_support = false;  // reported, implied by the Gram identity
  bool gram_identity = false;
  /// First (i, j) with (W W^T)_{ij} != (n-1) [i = j].
  std::optional<std::pair<std::size_t, std::size_t>> first_bad_pair;
  std::string detail;
};

ConferenceCheck verify_conference(const SignedMatrix& w);

std::int64_t excess(const SignedMatrix& w);
std::vector<std::int64_t> row_sums(const SignedMatrix& w);
std::map<std::int64_t, std::size_t> row_sum_spectrum(const SignedMatrix& w);

struct ExcessCertificate {
  std::size_t n = 0;
  std::int64_t k = 0;  // odd, k <= sqrt(n - 1) < k + 2
  Rational bound;
  std::int64_t excess = 0;
  std::vector<std::int64_t> row_sums;
  std::int64_t a_count = 0;  // rows with sum k in an optimal matrix
};

/// n and k filled, bound = n (k^2 + 2k + n - 1) / (2 (k + 1)). Throws BadOrder
/// unless n is even and at least 2.
ExcessCertificate excess_bound(std::size_t n);

/// (a, n - a) with a = n ((k + 2)^2 - (n - 1)) / (4 (k + 1)); NonIntegralCount
/// when a is fractional.
std::pair<std::int64_t, std::int64_t> optimal_row_sum_counts(std::size_t n);

/// Negates the selected rows, then the selected columns.
SignedMatrix switch_signs(const SignedMatrix& w, const std::vector<std::size_t>& neg_rows,
                          const std::vector<std::size_t>& neg_cols);

/// Negates core columns indexed by D, then core rows indexed by D_alpha^perp
/// (slot i maps to matrix index i + 1; the border is untouched). Certifies
/// row sums in {2m - 1, 2m + 1} and excess equal to the bound, else throws
/// CertificationFailed.
std::pair<SignedMatrix, ExcessCertificate> maximize_excess(
    const gf::Tower& tower, const twoint::TwoIntersectionSet& d,
    const twoint::PointSet& d_alpha_perp);

}  // namespace confexcess::confmat
