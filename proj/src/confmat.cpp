#include "confexcess/confmat.hpp"

#include <algorithm>
#include <numeric>

#include "confexcess/errors.hpp"
#include "confexcess/numtheory.hpp"

namespace confexcess::confmat {

SignedMatrix::SignedMatrix(std::size_t n, std::vector<std::int8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::BadParameter, "expected " + std::to_string(n_ * n_) + " entries");
  }
  for (auto e : entries_) {
    if (e < -1 || e > 1) throw Error(ErrorCode::BadParameter, "entry outside {-1, 0, 1}");
  }
}

void SignedMatrix::set(std::size_t i, std::size_t j, int value) {
  if (value < -1 || value > 1) throw Error(ErrorCode::BadParameter, "entry outside {-1, 0, 1}");
  if (i >= n_ || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "matrix index");
  entries_[i * n_ + j] = static_cast<std::int8_t>(value);
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

SignedMatrix paley_conference(const gf::Tower& tower) {
  if (tower.q % 4 != 1) {
    throw Error(ErrorCode::BadQ, "q = " + std::to_string(tower.q) + " is not 1 mod 4");
  }
  const auto& f = tower.field();
  const auto& elems = tower.sub.elements;
  const std::size_t q = elems.size();
  SignedMatrix w(q + 1);
  for (std::size_t i = 1; i <= q; ++i) {
    w.set(0, i, 1);
    w.set(i, 0, 1);
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (i == j) continue;
      const auto cls = tower.sub.units.residue_class(f.sub(elems[j], elems[i]), 2);
      // -M: squares get -1, nonsquares +1
      w.set(i + 1, j + 1, *cls == 0 ? -1 : 1);
    }
  }
  return w;
}

ConferenceCheck verify_conference(const SignedMatrix& w) {
  const std::size_t n = w.order();
  ConferenceCheck check;
  check.entries_valid = std::all_of(w.entries().begin(), w.entries().end(),
                                    [](std::int8_t e) { return e >= -1 && e <= 1; });
  check.zero_diagonal = true;
  check.full_support = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && w(i, j) != 0) check.zero_diagonal = false;
      if (i != j && w(i, j) == 0) check.full_support = false;
    }
  }
  check.gram_identity = true;
  const auto target = static_cast<std::int64_t>(n) - 1;
  for (std::size_t i = 0; i < n && check.gram_identity; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::int64_t dot = 0;
      for (std::size_t c = 0; c < n; ++c) dot += w(i, c) * w(j, c);
      if (dot != (i == j ? target : 0)) {
        check.gram_identity = false;
        check.first_bad_pair = std::make_pair(i, j);
        break;
      }
    }
  }
  check.ok = check.entries_valid && check.zero_diagonal && check.gram_identity;
  if (!check.entries_valid) {
    check.detail = "entry outside {-1, 0, 1}";
  } else if (!check.zero_diagonal) {
    check.detail = "nonzero diagonal entry";
  } else if (!check.gram_identity) {
    check.detail = "W W^T differs from (n-1) I at rows " +
                   std::to_string(check.first_bad_pair->first) + ", " +
                   std::to_string(check.first_bad_pair->second);
  }
  return check;
}

std::int64_t excess(const SignedMatrix& w) {
  return std::accumulate(w.entries().begin(), w.entries().end(), std::int64_t{0});
}

std::vector<std::int64_t> row_sums(const SignedMatrix& w) {
  std::vector<std::int64_t> sums(w.order(), 0);
  for (std::size_t i = 0; i < w.order(); ++i) {
    for (std::size_t j = 0; j < w.order(); ++j) sums[i] += w(i, j);
  }
  return sums;
}

std::map<std::int64_t, std::size_t> row_sum_spectrum(const SignedMatrix& w) {
  std::map<std::int64_t, std::size_t> hist;
  for (auto s : row_sums(w)) ++hist[s];
  return hist;
}

ExcessCertificate excess_bound(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::BadOrder, "order " + std::to_string(n) + " is not even and >= 2");
  }
  ExcessCertificate cert;
  cert.n = n;
  const auto root = static_cast<std::int64_t>(isqrt(n - 1));
  cert.k = root % 2 == 1 ? root : root - 1;
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t k = cert.k;
  cert.bound = Rational::make(nn * (k * k + 2 * k + nn - 1), 2 * (k + 1));
  return cert;
}

std::pair<std::int64_t, std::int64_t> optimal_row_sum_counts(std::size_t n) {
  const ExcessCertificate cert = excess_bound(n);
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t k = cert.k;
  const std::int64_t num = nn * ((k + 2) * (k + 2) - (nn - 1));
  const std::int64_t den = 4 * (k + 1);
  if (num % den != 0) {
    throw Error(ErrorCode::NonIntegralCount,
                std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
  }
  return {num / den, nn - num / den};
}

SignedMatrix switch_signs(const SignedMatrix& w, const std::vector<std::size_t>& neg_rows,
                          const std::vector<std::size_t>& neg_cols) {
  const std::size_t n = w.order();
  std::vector<int> row_sign(n, 1);
  std::vector<int> col_sign(n, 1);
  for (auto i : neg_rows) {
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
    row_sign[i] = -1;
  }
  for (auto j : neg_cols) {
    if (j >= n) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(j));
    col_sign[j] = -1;
  }
  SignedMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, w(i, j) * row_sign[i] * col_sign[j]);
  }
  return out;
}

std::pair<SignedMatrix, ExcessCertificate> maximize_excess(
    const gf::Tower& tower, const twoint::TwoIntersectionSet& d,
    const twoint::PointSet& d_alpha_perp) {
  const auto m_opt = m_from_q(tower.q);
  if (!m_opt) throw Error(ErrorCode::BadQ, "q = " + std::to_string(tower.q));
  const auto m = static_cast<std::int64_t>(*m_opt);
  if (d.j != static_cast<std::size_t>(2 * m * m - m + 1) ||
      d.alpha != static_cast<std::size_t>(m * m - m) || d.beta != static_cast<std::size_t>(m * m)) {
    throw Error(ErrorCode::CertificationFailed, "D does not have parameters (2m^2-m+1; m^2-m, m^2)");
  }

  const SignedMatrix w = paley_conference(tower);
  std::vector<std::size_t> cols;
  for (auto x : d.elements) cols.push_back(x + 1);
  std::vector<std::size_t> rows;
  for (auto s : d_alpha_perp) rows.push_back(s + 1);
  const SignedMatrix by_columns = switch_signs(w, {}, cols);
  SignedMatrix switched = switch_signs(by_columns, rows, {});

  ExcessCertificate cert = excess_bound(switched.order());
  cert.excess = excess(switched);
  cert.row_sums = row_sums(switched);
  cert.a_count = optimal_row_sum_counts(switched.order()).first;

  for (auto s : cert.row_sums) {
    if (s != 2 * m - 1 && s != 2 * m + 1) {
      throw Error(ErrorCode::CertificationFailed, "row sum " + std::to_string(s));
    }
  }
  const auto low = std::count(cert.row_sums.begin(), cert.row_sums.end(), 2 * m - 1);
  if (low != cert.a_count) {
    throw Error(ErrorCode::CertificationFailed,
                std::to_string(low) + " rows sum to k, expected " + std::to_string(cert.a_count));
  }
  if (!cert.bound.equals(cert.excess)) {
    throw Error(ErrorCode::CertificationFailed, "excess " + std::to_string(cert.excess) +
                                                    " misses the bound");
  }
  if (!verify_conference(switched).ok) {
    throw Error(ErrorCode::CertificationFailed, "switched matrix is not a conference matrix");
  }
  return {std::move(switched), std::move(cert)};
}

}  // namespace confexcess::confmat
