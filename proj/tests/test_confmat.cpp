#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "confexcess/chars.hpp"
#include "confexcess/confmat.hpp"
#include "confexcess/errors.hpp"
#include "confexcess/gf.hpp"
#include "confexcess/twoint.hpp"

using namespace confexcess;
using namespace confexcess::confmat;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadParameter;
}

// W W^T = (n - 1) I by plain loops.
bool gram_ok(const SignedMatrix& w) {
  const std::size_t n = w.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (w(i, i) != 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      long dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += w(i, k) * w(j, k);
      if (dot != (i == j ? static_cast<long>(n) - 1 : 0)) return false;
    }
  }
  return true;
}

long plain_sum(const SignedMatrix& w) {
  long s = 0;
  for (auto v : w.entries()) s += v;
  return s;
}

struct Switched {
  SignedMatrix w;
  ExcessCertificate cert;
};

Switched construct(std::uint64_t q, std::uint64_t m) {
  const gf::Tower t = gf::build_tower(q, 1);
  const auto setup = chars::make_quartic_setup(t);
  const auto signs = chars::epsilon_delta(setup.jacobi, static_cast<std::int64_t>(m));
  const auto pair = twoint::find_admissible_pair(setup, signs);
  const auto design = twoint::qr_design_blocks(t);
  const auto d = twoint::build_D(setup, design, pair);
  const auto duals = twoint::dual_sets(design, d);
  auto [w, cert] = maximize_excess(t, d, duals.alpha_perp);
  return {std::move(w), std::move(cert)};
}

}  // namespace

TEST_CASE("signed matrix basics") {
  SignedMatrix w(3);
  w.set(0, 1, -1);
  CHECK(w(0, 1) == -1);
  CHECK(code_of([&] { w.set(0, 0, 2); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { SignedMatrix(2, {0, 1, 1}); }) == ErrorCode::BadParameter);
  CHECK(SignedMatrix(2, {0, 1, 1, 0}) == SignedMatrix(2, {0, 1, 1, 0}));
}

TEST_CASE("Paley conference matrices") {
  for (std::uint64_t q : {5u, 13u, 17u, 37u}) {
    CAPTURE(q);
    const gf::Tower t = gf::build_tower(q, 1);
    const SignedMatrix w = paley_conference(t);
    REQUIRE(w.order() == q + 1);
    CHECK(gram_ok(w));
    const auto check = verify_conference(w);
    CHECK(check.ok);
    CHECK(check.full_support);
    for (std::size_t i = 1; i <= q; ++i) {
      CHECK(w(0, i) == 1);
      CHECK(w(i, 0) == 1);
      long core = 0;
      for (std::size_t j = 1; j <= q; ++j) {
        CHECK(w(i, j) == w(j, i));
        core += w(i, j);
      }
      CHECK(core == 0);
    }
    CHECK(excess(w) == plain_sum(w));
    CHECK(excess(w) == static_cast<long>(2 * q));
  }
  const gf::Tower t5 = gf::build_tower(5, 1);
  CHECK(row_sum_spectrum(paley_conference(t5)) == std::map<std::int64_t, std::size_t>{{1, 5}, {5, 1}});
}

TEST_CASE("conference verification failures") {
  const SignedMatrix id(2, {1, 0, 0, 1});
  const auto c = verify_conference(id);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.zero_diagonal);

  const gf::Tower t = gf::build_tower(5, 1);
  SignedMatrix w = paley_conference(t);
  w.set(2, 3, -w(2, 3));
  const auto bad = verify_conference(w);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.first_bad_pair);
  CHECK(bad.first_bad_pair->first <= 3);
  CHECK_FALSE(bad.detail.empty());

  CHECK(excess(SignedMatrix(4)) == 0);
  CHECK(verify_conference(SignedMatrix(2, {0, 1, 1, 0})).ok);
}

TEST_CASE("excess bound") {
  struct Row {
    std::size_t n;
    std::int64_t k;
    std::int64_t bound;
  };
  for (auto [n, k, bound] : {Row{6, 1, 12}, Row{18, 3, 72}, Row{38, 5, 228}, Row{10, 3, 30},
                             Row{102, 9, 1020}, Row{198, 13, 2772}, Row{258, 15, 4128}}) {
    CAPTURE(n);
    const auto cert = excess_bound(n);
    CHECK(cert.k == k);
    CHECK(cert.bound.equals(bound));
    CHECK(cert.bound.den == 1);
  }
  // Recomputed from the formula with plain integers for every even n.
  for (std::size_t n = 2; n <= 400; n += 2) {
    std::int64_t k = 1;
    while ((k + 2) * (k + 2) <= static_cast<std::int64_t>(n) - 1) k += 2;
    const auto nn = static_cast<std::int64_t>(n);
    const auto cert = excess_bound(n);
    CHECK(cert.k == k);
    CHECK(cert.bound == Rational::make(nn * (k * k + 2 * k + nn - 1), 2 * (k + 1)));
  }
  for (std::uint64_t m = 1; m <= 8; ++m) {
    const auto n = 4 * m * m + 2;
    const auto mm = static_cast<std::int64_t>(m);
    CHECK(excess_bound(n).bound.equals(8 * mm * mm * mm + 4 * mm));
  }
  CHECK(code_of([] { excess_bound(7); }) == ErrorCode::BadOrder);
  CHECK(code_of([] { excess_bound(0); }) == ErrorCode::BadOrder);
  CHECK(Rational::make(6, -4) == Rational{-3, 2});
  CHECK(Rational::make(6, -4).den == 2);
}

TEST_CASE("optimal row-sum counts") {
  CHECK(optimal_row_sum_counts(6) == std::pair<std::int64_t, std::int64_t>{3, 3});
  CHECK(optimal_row_sum_counts(18) == std::pair<std::int64_t, std::int64_t>{9, 9});
  CHECK(optimal_row_sum_counts(38) == std::pair<std::int64_t, std::int64_t>{19, 19});
  CHECK(optimal_row_sum_counts(8) == std::pair<std::int64_t, std::int64_t>{2, 6});
  CHECK(code_of([] { optimal_row_sum_counts(12); }) == ErrorCode::NonIntegralCount);
}

TEST_CASE("switching") {
  const gf::Tower t = gf::build_tower(5, 1);
  const SignedMatrix w = paley_conference(t);
  CHECK(switch_signs(w, {}, {}) == w);
  CHECK(switch_signs(w, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}) == w);
  CHECK(switch_signs(switch_signs(w, {1, 4}, {2}), {1, 4}, {2}) == w);
  const auto s = switch_signs(w, {1}, {});
  for (std::size_t j = 0; j < 6; ++j) CHECK(s(1, j) == -w(1, j));
  CHECK(code_of([&] { switch_signs(w, {6}, {}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { switch_signs(w, {}, {9}); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("random switching preserves the Gram identity") {
  const auto built = construct(17, 2);
  std::mt19937_64 rng(1717);
  std::bernoulli_distribution coin(0.5);
  SignedMatrix w = built.w;
  for (int round = 0; round < 200; ++round) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < w.order(); ++i) {
      if (coin(rng)) rows.push_back(i);
      if (coin(rng)) cols.push_back(i);
    }
    w = switch_signs(w, rows, cols);
    CHECK(verify_conference(w).ok);
    std::int64_t squares = 0;
    for (auto r : row_sums(w)) {
      CHECK(((r % 2) + 2) % 2 == 1);  // n - 1 = 17 terms of +-1
      squares += r * r;
    }
    CHECK(squares == 18 * 17);
  }
}

TEST_CASE("switched matrices attain the bound") {
  struct Row {
    std::uint64_t q, m;
    std::int64_t excess;
  };
  for (auto [q, m, e] : {Row{5, 1, 12}, Row{17, 2, 72}, Row{37, 3, 228}}) {
    CAPTURE(q);
    const auto built = construct(q, m);
    const auto& w = built.w;
    const std::size_t n = q + 1;
    CHECK(gram_ok(w));
    CHECK(plain_sum(w) == e);
    CHECK(built.cert.excess == e);
    CHECK(built.cert.bound.equals(e));
    CHECK(built.cert.a_count == static_cast<std::int64_t>((q + 1) / 2));
    const auto k = static_cast<std::int64_t>(2 * m - 1);
    CHECK(row_sum_spectrum(w) == std::map<std::int64_t, std::size_t>{{k, n / 2}, {k + 2, n / 2}});
    std::int64_t squares = 0;
    for (auto r : row_sums(w)) {
      CHECK(((r % 2) + 2) % 2 == static_cast<std::int64_t>((n - 1) % 2));
      squares += r * r;
    }
    CHECK(squares == static_cast<std::int64_t>(n * (n - 1)));
  }
}

TEST_CASE("maximize_excess rejects a wrong dual") {
  const gf::Tower t = gf::build_tower(5, 1);
  const auto setup = chars::make_quartic_setup(t);
  const auto pair = twoint::find_admissible_pair(setup, chars::epsilon_delta(setup.jacobi, 1));
  const auto design = twoint::qr_design_blocks(t);
  const auto d = twoint::build_D(setup, design, pair);
  CHECK(code_of([&] { maximize_excess(t, d, {}); }) == ErrorCode::CertificationFailed);
}
