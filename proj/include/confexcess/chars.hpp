#pragma once

// Multiplicative characters of order dividing 4 valued exactly in Z[i], the
// canonical additive character, Gauss sums and periods, Jacobi sums, and the
// two affine quartic character sums that drive the two-intersection proof.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "confexcess/gf.hpp"

namespace confexcess::chars {

/// a + b*zeta_4 with zeta_4 = sqrt(-1).
struct CycZ4 {
  std::int64_t a = 0;
  std::int64_t b = 0;

  /// zeta_4^e for any integer e.
  static CycZ4 zeta(std::int64_t e);

  CycZ4 conj() const { return {a, -b}; }
  std::int64_t norm() const { return a * a + b * b; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(a), static_cast<double>(b)};
  }

  CycZ4& operator+=(const CycZ4& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend CycZ4 operator+(CycZ4 x, const CycZ4& y) { return x += y; }
  friend CycZ4 operator-(const CycZ4& x, const CycZ4& y) { return {x.a - y.a, x.b - y.b}; }
  friend CycZ4 operator-(const CycZ4& x) { return {-x.a, -x.b}; }
  friend CycZ4 operator*(const CycZ4& x, const CycZ4& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const CycZ4&, const CycZ4&) = default;
};

std::ostream& operator<<(std::ostream& os, const CycZ4& z);

using ComplexApprox = std::complex<double>;

/// Absolute tolerance used for every floating-point character-sum check.
double complex_tolerance(std::uint64_t q);

/// A multiplicative character of order 1, 2 or 4 on a unit group, fixed by
/// chi(generator) = zeta_4^{4/order}. chi(0) is 1 when trivial and 0 otherwise.
class Character {
 public:
  Character(gf::UnitGroup group, unsigned order);

  unsigned order() const { return order_; }
  bool trivial() const { return order_ == 1; }
  const gf::UnitGroup& group() const { return group_; }

  /// Throws WrongField when x is outside the ambient field of the character.
  CycZ4 operator()(const gf::FieldElement& x) const { return power(x, 1); }
  /// chi^j(x), with the zero convention applied to chi^j.
  CycZ4 power(const gf::FieldElement& x, std::int64_t j) const;

 private:
  gf::UnitGroup group_;
  unsigned order_;
};

CycZ4 eval_char(const Character& chi, const gf::FieldElement& x);

/// exp(2 pi i Tr(x) / p) with Tr the absolute trace of the group's field.
ComplexApprox additive_character(const gf::UnitGroup& group, const gf::FieldElement& x);

/// Sum over nonzero x of chi^power(x) psi(x); exactly -1 when chi^power is trivial.
ComplexApprox gauss_sum(const Character& chi, std::int64_t power = 1);

/// Known value of the quadratic Gauss sum over F_{p^s}.
ComplexApprox quadratic_gauss_sum_closed_form(std::uint64_t p, std::uint64_t s);

/// Sum of psi over the quadratic class C_i (i in {0, 1}) by direct summation.
ComplexApprox gauss_period(const gf::UnitGroup& group, unsigned i);

/// (-1 + (-1)^i G(eta)) / 2.
ComplexApprox gauss_period_closed_form(unsigned i, ComplexApprox quadratic_gauss);

/// Sum over x in F of chi1(x) chi2(1 - x).
CycZ4 jacobi_sum(const Character& chi1, const Character& chi2);

struct Signs {
  int epsilon = 0;
  int delta = 0;
};

/// Reads J = epsilon + 2 m delta zeta_4; anything else is MalformedJacobi.
Signs epsilon_delta(const CycZ4& jacobi, std::int64_t m);

/// The characters of the construction, all bound to the tower's omega:
/// chi4(omega) = chi4'(omega^{q+1}) = zeta_4.
struct QuarticSetup {
  const gf::Tower* tower = nullptr;
  Character eta;       // quadratic character of F_q
  Character chi4_sub;  // chi4' on F_q
  Character chi4_big;  // chi4 on F_{q^2}
  CycZ4 jacobi;        // J(eta, chi4')
};

/// Requires q = 1 (mod 4). The tower must outlive the setup.
QuarticSetup make_quartic_setup(const gf::Tower& tower);

/// omega^ell and the derived subfield quantities for an admissible ell.
struct LineParams {
  std::uint64_t ell = 0;
  gf::FieldElement omega_ell;
  gf::FieldElement norm_param;    // omega^{ell (q+1)}
  gf::FieldElement t;             // omega^ell + omega^{ell q}
  gf::FieldElement discriminant;  // norm_param - t^2 / 4
};

/// Throws BadEll when (q + 1) divides ell.
LineParams line_params(const gf::Tower& tower, std::uint64_t ell);

/// u = 1 + t s + norm_param s^2, the norm of 1 + omega^ell s.
gf::FieldElement twisted_u(const gf::Tower& tower, const LineParams& line,
                           const gf::FieldElement& s);

CycZ4 affine_sum_direct(const QuarticSetup& setup, std::uint64_t ell);
CycZ4 affine_sum_closed_form(const QuarticSetup& setup, std::uint64_t ell);
/// Direct sum of chi4(1 + omega^ell x) over F_q, checked against the closed
/// form; a mismatch throws IdentityViolation.
CycZ4 character_sum_affine(const QuarticSetup& setup, std::uint64_t ell);

CycZ4 twisted_sum_direct(const QuarticSetup& setup, std::uint64_t ell,
                         const gf::FieldElement& s);
CycZ4 twisted_sum_closed_form(const QuarticSetup& setup, std::uint64_t ell,
                              const gf::FieldElement& s);
/// Sum over x != s of chi4(1 + omega^ell x) eta(x - s), checked against the
/// closed form.
CycZ4 character_sum_twisted(const QuarticSetup& setup, std::uint64_t ell,
                            const gf::FieldElement& s);

}  // namespace confexcess::chars
