#include "confexcess/chars.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "confexcess/errors.hpp"

namespace confexcess::chars {

using gf::FieldElement;

CycZ4 CycZ4::zeta(std::int64_t e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::ostream& operator<<(std::ostream& os, const CycZ4& z) {
  return os << z.a << (z.b < 0 ? " - " : " + ") << (z.b < 0 ? -z.b : z.b) << "i";
}

double complex_tolerance(std::uint64_t q) { return 1e-9 * std::sqrt(static_cast<double>(q)); }

Character::Character(gf::UnitGroup group, unsigned order)
    : group_(std::move(group)), order_(order) {
  if (order != 1 && order != 2 && order != 4) {
    throw Error(ErrorCode::KNotDividing, "character order " + std::to_string(order));
  }
  if (group_.order() % order != 0) {
    throw Error(ErrorCode::KNotDividing, "order " + std::to_string(order) +
                                             " does not divide " + std::to_string(group_.order()));
  }
}

CycZ4 Character::power(const FieldElement& x, std::int64_t j) const {
  if (!group_.field().contains(x)) throw Error(ErrorCode::WrongField, "malformed element");
  const auto k = static_cast<std::int64_t>(order_);
  const bool trivial_power = ((j % k) + k) % k == 0;
  const auto cls = group_.residue_class(x, order_);
  if (!cls) return trivial_power ? CycZ4{1, 0} : CycZ4{0, 0};
  return CycZ4::zeta(static_cast<std::int64_t>(*cls) * (4 / k) * j);
}

CycZ4 eval_char(const Character& chi, const FieldElement& x) { return chi(x); }

ComplexApprox additive_character(const gf::UnitGroup& group, const FieldElement& x) {
  const std::uint64_t p = group.field().characteristic();
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(group.absolute_trace(x)) /
                       static_cast<double>(p);
  return std::polar(1.0, angle);
}

ComplexApprox gauss_sum(const Character& chi, std::int64_t power) {
  const auto k = static_cast<std::int64_t>(chi.order());
  if (((power % k) + k) % k == 0) return {-1.0, 0.0};
  const auto& group = chi.group();
  const auto& f = group.field();
  ComplexApprox sum{0.0, 0.0};
  FieldElement x = f.one();
  for (std::uint64_t i = 0; i < group.order(); ++i) {
    sum += chi.power(x, power).to_complex() * additive_character(group, x);
    x = f.mul(x, group.generator());
  }
  return sum;
}

ComplexApprox quadratic_gauss_sum_closed_form(std::uint64_t p, std::uint64_t s) {
  const double root = std::pow(static_cast<double>(p), static_cast<double>(s) / 2.0);
  const double sign = (s % 2 == 1) ? 1.0 : -1.0;  // (-1)^{s-1}
  if (p % 4 == 1) return {sign * root, 0.0};
  ComplexApprox unit = CycZ4::zeta(static_cast<std::int64_t>(s % 4)).to_complex();
  return sign * unit * root;
}

ComplexApprox gauss_period(const gf::UnitGroup& group, unsigned i) {
  const auto& f = group.field();
  const FieldElement step = f.mul(group.generator(), group.generator());
  FieldElement x = i % 2 == 0 ? f.one() : group.generator();
  ComplexApprox sum{0.0, 0.0};
  for (std::uint64_t j = 0; j < group.order() / 2; ++j) {
    sum += additive_character(group, x);
    x = f.mul(x, step);
  }
  return sum;
}

ComplexApprox gauss_period_closed_form(unsigned i, ComplexApprox quadratic_gauss) {
  const double sign = i % 2 == 0 ? 1.0 : -1.0;
  return (ComplexApprox{-1.0, 0.0} + sign * quadratic_gauss) / 2.0;
}

CycZ4 jacobi_sum(const Character& chi1, const Character& chi2) {
  if (!chi1.group().same_group(chi2.group())) {
    throw Error(ErrorCode::MismatchedFields, "Jacobi sum of characters on different groups");
  }
  const auto& group = chi1.group();
  const auto& f = group.field();
  const FieldElement one = f.one();
  CycZ4 sum = chi1(f.zero()) * chi2(one);
  FieldElement x = one;
  for (std::uint64_t i = 0; i < group.order(); ++i) {
    sum += chi1(x) * chi2(f.sub(one, x));
    x = f.mul(x, group.generator());
  }
  return sum;
}

Signs epsilon_delta(const CycZ4& jacobi, std::int64_t m) {
  const bool well_formed = (jacobi.a == 1 || jacobi.a == -1) && m > 0 &&
                           (jacobi.b == 2 * m || jacobi.b == -2 * m);
  if (!well_formed) {
    throw Error(ErrorCode::MalformedJacobi, "J = " + std::to_string(jacobi.a) + " + " +
                                                std::to_string(jacobi.b) + "i with m = " +
                                                std::to_string(m));
  }
  return {static_cast<int>(jacobi.a), jacobi.b > 0 ? 1 : -1};
}

QuarticSetup make_quartic_setup(const gf::Tower& tower) {
  if (tower.q % 4 != 1) {
    throw Error(ErrorCode::BadQ, "q = " + std::to_string(tower.q) + " is not 1 mod 4");
  }
  QuarticSetup setup{&tower, Character(tower.sub.units, 2), Character(tower.sub.units, 4),
                     Character(tower.big_units, 4), {}};
  setup.jacobi = jacobi_sum(setup.eta, setup.chi4_sub);
  return setup;
}

LineParams line_params(const gf::Tower& tower, std::uint64_t ell) {
  const std::uint64_t q = tower.q;
  if (ell % (q + 1) == 0) {
    throw Error(ErrorCode::BadEll, "q + 1 = " + std::to_string(q + 1) + " divides ell = " +
                                       std::to_string(ell));
  }
  const auto& f = tower.field();
  LineParams lp;
  lp.ell = ell;
  lp.omega_ell = f.pow(tower.omega(), ell);
  const FieldElement conj = f.pow(lp.omega_ell, q);
  lp.norm_param = f.mul(lp.omega_ell, conj);
  lp.t = f.add(lp.omega_ell, conj);
  const FieldElement quarter = f.inv(f.constant(4));
  lp.discriminant = f.sub(lp.norm_param, f.mul(f.mul(lp.t, lp.t), quarter));
  return lp;
}

FieldElement twisted_u(const gf::Tower& tower, const LineParams& line, const FieldElement& s) {
  const auto& f = tower.field();
  return f.add(f.add(f.one(), f.mul(line.t, s)), f.mul(line.norm_param, f.mul(s, s)));
}

CycZ4 affine_sum_direct(const QuarticSetup& setup, std::uint64_t ell) {
  const auto& tower = *setup.tower;
  const auto& f = tower.field();
  const LineParams lp = line_params(tower, ell);
  CycZ4 sum;
  for (const auto& x : tower.sub.elements) {
    sum += setup.chi4_big(f.add(f.one(), f.mul(lp.omega_ell, x)));
  }
  return sum;
}

CycZ4 affine_sum_closed_form(const QuarticSetup& setup, std::uint64_t ell) {
  const LineParams lp = line_params(*setup.tower, ell);
  return setup.chi4_sub.power(lp.norm_param, 3) * setup.chi4_sub.power(lp.discriminant, 3) *
         setup.jacobi;
}

CycZ4 character_sum_affine(const QuarticSetup& setup, std::uint64_t ell) {
  const CycZ4 direct = affine_sum_direct(setup, ell);
  const CycZ4 closed = affine_sum_closed_form(setup, ell);
  if (direct != closed) {
    throw Error(ErrorCode::IdentityViolation, "affine quartic sum disagrees at ell = " +
                                                  std::to_string(ell));
  }
  return direct;
}

CycZ4 twisted_sum_direct(const QuarticSetup& setup, std::uint64_t ell, const FieldElement& s) {
  const auto& tower = *setup.tower;
  const auto& f = tower.field();
  tower.position_of(s);
  const LineParams lp = line_params(tower, ell);
  CycZ4 sum;
  for (const auto& x : tower.sub.elements) {
    if (x == s) continue;
    sum += setup.chi4_big(f.add(f.one(), f.mul(lp.omega_ell, x))) * setup.eta(f.sub(x, s));
  }
  return sum;
}

CycZ4 twisted_sum_closed_form(const QuarticSetup& setup, std::uint64_t ell,
                              const FieldElement& s) {
  const auto& tower = *setup.tower;
  tower.position_of(s);
  const LineParams lp = line_params(tower, ell);
  const FieldElement u = twisted_u(tower, lp, s);
  return setup.chi4_sub.power(u, 3) * setup.chi4_sub.power(lp.discriminant, 3) * setup.jacobi -
         setup.chi4_sub(lp.norm_param);
}

CycZ4 character_sum_twisted(const QuarticSetup& setup, std::uint64_t ell,
                            const FieldElement& s) {
  const CycZ4 direct = twisted_sum_direct(setup, ell, s);
  const CycZ4 closed = twisted_sum_closed_form(setup, ell, s);
  if (direct != closed) {
    throw Error(ErrorCode::IdentityViolation, "twisted quartic sum disagrees at ell = " +
                                                  std::to_string(ell));
  }
  return direct;
}

}  // namespace confexcess::chars
