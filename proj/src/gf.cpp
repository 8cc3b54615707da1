#include "confexcess/gf.hpp"

#include <algorithm>
#include <string>

#include "confexcess/errors.hpp"
#include "confexcess/numtheory.hpp"

namespace confexcess::gf {
namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f over F_p; f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(lead, f[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_mod can use it as a divisor
    const std::uint64_t inv_lead = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = mulmod(c, inv_lead, p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint64_t p, const Poly& monic) {
  Poly f = monic;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // Ben-Or: no factor of degree i <= d/2, i.e. gcd(X^{p^i} - X, f) = 1.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    const Poly g = poly_gcd(diff, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

Poly first_irreducible(std::uint64_t p, std::size_t degree) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  Poly f(degree + 1, 0);
  f[degree] = 1;
  while (true) {
    if (is_irreducible(p, f)) return f;
    std::size_t i = 0;
    while (i < degree && ++f[i] == p) {
      f[i] = 0;
      ++i;
    }
    if (i == degree) {
      throw Error(ErrorCode::SearchExhausted, "no irreducible polynomial of degree " +
                                                  std::to_string(degree));
    }
  }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(spec_.p) + " is not prime");
  }
  if (spec_.degree == 0 || spec_.degree > kMaxDegree) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(spec_.degree) + " outside [1, " +
                    std::to_string(kMaxDegree) + "]");
  }
  if (spec_.modulus.size() != spec_.degree + 1 ||
      std::any_of(spec_.modulus.begin(), spec_.modulus.end(),
                  [&](std::uint64_t c) { return c >= spec_.p; }) ||
      !is_irreducible(spec_.p, spec_.modulus)) {
    throw Error(ErrorCode::BadParameter, "modulus is not a monic irreducible of degree " +
                                             std::to_string(spec_.degree));
  }
  order_ = 1;
  for (std::size_t i = 0; i < spec_.degree; ++i) {
    if (order_ > (std::uint64_t{1} << 62) / spec_.p) {
      throw Error(ErrorCode::DegreeTooLarge, "field order exceeds 2^62");
    }
    order_ *= spec_.p;
  }
  primitive_ = find_primitive(*this);
}

Field Field::with_first_irreducible(std::uint64_t p, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(degree));
  }
  return Field(FieldSpec{p, degree, first_irreducible(p, degree)});
}

FieldElement Field::one() const {
  FieldElement x;
  x.coeffs[0] = 1;
  return x;
}

FieldElement Field::constant(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(spec_.p);
  FieldElement x;
  x.coeffs[0] = static_cast<std::uint64_t>(((c % p) + p) % p);
  return x;
}

FieldElement Field::from_index(std::uint64_t index) const {
  if (index >= order_) {
    throw Error(ErrorCode::IndexOutOfRange, "element index " + std::to_string(index));
  }
  FieldElement x;
  for (std::size_t i = 0; i < spec_.degree; ++i) {
    x.coeffs[i] = index % spec_.p;
    index /= spec_.p;
  }
  return x;
}

std::uint64_t Field::index(const FieldElement& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = spec_.degree; i-- > 0;) idx = idx * spec_.p + x.coeffs[i];
  return idx;
}

bool Field::contains(const FieldElement& x) const {
  for (std::size_t i = 0; i < kMaxDegree; ++i) {
    if (i < spec_.degree ? x.coeffs[i] >= spec_.p : x.coeffs[i] != 0) return false;
  }
  return true;
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  FieldElement z;
  for (std::size_t i = 0; i < spec_.degree; ++i) {
    const std::uint64_t s = x.coeffs[i] + y.coeffs[i];
    z.coeffs[i] = s >= spec_.p ? s - spec_.p : s;
  }
  return z;
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
  FieldElement z;
  for (std::size_t i = 0; i < spec_.degree; ++i) {
    z.coeffs[i] = x.coeffs[i] >= y.coeffs[i] ? x.coeffs[i] - y.coeffs[i]
                                             : x.coeffs[i] + spec_.p - y.coeffs[i];
  }
  return z;
}

FieldElement Field::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement Field::scale(const FieldElement& x, std::uint64_t c) const {
  FieldElement z;
  c %= spec_.p;
  for (std::size_t i = 0; i < spec_.degree; ++i) z.coeffs[i] = mulmod(x.coeffs[i], c, spec_.p);
  return z;
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  const std::size_t d = spec_.degree;
  const std::uint64_t p = spec_.p;
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::size_t i = 0; i < d; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t s = prod[i + j] + mulmod(x.coeffs[i], y.coeffs[j], p);
      prod[i + j] = s >= p ? s - p : s;
    }
  }
  const auto& f = spec_.modulus;
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t t = mulmod(c, f[j], p);
      prod[i - d + j] = prod[i - d + j] >= t ? prod[i - d + j] - t : prod[i - d + j] + p - t;
    }
  }
  FieldElement z;
  std::copy_n(prod.begin(), d, z.coeffs.begin());
  return z;
}

FieldElement Field::pow(const FieldElement& x, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FieldElement Field::inv(const FieldElement& x) const {
  if (is_zero(x)) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  return pow(x, order_ - 2);
}

FieldElement Field::pow_signed(const FieldElement& x, std::int64_t e) const {
  if (e >= 0) return pow(x, static_cast<std::uint64_t>(e));
  return pow(inv(x), static_cast<std::uint64_t>(-(e + 1)) + 1);
}

FieldElement Field::trace_sum(const FieldElement& x, std::size_t terms) const {
  FieldElement acc = zero();
  FieldElement conj = x;
  for (std::size_t i = 0; i < terms; ++i) {
    acc = add(acc, conj);
    conj = pow(conj, spec_.p);
  }
  return acc;
}

FieldElement find_primitive(const Field& field) {
  const std::uint64_t group_order = field.order() - 1;
  const auto divisors = prime_divisors(group_order);
  const FieldElement one = field.one();
  for (std::uint64_t idx = 1; idx < field.order(); ++idx) {
    const FieldElement x = field.from_index(idx);
    const bool primitive = std::all_of(divisors.begin(), divisors.end(), [&](std::uint64_t l) {
      return field.pow(x, group_order / l) != one;
    });
    if (primitive) return x;
  }
  // group_order == 0 only for F_1, which the Field constructor rejects.
  return one;
}

UnitGroup::UnitGroup(std::shared_ptr<const Field> field, FieldElement generator,
                     std::uint64_t order, std::uint64_t subfield_order, std::size_t trace_terms)
    : field_(std::move(field)),
      generator_(generator),
      order_(order),
      subfield_order_(subfield_order),
      trace_terms_(trace_terms) {
  for (unsigned k : {2u, 4u}) {
    if (order_ % k != 0) continue;
    const FieldElement root = field_->pow(generator_, order_ / k);
    FieldElement acc = field_->one();
    for (unsigned i = 0; i < k; ++i) {
      class_tables_[k].push_back(acc);
      acc = field_->mul(acc, root);
    }
  }
}

UnitGroup UnitGroup::whole(std::shared_ptr<const Field> field) {
  const FieldElement g = field->primitive();
  const std::uint64_t order = field->order() - 1;
  const std::size_t terms = field->degree();
  return UnitGroup(std::move(field), g, order, 0, terms);
}

bool UnitGroup::contains(const FieldElement& x) const {
  if (!field_->contains(x)) return false;
  return subfield_order_ == 0 || field_->pow(x, subfield_order_) == x;
}

std::optional<unsigned> UnitGroup::residue_class(const FieldElement& x, unsigned k) const {
  if (k == 0 || order_ % k != 0) {
    throw Error(ErrorCode::KNotDividing,
                std::to_string(k) + " does not divide group order " + std::to_string(order_));
  }
  if (field_->is_zero(x)) return std::nullopt;
  const FieldElement y = field_->pow(x, order_ / k);
  if (k < class_tables_.size() && !class_tables_[k].empty()) {
    const auto& table = class_tables_[k];
    for (unsigned i = 0; i < k; ++i) {
      if (table[i] == y) return i;
    }
  } else {
    const FieldElement root = field_->pow(generator_, order_ / k);
    FieldElement acc = field_->one();
    for (unsigned i = 0; i < k; ++i) {
      if (acc == y) return i;
      acc = field_->mul(acc, root);
    }
  }
  // x^{order/k} is a k-th root of unity exactly when x lies in the group.
  throw Error(ErrorCode::WrongField, "element outside the unit group");
}

std::uint64_t UnitGroup::absolute_trace(const FieldElement& x) const {
  const FieldElement tr = field_->trace_sum(x, trace_terms_);
  for (std::size_t i = 1; i < kMaxDegree; ++i) {
    if (tr.coeffs[i] != 0) throw Error(ErrorCode::WrongField, "trace left the prime field");
  }
  return tr.coeffs[0];
}

bool UnitGroup::same_group(const UnitGroup& other) const {
  return field_ == other.field_ && generator_ == other.generator_ && order_ == other.order_;
}

std::size_t Tower::position_of(const FieldElement& y) const {
  const auto it = sub.position.find(big->index(y));
  if (it == sub.position.end()) throw Error(ErrorCode::WrongField, "element not in F_q");
  return it->second;
}

Tower build_tower(std::uint64_t p, unsigned r, std::uint64_t max_subfield_order) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r == 0 || 2 * static_cast<std::size_t>(r) > kMaxDegree) {
    throw Error(ErrorCode::DegreeTooLarge, "extension degree r = " + std::to_string(r));
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > max_subfield_order / p) {
      throw Error(ErrorCode::DegreeTooLarge,
                  "q exceeds the budget " + std::to_string(max_subfield_order));
    }
    q *= p;
  }

  Tower tower;
  tower.p = p;
  tower.r = r;
  tower.q = q;
  tower.big = std::make_shared<const Field>(Field::with_first_irreducible(p, 2 * r));
  tower.big_units = UnitGroup::whole(tower.big);

  const Field& f = *tower.big;
  const FieldElement g = f.pow(f.primitive(), q + 1);
  tower.sub.q = q;
  tower.sub.units = UnitGroup(tower.big, g, q - 1, q, r);

  auto& elems = tower.sub.elements;
  elems.reserve(q);
  elems.push_back(f.zero());
  FieldElement acc = f.one();
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    elems.push_back(acc);
    acc = f.mul(acc, g);
  }
  std::sort(elems.begin(), elems.end(), [&](const FieldElement& a, const FieldElement& b) {
    return f.index(a) < f.index(b);
  });
  for (std::size_t i = 0; i < elems.size(); ++i) tower.sub.position.emplace(f.index(elems[i]), i);
  return tower;
}

FieldElement trace_down(const Tower& tower, const FieldElement& x) {
  const Field& f = tower.field();
  return f.add(x, f.pow(x, tower.q));
}

std::optional<unsigned> power_residue_class(const UnitGroup& group, const FieldElement& x,
                                            unsigned k) {
  return group.residue_class(x, k);
}

}  // namespace confexcess::gf
