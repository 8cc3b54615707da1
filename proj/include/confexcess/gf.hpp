#pragma once

// Finite fields F_{p^d} as polynomial residues over F_p, and the tower
// F_p ⊂ F_q ⊂ F_{q^2} used by the construction. F_q is never a separate
// field object: it is the fixed subfield of x -> x^q inside F_{q^2}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace confexcess::gf {

inline constexpr std::size_t kMaxDegree = 16;
inline constexpr std::uint64_t kDefaultMaxSubfieldOrder = std::uint64_t{1} << 16;

/// Coefficients c_0 .. c_{d-1} of a residue modulo the field modulus; slots
/// at and above the degree are always zero.
struct FieldElement {
  std::array<std::uint64_t, kMaxDegree> coeffs{};

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct FieldSpec {
  std::uint64_t p = 0;
  std::size_t degree = 0;
  /// Monic, constant term first, length degree + 1.
  std::vector<std::uint64_t> modulus;
};

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& monic);

/// First monic irreducible of the given degree, scanning the non-leading
/// coefficients as a base-p counter with the constant term varying fastest.
std::vector<std::uint64_t> first_irreducible(std::uint64_t p, std::size_t degree);

class Field {
 public:
  /// Validates primality of p and irreducibility of the modulus, then
  /// locates the primitive element.
  explicit Field(FieldSpec spec);

  static Field with_first_irreducible(std::uint64_t p, std::size_t degree);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t characteristic() const { return spec_.p; }
  std::size_t degree() const { return spec_.degree; }
  std::uint64_t order() const { return order_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const;
  FieldElement constant(std::int64_t c) const;
  /// Element whose base-p digits (c_0 least significant) spell `index`.
  FieldElement from_index(std::uint64_t index) const;
  std::uint64_t index(const FieldElement& x) const;
  bool contains(const FieldElement& x) const;
  bool is_zero(const FieldElement& x) const { return x == FieldElement{}; }

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement scale(const FieldElement& x, std::uint64_t c) const;
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, std::uint64_t e) const;
  /// Signed exponent; negative exponents invert first.
  FieldElement pow_signed(const FieldElement& x, std::int64_t e) const;

  /// Sum of x^{p^i} for i < terms. With terms = d this is the absolute trace.
  FieldElement trace_sum(const FieldElement& x, std::size_t terms) const;

  /// Smallest element (in index order) of multiplicative order p^d - 1.
  const FieldElement& primitive() const { return primitive_; }

 private:
  FieldSpec spec_;
  std::uint64_t order_ = 0;
  FieldElement primitive_{};
};

/// Multiplicative order check against the prime divisors of the group order.
FieldElement find_primitive(const Field& field);

/// A cyclic group of units inside a field: either all of F^* or the units of
/// the fixed subfield of x -> x^{subfield_order}.
class UnitGroup {
 public:
  UnitGroup() = default;
  UnitGroup(std::shared_ptr<const Field> field, FieldElement generator, std::uint64_t order,
            std::uint64_t subfield_order, std::size_t trace_terms);

  static UnitGroup whole(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const FieldElement& generator() const { return generator_; }
  /// Order of the cyclic group (one less than the number of field elements covered).
  std::uint64_t order() const { return order_; }
  /// 0 when the group is all of F^*.
  std::uint64_t subfield_order() const { return subfield_order_; }
  std::size_t trace_terms() const { return trace_terms_; }

  bool contains(const FieldElement& x) const;

  /// i with x in generator^i * (k-th powers), or nullopt for x = 0.
  std::optional<unsigned> residue_class(const FieldElement& x, unsigned k) const;

  /// Absolute trace to F_p of an element of the covered field, as a residue.
  std::uint64_t absolute_trace(const FieldElement& x) const;

  bool same_group(const UnitGroup& other) const;

 private:
  std::shared_ptr<const Field> field_;
  FieldElement generator_{};
  std::uint64_t order_ = 0;
  std::uint64_t subfield_order_ = 0;
  std::size_t trace_terms_ = 0;
  // class_tables_[k] = {generator^{i*order/k} : i < k} for k in {2, 4} dividing order.
  std::array<std::vector<FieldElement>, 5> class_tables_;
};

struct SubfieldView {
  std::uint64_t q = 0;
  UnitGroup units;                     // generator omega^{q+1}
  std::vector<FieldElement> elements;  // all y with y^q = y, in index order
  std::unordered_map<std::uint64_t, std::size_t> position;  // field index -> slot in elements
};

/// F_{q^2} as a degree-2r extension of F_p together with F_q inside it.
struct Tower {
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t q = 0;
  std::shared_ptr<const Field> big;
  UnitGroup big_units;
  SubfieldView sub;

  const Field& field() const { return *big; }
  const FieldElement& omega() const { return big->primitive(); }
  /// Slot of a subfield element in sub.elements; throws WrongField otherwise.
  std::size_t position_of(const FieldElement& y) const;
  std::uint64_t label(std::size_t position) const { return big->index(sub.elements.at(position)); }
};

Tower build_tower(std::uint64_t p, unsigned r,
                  std::uint64_t max_subfield_order = kDefaultMaxSubfieldOrder);

/// x + x^q, the relative trace F_{q^2} -> F_q.
FieldElement trace_down(const Tower& tower, const FieldElement& x);

/// Convenience wrapper over UnitGroup::residue_class.
std::optional<unsigned> power_residue_class(const UnitGroup& group, const FieldElement& x,
                                            unsigned k);

}  // namespace confexcess::gf
