#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "permlab/int128.hpp"

namespace permlab {

/// Multiplicative and additive structure of F_q, q = p^degree <= 2^20.
/// Elements are encoded as integers in [0, q): base-p digit j is the
/// coefficient of x^j in the polynomial representative.
class FieldView {
 public:
  std::uint64_t p() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  std::uint64_t q() const { return q_; }
  /// Monic irreducible modulus, coefficients of x^0..x^degree; empty for degree 1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return generator_; }

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  /// Nonzero squares S and nonsquares T, each sorted by encoding.
  const std::vector<std::uint32_t>& squares() const { return squares_; }
  const std::vector<std::uint32_t>& nonsquares() const { return nonsquares_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  bool is_square(std::uint32_t x) const;  // nonzero squares only
  bool is_primitive(std::uint32_t x) const;
  /// Reduces an arbitrary integer into the prime subfield.
  std::uint32_t from_integer(i128 v) const;

 private:
  friend FieldView field_make(std::uint64_t p, std::uint32_t degree);
  // Polynomial product reduced by the modulus, used only while building tables.
  std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const;

  std::uint64_t p_ = 0;
  std::uint32_t degree_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::int64_t> modulus_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> squares_;
  std::vector<std::uint32_t> nonsquares_;
  std::vector<std::uint8_t> class_;  // 0 zero, 1 square, 2 nonsquare
};

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// Builds F_{p^degree} over the lexicographically smallest monic irreducible
/// polynomial, with exp/log tables over the smallest primitive element.
FieldView field_make(std::uint64_t p, std::uint32_t degree);

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over F_p (comparing coefficients from x^(degree-1) down to x^0).
std::vector<std::int64_t> smallest_irreducible(std::uint64_t p, std::uint32_t degree);

enum class GroupKind { Integers, IntegerVectors, CyclicProduct, PrimeField, PrimePowerField };

struct GroupElement {
  std::vector<i128> coords;

  GroupElement() = default;
  explicit GroupElement(std::vector<i128> c) : coords(std::move(c)) {}
  static GroupElement scalar(i128 v) { return GroupElement({v}); }

  bool operator==(const GroupElement&) const = default;
  std::strong_ordering operator<=>(const GroupElement& other) const;
};

std::string to_string(const GroupElement& x);

/// The ambient structure elements live in.
class GroupSpec {
 public:
  static GroupSpec integers();
  static GroupSpec integer_vectors(std::uint32_t rank);
  static GroupSpec cyclic_product(std::vector<std::int64_t> moduli);
  static GroupSpec prime_field(std::int64_t p);
  static GroupSpec prime_power_field(std::int64_t p, std::uint32_t degree);

  GroupKind kind() const { return kind_; }
  std::uint32_t rank() const { return rank_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t characteristic() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  /// Field tables; present for PrimePowerField and for PrimeField.
  const FieldView* field() const { return field_.get(); }

  /// Number of coordinates per element.
  std::uint32_t width() const;
  bool is_ordered() const;
  bool is_finite() const;
  bool has_multiplication() const;
  /// |G| for finite groups; throws DomainError otherwise.
  std::uint64_t order() const;
  std::string describe() const;

  bool operator==(const GroupSpec& other) const;

 private:
  GroupKind kind_ = GroupKind::Integers;
  std::uint32_t rank_ = 1;
  std::vector<std::int64_t> moduli_;
  std::int64_t p_ = 0;
  std::uint32_t degree_ = 1;
  std::shared_ptr<const FieldView> field_;
};

/// Throws UsageError if x is not a valid, reduced element of spec.
void validate_element(const GroupSpec& spec, const GroupElement& x);

GroupElement group_add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement group_neg(const GroupSpec& spec, const GroupElement& x);
GroupElement group_sub(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement group_scale(const GroupSpec& spec, const GroupElement& x, i128 factor);
/// Ring product; DomainError for groups without multiplication.
GroupElement group_mul(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
/// Total order compatible with addition; DomainError on finite groups.
std::strong_ordering group_cmp(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
/// |x| under the group order (x or -x, whichever is >= 0).
GroupElement group_abs(const GroupSpec& spec, const GroupElement& x);
GroupElement group_zero(const GroupSpec& spec);

/// Integer view of an element: the value itself for Integers, the
/// mixed-radix index for finite groups. DomainError for IntegerVectors.
i128 encode_element(const GroupSpec& spec, const GroupElement& x);
GroupElement decode_element(const GroupSpec& spec, i128 code);

/// Every element of a finite group in increasing encoding order.
std::vector<GroupElement> all_elements(const GroupSpec& spec);

/// Invariant factors d_1 | d_2 | ... | d_r of the group Z/m_1 + ... + Z/m_k.
std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& moduli);

/// Whether the Sylow 2-subgroup of a CyclicProduct group is cyclic.
bool sylow2_cyclic(const GroupSpec& spec);

}  // namespace permlab
