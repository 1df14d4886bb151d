#include "permlab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <map>

#include "permlab/errors.hpp"
#include "permlab/numtheory.hpp"

namespace permlab {

// ---------------------------------------------------------------------------
// Finite fields

namespace {

using Poly = std::vector<std::int64_t>;  // low degree first

std::vector<std::int64_t> digits_of(std::uint64_t code, std::uint64_t p, std::uint32_t k) {
  std::vector<std::int64_t> d(k);
  for (std::uint32_t j = 0; j < k; ++j) {
    d[j] = std::int64_t(code % p);
    code /= p;
  }
  return d;
}

std::uint64_t code_of(const std::vector<std::int64_t>& d, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t j = d.size(); j-- > 0;) code = code * p + std::uint64_t(d[j]);
  return code;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::int64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::int64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::uint32_t k = std::uint32_t(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = digits_of(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, std::int64_t(p)).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::int64_t> smallest_irreducible(std::uint64_t p, std::uint32_t degree) {
  if (!nt::is_prime(p)) throw UsageError("smallest_irreducible: p is not prime");
  if (degree < 1) throw UsageError("smallest_irreducible: degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    count *= p;
    if (count > kMaxFieldSize) throw CapacityError("smallest_irreducible: p^k exceeds 2^20");
  }
  // Base-p counting with digit j = coefficient of x^j enumerates the lower
  // coefficients in lexicographic order read from x^(k-1) down.
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = digits_of(code, p, degree);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

std::uint32_t FieldView::add(std::uint32_t x, std::uint32_t y) const {
  if (degree_ == 1) return std::uint32_t((x + y) % p_);
  std::uint64_t out = 0, scale = 1;
  while (x > 0 || y > 0) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x = std::uint32_t(x / p_);
    y = std::uint32_t(y / p_);
    scale *= p_;
  }
  return std::uint32_t(out);
}

std::uint32_t FieldView::neg(std::uint32_t x) const {
  if (degree_ == 1) return std::uint32_t((p_ - x % p_) % p_);
  std::uint64_t out = 0, scale = 1;
  while (x > 0) {
    out += ((p_ - x % p_) % p_) * scale;
    x = std::uint32_t(x / p_);
    scale *= p_;
  }
  return std::uint32_t(out);
}

std::uint32_t FieldView::sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }

std::uint32_t FieldView::slow_mul(std::uint32_t x, std::uint32_t y) const {
  if (degree_ == 1) return std::uint32_t(std::uint64_t(x) * y % p_);
  const auto a = digits_of(x, p_, degree_);
  const auto b = digits_of(y, p_, degree_);
  Poly prod(2 * degree_, 0);
  const auto p = std::int64_t(p_);
  for (std::uint32_t i = 0; i < degree_; ++i)
    for (std::uint32_t j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  Poly r = poly_mod(prod, modulus_, p);
  r.resize(degree_, 0);
  return std::uint32_t(code_of(r, p_));
}

std::uint32_t FieldView::mul(std::uint32_t x, std::uint32_t y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(std::uint64_t(log_[x]) + log_[y]) % (q_ - 1)];
}

std::uint32_t FieldView::pow(std::uint32_t x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  return exp_[std::uint64_t(log_[x]) * (e % (q_ - 1)) % (q_ - 1)];
}

bool FieldView::is_square(std::uint32_t x) const { return x < q_ && class_[x] == 1; }

bool FieldView::is_primitive(std::uint32_t x) const {
  if (x == 0 || x >= q_) return false;
  return std::gcd(std::uint64_t(log_[x]), q_ - 1) == 1;
}

std::uint32_t FieldView::from_integer(i128 v) const { return std::uint32_t(mod_floor(v, i128(p_))); }

FieldView field_make(std::uint64_t p, std::uint32_t degree) {
  if (!nt::is_prime(p)) throw UsageError("field_make: " + std::to_string(p) + " is not prime");
  if (degree < 1) throw UsageError("field_make: degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw CapacityError("field_make: q = p^k exceeds 2^20");
  }
  FieldView f;
  f.p_ = p;
  f.degree_ = degree;
  f.q_ = q;
  if (degree >= 2) f.modulus_ = smallest_irreducible(p, degree);

  // Smallest primitive element by encoding: order test against each prime
  // divisor of q - 1.
  const auto divisors = q > 2 ? nt::factorize(q - 1) : nt::Factorization{};
  auto slow_pow = [&](std::uint32_t x, std::uint64_t e) {
    std::uint32_t result = 1, base = x;
    while (e > 0) {
      if (e & 1) result = f.slow_mul(result, base);
      base = f.slow_mul(base, base);
      e >>= 1;
    }
    return result;
  };
  f.generator_ = 0;
  for (std::uint32_t g = 1; g < q; ++g) {
    bool primitive = true;
    for (const auto& [r, e] : divisors) {
      if (slow_pow(g, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.generator_ = g;
      break;
    }
  }
  f.exp_.resize(q - 1);
  f.log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    f.exp_[i] = x;
    f.log_[x] = std::uint32_t(i);
    x = f.slow_mul(x, f.generator_);
  }
  f.class_.assign(q, 0);
  for (std::uint32_t y = 1; y < q; ++y) {
    // In characteristic 2 every element is a square.
    const bool square = p == 2 || f.log_[y] % 2 == 0;
    f.class_[y] = square ? 1 : 2;
    (square ? f.squares_ : f.nonsquares_).push_back(y);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Group elements and specs

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
  const std::size_t n = std::min(coords.size(), other.coords.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i] < other.coords[i]) return std::strong_ordering::less;
    if (coords[i] > other.coords[i]) return std::strong_ordering::greater;
  }
  return coords.size() <=> other.coords.size();
}

std::string to_string(const GroupElement& x) {
  if (x.coords.size() == 1) return to_string(x.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(x.coords[i]);
  }
  return out + ")";
}

GroupSpec GroupSpec::integers() { return GroupSpec{}; }

GroupSpec GroupSpec::integer_vectors(std::uint32_t rank) {
  if (rank < 1) throw UsageError("IntegerVectors rank must be at least 1");
  GroupSpec s;
  s.kind_ = GroupKind::IntegerVectors;
  s.rank_ = rank;
  return s;
}

GroupSpec GroupSpec::cyclic_product(std::vector<std::int64_t> moduli) {
  if (moduli.empty()) throw UsageError("CyclicProduct needs at least one modulus");
  u128 order = 1;
  for (auto m : moduli) {
    if (m < 2) throw UsageError("CyclicProduct moduli must be at least 2");
    order *= u128(m);
    if (order > (u128(1) << 62)) throw CapacityError("CyclicProduct order too large");
  }
  GroupSpec s;
  s.kind_ = GroupKind::CyclicProduct;
  s.rank_ = std::uint32_t(moduli.size());
  s.moduli_ = std::move(moduli);
  return s;
}

GroupSpec GroupSpec::prime_field(std::int64_t p) {
  if (p < 2 || !nt::is_prime(std::uint64_t(p))) throw UsageError("PrimeField requires a prime");
  GroupSpec s;
  s.kind_ = GroupKind::PrimeField;
  s.p_ = p;
  if (std::uint64_t(p) <= kMaxFieldSize) s.field_ = std::make_shared<const FieldView>(field_make(std::uint64_t(p), 1));
  return s;
}

GroupSpec GroupSpec::prime_power_field(std::int64_t p, std::uint32_t degree) {
  if (p < 2 || !nt::is_prime(std::uint64_t(p))) throw UsageError("PrimePowerField requires a prime characteristic");
  if (degree < 2) throw UsageError("PrimePowerField requires degree >= 2; use PrimeField");
  GroupSpec s;
  s.kind_ = GroupKind::PrimePowerField;
  s.p_ = p;
  s.degree_ = degree;
  s.rank_ = degree;
  s.field_ = std::make_shared<const FieldView>(field_make(std::uint64_t(p), degree));
  return s;
}

std::uint32_t GroupSpec::width() const {
  switch (kind_) {
    case GroupKind::Integers:
    case GroupKind::PrimeField:
      return 1;
    case GroupKind::IntegerVectors:
    case GroupKind::CyclicProduct:
      return rank_;
    case GroupKind::PrimePowerField:
      return degree_;
  }
  return 1;
}

bool GroupSpec::is_ordered() const { return kind_ == GroupKind::Integers || kind_ == GroupKind::IntegerVectors; }
bool GroupSpec::is_finite() const { return !is_ordered(); }
bool GroupSpec::has_multiplication() const {
  return kind_ == GroupKind::Integers || kind_ == GroupKind::PrimeField || kind_ == GroupKind::PrimePowerField;
}

std::uint64_t GroupSpec::order() const {
  switch (kind_) {
    case GroupKind::CyclicProduct: {
      std::uint64_t n = 1;
      for (auto m : moduli_) n *= std::uint64_t(m);
      return n;
    }
    case GroupKind::PrimeField:
      return std::uint64_t(p_);
    case GroupKind::PrimePowerField:
      return field_->q();
    default:
      throw DomainError("order: group is infinite");
  }
}

std::string GroupSpec::describe() const {
  switch (kind_) {
    case GroupKind::Integers: return "Z";
    case GroupKind::IntegerVectors: return "Z^" + std::to_string(rank_) + " (lex)";
    case GroupKind::CyclicProduct: {
      std::string out;
      for (std::size_t i = 0; i < moduli_.size(); ++i) out += (i ? " + Z/" : "Z/") + std::to_string(moduli_[i]);
      return out;
    }
    case GroupKind::PrimeField: return "F_" + std::to_string(p_);
    case GroupKind::PrimePowerField: return "F_" + std::to_string(p_) + "^" + std::to_string(degree_);
  }
  return "?";
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  return kind_ == other.kind_ && rank_ == other.rank_ && moduli_ == other.moduli_ && p_ == other.p_ &&
         degree_ == other.degree_;
}

void validate_element(const GroupSpec& spec, const GroupElement& x) {
  if (x.coords.size() != spec.width())
    throw UsageError("element " + to_string(x) + " has wrong width for " + spec.describe());
  switch (spec.kind()) {
    case GroupKind::Integers:
    case GroupKind::IntegerVectors:
      for (i128 c : x.coords)
        if (abs128(c) > kElementBound) throw UsageError("element coordinate exceeds 2^40: " + to_string(x));
      break;
    case GroupKind::CyclicProduct:
      for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= spec.moduli()[i])
          throw UsageError("element " + to_string(x) + " not reduced in " + spec.describe());
      break;
    case GroupKind::PrimeField:
    case GroupKind::PrimePowerField:
      for (i128 c : x.coords)
        if (c < 0 || c >= spec.characteristic())
          throw UsageError("element " + to_string(x) + " not reduced in " + spec.describe());
      break;
  }
}

namespace {

// Field elements store coordinates from x^(k-1) down to x^0, so that
// lexicographic coordinate order equals encoding order.
std::uint32_t field_code(const GroupSpec& spec, const GroupElement& x) {
  std::uint64_t code = 0;
  for (i128 c : x.coords) code = code * std::uint64_t(spec.characteristic()) + std::uint64_t(c);
  return std::uint32_t(code);
}

GroupElement field_element(const GroupSpec& spec, std::uint64_t code) {
  std::vector<i128> coords(spec.width());
  const auto p = std::uint64_t(spec.characteristic());
  for (std::size_t i = coords.size(); i-- > 0;) {
    coords[i] = i128(code % p);
    code /= p;
  }
  return GroupElement(std::move(coords));
}

}  // namespace

GroupElement group_add(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  GroupElement out = x;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
  switch (spec.kind()) {
    case GroupKind::CyclicProduct:
      for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = mod_floor(out.coords[i], spec.moduli()[i]);
      break;
    case GroupKind::PrimeField:
    case GroupKind::PrimePowerField:
      for (auto& c : out.coords) c = mod_floor(c, spec.characteristic());
      break;
    default:
      break;
  }
  return out;
}

GroupElement group_neg(const GroupSpec& spec, const GroupElement& x) { return group_scale(spec, x, -1); }

GroupElement group_sub(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  return group_add(spec, x, group_neg(spec, y));
}

GroupElement group_scale(const GroupSpec& spec, const GroupElement& x, i128 factor) {
  GroupElement out = x;
  for (auto& c : out.coords) c *= factor;
  return group_add(spec, out, group_zero(spec));
}

GroupElement group_zero(const GroupSpec& spec) { return GroupElement(std::vector<i128>(spec.width(), 0)); }

GroupElement group_mul(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  switch (spec.kind()) {
    case GroupKind::Integers:
      return GroupElement::scalar(x.coords[0] * y.coords[0]);
    case GroupKind::PrimeField:
      return GroupElement::scalar(mod_floor(x.coords[0] * y.coords[0], spec.characteristic()));
    case GroupKind::PrimePowerField:
      return field_element(spec, spec.field()->mul(field_code(spec, x), field_code(spec, y)));
    default:
      throw DomainError("group_mul: " + spec.describe() + " has no multiplication");
  }
}

std::strong_ordering group_cmp(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  if (!spec.is_ordered()) throw DomainError("group_cmp: " + spec.describe() + " admits no compatible order");
  return x <=> y;
}

GroupElement group_abs(const GroupSpec& spec, const GroupElement& x) {
  const auto zero = group_zero(spec);
  return group_cmp(spec, x, zero) < 0 ? group_neg(spec, x) : x;
}

i128 encode_element(const GroupSpec& spec, const GroupElement& x) {
  switch (spec.kind()) {
    case GroupKind::Integers:
    case GroupKind::PrimeField:
      return x.coords[0];
    case GroupKind::IntegerVectors:
      if (spec.rank() == 1) return x.coords[0];
      throw DomainError("encode_element: integer vectors have no integer encoding");
    case GroupKind::CyclicProduct: {
      i128 code = 0;
      for (std::size_t i = 0; i < x.coords.size(); ++i) code = code * spec.moduli()[i] + x.coords[i];
      return code;
    }
    case GroupKind::PrimePowerField:
      return field_code(spec, x);
  }
  return 0;
}

GroupElement decode_element(const GroupSpec& spec, i128 code) {
  switch (spec.kind()) {
    case GroupKind::Integers:
      return GroupElement::scalar(code);
    case GroupKind::PrimeField:
      return GroupElement::scalar(mod_floor(code, spec.characteristic()));
    case GroupKind::CyclicProduct: {
      code = mod_floor(code, i128(spec.order()));
      std::vector<i128> coords(spec.width());
      for (std::size_t i = coords.size(); i-- > 0;) {
        coords[i] = code % spec.moduli()[i];
        code /= spec.moduli()[i];
      }
      return GroupElement(std::move(coords));
    }
    case GroupKind::PrimePowerField:
      return field_element(spec, std::uint64_t(mod_floor(code, i128(spec.order()))));
    default:
      throw DomainError("decode_element: unsupported group " + spec.describe());
  }
}

std::vector<GroupElement> all_elements(const GroupSpec& spec) {
  const std::uint64_t n = spec.order();
  if (n > kMaxFieldSize) throw CapacityError("all_elements: group too large to list");
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::uint64_t c = 0; c < n; ++c) out.push_back(decode_element(spec, i128(c)));
  return out;
}

std::vector<std::int64_t> invariant_factors(const std::vector<std::int64_t>& moduli) {
  // prime -> exponents of that prime across the factors
  std::map<std::uint64_t, std::vector<std::uint32_t>> parts;
  for (auto m : moduli) {
    if (m < 1) throw UsageError("invariant_factors: moduli must be positive");
    if (m == 1) continue;
    for (const auto& [p, e] : nt::factorize(std::uint64_t(m))) parts[p].push_back(e);
  }
  std::size_t r = 0;
  for (auto& [p, exps] : parts) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    r = std::max(r, exps.size());
  }
  // d_r gets the largest power of each prime, d_{r-1} the next, and so on.
  std::vector<std::int64_t> d(r, 1);
  for (const auto& [p, exps] : parts) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (std::uint32_t e = 0; e < exps[i]; ++e) d[r - 1 - i] *= std::int64_t(p);
    }
  }
  return d;
}

bool sylow2_cyclic(const GroupSpec& spec) {
  if (spec.kind() != GroupKind::CyclicProduct) throw UsageError("sylow2_cyclic: spec must be a CyclicProduct");
  int even = 0;
  for (auto d : invariant_factors(spec.moduli())) even += d % 2 == 0 ? 1 : 0;
  return even <= 1;
}

}  // namespace permlab
