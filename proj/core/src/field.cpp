#include "fgc/field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "fgc/error.hpp"

namespace fgc {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> c(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

// Remainder of a modulo monic m over GF(p); coefficient vectors low-first.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                    std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    std::uint32_t lead = a[i] % p;
    if (!lead) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      std::size_t idx = i - dm + j;
      a[idx] = (a[idx] + (p - lead) * m[j]) % p;
    }
  }
  a.resize(dm);
  return a;
}

std::vector<std::uint32_t> fixed_modulus(std::uint32_t p, std::uint32_t k) {
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 2 && k == 5) return {1, 0, 1, 0, 0, 1};
  if (k == 1) return {0, 1};
  // smallest monic irreducible by encoding of its lower coefficients
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  for (std::uint32_t v = 0; v < q; ++v) {
    auto c = digits(v, p, k);
    c.push_back(1);
    if (Field::is_irreducible(p, c)) return c;
  }
  throw InvalidArgument("no irreducible polynomial found");
}

}  // namespace

bool Field::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::size_t deg = monic.size() - 1;
  if (deg <= 1) return deg == 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t v = 0; v < count; ++v) {
      auto div = digits(v, p, static_cast<std::uint32_t>(d));
      div.push_back(1);
      auto r = poly_mod(monic, div, p);
      bool zero = true;
      for (auto x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  if (k > 1 && !is_irreducible(p, modulus_)) throw InvalidArgument("modulus is reducible");
  for (std::uint32_t a = 1; a < q_; ++a) {
    if (mult_order(a) == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
}

std::shared_ptr<const Field> Field::get(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0 || (k > 3 && !(p == 2 && k == 5)))
    throw InvalidArgument("unsupported extension degree " + std::to_string(k));
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > 65536) throw InvalidArgument("field too large");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) slot = std::make_shared<const Field>(p, k, fixed_modulus(p, k));
  return slot;
}

std::shared_ptr<const Field> Field::of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t k = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return get(p, k);
  }
  throw InvalidArgument(std::to_string(q) + " is not a prime power");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  auto x = digits(a, p_, k_), y = digits(b, p_, k_);
  for (std::uint32_t i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
  return undigits(x, p_);
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  auto x = digits(a, p_, k_);
  for (auto& c : x) c = (p_ - c) % p_;
  return undigits(x, p_);
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  auto x = digits(a, p_, k_), y = digits(b, p_, k_);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  return undigits(poly_mod(std::move(prod), modulus_, p_), p_);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in " + name());
  return pow(a, q_ - 2);
}

std::uint32_t Field::mult_order(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative order");
  std::uint32_t n = 1;
  for (std::uint32_t x = a; x != 1; x = mul(x, a)) ++n;
  return n;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement::FieldElement(std::shared_ptr<const Field> field, std::uint32_t value)
    : field_(std::move(field)), v_(value) {
  if (!field_) throw InvalidArgument("null field");
  if (v_ >= field_->order()) throw InvalidArgument("field element encoding out of range");
}

FieldElement FieldElement::from_int(std::shared_ptr<const Field> f, long long n) {
  long long p = f->characteristic();
  auto v = static_cast<std::uint32_t>(((n % p) + p) % p);
  return {std::move(f), v};
}

std::vector<std::uint32_t> FieldElement::coefficients() const {
  return digits(v_, field_->characteristic(), field_->degree());
}

void FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw InvalidArgument("mixed fields: " + field_->name() + " and " + o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->add(v_, field_->neg(o.v_))};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return {field_, field_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }

std::string FieldElement::to_string() const {
  if (field_->degree() == 1) return std::to_string(v_);
  auto c = coefficients();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    std::string coef = c[i] == 1 && i > 0 ? "" : std::to_string(c[i]);
    if (i == 0) out += coef;
    else out += coef + (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::mul:
      return a * b;
    case FieldOp::inv:
      return a.inverse();
  }
  throw InvalidArgument("unknown field operation");
}

Mat2 Mat2::identity(const std::shared_ptr<const Field>& f) {
  return {FieldElement::one(f), FieldElement::zero(f), FieldElement::zero(f), FieldElement::one(f)};
}

Mat2 Mat2::of(const std::shared_ptr<const Field>& f, long long a, long long b, long long c, long long d) {
  return {FieldElement::from_int(f, a), FieldElement::from_int(f, b), FieldElement::from_int(f, c),
          FieldElement::from_int(f, d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
  FieldElement dt = det();
  if (dt.is_zero()) throw InvalidArgument("singular matrix has no inverse");
  FieldElement s = dt.inverse();
  return {d * s, -b * s, -c * s, a * s};
}

Mat2 Mat2::frobenius() const {
  const auto& f = *a.field();
  auto fr = [&](const FieldElement& x) { return FieldElement(x.field(), f.frobenius(x.value())); };
  return {fr(a), fr(b), fr(c), fr(d)};
}

Mat2 mat2_mul(const Mat2& m, const Mat2& n) { return m * n; }
Mat2 mat2_inv(const Mat2& m) { return m.inverse(); }

}  // namespace fgc
