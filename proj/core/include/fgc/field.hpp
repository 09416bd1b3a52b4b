#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fgc {

/// GF(p^k) with a fixed irreducible modulus.
///
/// Elements are encoded as integers v = c0 + c1 p + ... + c_{k-1} p^{k-1}
/// where c_i is the coefficient of x^i. Fixed moduli: GF(4) x^2+x+1,
/// GF(8) x^3+x+1, GF(9) x^2+1, GF(32) x^5+x^2+1; other fields with k <= 3
/// use the smallest monic irreducible in that encoding.
class Field {
 public:
  /// Shared instance for GF(p^k). Throws InvalidArgument for a non-prime p
  /// or an unsupported degree.
  static std::shared_ptr<const Field> get(std::uint32_t p, std::uint32_t k = 1);
  /// Shared instance for a prime power q.
  static std::shared_ptr<const Field> of_order(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Modulus coefficients c0..ck (monic, ck = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Throws InvalidArgument on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t mult_order(std::uint32_t a) const;
  /// Smallest-encoded generator of the multiplicative group.
  std::uint32_t primitive() const noexcept { return primitive_; }
  /// x -> x^p.
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

  std::string name() const;

  /// True iff the monic polynomial c0..ck is irreducible over GF(p).
  static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t primitive_ = 1;
};

class FieldElement {
 public:
  FieldElement(std::shared_ptr<const Field> field, std::uint32_t value);

  static FieldElement zero(std::shared_ptr<const Field> f) { return {std::move(f), 0}; }
  static FieldElement one(std::shared_ptr<const Field> f) { return {std::move(f), 1}; }
  /// Integer n reduced into the prime subfield.
  static FieldElement from_int(std::shared_ptr<const Field> f, long long n);

  const std::shared_ptr<const Field>& field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return v_; }
  std::vector<std::uint32_t> coefficients() const;
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

  std::string to_string() const;

 private:
  void same_field(const FieldElement& o) const;
  std::shared_ptr<const Field> field_;
  std::uint32_t v_;
};

enum class FieldOp { add, mul, inv };

/// Dispatches one field operation; `b` is ignored for inv.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

/// 2x2 matrix [[a, b], [c, d]] over one field, acting on row vectors.
struct Mat2 {
  FieldElement a, b, c, d;

  static Mat2 identity(const std::shared_ptr<const Field>& f);
  static Mat2 of(const std::shared_ptr<const Field>& f, long long a, long long b, long long c, long long d);

  FieldElement det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const;
  /// Throws InvalidArgument when singular.
  Mat2 inverse() const;
  /// Entrywise Frobenius x -> x^p.
  Mat2 frobenius() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat2_mul(const Mat2& m, const Mat2& n);
Mat2 mat2_inv(const Mat2& m);

}  // namespace fgc
