#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgc {

/// Largest supported permutation degree.
inline constexpr std::size_t kMaxDegree = 256;

using Point = std::uint8_t;

/// A bijection on {1..degree}.
///
/// Points are 1-based in the text form and in `image()`; storage is
/// 0-based. Composition is left-to-right: `f * g` maps i to g(f(i)), so
/// points are acted on from the right.
class Permutation {
 public:
  /// Identity of degree 1.
  Permutation() : img_(1, 0) {}

  static Permutation identity(std::size_t degree);

  /// From 0-based images; validates bijectivity and the degree cap.
  static Permutation from_images(std::vector<Point> images0);

  /// From 1-based images, e.g. {2,3,1} for (1,2,3).
  static Permutation from_images_1based(std::span<const std::size_t> images1);

  /// Parses disjoint-cycle notation "(1,2,3)(4,5)"; "()" is the identity.
  /// Points beyond the largest mentioned one are fixed; `degree` pads the
  /// result (0 = smallest degree that fits).
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return img_.size(); }

  /// Image of a 1-based point.
  std::size_t image(std::size_t point) const;

  /// 0-based image table.
  std::span<const Point> images() const noexcept { return img_; }
  Point operator[](std::size_t i0) const noexcept { return img_[i0]; }

  bool is_identity() const noexcept;

  /// Left-to-right product: (*this * g)(i) = g(this(i)).
  Permutation operator*(const Permutation& g) const;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  /// Least n >= 1 with this^n = identity (lcm of cycle lengths).
  std::uint64_t order() const;

  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  /// Same permutation with fixed points appended up to `degree`.
  Permutation extended(std::size_t degree) const;

  /// Disjoint-cycle form with 1-based points, e.g. "(1,2,3)(4,5)".
  std::string to_cycle_string() const;

  /// Cycle lengths (including fixed points), sorted descending.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  explicit Permutation(std::vector<Point> img) : img_(std::move(img)) {}
  std::vector<Point> img_;
};

/// Function form of `f * g` that throws DegreeMismatch instead of asserting.
Permutation perm_compose(const Permutation& f, const Permutation& g);
Permutation perm_inverse(const Permutation& f);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fgc
