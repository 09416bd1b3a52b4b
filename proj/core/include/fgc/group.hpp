#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fgc/caps.hpp"
#include "fgc/permutation.hpp"

namespace fgc {

/// Index of an element in a group's enumeration. Index 0 is the identity;
/// indices follow the lexicographic order of the image tables, so they do
/// not depend on the generating set.
using Elem = std::uint32_t;

/// Full enumeration of a group with O(base length) multiplication.
///
/// Products are resolved by looking up the images of the base points,
/// which determine an element uniquely. Small groups additionally keep a
/// Cayley table.
class ElementTable {
 public:
  ElementTable(std::size_t degree, std::vector<Point> base, std::vector<std::vector<Point>> perms);

  std::size_t size() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  static constexpr Elem identity() noexcept { return 0; }

  std::span<const Point> images(Elem e) const noexcept {
    return {flat_.data() + static_cast<std::size_t>(e) * degree_, degree_};
  }
  Permutation perm(Elem e) const;

  std::optional<Elem> find(const Permutation& p) const;
  /// Throws NotMember when p is not in the group.
  Elem index_of(const Permutation& p) const;

  Elem mul(Elem a, Elem b) const noexcept {
    if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * n_ + b];
    return mul_slow(a, b);
  }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  std::uint32_t order(Elem a) const noexcept { return ord_[a]; }
  Elem pow(Elem a, long long e) const noexcept;
  /// g^-1 h g.
  Elem conj(Elem h, Elem g) const noexcept { return mul(mul(inv_[g], h), g); }
  /// a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }

 private:
  Elem mul_slow(Elem a, Elem b) const noexcept;
  std::uint64_t key_hash(const Point* base_images) const noexcept;
  std::optional<Elem> lookup(const Point* base_images) const noexcept;

  std::size_t degree_;
  std::size_t n_;
  std::vector<Point> base_;
  std::vector<Point> flat_;
  std::vector<Elem> slots_;
  std::uint64_t mask_ = 0;
  std::vector<Elem> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<Elem> cayley_;
};

namespace detail {
struct GroupData;
}

/// A permutation group given by generators, with a base and strong
/// generating set computed on construction and a lazily built element
/// table. Copies share state; the object is immutable after construction
/// and safe for concurrent readers.
class Group {
 public:
  /// Throws InvalidArgument on an empty list and DegreeMismatch when the
  /// generators have different degrees.
  explicit Group(std::vector<Permutation> generators);

  static Group trivial(std::size_t degree = 1);

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t order() const noexcept;
  bool contains(const Permutation& p) const;

  /// Base points (0-based) and basic orbit lengths of the stabilizer chain.
  const std::vector<std::size_t>& base() const noexcept;
  const std::vector<std::size_t>& basic_orbit_lengths() const noexcept;
  std::vector<Permutation> strong_generators() const;

  /// Throws NotMember.
  std::uint64_t element_order(const Permutation& p) const;

  bool enumerable(std::uint64_t cap = default_caps().element) const noexcept { return order() <= cap; }
  /// Builds (once) and returns the element table. Throws CapExceeded.
  const ElementTable& elements(std::uint64_t cap = default_caps().element) const;

  /// Identity of the shared state; equal for copies of one Group.
  const void* id() const noexcept { return d_.get(); }

 private:
  std::shared_ptr<detail::GroupData> d_;
};

/// Alias used by the construction API.
inline Group build_group(std::vector<Permutation> generators) { return Group(std::move(generators)); }

}  // namespace fgc
