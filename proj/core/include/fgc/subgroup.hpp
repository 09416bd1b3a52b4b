#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fgc/bitset.hpp"
#include "fgc/group.hpp"

namespace fgc {

/// Conjugation-invariant summary of a subgroup: order, multiset of element
/// orders as (order, count) pairs sorted by order, and commutativity.
struct SubgroupFingerprint {
  std::uint64_t order = 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> element_orders;
  bool abelian = true;

  friend bool operator==(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
};

/// A subgroup of an enumerated parent group, stored as its sorted element
/// indices plus a generating set. Equality is element-set equality.
class Subgroup {
 public:
  /// Trusted constructor: `elements` must be a subgroup of `parent` and
  /// `generators` must generate it.
  Subgroup(Group parent, std::vector<Elem> generators, std::vector<Elem> elements);

  /// From an element set known to be closed; picks a small generating set.
  static Subgroup from_elements(Group parent, std::vector<Elem> elements);

  const Group& parent() const noexcept { return parent_; }
  const ElementTable& table() const { return parent_.elements(); }

  std::uint64_t order() const noexcept { return elems_.size(); }
  std::span<const Elem> elements() const noexcept { return elems_; }
  std::span<const Elem> generators() const noexcept { return gens_; }
  const Bitset& members() const noexcept { return bits_; }
  bool contains(Elem e) const noexcept { return bits_.test(e); }

  bool is_trivial() const noexcept { return elems_.size() == 1; }
  bool is_abelian() const;
  bool is_cyclic() const;
  /// The prime p when the order is p^a with a >= 1, otherwise 0.
  std::uint64_t prime_of_order() const;

  SubgroupFingerprint fingerprint() const;

  std::vector<Permutation> generator_perms() const;
  std::vector<Permutation> element_perms() const;
  /// A standalone Group generated by this subgroup's generators.
  Group as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.id() == b.parent_.id() && a.elems_ == b.elems_;
  }

 private:
  Group parent_;
  std::vector<Elem> gens_;
  std::vector<Elem> elems_;
  Bitset bits_;
};

// -- construction -----------------------------------------------------------

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);

/// Smallest subgroup containing the seeds. Throws NotMember for a seed
/// outside G and CapExceeded when G cannot be enumerated.
Subgroup closure(const Group& g, std::span<const Permutation> seeds);
Subgroup closure_of(const Group& g, std::span<const Elem> seeds);
/// <H, extra>.
Subgroup extend(const Subgroup& h, std::span<const Elem> extra);

/// g^-1 H g.
Subgroup conjugate(const Subgroup& h, Elem g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// <A, B>.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// Smallest normal subgroup of the parent containing H.
Subgroup normal_closure(const Subgroup& h);
/// Smallest subgroup of `within` containing H that is normalized by `within`.
Subgroup normal_closure_in(const Subgroup& h, const Subgroup& within);
/// Largest normal subgroup of the parent contained in U (the core of U).
Subgroup normal_core(const Subgroup& u);

// -- analysis ---------------------------------------------------------------

/// C_G(H) inside the parent. Throws CapExceeded via the element table.
Subgroup centralizer(const Subgroup& h);
/// N_G(H) inside the parent.
Subgroup normalizer(const Subgroup& h);
/// C_K(H), N_K(H) restricted to a subgroup K.
Subgroup centralizer_in(const Subgroup& h, const Subgroup& k);
Subgroup normalizer_in(const Subgroup& h, const Subgroup& k);

/// True iff g^-1 H g = H for every generator g of the parent.
bool is_normal(const Subgroup& h);
/// True iff H is normalized by every generator of K.
bool is_normal_in(const Subgroup& h, const Subgroup& k);

/// Overloads taking the ambient group explicitly; H must live in G.
Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& h);

std::uint64_t element_order(const Group& g, const Permutation& p);

}  // namespace fgc
