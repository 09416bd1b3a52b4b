#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgc/group.hpp"
#include "fgc/subgroup.hpp"

namespace fgc {

// -- arithmetic helpers -------------------------------------------------------

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// -- elements -----------------------------------------------------------------

/// Conjugacy classes of elements, each sorted, ordered by least element
/// (so the identity class comes first).
std::vector<std::vector<Elem>> conjugacy_classes(const Group& g);

// -- series and predicates ----------------------------------------------------

/// [K, K].
Subgroup derived_subgroup(const Subgroup& k);
/// G, G', G'', ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const Group& g);
/// G = g_1 >= [g_1, G] >= ... ending at the first repeated term.
std::vector<Subgroup> lower_central_series(const Group& g);

bool is_solvable(const Group& g);
bool is_solvable(const Subgroup& k);
bool is_nilpotent(const Group& g);
/// A group is nilpotent iff each Sylow subgroup is normal, i.e. iff for each
/// prime p it has exactly |K|_p elements of p-power order.
bool is_nilpotent(const Subgroup& k);
/// True iff K has a normal series with all factors of prime order.
bool is_supersolvable(const Subgroup& k);
bool is_supersolvable(const Group& g);

Subgroup center(const Group& g);

// -- Sylow theory and characteristic subgroups --------------------------------

/// A Sylow p-subgroup, grown one factor p at a time inside normalizers.
/// With a seed the candidate order is shuffled, giving a (generally)
/// different but conjugate Sylow subgroup. Throws InvalidArgument when p
/// does not divide |G|.
Subgroup sylow_subgroup(const Group& g, std::uint64_t p, std::optional<std::uint64_t> seed = std::nullopt);

/// O_p(G): the largest normal p-subgroup. Trivial when p does not divide |G|.
Subgroup core_p(const Group& g, std::uint64_t p);
/// F(G) as the product of the O_p(G).
Subgroup fitting_subgroup(const Group& g);
/// O_{p'}(G): the largest normal subgroup of order prime to p.
Subgroup o_pprime(const Group& g, std::uint64_t p);

/// All normal subgroups, sorted by (order, element set).
std::vector<Subgroup> normal_subgroups(const Group& g);
/// Minimal normal subgroups, sorted by (order, element set).
std::vector<Subgroup> minimal_normal_subgroups(const Group& g);

// -- Sylow shapes ---------------------------------------------------------------

struct SylowShape {
  enum class Tag { Cyclic, ElementaryAbelian, QuaternionQ8, GeneralizedQuaternion, Dihedral, Other };

  Tag tag = Tag::Cyclic;
  std::uint64_t p = 0;
  std::uint64_t order = 1;
  /// Rank for ElementaryAbelian, otherwise 0.
  std::uint32_t rank = 0;

  /// "Cyclic", "ElementaryAbelian", "QuaternionQ8", ...
  std::string tag_name() const;
  /// Compact group name: C8, E27, Q8, Q16, D8, Other(16).
  std::string label() const;

  friend bool operator==(const SylowShape&, const SylowShape&) = default;
};

/// Classifies a p-group. Throws InvalidArgument when |P| is not a prime
/// power; the trivial group is Cyclic of order 1.
SylowShape sylow_shape(const Subgroup& p);

// -- isomorphism ----------------------------------------------------------------

struct StructuralFingerprint {
  std::uint64_t order = 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> element_orders;
  std::vector<SylowShape> sylow_shapes;
  bool solvable = true;
  bool nilpotent = true;
  std::uint64_t center_order = 1;
  std::uint64_t derived_order = 1;

  friend bool operator==(const StructuralFingerprint&, const StructuralFingerprint&) = default;
};

StructuralFingerprint structural_fingerprint(const Group& g);

/// Exact isomorphism test by backtracking over images of a small
/// generating set. Throws CapExceeded when the common order exceeds `cap`;
/// groups of different order are never isomorphic.
bool is_isomorphic_small(const Group& a, const Group& b, std::uint64_t cap = default_caps().iso);

}  // namespace fgc
