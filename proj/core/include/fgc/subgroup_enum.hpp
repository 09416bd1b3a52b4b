#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fgc/caps.hpp"
#include "fgc/group.hpp"
#include "fgc/subgroup.hpp"

namespace fgc {

/// One conjugacy class of subgroups. The representative is the member with
/// the lexicographically least sorted element list.
struct SubgroupClass {
  Subgroup representative;
  std::uint64_t orbit_size = 1;
  SubgroupFingerprint fingerprint;
};

/// Conjugacy classes of the nontrivial p-subgroups, sorted by order and
/// then by representative. Throws CapExceeded when the Sylow p-subgroup is
/// larger than `caps.sylow` or the orbits exceed `caps.orbit_keys` keys.
std::vector<SubgroupClass> p_subgroup_classes(const Group& g, std::uint64_t p, const Caps& caps = default_caps());

/// Abelian members of p_subgroup_classes for a prime `p`; with no prime,
/// all nontrivial abelian subgroups of every order (needs the full
/// enumeration and its cap).
std::vector<SubgroupClass> abelian_subgroup_classes(const Group& g, std::optional<std::uint64_t> p,
                                                    const Caps& caps = default_caps());

/// Conjugacy classes of nontrivial cyclic subgroups, restricted to p-power
/// orders when `p` is given. Works from element classes, so it is only
/// limited by the element cap and `caps.orbit_keys`.
std::vector<SubgroupClass> cyclic_subgroup_classes(const Group& g, std::optional<std::uint64_t> p,
                                                   const Caps& caps = default_caps());

/// Every subgroup up to conjugacy, trivial and whole group included.
/// Throws CapExceeded above `caps.full_enum`.
std::vector<SubgroupClass> all_subgroup_classes(const Group& g, const Caps& caps = default_caps());

/// Some g with g^-1 H g = K, or nothing when H and K are not conjugate.
std::optional<Elem> are_conjugate(const Group& g, const Subgroup& h, const Subgroup& k);

}  // namespace fgc
