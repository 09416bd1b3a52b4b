#pragma once

#include <vector>

#include "fgc/group.hpp"
#include "fgc/subgroup.hpp"

namespace fgc {

/// A x B acting on deg(A) + deg(B) points. The generators are A's
/// generators (moved to the first block) followed by B's (second block).
Group direct_product(const Group& a, const Group& b);

/// N x| H for a right action of H on N.
///
/// `action[i]` lists the images of N's generators under the automorphism
/// attached to H's i-th generator h, meaning h^-1 n h = action[i](n). The
/// result acts on |N| + deg(H) points: the first block is N's element set
/// (N acting by right multiplication), the second is H's own points.
/// Generators are N's followed by H's, in input order.
///
/// Throws InvalidArgument when an image list does not define an
/// automorphism, or when the order of the result differs from |N||H|
/// (the supplied automorphisms do not respect H's relations).
Group semidirect_product(const Group& n, const Group& h, const std::vector<std::vector<Permutation>>& action);

/// G/N as the permutation group induced on the right cosets of a subgroup
/// U containing N whose core in G is N. For trivial N the group itself is
/// returned. Throws InvalidArgument when N is not normal, CapExceeded when
/// no suitable U of index <= 256 is found.
class Quotient {
 public:
  Quotient(const Group& g, const Subgroup& n);

  const Group& group() const noexcept { return image_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  /// Image of an element of G.
  Permutation image(Elem e) const;
  /// Full preimage in G of a subgroup of the quotient.
  Subgroup preimage(const Subgroup& s) const;

 private:
  Group source_;
  Subgroup kernel_;
  Group image_;
  bool identity_map_ = false;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Elem> coset_rep_;
};

Group quotient(const Group& g, const Subgroup& n);

}  // namespace fgc
