#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fgc/group.hpp"

namespace fgc {

/// Identifies a constructible group.
///
/// Text names (see parse_group_name):
///   C<n>            cyclic of order n
///   E<q>, E<p>^<k>  elementary abelian of order q = p^k
///   D<n>            dihedral of order n (even, n >= 6)
///   Q<n>            generalized quaternion of order n = 2^k >= 8
///   S<n>, A<n>      symmetric / alternating of degree n <= 8
///   SL(2,q), PSL(2,q), PGammaL(2,32)
///   E25:SL(2,3), E4:C3, E8:C7, E8:(C7:C3), E32:(C31:C5), Q8:C3
///   M11
///   X x Y           direct product (any of the above, left-associative)
struct NamedGroupId {
  enum class Family {
    Cyclic,
    ElementaryAbelian,
    Dihedral,
    GeneralizedQuaternion,
    Symmetric,
    Alternating,
    SL2,
    PSL2,
    PGammaL2,
    SemidirectByData,
    BundledDataset,
    DirectProduct,
  };

  Family family = Family::Cyclic;
  /// n for C/D/Q/S/A and for E (as p^k); q for the matrix groups.
  std::uint64_t n = 1;
  /// Dataset name for SemidirectByData and BundledDataset.
  std::string dataset;
  /// Factors of a DirectProduct.
  std::vector<NamedGroupId> factors;

  /// Canonical text name; parse_group_name(to_string()) round-trips.
  std::string to_string() const;
  /// Closed-form order.
  std::uint64_t expected_order() const;

  friend bool operator==(const NamedGroupId&, const NamedGroupId&) = default;
};

/// Throws ParseError for unrecognised names and InvalidArgument for
/// parameters outside the supported ranges.
NamedGroupId parse_group_name(std::string_view name);

struct ZooOptions {
  /// Allows PGammaL(2,32) (order 163680), which is off by default.
  bool enable_large = false;
};

/// Deterministic construction; the result's order is checked against the
/// closed form.
Group construct(const NamedGroupId& id, const ZooOptions& opts = {});
Group construct(std::string_view name, const ZooOptions& opts = {});

/// Names accepted by build_semidirect_dataset, in registry order.
const std::vector<std::string>& semidirect_dataset_names();
/// Builds a bundled semidirect product from its stored action matrices,
/// verifying the action on the way. Throws InvalidArgument for an unknown
/// name.
Group build_semidirect_dataset(std::string_view name);

/// Bundled permutation datasets (currently "M11").
const std::vector<std::string>& bundled_dataset_names();
Group bundled_dataset(std::string_view name);
/// Raw group-file text of a bundled dataset.
std::string bundled_dataset_text(std::string_view name);

// -- group files ----------------------------------------------------------------
//
// Text format: a "degree N" line, an optional "order M" line, then one
// generator per line in cycle notation. '#' starts a comment; blank lines
// are ignored.

/// Throws ParseError (with line number) for malformed input, a degree over
/// the cap or a point beyond the declared degree, and InvalidArgument when
/// the declared order disagrees with the generators.
Group parse_group_file(std::string_view text);
Group ingest(const std::filesystem::path& path);
/// Serialises generators with "degree" and "order" lines.
std::string emit_group_file(const Group& g, std::string_view comment = {});

}  // namespace fgc
