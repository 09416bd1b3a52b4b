#pragma once

#include <cstddef>
#include <cstdint>

namespace fgc {

/// Size limits for the exhaustive algorithms.
///
/// Defaults can be overridden process-wide through environment variables:
///   FGC_ELEMENT_CAP     full element enumeration            (200000)
///   FGC_FULL_ENUM_CAP   all-subgroup enumeration, |G| <=     (2000)
///   FGC_ISO_CAP         exact isomorphism test, order <=     (256)
///   FGC_SYLOW_CAP       p-subgroup enumeration, |Syl_p| <=   (256)
///   FGC_ORBIT_KEY_CAP   element-set keys per enumeration     (1000000)
struct Caps {
  std::uint64_t element = 200000;
  std::uint64_t full_enum = 2000;
  std::uint64_t iso = 256;
  std::uint64_t sylow = 256;
  std::uint64_t orbit_keys = 1000000;

  /// Defaults with environment overrides applied.
  static Caps from_env();
};

/// Process-wide caps; initialised from the environment on first use.
const Caps& default_caps();

}  // namespace fgc
