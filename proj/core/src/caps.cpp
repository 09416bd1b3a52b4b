#include "fgc/caps.hpp"

#include <cstdlib>
#include <string>

namespace fgc {

namespace {

void read_env(const char* name, std::uint64_t& slot) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    slot = std::stoull(v);
  } catch (...) {
    // malformed values leave the default in place
  }
}

}  // namespace

Caps Caps::from_env() {
  Caps c;
  read_env("FGC_ELEMENT_CAP", c.element);
  read_env("FGC_FULL_ENUM_CAP", c.full_enum);
  read_env("FGC_ISO_CAP", c.iso);
  read_env("FGC_SYLOW_CAP", c.sylow);
  read_env("FGC_ORBIT_KEY_CAP", c.orbit_keys);
  return c;
}

const Caps& default_caps() {
  static const Caps caps = Caps::from_env();
  return caps;
}

}  // namespace fgc
