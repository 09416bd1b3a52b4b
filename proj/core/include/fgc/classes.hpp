#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fgc/caps.hpp"
#include "fgc/group.hpp"
#include "fgc/subgroup.hpp"

namespace fgc {

/// The ten conjugacy classes of groups. A plain letter quantifies over
/// subgroups of every order, the _pi form over prime-power orders only:
///   B  all subgroups        H  supersolvable      N  nilpotent
///   A  abelian              C  cyclic
/// G is a member when every two subgroups of the quantified kind with the
/// same order are conjugate.
enum class ClassId { B, H, N, A, C, B_pi, H_pi, N_pi, A_pi, C_pi };

inline constexpr std::array<ClassId, 10> kAllClassIds{ClassId::B,    ClassId::H,    ClassId::N,    ClassId::A,
                                                      ClassId::C,    ClassId::B_pi, ClassId::H_pi, ClassId::N_pi,
                                                      ClassId::A_pi, ClassId::C_pi};

std::string_view class_name(ClassId c);
std::optional<ClassId> parse_class_id(std::string_view s);
bool is_pi_class(ClassId c);
/// Name of the subgroup property: "any", "supersolvable", "nilpotent",
/// "abelian" or "cyclic".
std::string_view class_property(ClassId c);
/// True iff `sub` is contained in `super` by definition, e.g. B_pi in A_pi
/// or A in A_pi. Reflexive.
bool class_contained_in(ClassId sub, ClassId super);

/// Two subgroups of equal order with the class's property that are not
/// conjugate.
struct Witness {
  ClassId class_id;
  std::uint64_t order;
  Subgroup first;
  Subgroup second;
};

enum class VerdictKind { Member, NonMember, Undecided };
std::string_view verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::optional<Witness> witness;
  /// Why a verdict is undecided, or which class an inferred verdict came from.
  std::string note;
  bool inferred = false;
};

/// Decides one class by enumerating the relevant subgroup classes. Cap
/// overruns yield Undecided, never an error.
Verdict decide(const Group& g, ClassId c, const Caps& caps = default_caps());

struct ClassReport {
  std::string group_id;
  std::uint64_t order = 1;
  std::map<ClassId, Verdict> verdicts;

  const Verdict& at(ClassId c) const { return verdicts.at(c); }
  bool member(ClassId c) const { return at(c).kind == VerdictKind::Member; }
  bool non_member(ClassId c) const { return at(c).kind == VerdictKind::NonMember; }
  bool decided(ClassId c) const { return at(c).kind != VerdictKind::Undecided; }
};

/// All requested verdicts (all ten by default, or the five prime-power
/// classes). Undecided verdicts are filled in from containments where
/// possible; decided verdicts that contradict a containment, or B_pi, H_pi
/// and N_pi disagreeing, raise Error.
ClassReport hierarchy_report(const Group& g, std::string group_id = {}, bool pi_only = false,
                             const Caps& caps = default_caps());

/// Re-checks a witness: equal orders, both subgroups have the property of
/// the class (prime-power order for _pi classes) and an exhaustive search
/// over all elements finds no conjugator.
bool verify_witness(const Group& g, const Witness& w);

}  // namespace fgc
