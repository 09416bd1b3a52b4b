#include "fgc/classes.hpp"

#include <functional>
#include <variant>

#include "fgc/error.hpp"
#include "fgc/structure.hpp"
#include "fgc/subgroup_enum.hpp"

namespace fgc {

std::string_view class_name(ClassId c) {
  switch (c) {
    case ClassId::B: return "B";
    case ClassId::H: return "H";
    case ClassId::N: return "N";
    case ClassId::A: return "A";
    case ClassId::C: return "C";
    case ClassId::B_pi: return "B_pi";
    case ClassId::H_pi: return "H_pi";
    case ClassId::N_pi: return "N_pi";
    case ClassId::A_pi: return "A_pi";
    case ClassId::C_pi: return "C_pi";
  }
  return "?";
}

std::optional<ClassId> parse_class_id(std::string_view s) {
  for (ClassId c : kAllClassIds)
    if (class_name(c) == s) return c;
  return std::nullopt;
}

bool is_pi_class(ClassId c) { return static_cast<int>(c) >= static_cast<int>(ClassId::B_pi); }

namespace {
// Position in the chain B < H < N < A < C.
int letter(ClassId c) { return static_cast<int>(c) % 5; }
}  // namespace

std::string_view class_property(ClassId c) {
  static constexpr std::string_view kNames[] = {"any", "supersolvable", "nilpotent", "abelian", "cyclic"};
  return kNames[letter(c)];
}

bool class_contained_in(ClassId sub, ClassId super) {
  if (is_pi_class(sub) && !is_pi_class(super)) return false;
  return letter(sub) <= letter(super);
}

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Member: return "member";
    case VerdictKind::NonMember: return "non-member";
    case VerdictKind::Undecided: return "undecided";
  }
  return "?";
}

namespace {

template <typename T>
using OrError = std::variant<T, std::string>;

// Lazily computed subgroup classes shared between the ten decisions.
class Decider {
 public:
  Decider(const Group& g, const Caps& caps) : g_(g), caps_(caps) {}

  Verdict decide(ClassId c) {
    try {
      if (!g_.enumerable(caps_.element))
        throw CapExceeded("element enumeration of order " + std::to_string(g_.order()) + " exceeds cap " +
                          std::to_string(caps_.element));
      return is_pi_class(c) ? decide_pi(c) : decide_plain(c);
    } catch (const CapExceeded& e) {
      Verdict v;
      v.kind = VerdictKind::Undecided;
      v.note = e.what();
      return v;
    }
  }

 private:
  using Filter = std::function<bool(const SubgroupClass&)>;

  // A witness at any prime settles non-membership even when another
  // prime ran into a cap.
  Verdict decide_pi(ClassId c) {
    std::string capped;
    for (std::uint64_t p : prime_divisors(g_.order())) {
      try {
        const auto& classes = letter(c) == 4 ? cyclic_pi(p) : p_classes(p);
        Filter keep = [](const SubgroupClass&) { return true; };
        if (letter(c) == 3) keep = [](const SubgroupClass& s) { return s.fingerprint.abelian; };
        if (auto w = bucket_witness(c, classes, keep)) return non_member(std::move(*w));
      } catch (const CapExceeded& e) {
        if (capped.empty()) capped = e.what();
      }
    }
    if (!capped.empty()) throw CapExceeded(capped);
    return Verdict{VerdictKind::Member, std::nullopt, {}, false};
  }

  Verdict decide_plain(ClassId c) {
    if (letter(c) == 4) {
      if (auto w = bucket_witness(c, cyclic_all(), [](const SubgroupClass&) { return true; }))
        return non_member(std::move(*w));
      return Verdict{VerdictKind::Member, std::nullopt, {}, false};
    }
    Filter keep;
    switch (letter(c)) {
      case 0: keep = [](const SubgroupClass&) { return true; }; break;
      case 1: keep = [](const SubgroupClass& s) { return is_supersolvable(s.representative); }; break;
      case 2: keep = [](const SubgroupClass& s) { return is_nilpotent(s.representative); }; break;
      default: keep = [](const SubgroupClass& s) { return s.fingerprint.abelian; }; break;
    }
    if (auto w = bucket_witness(c, all_classes(), keep)) return non_member(std::move(*w));
    return Verdict{VerdictKind::Member, std::nullopt, {}, false};
  }

  static Verdict non_member(Witness w) { return Verdict{VerdictKind::NonMember, std::move(w), {}, false}; }

  // The classes arrive sorted by order; the first order holding two
  // classes gives the witness, preferring a pair with distinct
  // fingerprints (non-isomorphic subgroups) when the bucket has one.
  static std::optional<Witness> bucket_witness(ClassId c, const std::vector<SubgroupClass>& classes,
                                               const Filter& keep) {
    std::size_t i = 0;
    while (i < classes.size()) {
      std::size_t j = i;
      std::vector<const SubgroupClass*> bucket;
      while (j < classes.size() && classes[j].representative.order() == classes[i].representative.order()) {
        if (keep(classes[j])) bucket.push_back(&classes[j]);
        ++j;
      }
      if (bucket.size() >= 2) {
        const SubgroupClass* second = bucket[1];
        for (std::size_t k = 1; k < bucket.size(); ++k)
          if (!(bucket[k]->fingerprint == bucket[0]->fingerprint)) {
            second = bucket[k];
            break;
          }
        return Witness{c, bucket[0]->representative.order(), bucket[0]->representative, second->representative};
      }
      i = j;
    }
    return std::nullopt;
  }

  template <typename T, typename F>
  static const T& cached(OrError<T>& slot, bool& ready, F&& compute) {
    if (!ready) {
      try {
        slot = compute();
      } catch (const CapExceeded& e) {
        slot = std::string(e.what());
      }
      ready = true;
    }
    if (auto* err = std::get_if<std::string>(&slot)) throw CapExceeded(*err);
    return std::get<T>(slot);
  }

  struct Slot {
    OrError<std::vector<SubgroupClass>> value;
    bool ready = false;
  };

  const std::vector<SubgroupClass>& p_classes(std::uint64_t p) {
    auto& s = p_[p];
    return cached(s.value, s.ready, [&] { return p_subgroup_classes(g_, p, caps_); });
  }
  const std::vector<SubgroupClass>& cyclic_pi(std::uint64_t p) {
    auto& s = cyc_p_[p];
    return cached(s.value, s.ready, [&] { return cyclic_subgroup_classes(g_, p, caps_); });
  }
  const std::vector<SubgroupClass>& cyclic_all() {
    return cached(cyc_.value, cyc_.ready, [&] { return cyclic_subgroup_classes(g_, std::nullopt, caps_); });
  }
  const std::vector<SubgroupClass>& all_classes() {
    return cached(all_.value, all_.ready, [&] { return all_subgroup_classes(g_, caps_); });
  }

  const Group& g_;
  Caps caps_;
  std::map<std::uint64_t, Slot> p_, cyc_p_;
  Slot cyc_, all_;
};

}  // namespace

Verdict decide(const Group& g, ClassId c, const Caps& caps) { return Decider(g, caps).decide(c); }

ClassReport hierarchy_report(const Group& g, std::string group_id, bool pi_only, const Caps& caps) {
  ClassReport r;
  r.group_id = std::move(group_id);
  r.order = g.order();
  Decider d(g, caps);
  for (ClassId c : kAllClassIds)
    if (!pi_only || is_pi_class(c)) r.verdicts[c] = d.decide(c);

  for (const auto& [sub, vs] : r.verdicts)
    for (const auto& [super, vp] : r.verdicts)
      if (class_contained_in(sub, super) && vs.kind == VerdictKind::Member && vp.kind == VerdictKind::NonMember)
        throw Error("class hierarchy violated: member of " + std::string(class_name(sub)) + " but not of " +
                    std::string(class_name(super)));
  const auto& b = r.verdicts.at(ClassId::B_pi);
  for (ClassId c : {ClassId::H_pi, ClassId::N_pi}) {
    const auto& v = r.verdicts.at(c);
    if (b.kind != VerdictKind::Undecided && v.kind != VerdictKind::Undecided && b.kind != v.kind)
      throw Error("B_pi and " + std::string(class_name(c)) + " verdicts differ");
  }

  // fill undecided verdicts from containments
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [c, v] : r.verdicts) {
      if (v.kind != VerdictKind::Undecided) continue;
      for (const auto& [o, vo] : r.verdicts) {
        if (vo.kind == VerdictKind::Member && class_contained_in(o, c)) {
          v = Verdict{VerdictKind::Member, std::nullopt, "implied by " + std::string(class_name(o)), true};
        } else if (vo.kind == VerdictKind::NonMember && class_contained_in(c, o)) {
          v = Verdict{VerdictKind::NonMember, vo.witness, "implied by " + std::string(class_name(o)), true};
        } else {
          continue;
        }
        changed = true;
        break;
      }
    }
  }
  return r;
}

bool verify_witness(const Group& g, const Witness& w) {
  const Subgroup& a = w.first;
  const Subgroup& b = w.second;
  if (a.parent().id() != g.id() || b.parent().id() != g.id()) return false;
  if (a.order() != w.order || b.order() != w.order || a.order() == 1) return false;
  if (is_pi_class(w.class_id) && a.prime_of_order() == 0) return false;
  auto has_property = [&](const Subgroup& s) {
    switch (letter(w.class_id)) {
      case 1: return is_supersolvable(s);
      case 2: return is_nilpotent(s);
      case 3: return s.is_abelian();
      case 4: return s.is_cyclic();
      default: return true;
    }
  };
  if (!has_property(a) || !has_property(b)) return false;
  const auto& t = g.elements();
  for (Elem x = 0; x < t.size(); ++x) {
    bool all_in = true;
    for (Elem e : a.generators())
      if (!b.contains(t.conj(e, x))) {
        all_in = false;
        break;
      }
    if (all_in) return false;
  }
  return true;
}

}  // namespace fgc
