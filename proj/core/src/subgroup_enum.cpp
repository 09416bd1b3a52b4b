#include "fgc/subgroup_enum.hpp"

#include <algorithm>
#include <unordered_map>

#include "fgc/error.hpp"
#include "fgc/structure.hpp"

namespace fgc {

namespace {

using Key = std::vector<Elem>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ k.size();
    for (Elem e : k) {
      h ^= e;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

// Conjugacy-class bookkeeping shared by the enumerators: every member of
// every known class is stored by its element set.
class ClassRegistry {
 public:
  ClassRegistry(const Group& g, std::uint64_t key_cap) : g_(g), t_(g.elements()), key_cap_(key_cap) {
    for (const auto& p : g.generators()) gens_.push_back(t_.index_of(p));
  }

  /// Class id of K, registering its whole conjugation orbit when new.
  std::size_t add(const Subgroup& k) { return add_key(Key(k.elements().begin(), k.elements().end())); }

  std::size_t add_key(Key key) {
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const std::size_t id = orbits_.size();
    std::vector<Key> orbit{key};
    insert(key, id);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem s : gens_) {
        Key c;
        c.reserve(orbit[i].size());
        for (Elem e : orbit[i]) c.push_back(t_.conj(e, s));
        std::sort(c.begin(), c.end());
        if (ids_.count(c)) continue;
        insert(c, id);
        orbit.push_back(std::move(c));
      }
    }
    orbits_.push_back(std::move(orbit));
    return id;
  }

  std::size_t size() const noexcept { return orbits_.size(); }
  const std::vector<Key>& orbit(std::size_t id) const { return orbits_[id]; }

  SubgroupClass make_class(std::size_t id) const {
    const auto& orbit = orbits_[id];
    const Key& least = *std::min_element(orbit.begin(), orbit.end());
    Subgroup rep = Subgroup::from_elements(g_, least);
    return SubgroupClass{rep, orbit.size(), rep.fingerprint()};
  }

  std::vector<SubgroupClass> sorted_classes(bool skip_trivial) const {
    std::vector<SubgroupClass> out;
    for (std::size_t id = 0; id < orbits_.size(); ++id) {
      if (skip_trivial && orbits_[id].front().size() == 1) continue;
      out.push_back(make_class(id));
    }
    std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
      auto ea = a.representative.elements(), eb = b.representative.elements();
      if (ea.size() != eb.size()) return ea.size() < eb.size();
      return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    });
    return out;
  }

  const std::vector<Elem>& generator_elems() const noexcept { return gens_; }

 private:
  void insert(const Key& key, std::size_t id) {
    if (ids_.size() >= key_cap_)
      throw CapExceeded("subgroup orbit bookkeeping exceeds " + std::to_string(key_cap_) + " element-set keys");
    ids_.emplace(key, id);
  }

  const Group& g_;
  const ElementTable& t_;
  std::uint64_t key_cap_;
  std::vector<Elem> gens_;
  std::unordered_map<Key, std::size_t, KeyHash> ids_;
  std::vector<std::vector<Key>> orbits_;
};

Subgroup with(const Subgroup& h, Elem x) {
  Elem ex[] = {x};
  return extend(h, ex);
}

}  // namespace

std::vector<SubgroupClass> p_subgroup_classes(const Group& g, std::uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (g.order() % p != 0) return {};
  const std::uint64_t sylow = p_part(g.order(), p);
  if (sylow > caps.sylow)
    throw CapExceeded("Sylow " + std::to_string(p) + "-subgroup of order " + std::to_string(sylow) + " exceeds cap " +
                      std::to_string(caps.sylow));
  const auto& t = g.elements(caps.element);
  ClassRegistry reg(g, caps.orbit_keys);
  const Subgroup triv = trivial_subgroup(g);

  for (Elem x = 1; x < t.size(); ++x)
    if (t.order(x) == p) reg.add(with(triv, x));

  // Classes are created in order of increasing size, so this walks the
  // lattice level by level.
  for (std::size_t id = 0; id < reg.size(); ++id) {
    const Key& key = reg.orbit(id).front();
    if (key.size() == sylow) continue;
    const Subgroup h = Subgroup::from_elements(g, key);
    const Subgroup n = normalizer(h);
    Bitset done(t.size());
    for (Elem y : n.elements()) {
      if (h.contains(y) || done.test(y) || !h.contains(t.pow(y, static_cast<long long>(p)))) continue;
      const Subgroup k = with(h, y);
      // every element of K outside H generates K together with H
      for (Elem z : k.elements()) done.set(z);
      reg.add(k);
    }
  }
  return reg.sorted_classes(true);
}

std::vector<SubgroupClass> abelian_subgroup_classes(const Group& g, std::optional<std::uint64_t> p,
                                                    const Caps& caps) {
  std::vector<SubgroupClass> all = p ? p_subgroup_classes(g, *p, caps) : all_subgroup_classes(g, caps);
  std::vector<SubgroupClass> out;
  for (auto& c : all)
    if (c.fingerprint.abelian && c.representative.order() > 1) out.push_back(std::move(c));
  return out;
}

std::vector<SubgroupClass> cyclic_subgroup_classes(const Group& g, std::optional<std::uint64_t> p,
                                                   const Caps& caps) {
  const auto& t = g.elements(caps.element);
  ClassRegistry reg(g, caps.orbit_keys);
  const Subgroup triv = trivial_subgroup(g);
  Bitset covered(t.size());
  covered.set(ElementTable::identity());
  for (Elem x = 1; x < t.size(); ++x) {
    if (covered.test(x)) continue;
    const std::uint32_t m = t.order(x);
    if (p && p_part(m, *p) != m) continue;
    const std::size_t before = reg.size();
    const std::size_t id = reg.add(with(triv, x));
    if (id < before) continue;
    for (const Key& member : reg.orbit(id))
      for (Elem z : member)
        if (t.order(z) == m) covered.set(z);
  }
  return reg.sorted_classes(true);
}

std::vector<SubgroupClass> all_subgroup_classes(const Group& g, const Caps& caps) {
  if (g.order() > caps.full_enum)
    throw CapExceeded("full subgroup enumeration at order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(caps.full_enum));
  const auto& t = g.elements(caps.element);
  ClassRegistry reg(g, caps.orbit_keys);
  reg.add(trivial_subgroup(g));

  // Every subgroup K is <M, x> for a maximal subgroup M of K and any x in
  // K \ M, so extending each class representative by single elements
  // reaches all classes. Elements are grouped into orbits under
  // x -> h x, x -> x h (h in H) and conjugation by N(H); one element per
  // orbit yields the same subgroup up to conjugacy.
  for (std::size_t id = 0; id < reg.size(); ++id) {
    const Key& key = reg.orbit(id).front();
    if (key.size() == t.size()) continue;
    const Subgroup h = Subgroup::from_elements(g, key);
    const Subgroup n = normalizer(h);
    Bitset seen = h.members();
    std::vector<Elem> stack;
    for (Elem x = 0; x < t.size(); ++x) {
      if (seen.test(x)) continue;
      seen.set(x);
      stack.assign(1, x);
      while (!stack.empty()) {
        Elem y = stack.back();
        stack.pop_back();
        auto visit = [&](Elem z) {
          if (!seen.test(z)) {
            seen.set(z);
            stack.push_back(z);
          }
        };
        for (Elem s : h.generators()) {
          visit(t.mul(s, y));
          visit(t.mul(y, s));
        }
        for (Elem s : n.generators()) visit(t.conj(y, s));
      }
      reg.add(with(h, x));
    }
  }
  return reg.sorted_classes(false);
}

std::optional<Elem> are_conjugate(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (h.parent().id() != g.id() || k.parent().id() != g.id())
    throw InvalidArgument("subgroups must belong to the given group");
  if (h.order() != k.order() || !(h.fingerprint() == k.fingerprint())) return std::nullopt;
  const auto& t = g.elements();
  std::vector<Elem> gens;
  for (const auto& p : g.generators()) gens.push_back(t.index_of(p));

  const Key target(k.elements().begin(), k.elements().end());
  std::unordered_map<Key, Elem, KeyHash> seen;
  std::vector<std::pair<Key, Elem>> queue;
  Key start(h.elements().begin(), h.elements().end());
  seen.emplace(start, ElementTable::identity());
  queue.emplace_back(std::move(start), ElementTable::identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (queue[i].first == target) {
      const Elem c = queue[i].second;
      if (!(conjugate(h, c) == k)) throw Error("internal: conjugator failed verification");
      return c;
    }
    for (Elem s : gens) {
      Key next;
      next.reserve(queue[i].first.size());
      for (Elem e : queue[i].first) next.push_back(t.conj(e, s));
      std::sort(next.begin(), next.end());
      if (seen.count(next)) continue;
      const Elem c = t.mul(queue[i].second, s);
      seen.emplace(next, c);
      queue.emplace_back(std::move(next), c);
    }
  }
  return std::nullopt;
}

}  // namespace fgc
