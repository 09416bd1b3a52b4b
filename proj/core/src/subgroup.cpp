#include "fgc/subgroup.hpp"

#include <algorithm>
#include <map>

#include "fgc/error.hpp"

namespace fgc {

namespace {

std::vector<Elem> parent_generator_elems(const Group& g) {
  const auto& t = g.elements();
  std::vector<Elem> out;
  for (const auto& p : g.generators()) {
    Elem e = t.index_of(p);
    if (e != ElementTable::identity()) out.push_back(e);
  }
  return out;
}

Bitset bits_of(std::size_t n, std::span<const Elem> elems) {
  Bitset b(n);
  for (Elem e : elems) b.set(e);
  return b;
}

// Dimino's algorithm: grows the element list coset by coset.
void dimino_add(const ElementTable& t, std::vector<Elem>& elems, Bitset& bits, std::vector<Elem>& gens, Elem x) {
  if (bits.test(x)) return;
  gens.push_back(x);
  const std::vector<Elem> prev = elems;
  std::vector<Elem> reps{ElementTable::identity(), x};
  for (Elem h : prev) {
    Elem e = t.mul(h, x);
    bits.set(e);
    elems.push_back(e);
  }
  for (std::size_t ri = 1; ri < reps.size(); ++ri) {
    for (std::size_t si = 0; si < gens.size(); ++si) {
      Elem e = t.mul(reps[ri], gens[si]);
      if (bits.test(e)) continue;
      reps.push_back(e);
      for (Elem h : prev) {
        Elem f = t.mul(h, e);
        bits.set(f);
        elems.push_back(f);
      }
    }
  }
}

}  // namespace

Subgroup::Subgroup(Group parent, std::vector<Elem> generators, std::vector<Elem> elements)
    : parent_(std::move(parent)), gens_(std::move(generators)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  bits_ = bits_of(parent_.elements().size(), elems_);
}

Subgroup Subgroup::from_elements(Group parent, std::vector<Elem> elements) {
  const auto& t = parent.elements();
  std::sort(elements.begin(), elements.end());
  std::vector<Elem> cand(elements);
  std::stable_sort(cand.begin(), cand.end(), [&](Elem a, Elem b) { return t.order(a) > t.order(b); });
  std::vector<Elem> cur{ElementTable::identity()};
  Bitset bits(t.size());
  bits.set(ElementTable::identity());
  std::vector<Elem> gens;
  for (Elem c : cand) {
    if (cur.size() == elements.size()) break;
    dimino_add(t, cur, bits, gens, c);
  }
  if (cur.size() != elements.size()) throw InvalidArgument("element set is not a subgroup");
  return Subgroup(std::move(parent), std::move(gens), std::move(elements));
}

bool Subgroup::is_abelian() const {
  const auto& t = table();
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (t.mul(gens_[i], gens_[j]) != t.mul(gens_[j], gens_[i])) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  const auto& t = table();
  for (Elem e : elems_)
    if (t.order(e) == elems_.size()) return true;
  return false;
}

std::uint64_t Subgroup::prime_of_order() const {
  std::uint64_t n = elems_.size();
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

SubgroupFingerprint Subgroup::fingerprint() const {
  const auto& t = table();
  std::map<std::uint32_t, std::uint32_t> counts;
  for (Elem e : elems_) ++counts[t.order(e)];
  SubgroupFingerprint fp;
  fp.order = elems_.size();
  fp.element_orders.assign(counts.begin(), counts.end());
  fp.abelian = is_abelian();
  return fp;
}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  for (Elem e : gens_) out.push_back(table().perm(e));
  return out;
}

std::vector<Permutation> Subgroup::element_perms() const {
  std::vector<Permutation> out;
  for (Elem e : elems_) out.push_back(table().perm(e));
  return out;
}

Group Subgroup::as_group() const {
  auto gens = generator_perms();
  if (gens.empty()) return Group::trivial(parent_.degree());
  return Group(std::move(gens));
}

Subgroup whole_group(const Group& g) {
  const auto& t = g.elements();
  std::vector<Elem> all(t.size());
  for (Elem e = 0; e < t.size(); ++e) all[e] = e;
  return Subgroup(g, parent_generator_elems(g), std::move(all));
}

Subgroup trivial_subgroup(const Group& g) {
  g.elements();
  return Subgroup(g, {}, {ElementTable::identity()});
}

Subgroup closure(const Group& g, std::span<const Permutation> seeds) {
  const auto& t = g.elements();
  std::vector<Elem> idx;
  for (const auto& p : seeds) {
    if (p.degree() != g.degree()) throw DegreeMismatch("seed degree differs from the group degree");
    idx.push_back(t.index_of(p));
  }
  return closure_of(g, idx);
}

Subgroup closure_of(const Group& g, std::span<const Elem> seeds) { return extend(trivial_subgroup(g), seeds); }

Subgroup extend(const Subgroup& h, std::span<const Elem> extra) {
  const auto& t = h.table();
  std::vector<Elem> elems(h.elements().begin(), h.elements().end());
  std::vector<Elem> gens(h.generators().begin(), h.generators().end());
  Bitset bits = h.members();
  bool changed = false;
  for (Elem x : extra) {
    if (bits.test(x)) continue;
    dimino_add(t, elems, bits, gens, x);
    changed = true;
  }
  if (!changed) return h;
  return Subgroup(h.parent(), std::move(gens), std::move(elems));
}

Subgroup conjugate(const Subgroup& h, Elem g) {
  const auto& t = h.table();
  std::vector<Elem> elems, gens;
  elems.reserve(h.order());
  for (Elem e : h.elements()) elems.push_back(t.conj(e, g));
  for (Elem e : h.generators()) gens.push_back(t.conj(e, g));
  return Subgroup(h.parent(), std::move(gens), std::move(elems));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem e : a.elements())
    if (b.contains(e)) out.push_back(e);
  return Subgroup::from_elements(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) { return extend(a, b.generators()); }

Subgroup normal_closure_in(const Subgroup& h, const Subgroup& within) {
  const auto& t = h.table();
  Subgroup n = h;
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    for (Elem k : within.generators()) {
      Elem c = t.conj(n.generators()[i], k);
      if (!n.contains(c)) {
        Elem extra[] = {c};
        n = extend(n, extra);
      }
    }
  }
  return n;
}

Subgroup normal_core(const Subgroup& u) {
  // intersect with conjugates under the parent's generators until stable
  const auto& t = u.table();
  const auto g_gens = parent_generator_elems(u.parent());
  std::vector<Elem> cur(u.elements().begin(), u.elements().end());
  Bitset bits = u.members();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem g : g_gens) {
      std::vector<Elem> keep;
      for (Elem x : cur)
        if (bits.test(t.conj(x, g))) keep.push_back(x);
      if (keep.size() == cur.size()) continue;
      changed = true;
      bits = bits_of(t.size(), keep);
      cur = std::move(keep);
    }
  }
  return Subgroup::from_elements(u.parent(), std::move(cur));
}

Subgroup normal_closure(const Subgroup& h) { return normal_closure_in(h, whole_group(h.parent())); }

Subgroup centralizer_in(const Subgroup& h, const Subgroup& k) {
  const auto& t = h.table();
  std::vector<Elem> out;
  for (Elem g : k.elements()) {
    bool ok = true;
    for (Elem s : h.generators())
      if (t.mul(g, s) != t.mul(s, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::from_elements(h.parent(), std::move(out));
}

Subgroup normalizer_in(const Subgroup& h, const Subgroup& k) {
  const auto& t = h.table();
  std::vector<Elem> out;
  for (Elem g : k.elements()) {
    if (h.contains(g)) {
      out.push_back(g);
      continue;
    }
    bool ok = true;
    for (Elem s : h.generators())
      if (!h.contains(t.conj(s, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::from_elements(h.parent(), std::move(out));
}

Subgroup centralizer(const Subgroup& h) { return centralizer_in(h, whole_group(h.parent())); }
Subgroup normalizer(const Subgroup& h) { return normalizer_in(h, whole_group(h.parent())); }

bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  const auto& t = h.table();
  for (Elem g : k.generators())
    for (Elem s : h.generators())
      if (!h.contains(t.conj(s, g))) return false;
  return true;
}

bool is_normal(const Subgroup& h) {
  const auto& t = h.table();
  for (Elem g : parent_generator_elems(h.parent()))
    for (Elem s : h.generators())
      if (!h.contains(t.conj(s, g))) return false;
  return true;
}

namespace {
void require_parent(const Group& g, const Subgroup& h) {
  if (g.id() != h.parent().id()) throw InvalidArgument("subgroup does not belong to this group");
}
}  // namespace

Subgroup centralizer(const Group& g, const Subgroup& h) {
  require_parent(g, h);
  return centralizer(h);
}
Subgroup normalizer(const Group& g, const Subgroup& h) {
  require_parent(g, h);
  return normalizer(h);
}
bool is_normal(const Group& g, const Subgroup& h) {
  require_parent(g, h);
  return is_normal(h);
}

std::uint64_t element_order(const Group& g, const Permutation& p) { return g.element_order(p); }

}  // namespace fgc
