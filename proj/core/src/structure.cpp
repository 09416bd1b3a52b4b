#include "fgc/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fgc/error.hpp"

namespace fgc {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

namespace {

std::vector<Elem> generator_elems(const Group& g) {
  const auto& t = g.elements();
  std::vector<Elem> out;
  for (const auto& p : g.generators()) out.push_back(t.index_of(p));
  return out;
}

Subgroup with(const Subgroup& h, Elem x) {
  Elem ex[] = {x};
  return extend(h, ex);
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

}  // namespace

std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  const auto& t = g.elements();
  const auto gens = generator_elems(g);
  std::vector<bool> seen(t.size(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < t.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (Elem s : gens) {
        Elem y = t.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

Subgroup derived_subgroup(const Subgroup& k) {
  const auto& t = k.table();
  std::vector<Elem> comms;
  auto gens = k.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Elem c = t.commutator(gens[i], gens[j]);
      if (c != ElementTable::identity()) comms.push_back(c);
    }
  return normal_closure_in(closure_of(k.parent(), comms), k);
}

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> out{whole_group(g)};
  for (;;) {
    Subgroup d = derived_subgroup(out.back());
    if (d.order() == out.back().order()) break;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Subgroup> lower_central_series(const Group& g) {
  const auto& t = g.elements();
  Subgroup whole = whole_group(g);
  std::vector<Subgroup> out{whole};
  for (;;) {
    std::vector<Elem> comms;
    for (Elem a : out.back().generators())
      for (Elem s : whole.generators()) {
        Elem c = t.commutator(a, s);
        if (c != ElementTable::identity()) comms.push_back(c);
      }
    Subgroup next = normal_closure(closure_of(g, comms));
    if (next.order() == out.back().order()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_solvable(const Subgroup& k) {
  Subgroup cur = k;
  while (!cur.is_trivial()) {
    Subgroup d = derived_subgroup(cur);
    if (d.order() == cur.order()) return false;
    cur = std::move(d);
  }
  return true;
}

bool is_solvable(const Group& g) { return is_solvable(whole_group(g)); }

bool is_nilpotent(const Group& g) { return lower_central_series(g).back().is_trivial(); }

bool is_nilpotent(const Subgroup& k) {
  const auto& t = k.table();
  for (std::uint64_t p : prime_divisors(k.order())) {
    std::uint64_t count = 0;
    for (Elem e : k.elements())
      if (is_p_power(t.order(e), p)) ++count;
    if (count != p_part(k.order(), p)) return false;
  }
  return true;
}

bool is_supersolvable(const Subgroup& k) {
  // A supersolvable group has a normal subgroup of prime order in every
  // quotient, so extending greedily never gets stuck on one.
  const auto& t = k.table();
  const auto primes = prime_divisors(k.order());
  Subgroup n = trivial_subgroup(k.parent());
  while (n.order() < k.order()) {
    bool found = false;
    for (Elem x : k.elements()) {
      if (n.contains(x)) continue;
      bool prime_step = false;
      for (std::uint64_t p : primes)
        if (n.contains(t.pow(x, static_cast<long long>(p)))) prime_step = true;
      if (!prime_step) continue;
      Subgroup m = with(n, x);
      if (is_normal_in(m, k)) {
        n = std::move(m);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_supersolvable(const Group& g) { return is_supersolvable(whole_group(g)); }

Subgroup center(const Group& g) { return centralizer(whole_group(g)); }

Subgroup sylow_subgroup(const Group& g, std::uint64_t p, std::optional<std::uint64_t> seed) {
  if (!is_prime(p) || g.order() % p != 0)
    throw InvalidArgument(std::to_string(p) + " is not a prime divisor of " + std::to_string(g.order()));
  const auto& t = g.elements();
  const std::uint64_t target = p_part(g.order(), p);
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    // p divides |N(S) : S| while S is not Sylow, so an element of order p
    // modulo S exists in the normalizer.
    Subgroup n = normalizer(s);
    std::vector<Elem> cand(n.elements().begin(), n.elements().end());
    if (rng) std::shuffle(cand.begin(), cand.end(), *rng);
    bool grown = false;
    for (Elem y : cand) {
      if (s.contains(y) || !s.contains(t.pow(y, static_cast<long long>(p)))) continue;
      s = with(s, y);
      grown = true;
      break;
    }
    if (!grown) throw Error("internal: Sylow growth stalled");
  }
  return s;
}

Subgroup core_p(const Group& g, std::uint64_t p) {
  if (g.order() % p != 0) return trivial_subgroup(g);
  return normal_core(sylow_subgroup(g, p));
}

Subgroup fitting_subgroup(const Group& g) {
  Subgroup f = trivial_subgroup(g);
  for (std::uint64_t p : prime_divisors(g.order())) f = join(f, core_p(g, p));
  return f;
}

Subgroup o_pprime(const Group& g, std::uint64_t p) {
  // An element outside O_{p'} stays outside, so one pass over the classes
  // suffices: absorb every class whose normal closure together with the
  // current subgroup is still a p'-group.
  const auto& t = g.elements();
  Subgroup n = trivial_subgroup(g);
  for (const auto& cls : conjugacy_classes(g)) {
    Elem x = cls.front();
    if (n.contains(x) || t.order(x) % p == 0) continue;
    Subgroup m = normal_closure(with(n, x));
    if (m.order() % p != 0) n = std::move(m);
  }
  return n;
}

namespace {
bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                      b.elements().end());
}
std::vector<Elem> key_of(const Subgroup& s) { return {s.elements().begin(), s.elements().end()}; }
}  // namespace

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Elem> reps;
  for (const auto& cls : conjugacy_classes(g))
    if (cls.front() != ElementTable::identity()) reps.push_back(cls.front());
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::set<std::vector<Elem>> seen{key_of(out.front())};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem x : reps) {
      if (out[i].contains(x)) continue;
      Subgroup m = normal_closure(with(out[i], x));
      if (seen.insert(key_of(m)).second) out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
  std::vector<Subgroup> cand;
  std::set<std::vector<Elem>> seen;
  for (const auto& cls : conjugacy_classes(g)) {
    if (cls.front() == ElementTable::identity()) continue;
    Subgroup m = normal_closure(closure_of(g, std::span<const Elem>(&cls.front(), 1)));
    if (seen.insert(key_of(m)).second) cand.push_back(std::move(m));
  }
  std::vector<Subgroup> out;
  for (const auto& m : cand) {
    bool minimal = true;
    for (const auto& o : cand)
      if (o.order() < m.order() && o.members().subset_of(m.members())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::string SylowShape::tag_name() const {
  switch (tag) {
    case Tag::Cyclic: return "Cyclic";
    case Tag::ElementaryAbelian: return "ElementaryAbelian";
    case Tag::QuaternionQ8: return "QuaternionQ8";
    case Tag::GeneralizedQuaternion: return "GeneralizedQuaternion";
    case Tag::Dihedral: return "Dihedral";
    case Tag::Other: return "Other";
  }
  return "Other";
}

std::string SylowShape::label() const {
  const std::string n = std::to_string(order);
  switch (tag) {
    case Tag::Cyclic: return "C" + n;
    case Tag::ElementaryAbelian: return "E" + n;
    case Tag::QuaternionQ8:
    case Tag::GeneralizedQuaternion: return "Q" + n;
    case Tag::Dihedral: return "D" + n;
    case Tag::Other: return "Other(" + n + ")";
  }
  return n;
}

SylowShape sylow_shape(const Subgroup& p) {
  using Tag = SylowShape::Tag;
  SylowShape s;
  s.order = p.order();
  if (p.is_trivial()) return s;
  s.p = p.prime_of_order();
  if (s.p == 0) throw InvalidArgument("order " + std::to_string(p.order()) + " is not a prime power");
  const auto& t = p.table();
  if (p.is_cyclic()) return s;
  const bool abelian = p.is_abelian();
  if (abelian) {
    bool exp_p = true;
    for (Elem e : p.elements())
      if (e != ElementTable::identity() && t.order(e) != s.p) exp_p = false;
    if (exp_p) {
      s.tag = Tag::ElementaryAbelian;
      for (std::uint64_t m = s.order; m > 1; m /= s.p) ++s.rank;
      return s;
    }
    s.tag = Tag::Other;
    return s;
  }
  if (s.p == 2) {
    std::vector<Elem> involutions;
    for (Elem e : p.elements())
      if (t.order(e) == 2) involutions.push_back(e);
    if (involutions.size() == 1) {
      s.tag = s.order == 8 ? Tag::QuaternionQ8 : Tag::GeneralizedQuaternion;
      return s;
    }
    for (Elem r : p.elements()) {
      if (t.order(r) != s.order / 2) continue;
      Subgroup cyc = closure_of(p.parent(), std::span<const Elem>(&r, 1));
      for (Elem x : involutions)
        if (!cyc.contains(x) && t.conj(r, x) == t.inv(r)) {
          s.tag = Tag::Dihedral;
          return s;
        }
    }
  }
  s.tag = Tag::Other;
  return s;
}

StructuralFingerprint structural_fingerprint(const Group& g) {
  StructuralFingerprint fp;
  const auto& t = g.elements();
  fp.order = g.order();
  std::map<std::uint32_t, std::uint32_t> counts;
  for (Elem e = 0; e < t.size(); ++e) ++counts[t.order(e)];
  fp.element_orders.assign(counts.begin(), counts.end());
  for (std::uint64_t p : prime_divisors(g.order())) fp.sylow_shapes.push_back(sylow_shape(sylow_subgroup(g, p)));
  fp.solvable = is_solvable(g);
  fp.nilpotent = is_nilpotent(g);
  fp.center_order = center(g).order();
  fp.derived_order = derived_subgroup(whole_group(g)).order();
  return fp;
}

namespace {

std::vector<std::uint32_t> class_sizes(const Group& g) {
  std::vector<std::uint32_t> out(g.elements().size());
  for (const auto& cls : conjugacy_classes(g))
    for (Elem e : cls) out[e] = static_cast<std::uint32_t>(cls.size());
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b)
      : ta_(a.elements()), tb_(b.elements()), csa_(class_sizes(a)), csb_(class_sizes(b)) {
    std::vector<Elem> all(ta_.size());
    std::iota(all.begin(), all.end(), Elem{0});
    const Subgroup whole = Subgroup::from_elements(a, std::move(all));
    auto gens = whole.generators();
    gens_.assign(gens.begin(), gens.end());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::vector<Elem> cand;
      for (Elem y = 0; y < tb_.size(); ++y)
        if (tb_.order(y) == ta_.order(gens_[i]) && csb_[y] == csa_[gens_[i]]) cand.push_back(y);
      if (i == 0) {
        // images of the first generator matter only up to conjugacy in B
        std::vector<Elem> reps;
        for (const auto& cls : conjugacy_classes(b))
          if (std::binary_search(cand.begin(), cand.end(), cls.front())) reps.push_back(cls.front());
        cand = std::move(reps);
      }
      cands_.push_back(std::move(cand));
    }
  }

  bool run() { return search(0); }

 private:
  bool search(std::size_t k) {
    if (k == gens_.size()) return true;
    for (Elem y : cands_[k]) {
      images_.resize(k);
      images_.push_back(y);
      if (consistent() && search(k + 1)) return true;
    }
    images_.resize(k);
    return false;
  }

  // Checks that gens_[0..k) -> images_ extends to an injective homomorphism
  // of the subgroup they generate.
  bool consistent() const {
    constexpr Elem kUnset = UINT32_MAX;
    const std::size_t k = images_.size();
    std::vector<Elem> phi(ta_.size(), kUnset);
    std::vector<bool> used(tb_.size(), false);
    phi[0] = 0;
    used[0] = true;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Elem x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        Elem y = ta_.mul(x, gens_[j]);
        Elem img = tb_.mul(phi[x], images_[j]);
        if (phi[y] == kUnset) {
          if (used[img]) return false;
          used[img] = true;
          phi[y] = img;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  const ElementTable& ta_;
  const ElementTable& tb_;
  std::vector<std::uint32_t> csa_, csb_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> cands_;
  std::vector<Elem> images_;
};

}  // namespace

bool is_isomorphic_small(const Group& a, const Group& b, std::uint64_t cap) {
  if (a.order() != b.order()) return false;
  if (a.order() > cap)
    throw CapExceeded("isomorphism test at order " + std::to_string(a.order()) + " exceeds cap " + std::to_string(cap));
  if (a.order() == 1) return true;
  if (!(structural_fingerprint(a) == structural_fingerprint(b))) return false;
  return IsoSearch(a, b).run();
}

}  // namespace fgc
