#include "fgc/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "fgc/error.hpp"

namespace fgc {

// ---------------------------------------------------------------------------
// Stabilizer chain (Knuth's variant of Sims' algorithm on the fixed base
// order 0, 1, ..., n-1). Level k holds the group fixing points 0..k-1;
// trans[k][j] maps k to j.

namespace {

class StabChain {
 public:
  explicit StabChain(std::size_t n) : n_(n), levels_(n) {
    for (std::size_t k = 0; k < n; ++k) {
      auto& lv = levels_[k];
      lv.slot.assign(n, -1);
      lv.slot[k] = 0;
      lv.reps.push_back(Permutation::identity(n));
      lv.reps_inv.push_back(Permutation::identity(n));
      lv.orbit.push_back(k);
    }
  }

  void add(const Permutation& g) { add_at(0, g); }

  bool member(Permutation g) const {
    for (std::size_t k = 0; k < n_; ++k) {
      const auto& lv = levels_[k];
      int s = lv.slot[g[k]];
      if (s < 0) return false;
      if (s > 0) g = g * lv.reps_inv[static_cast<std::size_t>(s)];
    }
    return g.is_identity();
  }

  struct Level {
    std::vector<Permutation> gens;
    std::vector<int> slot;  // point -> index into reps, -1 if outside the orbit
    std::vector<Permutation> reps;
    std::vector<Permutation> reps_inv;
    std::vector<std::size_t> orbit;
  };

  const std::vector<Level>& levels() const { return levels_; }

 private:
  bool member_from(std::size_t k, Permutation g) const {
    for (; k < n_; ++k) {
      const auto& lv = levels_[k];
      int s = lv.slot[g[k]];
      if (s < 0) return false;
      if (s > 0) g = g * lv.reps_inv[static_cast<std::size_t>(s)];
    }
    return g.is_identity();
  }

  void add_at(std::size_t k, const Permutation& pi) {
    if (k >= n_ || member_from(k, pi)) return;
    levels_[k].gens.push_back(pi);
    // every coset rep known now times the new generator
    std::size_t reps_now = levels_[k].reps.size();
    for (std::size_t r = 0; r < reps_now; ++r) {
      Permutation sigma = levels_[k].reps[r];
      extend(k, sigma * pi);
    }
  }

  void extend(std::size_t k, const Permutation& pi) {
    std::size_t j = pi[k];
    int s = levels_[k].slot[j];
    if (s >= 0) {
      add_at(k + 1, pi * levels_[k].reps_inv[static_cast<std::size_t>(s)]);
      return;
    }
    auto& lv = levels_[k];
    lv.slot[j] = static_cast<int>(lv.reps.size());
    lv.reps.push_back(pi);
    lv.reps_inv.push_back(pi.inverse());
    lv.orbit.push_back(j);
    std::size_t gens_now = levels_[k].gens.size();
    for (std::size_t t = 0; t < gens_now; ++t) {
      Permutation tau = levels_[k].gens[t];
      extend(k, pi * tau);
    }
  }

  std::size_t n_;
  std::vector<Level> levels_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b && a > UINT64_MAX / b) throw InvalidArgument("group order exceeds 64 bits");
  return a * b;
}

}  // namespace

namespace detail {

struct GroupData {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
  std::unique_ptr<StabChain> chain;
  std::vector<std::size_t> base;
  std::vector<std::size_t> orbit_lengths;
  std::uint64_t order = 1;
  mutable std::once_flag table_once;
  mutable std::unique_ptr<ElementTable> table;
};

}  // namespace detail

// ---------------------------------------------------------------------------

Group::Group(std::vector<Permutation> generators) : d_(std::make_shared<detail::GroupData>()) {
  if (generators.empty()) throw InvalidArgument("a group needs at least one generator");
  const std::size_t n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n)
      throw DegreeMismatch("generators have degrees " + std::to_string(n) + " and " + std::to_string(g.degree()));
  d_->degree = n;
  d_->gens = std::move(generators);
  d_->chain = std::make_unique<StabChain>(n);
  for (const auto& g : d_->gens) d_->chain->add(g);
  const auto& lv = d_->chain->levels();
  for (std::size_t k = 0; k < n; ++k) {
    if (lv[k].orbit.size() > 1) {
      d_->base.push_back(k);
      d_->orbit_lengths.push_back(lv[k].orbit.size());
      d_->order = checked_mul(d_->order, lv[k].orbit.size());
    }
  }
}

Group Group::trivial(std::size_t degree) { return Group({Permutation::identity(degree)}); }

std::size_t Group::degree() const noexcept { return d_->degree; }
const std::vector<Permutation>& Group::generators() const noexcept { return d_->gens; }
std::uint64_t Group::order() const noexcept { return d_->order; }
const std::vector<std::size_t>& Group::base() const noexcept { return d_->base; }
const std::vector<std::size_t>& Group::basic_orbit_lengths() const noexcept { return d_->orbit_lengths; }

bool Group::contains(const Permutation& p) const {
  if (p.degree() != d_->degree) return false;
  return d_->chain->member(p);
}

std::vector<Permutation> Group::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lv : d_->chain->levels())
    for (const auto& g : lv.gens) out.push_back(g);
  return out;
}

std::uint64_t Group::element_order(const Permutation& p) const {
  if (!contains(p)) throw NotMember("element " + p.to_cycle_string() + " is not in the group");
  return p.order();
}

const ElementTable& Group::elements(std::uint64_t cap) const {
  if (d_->order > cap)
    throw CapExceeded("element enumeration of order " + std::to_string(d_->order) + " exceeds cap " +
                      std::to_string(cap));
  std::call_once(d_->table_once, [this] {
    const std::size_t n = d_->degree;
    const auto& lv = d_->chain->levels();
    // every element is u_last * ... * u_1 * u_0 with u_k a coset rep of level k
    const Permutation id = Permutation::identity(n);
    std::vector<std::vector<Point>> elems{std::vector<Point>(id.images().begin(), id.images().end())};
    for (std::size_t k = n; k-- > 0;) {
      if (lv[k].reps.size() == 1) continue;
      std::vector<std::vector<Point>> next;
      next.reserve(elems.size() * lv[k].reps.size());
      for (const auto& x : elems) {
        for (const auto& t : lv[k].reps) {
          std::vector<Point> y(n);
          for (std::size_t i = 0; i < n; ++i) y[i] = t[x[i]];
          next.push_back(std::move(y));
        }
      }
      elems = std::move(next);
    }
    std::vector<Point> base;
    for (auto b : d_->base) base.push_back(static_cast<Point>(b));
    d_->table = std::make_unique<ElementTable>(n, std::move(base), std::move(elems));
  });
  return *d_->table;
}

// ---------------------------------------------------------------------------

ElementTable::ElementTable(std::size_t degree, std::vector<Point> base, std::vector<std::vector<Point>> perms)
    : degree_(degree), n_(perms.size()), base_(std::move(base)) {
  std::sort(perms.begin(), perms.end());
  flat_.reserve(n_ * degree_);
  for (const auto& p : perms) flat_.insert(flat_.end(), p.begin(), p.end());
  perms.clear();
  perms.shrink_to_fit();

  std::size_t cap = 1;
  while (cap < 2 * n_ + 2) cap <<= 1;
  slots_.assign(cap, UINT32_MAX);
  mask_ = cap - 1;
  std::vector<Point> key(base_.size());
  for (Elem e = 0; e < n_; ++e) {
    auto img = images(e);
    for (std::size_t i = 0; i < base_.size(); ++i) key[i] = img[base_[i]];
    std::uint64_t h = key_hash(key.data()) & mask_;
    while (slots_[h] != UINT32_MAX) h = (h + 1) & mask_;
    slots_[h] = e;
  }

  inv_.resize(n_);
  ord_.resize(n_);
  std::vector<Point> tmp(degree_);
  for (Elem e = 0; e < n_; ++e) {
    auto img = images(e);
    for (std::size_t i = 0; i < degree_; ++i) tmp[img[i]] = static_cast<Point>(i);
    for (std::size_t i = 0; i < base_.size(); ++i) key[i] = tmp[base_[i]];
    inv_[e] = *lookup(key.data());
    ord_[e] = static_cast<std::uint32_t>(perm(e).order());
  }

  constexpr std::size_t kCayleyLimit = 2500;
  if (n_ <= kCayleyLimit) {
    std::vector<Elem> table(n_ * n_);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) table[static_cast<std::size_t>(a) * n_ + b] = mul_slow(a, b);
    cayley_ = std::move(table);
  }
}

std::uint64_t ElementTable::key_hash(const Point* k) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::size_t i = 0; i < base_.size(); ++i) h = (h ^ k[i]) * 0x100000001B3ULL + (h >> 29);
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 27;
  return h;
}

std::optional<Elem> ElementTable::lookup(const Point* k) const noexcept {
  std::uint64_t h = key_hash(k) & mask_;
  for (;;) {
    Elem e = slots_[h];
    if (e == UINT32_MAX) return std::nullopt;
    const Point* img = flat_.data() + static_cast<std::size_t>(e) * degree_;
    bool same = true;
    for (std::size_t i = 0; i < base_.size() && same; ++i) same = img[base_[i]] == k[i];
    if (same) return e;
    h = (h + 1) & mask_;
  }
}

Elem ElementTable::mul_slow(Elem a, Elem b) const noexcept {
  const Point* pa = flat_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* pb = flat_.data() + static_cast<std::size_t>(b) * degree_;
  Point key[kMaxDegree];
  for (std::size_t i = 0; i < base_.size(); ++i) key[i] = pb[pa[base_[i]]];
  return *lookup(key);
}

Elem ElementTable::pow(Elem a, long long e) const noexcept {
  const long long m = ord_[a];
  e %= m;
  if (e < 0) e += m;
  Elem r = identity();
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Permutation ElementTable::perm(Elem e) const {
  auto img = images(e);
  return Permutation::from_images(std::vector<Point>(img.begin(), img.end()));
}

std::optional<Elem> ElementTable::find(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  Point key[kMaxDegree];
  for (std::size_t i = 0; i < base_.size(); ++i) key[i] = p[base_[i]];
  auto e = lookup(key);
  if (!e) return std::nullopt;
  auto img = images(*e);
  if (!std::equal(img.begin(), img.end(), p.images().begin())) return std::nullopt;
  return e;
}

Elem ElementTable::index_of(const Permutation& p) const {
  auto e = find(p);
  if (!e) throw NotMember("element " + p.to_cycle_string() + " is not in the group");
  return *e;
}

}  // namespace fgc
