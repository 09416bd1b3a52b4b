#include "fgc/products.hpp"

#include <algorithm>
#include <deque>

#include "fgc/error.hpp"

namespace fgc {

Group direct_product(const Group& a, const Group& b) {
  const std::size_t da = a.degree(), db = b.degree();
  if (da + db > kMaxDegree) throw InvalidArgument("direct product degree exceeds " + std::to_string(kMaxDegree));
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(g.extended(da + db));
  for (const auto& g : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + g[i]);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return Group(std::move(gens));
}

namespace {

// Extends generator images to a map on all of N by walking its Cayley
// graph; every edge is checked, so success means a homomorphism.
std::vector<Elem> automorphism_table(const Group& n, const std::vector<Elem>& gen_elems,
                                     const std::vector<Elem>& gen_images) {
  const auto& t = n.elements();
  constexpr Elem kUnset = UINT32_MAX;
  std::vector<Elem> phi(t.size(), kUnset);
  phi[ElementTable::identity()] = ElementTable::identity();
  std::deque<Elem> queue{ElementTable::identity()};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gen_elems.size(); ++j) {
      Elem y = t.mul(x, gen_elems[j]);
      Elem img = t.mul(phi[x], gen_images[j]);
      if (phi[y] == kUnset) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        throw InvalidArgument("generator images do not define a homomorphism of N");
      }
    }
  }
  std::vector<bool> hit(t.size(), false);
  for (Elem v : phi) {
    if (v == kUnset || hit[v]) throw InvalidArgument("generator images do not define a bijection of N");
    hit[v] = true;
  }
  return phi;
}

}  // namespace

Group semidirect_product(const Group& n, const Group& h, const std::vector<std::vector<Permutation>>& action) {
  if (action.size() != h.generators().size())
    throw InvalidArgument("action must list one automorphism per generator of H");
  const auto& t = n.elements();
  const std::size_t nn = t.size();
  const std::size_t dh = h.degree();
  if (nn + dh > kMaxDegree) throw InvalidArgument("semidirect product degree exceeds " + std::to_string(kMaxDegree));

  std::vector<Elem> gen_elems;
  for (const auto& g : n.generators()) gen_elems.push_back(t.index_of(g));

  std::vector<Permutation> gens;
  for (Elem s : gen_elems) {
    std::vector<Point> img(nn + dh);
    for (Elem x = 0; x < nn; ++x) img[x] = static_cast<Point>(t.mul(x, s));
    for (std::size_t i = 0; i < dh; ++i) img[nn + i] = static_cast<Point>(nn + i);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (std::size_t k = 0; k < action.size(); ++k) {
    if (action[k].size() != gen_elems.size())
      throw InvalidArgument("automorphism " + std::to_string(k) + " must give one image per generator of N");
    std::vector<Elem> images;
    for (const auto& p : action[k]) {
      auto e = t.find(p);
      if (!e) throw InvalidArgument("automorphism image " + p.to_cycle_string() + " is not in N");
      images.push_back(*e);
    }
    auto phi = automorphism_table(n, gen_elems, images);
    const auto& hg = h.generators()[k];
    std::vector<Point> img(nn + dh);
    for (Elem x = 0; x < nn; ++x) img[x] = static_cast<Point>(phi[x]);
    for (std::size_t i = 0; i < dh; ++i) img[nn + i] = static_cast<Point>(nn + hg[i]);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  Group out(std::move(gens));
  if (out.order() != n.order() * h.order())
    throw InvalidArgument("action is inconsistent with the relations of H: order " + std::to_string(out.order()) +
                          " instead of " + std::to_string(n.order() * h.order()));
  return out;
}


Quotient::Quotient(const Group& g, const Subgroup& n) : source_(g), kernel_(n), image_(g) {
  if (n.parent().id() != g.id()) throw InvalidArgument("N does not belong to G");
  if (!is_normal(n)) throw InvalidArgument("N is not normal in G");
  const auto& t = g.elements();
  if (n.is_trivial()) {
    identity_map_ = true;
    return;
  }
  std::vector<Elem> g_gens;
  for (const auto& p : g.generators()) g_gens.push_back(t.index_of(p));

  // grow U from N while the core stays N; rejected elements stay rejected
  Subgroup u = n;
  std::vector<bool> rejected(t.size(), false);
  for (Elem x = 1; x < t.size(); ++x) {
    if (u.contains(x) || rejected[x]) continue;
    Elem ex[] = {x};
    Subgroup bigger = extend(u, ex);
    if (bigger.order() == t.size() || normal_core(bigger).order() != n.order()) {
      rejected[x] = true;
      continue;
    }
    u = std::move(bigger);
  }
  const std::uint64_t index = t.size() / u.order();
  if (index > kMaxDegree)
    throw CapExceeded("no faithful coset action of degree <= " + std::to_string(kMaxDegree) + " for G/N");

  constexpr std::uint32_t kUnset = UINT32_MAX;
  coset_of_.assign(t.size(), kUnset);
  auto add_coset = [&](Elem r) {
    const auto id = static_cast<std::uint32_t>(coset_rep_.size());
    coset_rep_.push_back(r);
    for (Elem x : u.elements()) coset_of_[t.mul(x, r)] = id;
  };
  add_coset(ElementTable::identity());
  for (std::size_t i = 0; i < coset_rep_.size(); ++i)
    for (Elem s : g_gens) {
      Elem y = t.mul(coset_rep_[i], s);
      if (coset_of_[y] == kUnset) add_coset(y);
    }
  std::vector<Permutation> gens;
  for (Elem s : g_gens) gens.push_back(image(s));
  image_ = Group(std::move(gens));
  if (image_.order() * n.order() != g.order()) throw Error("internal: coset action has the wrong order");
}

Permutation Quotient::image(Elem e) const {
  if (identity_map_) return source_.elements().perm(e);
  const auto& t = source_.elements();
  std::vector<Point> img(coset_rep_.size());
  for (std::size_t i = 0; i < coset_rep_.size(); ++i) img[i] = static_cast<Point>(coset_of_[t.mul(coset_rep_[i], e)]);
  return Permutation::from_images(std::move(img));
}

Subgroup Quotient::preimage(const Subgroup& s) const {
  if (s.parent().id() != image_.id()) throw InvalidArgument("subgroup does not belong to the quotient");
  const auto& t = source_.elements();
  const auto& qt = image_.elements();
  std::vector<Elem> out;
  for (Elem e = 0; e < t.size(); ++e)
    if (s.contains(qt.index_of(image(e)))) out.push_back(e);
  return Subgroup::from_elements(source_, std::move(out));
}

Group quotient(const Group& g, const Subgroup& n) { return Quotient(g, n).group(); }

}  // namespace fgc
