#include "fgc/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fgc/error.hpp"
#include "fgc/field.hpp"
#include "fgc/products.hpp"
#include "fgc/structure.hpp"
#include "fgc_datasets_embedded.hpp"

namespace fgc {

namespace {

using Family = NamedGroupId::Family;

constexpr std::uint64_t kMatrixQs[] = {3, 4, 5, 7, 8, 9, 11, 13};

struct DatasetInfo {
  const char* name;
  std::uint64_t order;
};

constexpr DatasetInfo kSemidirect[] = {
    {"E25:SL(2,3)", 600}, {"E4:C3", 12},         {"E8:C7", 56},
    {"E8:(C7:C3)", 168},  {"E32:(C31:C5)", 4960}, {"Q8:C3", 24},
    {"E9:C8", 72},        {"E27:C26", 702},
};

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// q = p^k with p prime; returns {p, k} or {0, 0}.
std::pair<std::uint64_t, std::uint64_t> prime_power(std::uint64_t q) {
  auto ps = prime_divisors(q);
  if (ps.size() != 1) return {0, 0};
  std::uint64_t k = 0;
  for (std::uint64_t m = q; m > 1; m /= ps[0]) ++k;
  return {ps[0], k};
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

std::uint64_t parse_uint(const std::string& s, std::string_view whole) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw ParseError("unrecognised group name '" + std::string(whole) + "'");
  return std::stoull(s);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

NamedGroupId parse_atom(const std::string& s, std::string_view whole) {
  NamedGroupId id;
  for (const auto& d : kSemidirect)
    if (s == d.name) {
      id.family = Family::SemidirectByData;
      id.dataset = d.name;
      return id;
    }
  if (s == "M11") {
    id.family = Family::BundledDataset;
    id.dataset = "M11";
    return id;
  }
  if (s == "PGammaL(2,32)") {
    id.family = Family::PGammaL2;
    id.n = 32;
    return id;
  }
  for (auto [prefix, fam] : {std::pair{"PSL(2,", Family::PSL2}, std::pair{"SL(2,", Family::SL2}}) {
    const std::string pre = prefix;
    if (s.rfind(pre, 0) == 0 && s.back() == ')') {
      id.family = fam;
      id.n = parse_uint(s.substr(pre.size(), s.size() - pre.size() - 1), whole);
      require(std::find(std::begin(kMatrixQs), std::end(kMatrixQs), id.n) != std::end(kMatrixQs),
              "unsupported field size q = " + std::to_string(id.n) + " (supported: 3,4,5,7,8,9,11,13)");
      return id;
    }
  }
  if (s.size() < 2) throw ParseError("unrecognised group name '" + std::string(whole) + "'");
  const std::string rest = s.substr(1);
  switch (s[0]) {
    case 'C':
      id.family = Family::Cyclic;
      id.n = parse_uint(rest, whole);
      require(id.n >= 1 && id.n <= kMaxDegree, "cyclic order must be in 1.." + std::to_string(kMaxDegree));
      return id;
    case 'E': {
      id.family = Family::ElementaryAbelian;
      if (auto caret = rest.find('^'); caret != std::string::npos) {
        std::uint64_t p = parse_uint(rest.substr(0, caret), whole);
        std::uint64_t k = parse_uint(rest.substr(caret + 1), whole);
        require(is_prime(p) && k >= 1 && k <= 16, "E<p>^<k> needs a prime p and 1 <= k <= 16");
        id.n = 1;
        for (std::uint64_t i = 0; i < k; ++i) id.n *= p;
      } else {
        id.n = parse_uint(rest, whole);
      }
      auto [p, k] = prime_power(id.n);
      require(p != 0, "elementary abelian order must be a prime power");
      require(p * k <= kMaxDegree, "elementary abelian group too large");
      return id;
    }
    case 'D':
      id.family = Family::Dihedral;
      id.n = parse_uint(rest, whole);
      require(id.n >= 6 && id.n % 2 == 0 && id.n / 2 <= kMaxDegree, "dihedral order must be even and >= 6");
      return id;
    case 'Q': {
      id.family = Family::GeneralizedQuaternion;
      id.n = parse_uint(rest, whole);
      auto [p, k] = prime_power(id.n);
      require(p == 2 && k >= 3 && id.n <= kMaxDegree, "quaternion order must be a power of 2 in 8..256");
      return id;
    }
    case 'S':
    case 'A':
      id.family = s[0] == 'S' ? Family::Symmetric : Family::Alternating;
      id.n = parse_uint(rest, whole);
      require(id.n >= 1 && id.n <= 8, "symmetric and alternating degree must be in 1..8");
      return id;
    default: break;
  }
  throw ParseError("unrecognised group name '" + std::string(whole) + "'");
}

// -- constructors -------------------------------------------------------------

Permutation cycle_perm(std::size_t degree, const std::vector<std::size_t>& cycle0) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < cycle0.size(); ++i) img[cycle0[i]] = static_cast<Point>(cycle0[(i + 1) % cycle0.size()]);
  return Permutation::from_images(std::move(img));
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> r;
  for (std::size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

Group cyclic(std::uint64_t n) { return Group({cycle_perm(n, range(0, n))}); }

// The k standard generators e_i of E_{p^k}: disjoint p-cycles on blocks of p points.
std::vector<Permutation> elementary_generators(std::uint64_t p, std::uint64_t k) {
  std::vector<Permutation> gens;
  for (std::uint64_t i = 0; i < k; ++i) gens.push_back(cycle_perm(p * k, range(i * p, (i + 1) * p)));
  return gens;
}

// Element sum_i c_i e_i of E_{p^k} for coefficients c.
Permutation elementary_element(std::uint64_t p, const std::vector<std::uint64_t>& c) {
  const std::size_t k = c.size();
  std::vector<Point> img(p * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint64_t r = 0; r < p; ++r) img[i * p + r] = static_cast<Point>(i * p + (r + c[i]) % p);
  return Permutation::from_images(std::move(img));
}

Group dihedral(std::uint64_t order) {
  const std::size_t m = order / 2;
  std::vector<Point> refl(m);
  for (std::size_t i = 0; i < m; ++i) refl[i] = static_cast<Point>((m - i) % m);
  return Group({cycle_perm(m, range(0, m)), Permutation::from_images(std::move(refl))});
}

// Right regular representation on a^i b^j (i < m, j < 2) with b^2 = a^(m/2)
// and b^-1 a b = a^-1.
Group quaternion(std::uint64_t order) {
  const std::uint64_t m = order / 2;
  auto index = [m](std::uint64_t i, std::uint64_t j) { return static_cast<Point>(i % m + m * j); };
  auto mul = [&](std::uint64_t i1, std::uint64_t j1, std::uint64_t i2, std::uint64_t j2) {
    std::uint64_t i = (j1 ? i1 + m - i2 : i1 + i2) % m;
    std::uint64_t j = j1 + j2;
    if (j == 2) {
      i = (i + m / 2) % m;
      j = 0;
    }
    return index(i, j);
  };
  std::vector<Point> a(order), b(order);
  for (std::uint64_t j = 0; j < 2; ++j)
    for (std::uint64_t i = 0; i < m; ++i) {
      a[index(i, j)] = mul(i, j, 1, 0);
      b[index(i, j)] = mul(i, j, 0, 1);
    }
  return Group({Permutation::from_images(std::move(a)), Permutation::from_images(std::move(b))});
}

Group symmetric(std::uint64_t n) {
  if (n == 1) return Group::trivial(1);
  if (n == 2) return Group({cycle_perm(2, {0, 1})});
  return Group({cycle_perm(n, range(0, n)), cycle_perm(n, {0, 1})});
}

Group alternating(std::uint64_t n) {
  if (n <= 2) return Group::trivial(std::max<std::uint64_t>(n, 1));
  if (n == 3) return Group({cycle_perm(3, {0, 1, 2})});
  auto big = n % 2 ? range(0, n) : range(1, n);
  return Group({cycle_perm(n, {0, 1, 2}), cycle_perm(n, big)});
}

// -- 2x2 matrix groups --------------------------------------------------------

std::vector<Mat2> sl2_generators(const std::shared_ptr<const Field>& f) {
  if (f->degree() == 1) return {Mat2::of(f, 1, 1, 0, 1), Mat2::of(f, 0, 1, -1, 0)};
  const FieldElement w(f, f->primitive());
  const FieldElement z = FieldElement::zero(f);
  return {Mat2{w, z, z, w.inverse()}, Mat2::of(f, -1, 1, -1, 0)};
}

// Row vector (x, y) -> (x, y) M.
std::pair<std::uint32_t, std::uint32_t> act(const Field& f, const Mat2& m, std::uint32_t x, std::uint32_t y) {
  return {f.add(f.mul(x, m.a.value()), f.mul(y, m.c.value())), f.add(f.mul(x, m.b.value()), f.mul(y, m.d.value()))};
}

Permutation on_vectors(const Field& f, const Mat2& m) {
  const std::uint32_t q = f.order();
  std::vector<Point> img(q * q - 1);
  for (std::uint32_t v = 1; v < q * q; ++v) {
    auto [x, y] = act(f, m, v % q, v / q);
    img[v - 1] = static_cast<Point>(x + q * y - 1);
  }
  return Permutation::from_images(std::move(img));
}

// Projective point index: (1, y) -> y, (0, 1) -> q.
std::uint32_t projective_index(const Field& f, std::uint32_t x, std::uint32_t y) {
  if (x == 0) return f.order();
  return f.mul(y, f.inv(x));
}

Permutation on_points(const Field& f, const Mat2& m) {
  const std::uint32_t q = f.order();
  std::vector<Point> img(q + 1);
  for (std::uint32_t y = 0; y < q; ++y) {
    auto [a, b] = act(f, m, 1, y);
    img[y] = static_cast<Point>(projective_index(f, a, b));
  }
  auto [a, b] = act(f, m, 0, 1);
  img[q] = static_cast<Point>(projective_index(f, a, b));
  return Permutation::from_images(std::move(img));
}

Group sl2(std::uint64_t q) {
  auto f = Field::of_order(static_cast<std::uint32_t>(q));
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f)) gens.push_back(on_vectors(*f, m));
  return Group(std::move(gens));
}

std::vector<Permutation> psl2_generators(const std::shared_ptr<const Field>& f) {
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f)) gens.push_back(on_points(*f, m));
  return gens;
}

Group pgammal2_32() {
  auto f = Field::of_order(32);
  auto gens = psl2_generators(f);
  std::vector<Point> img(33);
  for (std::uint32_t y = 0; y < 32; ++y) img[y] = static_cast<Point>(f->frobenius(y));
  img[32] = 32;
  gens.push_back(Permutation::from_images(std::move(img)));
  return Group(std::move(gens));
}

// -- k x k matrices over a prime field, for the semidirect datasets ------------

struct PrimeMat {
  std::uint64_t p = 2;
  std::size_t k = 0;
  std::vector<std::uint64_t> a;  // row-major

  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * k + j]; }
  std::vector<std::uint64_t> row(std::size_t i) const { return {a.begin() + i * k, a.begin() + (i + 1) * k}; }
};

std::vector<std::uint64_t> row_times(const std::vector<std::uint64_t>& v, const PrimeMat& m) {
  std::vector<std::uint64_t> out(m.k, 0);
  for (std::size_t i = 0; i < m.k; ++i)
    for (std::size_t j = 0; j < m.k; ++j) out[j] = (out[j] + v[i] * m.at(i, j)) % m.p;
  return out;
}

std::vector<std::uint64_t> digits(std::uint64_t v, std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> d(k);
  for (std::size_t i = 0; i < k; ++i, v /= p) d[i] = v % p;
  return d;
}

std::uint64_t undigits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

Permutation matrix_on_vectors(const PrimeMat& m) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < m.k; ++i) size *= m.p;
  std::vector<Point> img(size - 1);
  for (std::uint64_t v = 1; v < size; ++v)
    img[v - 1] = static_cast<Point>(undigits(row_times(digits(v, m.p, m.k), m), m.p) - 1);
  return Permutation::from_images(std::move(img));
}

// Matrix of x -> alpha x (or x -> x^p) on GF(p^k) in the basis 1, x, ..., x^(k-1).
PrimeMat field_map_matrix(const Field& f, bool frobenius, std::uint32_t alpha) {
  PrimeMat m{f.characteristic(), f.degree(), {}};
  std::uint32_t basis = 1;
  for (std::size_t i = 0; i < m.k; ++i, basis *= f.characteristic()) {
    const std::uint32_t image = frobenius ? f.frobenius(basis) : f.mul(basis, alpha);
    for (auto c : digits(image, m.p, m.k)) m.a.push_back(c);
  }
  return m;
}

// E_{p^k} x| H where H is the matrix group generated by `mats` acting on row
// vectors, given its expected order.
Group semidirect_from_matrices(const std::vector<PrimeMat>& mats, std::uint64_t h_order, bool fixed_point_free) {
  const std::uint64_t p = mats.front().p;
  const std::size_t k = mats.front().k;
  std::vector<Permutation> h_gens;
  for (const auto& m : mats) h_gens.push_back(matrix_on_vectors(m));
  Group h(h_gens);
  if (h.order() != h_order)
    throw InvalidArgument("action matrices generate a group of order " + std::to_string(h.order()) + ", expected " +
                          std::to_string(h_order));
  if (fixed_point_free) {
    const auto& t = h.elements();
    for (Elem e = 1; e < t.size(); ++e) {
      auto img = t.images(e);
      for (std::size_t i = 0; i < img.size(); ++i)
        if (img[i] == i) throw InvalidArgument("action is not fixed-point-free");
    }
  }
  Group n(elementary_generators(p, k));
  std::vector<std::vector<Permutation>> action;
  for (const auto& m : mats) {
    std::vector<Permutation> images;
    for (std::size_t i = 0; i < k; ++i) images.push_back(elementary_element(p, m.row(i)));
    action.push_back(std::move(images));
  }
  return semidirect_product(n, h, action);
}

Group semidirect_dataset(std::string_view name) {
  auto field_pair = [](std::uint32_t q, bool with_frobenius, std::uint64_t h_order) {
    auto f = Field::of_order(q);
    std::vector<PrimeMat> mats{field_map_matrix(*f, false, f->primitive())};
    if (with_frobenius) mats.push_back(field_map_matrix(*f, true, 0));
    return semidirect_from_matrices(mats, h_order, false);
  };
  if (name == "E4:C3") return field_pair(4, false, 3);
  if (name == "E8:C7") return field_pair(8, false, 7);
  if (name == "E8:(C7:C3)") return field_pair(8, true, 21);
  if (name == "E32:(C31:C5)") return field_pair(32, true, 155);
  // Singer cycles: transitive on the lines of the vector space
  if (name == "E9:C8") return field_pair(9, false, 8);
  if (name == "E27:C26") return field_pair(27, false, 26);
  if (name == "E25:SL(2,3)") {
    // quaternion units i, j and an element of order 3 normalising them,
    // all in SL(2,5)
    const PrimeMat i{5, 2, {0, 1, 4, 0}};
    const PrimeMat j{5, 2, {0, 2, 2, 0}};
    const PrimeMat w{5, 2, {1, 1, 2, 3}};
    return semidirect_from_matrices({i, j, w}, 24, true);
  }
  if (name == "Q8:C3") {
    Group q8 = quaternion(8);
    const auto& t = q8.elements();
    const Elem i = t.index_of(q8.generators()[0]);
    const Elem j = t.index_of(q8.generators()[1]);
    const Elem k = t.mul(i, j);
    // i -> j -> k -> i
    return semidirect_product(q8, cyclic(3), {{t.perm(j), t.perm(k)}});
  }
  throw InvalidArgument("unknown semidirect dataset '" + std::string(name) + "'");
}

}  // namespace

std::string NamedGroupId::to_string() const {
  const std::string ns = std::to_string(n);
  switch (family) {
    case Family::Cyclic: return "C" + ns;
    case Family::ElementaryAbelian: return "E" + ns;
    case Family::Dihedral: return "D" + ns;
    case Family::GeneralizedQuaternion: return "Q" + ns;
    case Family::Symmetric: return "S" + ns;
    case Family::Alternating: return "A" + ns;
    case Family::SL2: return "SL(2," + ns + ")";
    case Family::PSL2: return "PSL(2," + ns + ")";
    case Family::PGammaL2: return "PGammaL(2," + ns + ")";
    case Family::SemidirectByData:
    case Family::BundledDataset: return dataset;
    case Family::DirectProduct: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f.to_string();
      return out;
    }
  }
  return "?";
}

std::uint64_t NamedGroupId::expected_order() const {
  switch (family) {
    case Family::Cyclic:
    case Family::ElementaryAbelian:
    case Family::Dihedral:
    case Family::GeneralizedQuaternion: return n;
    case Family::Symmetric: return factorial(n);
    case Family::Alternating: return n < 2 ? 1 : factorial(n) / 2;
    case Family::SL2: return n * (n * n - 1);
    case Family::PSL2: return n * (n * n - 1) / std::gcd<std::uint64_t>(2, n - 1);
    case Family::PGammaL2: return 32 * 1023 * 5;
    case Family::SemidirectByData:
      for (const auto& d : kSemidirect)
        if (dataset == d.name) return d.order;
      return 0;
    case Family::BundledDataset: return 7920;
    case Family::DirectProduct: {
      std::uint64_t r = 1;
      for (const auto& f : factors) r *= f.expected_order();
      return r;
    }
  }
  return 0;
}

NamedGroupId parse_group_name(std::string_view name) {
  std::string s = strip(name);
  s = replace_all(s, "×", "x");
  s = replace_all(s, "⋊", ":");
  s = replace_all(s, "Γ", "Gamma");
  if (s.empty()) throw ParseError("empty group name");
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + std::string(name) + "'");
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(name) + "'");
  parts.push_back(cur);
  if (parts.size() == 1) return parse_atom(parts.front(), name);
  NamedGroupId id;
  id.family = Family::DirectProduct;
  for (const auto& p : parts) {
    if (p.empty()) throw ParseError("empty factor in '" + std::string(name) + "'");
    id.factors.push_back(parse_atom(p, name));
  }
  return id;
}

Group construct(const NamedGroupId& id, const ZooOptions& opts) {
  Group g = [&]() -> Group {
    switch (id.family) {
      case Family::Cyclic: return cyclic(id.n);
      case Family::ElementaryAbelian: {
        auto [p, k] = prime_power(id.n);
        return Group(elementary_generators(p, k));
      }
      case Family::Dihedral: return dihedral(id.n);
      case Family::GeneralizedQuaternion: return quaternion(id.n);
      case Family::Symmetric: return symmetric(id.n);
      case Family::Alternating: return alternating(id.n);
      case Family::SL2: return sl2(id.n);
      case Family::PSL2: return Group(psl2_generators(Field::of_order(static_cast<std::uint32_t>(id.n))));
      case Family::PGammaL2:
        if (!opts.enable_large) throw InvalidArgument("PGammaL(2,32) is disabled by default (order 163680)");
        return pgammal2_32();
      case Family::SemidirectByData: return semidirect_dataset(id.dataset);
      case Family::BundledDataset: return bundled_dataset(id.dataset);
      case Family::DirectProduct: {
        if (id.factors.empty()) throw InvalidArgument("direct product without factors");
        Group acc = construct(id.factors.front(), opts);
        for (std::size_t i = 1; i < id.factors.size(); ++i) acc = direct_product(acc, construct(id.factors[i], opts));
        return acc;
      }
    }
    throw InvalidArgument("unknown family");
  }();
  if (g.order() != id.expected_order())
    throw Error("constructed " + id.to_string() + " has order " + std::to_string(g.order()) + ", expected " +
                std::to_string(id.expected_order()));
  return g;
}

Group construct(std::string_view name, const ZooOptions& opts) { return construct(parse_group_name(name), opts); }

const std::vector<std::string>& semidirect_dataset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : kSemidirect) v.emplace_back(d.name);
    return v;
  }();
  return names;
}

Group build_semidirect_dataset(std::string_view name) {
  NamedGroupId id;
  id.family = Family::SemidirectByData;
  id.dataset = std::string(name);
  if (id.expected_order() == 0) throw InvalidArgument("unknown semidirect dataset '" + id.dataset + "'");
  return construct(id);
}

const std::vector<std::string>& bundled_dataset_names() {
  static const std::vector<std::string> names{"M11"};
  return names;
}

std::string bundled_dataset_text(std::string_view name) {
  if (name == "M11") return embedded::kM11;
  throw InvalidArgument("unknown bundled dataset '" + std::string(name) + "'");
}

Group bundled_dataset(std::string_view name) { return parse_group_file(bundled_dataset_text(name)); }

}  // namespace fgc
