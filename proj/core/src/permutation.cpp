#include "fgc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "fgc/error.hpp"

namespace fgc {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw InvalidArgument("permutation degree " + std::to_string(degree) + " outside 1.." +
                          std::to_string(kMaxDegree));
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  check_degree(degree);
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<Point> images0) {
  check_degree(images0.size());
  std::vector<bool> seen(images0.size(), false);
  for (Point p : images0) {
    if (p >= images0.size() || seen[p]) throw InvalidArgument("image table is not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(images0));
}

Permutation Permutation::from_images_1based(std::span<const std::size_t> images1) {
  std::vector<Point> img;
  img.reserve(images1.size());
  for (std::size_t v : images1) {
    if (v == 0 || v > images1.size()) throw InvalidArgument("image table is not a bijection");
    img.push_back(static_cast<Point>(v - 1));
  }
  return from_images(std::move(img));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && is_space(text[i])) ++i;
  };
  skip_ws();
  while (i < n) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation near '" + std::string(text.substr(i)) + "'");
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    if (i < n && text[i] == ')') {
      ++i;  // "()" contributes nothing
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      std::size_t value = 0;
      while (i < n && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > kMaxDegree) throw ParseError("point exceeds degree cap " + std::to_string(kMaxDegree));
        ++i;
      }
      if (i == start) {
        if (i >= n) throw ParseError("unterminated cycle");
        throw ParseError(std::string("unexpected character '") + text[i] + "' in cycle");
      }
      if (value == 0) throw ParseError("points are 1-based; got 0");
      cycle.push_back(value);
      max_point = std::max(max_point, value);
      skip_ws();
      if (i >= n) throw ParseError("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError(std::string("unexpected character '") + text[i] + "' in cycle");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  std::size_t deg = std::max<std::size_t>({degree, max_point, 1});
  if (deg > kMaxDegree) throw ParseError("degree exceeds cap " + std::to_string(kMaxDegree));
  std::vector<Point> img(deg);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(deg, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::size_t p = c[k] - 1;
      if (used[p]) throw ParseError("point " + std::to_string(c[k]) + " repeated across cycles");
      used[p] = true;
      img[p] = static_cast<Point>(c[(k + 1) % c.size()] - 1);
    }
  }
  return Permutation(std::move(img));
}

std::size_t Permutation::image(std::size_t point) const {
  if (point == 0 || point > img_.size()) throw InvalidArgument("point out of range");
  return static_cast<std::size_t>(img_[point - 1]) + 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& g) const {
  if (g.degree() != degree())
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(degree()) + " and " +
                         std::to_string(g.degree()));
  std::vector<Point> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = g.img_[img_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (k) {
    if (k & 1ULL) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (std::size_t len : cycle_type()) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < img_.size()) throw InvalidArgument("cannot shrink a permutation");
  check_degree(degree);
  std::vector<Point> out(img_);
  for (std::size_t i = img_.size(); i < degree; ++i) out.push_back(static_cast<Point>(i));
  return Permutation(std::move(out));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

Permutation perm_compose(const Permutation& f, const Permutation& g) { return f * g; }

Permutation perm_inverse(const Permutation& f) { return f.inverse(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace fgc
