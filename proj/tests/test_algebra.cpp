#include <gtest/gtest.h>

#include <random>

#include "fgc/error.hpp"
#include "fgc/field.hpp"
#include "fgc/permutation.hpp"

using fgc::Field;
using fgc::FieldElement;
using fgc::Mat2;
using fgc::Permutation;

namespace {

Permutation P(const char* s, std::size_t n = 0) { return Permutation::parse(s, n); }

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<fgc::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<fgc::Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

}  // namespace

TEST(Permutation, ComposesLeftToRight) {
  // (1 2 3) then (1 2): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
  EXPECT_EQ(fgc::perm_compose(P("(1,2,3)"), P("(1,2)", 3)), P("(2,3)", 3));
  EXPECT_EQ((P("(1,2,3)") * P("(1,2)", 3)).to_cycle_string(), "(2,3)");
}

TEST(Permutation, IdentityAndInverseLaws) {
  const Permutation g = P("(1,4,2)(3,5)");
  const Permutation e = Permutation::identity(5);
  EXPECT_EQ(e * g, g);
  EXPECT_EQ(g * e, g);
  EXPECT_TRUE((g * fgc::perm_inverse(g)).is_identity());
  EXPECT_EQ(fgc::perm_inverse(e), e);
  EXPECT_EQ(fgc::perm_inverse(P("(1,2,3)")), P("(1,3,2)"));
  EXPECT_EQ(fgc::perm_inverse(P("(2,5)", 6)), P("(2,5)", 6));
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(fgc::perm_compose(P("(1,2)"), P("(1,2,3)")), fgc::DegreeMismatch);
}

TEST(Permutation, TextRoundTrip) {
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
  EXPECT_EQ(P("(1,2,3)(4,5)").to_cycle_string(), "(1,2,3)(4,5)");
  EXPECT_EQ(P("( 1 , 2 )").to_cycle_string(), "(1,2)");
  EXPECT_EQ(P("()", 3), Permutation::identity(3));
  EXPECT_EQ(P("(1,2)", 7).degree(), 7u);
  EXPECT_THROW(P("(1,2"), fgc::ParseError);
  EXPECT_THROW(P("(1,1)"), fgc::ParseError);
  EXPECT_THROW(P("(0,1)"), fgc::ParseError);
  EXPECT_THROW(P("(1,2)(2,3)"), fgc::ParseError);
  EXPECT_THROW(P("(1,300)"), fgc::Error);
}

TEST(Permutation, OrderAndPowers) {
  EXPECT_EQ(P("(1,2,3)(4,5)").order(), 6u);
  EXPECT_EQ(Permutation::identity(3).order(), 1u);
  const Permutation g = P("(1,2,3,4,5)");
  EXPECT_EQ(g.pow(5), Permutation::identity(5));
  EXPECT_EQ(g.pow(-1), g.inverse());
  EXPECT_EQ(g.pow(7), g * g);
}

TEST(PermutationProperty, AssociativeOnRandomTriples) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 40;
    Permutation a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a * a.inverse()).is_identity());
    ASSERT_TRUE((a.inverse() * a).is_identity());
    for (std::size_t p = 1; p <= n; ++p) ASSERT_EQ((a * b).image(p), b.image(a.image(p)));
  }
}

TEST(Field, PrimeFieldsMatchIntegerArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    auto f = Field::get(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        ASSERT_EQ(f->add(a, b), (a + b) % p);
        ASSERT_EQ(f->mul(a, b), (a * b) % p);
      }
      if (a) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
    }
  }
  auto f7 = Field::get(7);
  EXPECT_EQ((FieldElement(f7, 3) * FieldElement(f7, 5)).value(), 1u);
}

TEST(Field, Gf8ReductionUsesXCubedPlusXPlusOne) {
  auto f = Field::of_order(8);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  FieldElement x(f, 2), x2(f, 4);
  // x * x^2 = x^3 = x + 1
  EXPECT_EQ((x * x2).coefficients(), (std::vector<std::uint32_t>{1, 1, 0}));
  EXPECT_EQ(fgc::field_arith(x, x2, fgc::FieldOp::mul), FieldElement(f, 3));
}

TEST(Field, Gf9UsesXSquaredPlusOne) {
  auto f = Field::of_order(9);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  FieldElement x(f, 3);
  EXPECT_EQ(x * x, -FieldElement::one(f));
}

TEST(Field, MultiplicativeGroupIsCyclic) {
  for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u, 32u}) {
    auto f = Field::of_order(q);
    std::uint32_t max_order = 0;
    for (std::uint32_t a = 1; a < q; ++a) {
      ASSERT_EQ(f->pow(a, q - 1), 1u);
      max_order = std::max(max_order, f->mult_order(a));
    }
    EXPECT_EQ(max_order, q - 1) << q;
    EXPECT_EQ(f->mult_order(f->primitive()), q - 1) << q;
  }
}

TEST(Field, AxiomsExhaustiveOverSmallExtensions) {
  for (std::uint32_t q : {4u, 8u, 9u}) {
    auto f = Field::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      ASSERT_EQ(f->add(a, 0), a);
      ASSERT_EQ(f->add(a, f->neg(a)), 0u);
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c)
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    }
  }
}

TEST(Field, Errors) {
  auto f5 = Field::get(5), f7 = Field::get(7);
  EXPECT_THROW(FieldElement::zero(f5).inverse(), fgc::Error);
  EXPECT_THROW(FieldElement(f5, 1) + FieldElement(f7, 1), fgc::Error);
  EXPECT_THROW(Field::of_order(6), fgc::Error);
  EXPECT_FALSE(Field::is_irreducible(2, {1, 0, 1}));  // x^2 + 1 = (x + 1)^2 over GF(2)
  EXPECT_TRUE(Field::is_irreducible(3, {1, 0, 1}));
}

TEST(Mat2, IdentityInverseAndDeterminant) {
  auto f3 = Field::get(3);
  const Mat2 t = Mat2::of(f3, 1, 1, 0, 1);
  EXPECT_EQ(t * Mat2::identity(f3), t);
  EXPECT_EQ(fgc::mat2_inv(t), Mat2::of(f3, 1, 2, 0, 1));

  auto f5 = Field::get(5);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Mat2 m = Mat2::of(f5, rng() % 5, rng() % 5, rng() % 5, rng() % 5);
    Mat2 n = Mat2::of(f5, rng() % 5, rng() % 5, rng() % 5, rng() % 5);
    ASSERT_EQ(fgc::mat2_mul(m, n).det(), m.det() * n.det());
    if (!m.det().is_zero()) ASSERT_EQ(m * fgc::mat2_inv(m), Mat2::identity(f5));
  }
  EXPECT_THROW(fgc::mat2_inv(Mat2::of(f5, 1, 2, 2, 4)), fgc::Error);
}
