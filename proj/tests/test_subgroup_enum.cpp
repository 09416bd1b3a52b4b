#include <gtest/gtest.h>

#include "corpus_util.hpp"
#include "fgc/error.hpp"
#include "fgc/structure.hpp"
#include "fgc/subgroup_enum.hpp"

using fgc::Group;
using testutil::as_set;
using testutil::subgroup_of;

namespace {

Group G(const char* name) { return fgc::construct(name); }

std::vector<std::uint64_t> class_orders(const std::vector<fgc::SubgroupClass>& cs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cs) out.push_back(c.representative.order());
  return out;
}

std::uint64_t total_subgroups(const std::vector<fgc::SubgroupClass>& cs) {
  std::uint64_t n = 0;
  for (const auto& c : cs) n += c.orbit_size;
  return n;
}

void expect_matches_oracle(const std::vector<fgc::SubgroupClass>& mine, const std::vector<oracle::ClassInfo>& ref,
                           const std::string& label) {
  ASSERT_EQ(mine.size(), ref.size()) << label;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    EXPECT_EQ(as_set(mine[i].representative), ref[i].representative) << label << " class " << i;
    EXPECT_EQ(mine[i].orbit_size, ref[i].orbit_size) << label << " class " << i;
  }
}

bool is_p_power(std::size_t n, std::uint64_t p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST(PSubgroupClasses, Examples) {
  EXPECT_EQ(class_orders(fgc::p_subgroup_classes(G("C4"), 2)), (std::vector<std::uint64_t>{2, 4}));
  EXPECT_EQ(class_orders(fgc::p_subgroup_classes(G("S4"), 2)), (std::vector<std::uint64_t>{2, 2, 4, 4, 4, 8}));
  auto q8 = fgc::p_subgroup_classes(G("Q8"), 2);
  EXPECT_EQ(class_orders(q8), (std::vector<std::uint64_t>{2, 4, 4, 4, 8}));
  for (const auto& c : q8) EXPECT_EQ(c.orbit_size, 1u);
}

TEST(PSubgroupClasses, RespectsCaps) {
  fgc::Caps caps;
  caps.sylow = 4;
  EXPECT_THROW(fgc::p_subgroup_classes(G("S4"), 2, caps), fgc::CapExceeded);
  EXPECT_NO_THROW(fgc::p_subgroup_classes(G("S4"), 3, caps));
  caps = fgc::Caps{};
  caps.orbit_keys = 3;
  EXPECT_THROW(fgc::p_subgroup_classes(G("S4"), 2, caps), fgc::CapExceeded);
}

TEST(AbelianSubgroupClasses, Examples) {
  EXPECT_EQ(class_orders(fgc::abelian_subgroup_classes(G("Q8"), 2)), (std::vector<std::uint64_t>{2, 4, 4, 4}));
  auto e8 = fgc::abelian_subgroup_classes(G("E8"), std::nullopt);
  // 7 + 7 + 1 nontrivial subspaces of GF(2)^3, each its own class
  EXPECT_EQ(e8.size(), 15u);
  for (const auto& c : e8) EXPECT_EQ(c.orbit_size, 1u);
  EXPECT_EQ(class_orders(fgc::abelian_subgroup_classes(G("A5"), std::nullopt)),
            (std::vector<std::uint64_t>{2, 3, 4, 5}));
}

TEST(AllSubgroupClasses, Examples) {
  EXPECT_EQ(class_orders(fgc::all_subgroup_classes(G("C6"))), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  auto s3 = fgc::all_subgroup_classes(G("S3"));
  EXPECT_EQ(s3.size(), 4u);
  EXPECT_EQ(total_subgroups(s3), 6u);
  auto a5 = fgc::all_subgroup_classes(G("A5"));
  EXPECT_EQ(a5.size(), 9u);
  EXPECT_EQ(total_subgroups(a5), 59u);
  EXPECT_EQ(fgc::all_subgroup_classes(G("S4")).size(), 11u);
  EXPECT_EQ(total_subgroups(fgc::all_subgroup_classes(G("S5"))), 156u);
  EXPECT_EQ(fgc::all_subgroup_classes(G("S5")).size(), 19u);
  EXPECT_EQ(fgc::all_subgroup_classes(G("PSL(2,7)")).size(), 15u);
  EXPECT_EQ(total_subgroups(fgc::all_subgroup_classes(G("PSL(2,7)"))), 179u);
}

TEST(AllSubgroupClasses, FindsPerfectSubgroups) {
  // A5 and A6 inside S6 and SL(2,5) itself are perfect, so they never show
  // up as extensions by elements of prime order modulo a normal subgroup.
  auto s6 = fgc::all_subgroup_classes(G("S6"));
  EXPECT_EQ(s6.size(), 56u);
  EXPECT_EQ(total_subgroups(s6), 1455u);
  auto sl = fgc::all_subgroup_classes(G("SL(2,5)"));
  EXPECT_EQ(sl.size(), 12u);
  EXPECT_EQ(total_subgroups(sl), 76u);
}

TEST(AllSubgroupClasses, RespectsCap) {
  fgc::Caps caps;
  caps.full_enum = 20;
  EXPECT_THROW(fgc::all_subgroup_classes(G("S4"), caps), fgc::CapExceeded);
  EXPECT_NO_THROW(fgc::all_subgroup_classes(G("D16"), caps));
}

TEST(SubgroupEnumOracle, SmallCorpusGroupsMatchBruteForce) {
  int checked = 0;
  for (const auto& [id, g] : testutil::corpus_groups()) {
    if (g.order() > 48) continue;
    ++checked;
    const auto all = testutil::naive_elements(g);
    const auto subs = oracle::all_subgroups(all);
    const auto ref = oracle::classes_of(all, subs);
    const auto mine = fgc::all_subgroup_classes(g);
    expect_matches_oracle(mine, ref, id);
    EXPECT_EQ(total_subgroups(mine), subs.size()) << id;

    for (auto p : fgc::prime_divisors(g.order())) {
      std::set<oracle::ElemSet> psubs, abelian, cyclic;
      for (const auto& s : subs) {
        if (!is_p_power(s.size(), p)) continue;
        psubs.insert(s);
        if (oracle::is_abelian(s)) abelian.insert(s);
        if (oracle::is_cyclic(s)) cyclic.insert(s);
      }
      const std::string label = id + " p=" + std::to_string(p);
      expect_matches_oracle(fgc::p_subgroup_classes(g, p), oracle::classes_of(all, psubs), label);
      expect_matches_oracle(fgc::abelian_subgroup_classes(g, p), oracle::classes_of(all, abelian), label);
      expect_matches_oracle(fgc::cyclic_subgroup_classes(g, p), oracle::classes_of(all, cyclic), label);
    }
    std::set<oracle::ElemSet> abelian, cyclic;
    for (const auto& s : subs) {
      if (s.size() == 1) continue;
      if (oracle::is_abelian(s)) abelian.insert(s);
      if (oracle::is_cyclic(s)) cyclic.insert(s);
    }
    expect_matches_oracle(fgc::abelian_subgroup_classes(g, std::nullopt), oracle::classes_of(all, abelian), id);
    expect_matches_oracle(fgc::cyclic_subgroup_classes(g, std::nullopt), oracle::classes_of(all, cyclic), id);
  }
  EXPECT_GT(checked, 40);
}

TEST(SubgroupEnumProperty, OrbitSizesDivideOrderAndFingerprintsAgree) {
  for (const auto& [id, g] : testutil::corpus_groups()) {
    if (g.order() > 2000) continue;
    for (const auto& c : fgc::all_subgroup_classes(g)) {
      EXPECT_EQ(g.order() % c.orbit_size, 0u) << id;
      EXPECT_EQ(c.fingerprint, c.representative.fingerprint()) << id;
      EXPECT_EQ(fgc::normalizer(c.representative).order() * c.orbit_size, g.order()) << id;
    }
  }
}

TEST(AreConjugate, Examples) {
  const Group s3 = G("S3");
  auto h = subgroup_of(s3, {"(1,2)"});
  auto same = fgc::are_conjugate(s3, h, h);
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(fgc::conjugate(h, *same), h);
  auto k = subgroup_of(s3, {"(1,3)"});
  auto c = fgc::are_conjugate(s3, h, k);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(fgc::conjugate(h, *c), k);

  const Group s4 = G("S4");
  EXPECT_FALSE(fgc::are_conjugate(s4, subgroup_of(s4, {"(1,2)"}), subgroup_of(s4, {"(1,2)(3,4)"})).has_value());
  EXPECT_FALSE(fgc::are_conjugate(s4, subgroup_of(s4, {"(1,2)"}), subgroup_of(s4, {"(1,2,3)"})).has_value());
}

TEST(AreConjugate, AgreesWithExhaustiveScanAndIsSymmetric) {
  for (const char* name : {"S4", "SL(2,3)", "D16", "Q8 x C3", "A5"}) {
    const Group g = G(name);
    const auto all = testutil::naive_elements(g);
    std::vector<fgc::Subgroup> subs;
    for (const auto& c : fgc::all_subgroup_classes(g)) {
      subs.push_back(c.representative);
      for (const auto& gen : g.generators()) subs.push_back(fgc::conjugate(c.representative, g.elements().index_of(gen)));
    }
    for (const auto& a : subs)
      for (const auto& b : subs) {
        if (a.order() != b.order()) continue;
        auto ab = fgc::are_conjugate(g, a, b);
        auto ba = fgc::are_conjugate(g, b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value()) << name;
        ASSERT_EQ(ab.has_value(), oracle::conjugate_exists(all, as_set(a), as_set(b))) << name;
        if (ab) ASSERT_EQ(fgc::conjugate(a, *ab), b);
      }
  }
}
