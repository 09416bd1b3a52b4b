#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "corpus_util.hpp"
#include "fgc/error.hpp"
#include "fgc/products.hpp"
#include "fgc/structure.hpp"
#include "fgc/zoo.hpp"

using fgc::Group;
using fgc::NamedGroupId;

namespace {

Group G(const char* name) { return fgc::construct(name); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("fgc_test_" + name);
  std::ofstream(path) << text;
  return path;
}

int involutions(const Group& g) {
  const auto& t = g.elements();
  int n = 0;
  for (fgc::Elem e = 0; e < t.size(); ++e) n += t.order(e) == 2;
  return n;
}

}  // namespace

TEST(Construct, Examples) {
  const Group psl = G("PSL(2,8)");
  EXPECT_EQ(psl.order(), 504u);
  EXPECT_EQ(fgc::normal_subgroups(psl).size(), 2u);
  EXPECT_EQ(fgc::derived_subgroup(fgc::whole_group(psl)).order(), 504u);
  const Group sl = G("SL(2,5)");
  EXPECT_EQ(sl.order(), 120u);
  EXPECT_EQ(involutions(sl), 1);
  EXPECT_EQ(G("A5").order(), 60u);
}

TEST(Construct, MatrixGroupOrdersFollowClosedForms) {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13}) {
    const std::string qs = std::to_string(q);
    const Group sl = fgc::construct("SL(2," + qs + ")");
    const Group psl = fgc::construct("PSL(2," + qs + ")");
    EXPECT_EQ(sl.order(), q * (q * q - 1)) << q;
    EXPECT_EQ(psl.order(), q * (q * q - 1) / (q % 2 ? 2 : 1)) << q;
    EXPECT_EQ(sl.degree(), q * q - 1) << q;
    EXPECT_EQ(psl.degree(), q + 1) << q;
  }
}

TEST(Construct, PSLIsSLModuloCenter) {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13}) {
    const std::string qs = std::to_string(q);
    const Group sl = fgc::construct("SL(2," + qs + ")");
    const Group psl = fgc::construct("PSL(2," + qs + ")");
    const Group quo = fgc::quotient(sl, fgc::center(sl));
    EXPECT_EQ(fgc::structural_fingerprint(quo), fgc::structural_fingerprint(psl)) << q;
  }
}

TEST(Construct, SmallFamilies) {
  EXPECT_EQ(G("C1").order(), 1u);
  EXPECT_EQ(G("E27").order(), 27u);
  EXPECT_EQ(G("E3^3").order(), 27u);
  EXPECT_EQ(G("D16").order(), 16u);
  EXPECT_EQ(G("Q32").order(), 32u);
  EXPECT_EQ(involutions(G("Q32")), 1);
  EXPECT_EQ(G("S8").order(), 40320u);
  EXPECT_EQ(G("A8").order(), 20160u);
  EXPECT_EQ(G("Q8 x C3").order(), 24u);
  EXPECT_EQ(G("SL(2,5) x C7").order(), 840u);
  EXPECT_EQ(G("C2 x C2 x C3").order(), 12u);
}

TEST(Construct, IsDeterministic) {
  for (const auto& e : fgc::CorpusManifest::default_corpus().entries) {
    EXPECT_EQ(fgc::construct(e.name).generators(), fgc::construct(e.name).generators()) << e.id;
  }
}

TEST(Construct, UnsupportedParametersThrow) {
  for (const char* bad : {"S9", "A12", "PSL(2,17)", "SL(2,6)", "D7", "D4", "Q12", "E6", "C0", "C300"})
    EXPECT_THROW(G(bad), fgc::InvalidArgument) << bad;
  for (const char* bad : {"", "X5", "C", "Cx", "(C2", "C2 x", "SL(2,", "E8:C9"})
    EXPECT_THROW(G(bad), fgc::Error) << bad;
  EXPECT_THROW(G("PGammaL(2,32)"), fgc::InvalidArgument);
}

TEST(Construct, LargeConstructionOnRequest) {
  fgc::ZooOptions opts;
  opts.enable_large = true;
  const Group g = fgc::construct("PGammaL(2,32)", opts);
  EXPECT_EQ(g.order(), 163680u);
  EXPECT_EQ(g.degree(), 33u);
}

TEST(GroupNames, RoundTrip) {
  for (const auto& e : fgc::CorpusManifest::default_corpus().entries) {
    NamedGroupId id = fgc::parse_group_name(e.id);
    EXPECT_EQ(id, e.name);
    EXPECT_EQ(id.to_string(), e.id);
    EXPECT_EQ(id.expected_order(), fgc::construct(id).order()) << e.id;
  }
  EXPECT_EQ(fgc::parse_group_name("Q8×C3").to_string(), "Q8 x C3");
  EXPECT_EQ(fgc::parse_group_name("E25⋊SL(2,3)").to_string(), "E25:SL(2,3)");
  EXPECT_EQ(fgc::parse_group_name("PΓL(2,32)").to_string(), "PGammaL(2,32)");
}

TEST(SemidirectDatasets, Orders) {
  const std::map<std::string, std::uint64_t> expected{{"E25:SL(2,3)", 600}, {"E4:C3", 12},        {"E8:C7", 56},
                                                      {"E8:(C7:C3)", 168},   {"E32:(C31:C5)", 4960}, {"Q8:C3", 24},
                                                      {"E9:C8", 72},         {"E27:C26", 702}};
  ASSERT_EQ(fgc::semidirect_dataset_names().size(), expected.size());
  for (const auto& name : fgc::semidirect_dataset_names()) {
    EXPECT_EQ(fgc::build_semidirect_dataset(name).order(), expected.at(name)) << name;
  }
  EXPECT_THROW(fgc::build_semidirect_dataset("E9:C4"), fgc::InvalidArgument);
}

TEST(SemidirectDatasets, Identities) {
  EXPECT_EQ(fgc::structural_fingerprint(G("E4:C3")), fgc::structural_fingerprint(G("A4")));
  EXPECT_TRUE(fgc::is_isomorphic_small(G("Q8:C3"), G("SL(2,3)")));
  EXPECT_FALSE(fgc::is_isomorphic_small(G("E8:C7"), G("C56")));
  EXPECT_EQ(fgc::center(G("E8:(C7:C3)")).order(), 1u);
}

TEST(SemidirectDatasets, E25ActionIsFrobeniusAndFaithful) {
  const Group x = G("E25:SL(2,3)");
  const auto e25 = fgc::sylow_subgroup(x, 5);
  ASSERT_TRUE(fgc::is_normal(e25));
  EXPECT_EQ(fgc::centralizer(e25), e25);  // faithful
  const auto& t = x.elements();
  for (fgc::Elem g = 1; g < t.size(); ++g) {
    if (t.order(g) % 5 == 0) continue;
    for (fgc::Elem e : e25.elements())
      if (e != fgc::ElementTable::identity()) ASSERT_NE(t.mul(g, e), t.mul(e, g));
  }
}

TEST(GroupFile, ParsesAndCrossChecks) {
  const Group c2 = fgc::parse_group_file("degree 2\n(1,2)\n");
  EXPECT_EQ(c2.order(), 2u);
  const Group s3 = fgc::parse_group_file("# comment\n\ndegree 3\norder 6\n(1,2,3)\n  (1,2)  # transposition\n");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(fgc::parse_group_file("degree 4\n").order(), 1u);
}

TEST(GroupFile, Errors) {
  try {
    fgc::parse_group_file("degree 3\n(1,2,3)\n(1,2\n");
    FAIL() << "expected a parse error";
  } catch (const fgc::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(fgc::parse_group_file("degree 3\norder 5\n(1,2,3)\n"), fgc::InvalidArgument);
  EXPECT_THROW(fgc::parse_group_file("(1,2)\n"), fgc::ParseError);
  EXPECT_THROW(fgc::parse_group_file("degree 300\n(1,2)\n"), fgc::Error);
  EXPECT_THROW(fgc::parse_group_file("degree 3\n(1,4)\n"), fgc::ParseError);
  EXPECT_THROW(fgc::parse_group_file("degree x\n"), fgc::ParseError);
}

TEST(GroupFile, IngestAndEmitRoundTrip) {
  const auto path = write_temp("c2.grp", "degree 2\n(1,2)\n");
  EXPECT_EQ(fgc::ingest(path).order(), 2u);
  for (const char* name : {"SL(2,7)", "E25:SL(2,3)", "Q8 x C3"}) {
    const Group g = G(name);
    const Group back = fgc::parse_group_file(fgc::emit_group_file(g, name));
    EXPECT_EQ(back.generators(), g.generators()) << name;
    EXPECT_EQ(back.order(), g.order());
  }
  EXPECT_THROW(fgc::ingest("/nonexistent/file.grp"), fgc::Error);
  std::filesystem::remove(path);
}

TEST(BundledDatasets, M11) {
  ASSERT_EQ(fgc::bundled_dataset_names(), (std::vector<std::string>{"M11"}));
  const Group m11 = fgc::bundled_dataset("M11");
  EXPECT_EQ(m11.order(), 7920u);
  EXPECT_EQ(m11.degree(), 11u);
  const std::string text = fgc::bundled_dataset_text("M11");
  EXPECT_NE(text.find("order 7920"), std::string::npos);
  EXPECT_EQ(fgc::parse_group_file(text).order(), 7920u);
  EXPECT_EQ(fgc::ingest(write_temp("m11.grp", text)).order(), 7920u);
  // simple: only the trivial and whole normal subgroups
  EXPECT_EQ(fgc::normal_subgroups(m11).size(), 2u);
}
