#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "corpus_util.hpp"
#include "fgc/error.hpp"
#include "fgc/harness.hpp"

using fgc::CheckStatus;
using fgc::ClassId;
using testutil::analysed_corpus;

namespace {

fgc::Corpus small_corpus(const char* text, unsigned jobs = 1) {
  return fgc::run_corpus(fgc::CorpusManifest::parse(text), jobs);
}

constexpr const char* kSmallManifest = R"(# a few groups
C6
S3
Q8
A4
SL(2,3)
A5
D10 x C3
E8:C7
)";

}  // namespace

TEST(Manifest, DefaultCorpusContents) {
  const auto m = fgc::CorpusManifest::default_corpus();
  std::set<std::string> ids;
  for (const auto& e : m.entries) ids.insert(e.id);
  EXPECT_EQ(ids.size(), m.entries.size()) << "ids are unique";
  for (const char* id : {"A5", "SL(2,5)", "PSL(2,8)", "E25:SL(2,3)", "SL(2,7)", "PSL(2,7)", "M11", "Q8 x C3",
                         "E32:(C31:C5)", "S6", "Q32"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Manifest, ParsesEntriesAndOverrides) {
  const auto m = fgc::CorpusManifest::parse(
      "# header\n\nA5\n  SL(2,7) | full_enum=3000 sylow=64  # trailing\nfile:/tmp/x.grp\nQ8 x C3\n");
  ASSERT_EQ(m.entries.size(), 4u);
  EXPECT_EQ(m.entries[0].id, "A5");
  EXPECT_EQ(m.entries[1].id, "SL(2,7)");
  EXPECT_EQ(m.entries[1].caps.full_enum, 3000u);
  EXPECT_EQ(m.entries[1].caps.sylow, 64u);
  EXPECT_EQ(m.entries[1].caps.element, fgc::default_caps().element);
  EXPECT_EQ(m.entries[2].file, "/tmp/x.grp");
  EXPECT_EQ(m.entries[3].name.to_string(), "Q8 x C3");
}

TEST(Manifest, ErrorsCarryLineNumbers) {
  for (const auto& [text, line] : std::vector<std::pair<std::string, std::size_t>>{
           {"A5\nNotAGroup\n", 2}, {"A5\nS4\nA5 | bogus=3\n", 3}, {"C4 | sylow=abc\n", 1}, {"\n\nfile:\n", 3}}) {
    try {
      fgc::CorpusManifest::parse(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const fgc::ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(Manifest, EmptyCorpusRunsCleanly) {
  const fgc::Corpus c = fgc::run_corpus(fgc::CorpusManifest::parse("# nothing\n"));
  EXPECT_TRUE(c.groups.empty());
  for (const auto& r : fgc::run_checks(c)) EXPECT_EQ(r.status, CheckStatus::Vacuous) << r.id;
  const auto j = nlohmann::json::parse(fgc::emit_json(c, {}));
  EXPECT_TRUE(j.at("groups").empty());
  EXPECT_TRUE(j.at("checks").empty());
}

TEST(Registry, IdsAreUniqueAndRunnable) {
  const auto& ids = fgc::check_ids();
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  for (const char* must : {"T5", "T10", "T12", "T15", "T16", "C19", "T21", "H-eq", "W-verify"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), must), ids.end()) << must;
  const fgc::Corpus c = small_corpus(kSmallManifest);
  for (const auto& id : ids) {
    const auto r = fgc::run_check(id, c);
    EXPECT_EQ(r.id, id);
    EXPECT_FALSE(r.statement.empty()) << id;
    EXPECT_NE(r.status, CheckStatus::Fail) << id << ": " << r.details;
  }
  EXPECT_THROW(fgc::run_check("T99", c), fgc::InvalidArgument);
  EXPECT_EQ(fgc::run_checks(c, {"T10", "T5"}).size(), 2u);
}

TEST(CorpusRun, ResultOrderIndependentOfThreads) {
  const fgc::Corpus one = small_corpus(kSmallManifest, 1);
  const fgc::Corpus four = small_corpus(kSmallManifest, 4);
  ASSERT_EQ(one.groups.size(), 8u);
  EXPECT_EQ(one.groups[5].id, "A5");
  EXPECT_EQ(fgc::emit_json(one, fgc::run_checks(one)), fgc::emit_json(four, fgc::run_checks(four)));
}

TEST(CorpusRun, FileEntries) {
  const auto path = std::filesystem::temp_directory_path() / "fgc_harness_s3.grp";
  std::ofstream(path) << "degree 3\n(1,2,3)\n(1,2)\n";
  const fgc::Corpus c = small_corpus(("file:" + path.string() + "\n").c_str());
  ASSERT_EQ(c.groups.size(), 1u);
  EXPECT_EQ(c.groups[0].group.order(), 6u);
  EXPECT_TRUE(c.groups[0].report.member(ClassId::B));
  std::filesystem::remove(path);
  EXPECT_THROW(small_corpus("file:/nonexistent/path.grp\n"), fgc::Error);
}

TEST(CorpusRun, FullCorpusHasNoFailures) {
  const auto& c = analysed_corpus();
  EXPECT_EQ(c.groups.size(), fgc::CorpusManifest::default_corpus().entries.size());
  for (const auto& r : fgc::run_checks(c)) {
    EXPECT_NE(r.status, CheckStatus::Fail) << r.id << ": " << r.details;
    EXPECT_NE(r.status, CheckStatus::Vacuous) << r.id;
  }
}

TEST(CorpusRun, AnalysisMatchesDirectDecisions) {
  const auto& c = analysed_corpus();
  for (const char* id : {"A5", "SL(2,7)", "PSL(2,7)", "M11", "Q8"}) {
    const auto* a = c.find(id);
    ASSERT_NE(a, nullptr) << id;
    for (ClassId k : fgc::kAllClassIds) {
      const auto& v = a->report.at(k);
      if (v.kind == fgc::VerdictKind::Undecided || v.inferred) continue;
      EXPECT_EQ(fgc::decide(a->group, k, a->caps).kind, v.kind) << id << " " << fgc::class_name(k);
    }
  }
  const auto* a5 = c.find("A5");
  for (ClassId k : fgc::kAllClassIds) EXPECT_TRUE(a5->report.member(k)) << fgc::class_name(k);
  EXPECT_FALSE(a5->solvable);
}

TEST(Checks, T10ListsSylowShapes) {
  const auto r = fgc::run_check("T10", analysed_corpus());
  EXPECT_EQ(r.status, CheckStatus::Pass);
  const auto has = [&](const std::string& s) {
    return std::any_of(r.instances.begin(), r.instances.end(), [&](const auto& l) { return l == s; });
  };
  EXPECT_TRUE(has("SL(2,7): pass (Q16,C3,C7)"));
  EXPECT_TRUE(has("PSL(2,8): pass (E8,C9,C7)"));
}

TEST(Checks, StrictnessWitnesses) {
  const auto& c = analysed_corpus();
  EXPECT_EQ(fgc::run_check("H-strict-NA", c).status, CheckStatus::Pass);
  EXPECT_EQ(fgc::run_check("H-strict-AC", c).status, CheckStatus::Pass);
}

TEST(WitnessSearch, SmallestSeparatingGroup) {
  const auto& c = analysed_corpus();
  struct Case {
    ClassId in, out;
    std::optional<std::string> expected;
  };
  for (const auto& [in, out, expected] : std::vector<Case>{{ClassId::A, ClassId::N, "SL(2,7)"},
                                                            {ClassId::C, ClassId::A, "PSL(2,7)"},
                                                            {ClassId::A_pi, ClassId::B_pi, "SL(2,7)"},
                                                            {ClassId::C_pi, ClassId::A_pi, "PSL(2,7)"},
                                                            {ClassId::N, ClassId::A, std::nullopt},
                                                            {ClassId::B, ClassId::B, std::nullopt}}) {
    const auto w = fgc::witness_search(c, in, out);
    EXPECT_EQ(w.group_id, expected) << fgc::class_name(in) << " " << fgc::class_name(out);
    if (!w.group_id) continue;
    const auto* g = c.find(*w.group_id);
    EXPECT_EQ(w.order, g->group.order());
    EXPECT_TRUE(g->report.member(in));
    EXPECT_TRUE(g->report.non_member(out));
    for (const auto& other : c.groups)
      if (other.group.order() < w.order) EXPECT_FALSE(other.report.member(in) && other.report.non_member(out)) << other.id;
  }
}

TEST(Reports, JsonShape) {
  const fgc::Corpus c = small_corpus(kSmallManifest);
  const auto checks = fgc::run_checks(c);
  const auto j = nlohmann::json::parse(fgc::emit_json(c, checks));
  ASSERT_EQ(j.at("groups").size(), 8u);
  ASSERT_EQ(j.at("checks").size(), checks.size());
  for (const auto& g : j.at("groups")) {
    for (const char* key : {"id", "order", "degree", "solvable", "sylow_shapes", "classes", "witnesses"})
      EXPECT_TRUE(g.contains(key)) << key;
    EXPECT_EQ(g.at("classes").size(), 10u);
  }
  const auto& q8 = j.at("groups")[2];
  EXPECT_EQ(q8.at("id"), "Q8");
  EXPECT_EQ(q8.at("classes").at("C_pi"), "non-member");
  bool found = false;
  for (const auto& w : q8.at("witnesses")) {
    if (w.at("class") != "C_pi") continue;
    found = true;
    EXPECT_EQ(w.at("order"), 4);
    EXPECT_EQ(w.at("first").at("elements").size(), 4u);
    EXPECT_EQ(w.at("second").at("elements").size(), 4u);
    EXPECT_NE(w.at("first").at("elements"), w.at("second").at("elements"));
  }
  EXPECT_TRUE(found);
  for (const auto& r : j.at("checks")) EXPECT_NE(r.at("status"), "fail") << r.at("id");
}

TEST(Reports, MarkdownMentionsEveryGroupAndCheck) {
  const fgc::Corpus c = small_corpus(kSmallManifest);
  const auto checks = fgc::run_checks(c);
  const std::string md = fgc::emit_markdown(c, checks);
  for (const auto& g : c.groups) EXPECT_NE(md.find(g.id), std::string::npos) << g.id;
  for (const auto& r : checks) EXPECT_NE(md.find(r.id), std::string::npos) << r.id;
}
