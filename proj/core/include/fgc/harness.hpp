#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgc/caps.hpp"
#include "fgc/classes.hpp"
#include "fgc/group.hpp"
#include "fgc/structure.hpp"
#include "fgc/zoo.hpp"

namespace fgc {

// -- corpus -----------------------------------------------------------------------

struct CorpusEntry {
  /// Display id, e.g. "SL(2,7)".
  std::string id;
  /// Named group; ignored when `file` is set.
  NamedGroupId name;
  /// Group file to ingest instead of a named construction.
  std::string file;
  Caps caps = default_caps();
};

/// Manifest text: one entry per line, "#" comments. An entry is a group
/// name or "file:<path>", optionally followed by "|" and space-separated
/// cap overrides such as "full_enum=3000 sylow=512".
struct CorpusManifest {
  std::vector<CorpusEntry> entries;

  static CorpusManifest default_corpus();
  /// Throws ParseError with the offending line.
  static CorpusManifest parse(std::string_view text);
};

/// Everything the checks need about one group.
struct GroupAnalysis {
  std::string id;
  Group group;
  /// Set for direct products built from named factors.
  std::optional<NamedGroupId> name;
  Caps caps;
  bool solvable = true;
  std::vector<SylowShape> sylow_shapes;
  ClassReport report;

  const SylowShape* shape_for(std::uint64_t p) const;
};

/// Runs the structural analysis and all class verdicts for one group.
GroupAnalysis analyze_group(std::string id, const Group& g, const Caps& caps = default_caps(), bool pi_only = false);

struct Corpus {
  std::vector<GroupAnalysis> groups;  // manifest order

  const GroupAnalysis* find(std::string_view id) const;
};

/// Builds and analyses every entry, using up to `jobs` worker threads. The
/// result is in manifest order regardless of scheduling.
Corpus run_corpus(const CorpusManifest& manifest, unsigned jobs = 1);

// -- checks -----------------------------------------------------------------------

enum class CheckStatus { Pass, Fail, Vacuous, Skipped };
std::string_view check_status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::Vacuous;
  std::string details;
  /// One line per group the hypothesis applied to.
  std::vector<std::string> instances;
};

/// Registered check ids in report order.
const std::vector<std::string>& check_ids();
/// Throws InvalidArgument for an unknown id.
CheckResult run_check(std::string_view id, const Corpus& corpus);
/// All checks, or those listed in `only`.
std::vector<CheckResult> run_checks(const Corpus& corpus, const std::vector<std::string>& only = {});

struct WitnessSearchResult {
  std::optional<std::string> group_id;
  std::uint64_t order = 0;
};

/// Smallest corpus group that is a member of `in` and a decided non-member
/// of `out` (ties broken by manifest order).
WitnessSearchResult witness_search(const Corpus& corpus, ClassId in, ClassId out);

// -- reports ------------------------------------------------------------------------

std::string emit_json(const Corpus& corpus, const std::vector<CheckResult>& checks);
std::string emit_markdown(const Corpus& corpus, const std::vector<CheckResult>& checks);

}  // namespace fgc
