#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fgc/harness.hpp"
#include "oracles.hpp"

namespace testutil {

/// Default corpus groups, constructed once per test binary.
inline const std::vector<std::pair<std::string, fgc::Group>>& corpus_groups() {
  static const std::vector<std::pair<std::string, fgc::Group>> groups = [] {
    std::vector<std::pair<std::string, fgc::Group>> v;
    for (const auto& e : fgc::CorpusManifest::default_corpus().entries) v.emplace_back(e.id, fgc::construct(e.name));
    return v;
  }();
  return groups;
}

/// Default corpus analysed once per test binary.
inline const fgc::Corpus& analysed_corpus() {
  static const fgc::Corpus corpus = fgc::run_corpus(fgc::CorpusManifest::default_corpus(), 2);
  return corpus;
}

inline oracle::ElemSet naive_elements(const fgc::Group& g) { return oracle::closure(g.generators(), g.degree()); }

inline oracle::ElemSet as_set(const fgc::Subgroup& s) {
  auto perms = s.element_perms();
  return {perms.begin(), perms.end()};
}

inline fgc::Subgroup subgroup_of(const fgc::Group& g, std::vector<const char*> gens) {
  std::vector<fgc::Permutation> perms;
  for (const char* c : gens) perms.push_back(fgc::Permutation::parse(c, g.degree()));
  return fgc::closure(g, perms);
}

}  // namespace testutil
