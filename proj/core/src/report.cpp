#include <nlohmann/json.hpp>
#include <sstream>

#include "fgc/harness.hpp"

namespace fgc {

namespace {

using json = nlohmann::ordered_json;

json subgroup_json(const Subgroup& s) {
  json j;
  j["order"] = s.order();
  json gens = json::array();
  for (const auto& p : s.generator_perms()) gens.push_back(p.to_cycle_string());
  j["generators"] = gens;
  if (s.order() <= 64) {
    json elems = json::array();
    for (const auto& p : s.element_perms()) elems.push_back(p.to_cycle_string());
    j["elements"] = elems;
  }
  return j;
}

json group_json(const GroupAnalysis& g) {
  json j;
  j["id"] = g.id;
  j["order"] = g.group.order();
  j["degree"] = g.group.degree();
  j["solvable"] = g.solvable;
  json shapes = json::array();
  for (const auto& s : g.sylow_shapes)
    shapes.push_back({{"p", s.p}, {"tag", s.tag_name()}, {"order", s.order}, {"label", s.label()}});
  j["sylow_shapes"] = shapes;
  json classes = json::object(), notes = json::object(), witnesses = json::array();
  for (const auto& [c, v] : g.report.verdicts) {
    const std::string name(class_name(c));
    classes[name] = std::string(verdict_name(v.kind));
    if (!v.note.empty()) notes[name] = v.note;
    if (v.witness && !v.inferred)
      witnesses.push_back({{"class", name},
                           {"order", v.witness->order},
                           {"first", subgroup_json(v.witness->first)},
                           {"second", subgroup_json(v.witness->second)}});
  }
  j["classes"] = classes;
  j["class_notes"] = notes;
  j["witnesses"] = witnesses;
  return j;
}

}  // namespace

std::string emit_json(const Corpus& corpus, const std::vector<CheckResult>& checks) {
  json root;
  json groups = json::array();
  for (const auto& g : corpus.groups) groups.push_back(group_json(g));
  root["groups"] = groups;
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"id", c.id},
                  {"statement", c.statement},
                  {"status", std::string(check_status_name(c.status))},
                  {"details", c.details},
                  {"instances", c.instances}});
  root["checks"] = cs;
  return root.dump(2) + "\n";
}

std::string emit_markdown(const Corpus& corpus, const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  out << "# Class membership report\n\n| group | order | solvable |";
  for (ClassId c : kAllClassIds) out << ' ' << class_name(c) << " |";
  out << "\n|---|---|---|";
  for (std::size_t i = 0; i < kAllClassIds.size(); ++i) out << "---|";
  out << '\n';
  auto mark = [](const ClassReport& r, ClassId c) -> std::string {
    auto it = r.verdicts.find(c);
    if (it == r.verdicts.end()) return "";
    switch (it->second.kind) {
      case VerdictKind::Member: return it->second.inferred ? "yes*" : "yes";
      case VerdictKind::NonMember: return it->second.inferred ? "no*" : "no";
      case VerdictKind::Undecided: return "?";
    }
    return "";
  };
  for (const auto& g : corpus.groups) {
    out << "| " << g.id << " | " << g.group.order() << " | " << (g.solvable ? "yes" : "no") << " |";
    for (ClassId c : kAllClassIds) out << ' ' << mark(g.report, c) << " |";
    out << '\n';
  }
  out << "\n`*` inferred from containments, `?` undecided within caps.\n";
  if (!checks.empty()) {
    out << "\n## Checks\n\n| id | status | details |\n|---|---|---|\n";
    for (const auto& c : checks) out << "| " << c.id << " | " << check_status_name(c.status) << " | " << c.details << " |\n";
  }
  return out.str();
}

}  // namespace fgc
