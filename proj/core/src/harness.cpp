#include "fgc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "fgc/error.hpp"
#include "fgc/products.hpp"
#include "fgc/subgroup_enum.hpp"

namespace fgc {

// -- corpus ---------------------------------------------------------------------------

namespace {

CorpusEntry named_entry(std::string_view name) {
  CorpusEntry e;
  e.name = parse_group_name(name);
  e.id = e.name.to_string();
  return e;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

void apply_override(Caps& caps, std::string_view kv, std::size_t lineno) {
  auto eq = kv.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected key=value, got '" + std::string(kv) + "'", lineno);
  const std::string key(kv.substr(0, eq));
  const std::string val(kv.substr(eq + 1));
  if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("cap value must be a non-negative integer", lineno);
  const std::uint64_t v = std::stoull(val);
  if (key == "element") caps.element = v;
  else if (key == "full_enum") caps.full_enum = v;
  else if (key == "iso") caps.iso = v;
  else if (key == "sylow") caps.sylow = v;
  else if (key == "orbit_keys") caps.orbit_keys = v;
  else throw ParseError("unknown cap '" + key + "'", lineno);
}

}  // namespace

CorpusManifest CorpusManifest::default_corpus() {
  std::vector<std::string> names;
  for (int n = 1; n <= 32; ++n) names.push_back("C" + std::to_string(n));
  for (const char* e : {"E4", "E8", "E9", "E27", "E25", "E125"}) names.emplace_back(e);
  for (int n = 6; n <= 16; n += 2) names.push_back("D" + std::to_string(n));
  for (const char* q : {"Q8", "Q16", "Q32"}) names.emplace_back(q);
  for (const char* s : {"S3", "S4", "S5", "S6", "A4", "A5", "A6"}) names.emplace_back(s);
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) names.push_back("PSL(2," + std::to_string(q) + ")");
  for (int q : {3, 5, 7, 9, 11, 13}) names.push_back("SL(2," + std::to_string(q) + ")");
  for (const auto& d : semidirect_dataset_names()) names.push_back(d);
  names.emplace_back("M11");
  for (const char* p : {"Q8 x C3", "S3 x C5", "D10 x C3", "A4 x C5", "SL(2,3) x C5", "Q8 x C7", "E8:C7 x C3",
                        "A5 x C7", "SL(2,5) x C7", "PSL(2,8) x C5", "SL(2,7) x C5"})
    names.emplace_back(p);
  CorpusManifest m;
  for (const auto& n : names) m.entries.push_back(named_entry(n));
  return m;
}

CorpusManifest CorpusManifest::parse(std::string_view text) {
  CorpusManifest m;
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    std::string_view entry_text = line, overrides;
    if (auto bar = line.find('|'); bar != std::string_view::npos) {
      entry_text = trim(line.substr(0, bar));
      overrides = trim(line.substr(bar + 1));
    }
    CorpusEntry e;
    try {
      if (entry_text.substr(0, 5) == "file:") {
        e.file = std::string(trim(entry_text.substr(5)));
        if (e.file.empty()) throw ParseError("file entry without a path", lineno);
        e.id = e.file;
      } else {
        e = named_entry(entry_text);
      }
    } catch (const ParseError& err) {
      throw ParseError(err.what(), lineno);
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what(), lineno);
    }
    std::istringstream ss{std::string(overrides)};
    for (std::string kv; ss >> kv;) apply_override(e.caps, kv, lineno);
    m.entries.push_back(std::move(e));
  }
  return m;
}

const SylowShape* GroupAnalysis::shape_for(std::uint64_t p) const {
  for (const auto& s : sylow_shapes)
    if (s.p == p) return &s;
  return nullptr;
}

GroupAnalysis analyze_group(std::string id, const Group& g, const Caps& caps, bool pi_only) {
  GroupAnalysis a{std::move(id), g, std::nullopt, caps, true, {}, {}};
  if (g.enumerable(caps.element)) {
    a.solvable = is_solvable(g);
    for (std::uint64_t p : prime_divisors(g.order())) a.sylow_shapes.push_back(sylow_shape(sylow_subgroup(g, p)));
  }
  a.report = hierarchy_report(g, a.id, pi_only, caps);
  return a;
}

const GroupAnalysis* Corpus::find(std::string_view id) const {
  for (const auto& g : groups)
    if (g.id == id) return &g;
  return nullptr;
}

Corpus run_corpus(const CorpusManifest& manifest, unsigned jobs) {
  const std::size_t n = manifest.entries.size();
  std::vector<std::optional<GroupAnalysis>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      const auto& e = manifest.entries[i];
      try {
        Group g = e.file.empty() ? construct(e.name) : ingest(e.file);
        slots[i] = analyze_group(e.id, g, e.caps);
        if (e.file.empty() && e.name.family == NamedGroupId::Family::DirectProduct) slots[i]->name = e.name;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Corpus c;
  for (auto& s : slots) c.groups.push_back(std::move(*s));
  return c;
}

// -- checks -----------------------------------------------------------------------------

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string describe(const Subgroup& s) {
  std::string out = "order " + std::to_string(s.order()) + " <";
  bool first = true;
  for (const auto& p : s.generator_perms()) {
    out += (first ? "" : ", ") + p.to_cycle_string();
    first = false;
  }
  return out + ">";
}

std::string describe(const Witness& w) {
  return std::string(class_name(w.class_id)) + " witness at order " + std::to_string(w.order) + ": " +
         describe(w.first) + " vs " + describe(w.second);
}

// Per-check bookkeeping: one instance line per applicable group.
class Tally {
 public:
  Tally(std::string id, std::string statement) {
    r_.id = std::move(id);
    r_.statement = std::move(statement);
  }
  void pass(const std::string& group, const std::string& msg) { add(group, "pass", msg, passes_); }
  void fail(const std::string& group, const std::string& msg) { add(group, "FAIL", msg, fails_); }
  void skip(const std::string& group, const std::string& msg) { add(group, "skipped", msg, skips_); }
  void note(const std::string& text) { notes_.push_back(text); }

  CheckResult finish() {
    if (fails_) r_.status = CheckStatus::Fail;
    else if (passes_) r_.status = CheckStatus::Pass;
    else if (skips_) r_.status = CheckStatus::Skipped;
    else r_.status = CheckStatus::Vacuous;
    std::ostringstream d;
    d << passes_ + fails_ + skips_ << " applicable, " << fails_ << " violations, " << skips_ << " skipped";
    for (const auto& n : notes_) d << "; " << n;
    r_.details = d.str();
    return std::move(r_);
  }

 private:
  void add(const std::string& group, const char* tag, const std::string& msg, int& counter) {
    ++counter;
    r_.instances.push_back(group + ": " + tag + (msg.empty() ? "" : " (" + msg + ")"));
  }
  CheckResult r_;
  int passes_ = 0, fails_ = 0, skips_ = 0;
  std::vector<std::string> notes_;
};

using Verdicts = VerdictKind;

bool member(const GroupAnalysis& g, ClassId c) { return g.report.member(c); }

Verdict decide_quotient(const Group& q, ClassId c, const Caps& caps) { return decide(q, c, caps); }

bool shape_is(const SylowShape& s, SylowShape::Tag t) { return s.tag == t; }

// Order of x modulo the normal subgroup n.
std::uint64_t order_mod(const ElementTable& t, Elem x, const Subgroup& n) {
  std::uint64_t k = 1;
  for (Elem y = x; !n.contains(y); y = t.mul(y, x)) ++k;
  return k;
}

bool quotient_is_cyclic(const Group& g, const Subgroup& n) {
  const auto& t = g.elements();
  const std::uint64_t index = g.order() / n.order();
  for (Elem x = 0; x < t.size(); ++x)
    if (order_mod(t, x, n) == index) return true;
  return false;
}

struct Target {
  std::string name;
  Group group;
};

const std::vector<Target>& t12_targets() {
  static const std::vector<Target> targets = [] {
    std::vector<Target> v;
    for (const char* n : {"E4:C3", "E8:(C7:C3)", "E8:C7", "E32:(C31:C5)", "Q8:C3"}) v.push_back({n, construct(n)});
    return v;
  }();
  return targets;
}

// "exact" or "fingerprint-consistent" when q matches `target`, empty otherwise.
std::string match_level(const Group& q, const Group& target, const Caps& caps) {
  if (q.order() != target.order()) return {};
  if (q.order() <= caps.iso) return is_isomorphic_small(q, target, caps.iso) ? "exact" : "";
  return structural_fingerprint(q) == structural_fingerprint(target) ? "fingerprint-consistent" : "";
}

std::string shapes_text(const GroupAnalysis& g) {
  std::string out;
  for (const auto& s : g.sylow_shapes) out += (out.empty() ? "" : ",") + s.label();
  return out;
}

using CheckFn = std::function<CheckResult(const Corpus&)>;

struct CheckDef {
  std::string id;
  std::string statement;
  CheckFn fn;
};

// -- individual checks ---------------------------------------------------------------

CheckResult check_t5(const Corpus& c, bool solvable_all_quotients) {
  Tally t(solvable_all_quotients ? "T16" : "T5",
          solvable_all_quotients ? "solvable G in A_pi => every quotient G/N in A_pi"
                                 : "G in A_pi, N normal of odd order => G/N in A_pi");
  for (const auto& g : c.groups) {
    if (!member(g, ClassId::A_pi)) continue;
    if (solvable_all_quotients && !g.solvable) continue;
    std::vector<Subgroup> normals;
    try {
      normals = normal_subgroups(g.group);
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
      continue;
    }
    int tested = 0, skipped = 0;
    std::string failure;
    for (const auto& n : normals) {
      if (n.is_trivial() || n.order() == g.group.order()) continue;
      if (!solvable_all_quotients && n.order() % 2 == 0) continue;
      try {
        Group q = quotient(g.group, n);
        Verdict v = decide_quotient(q, ClassId::A_pi, g.caps);
        if (v.kind == Verdicts::Undecided) {
          ++skipped;
          continue;
        }
        ++tested;
        if (v.kind == Verdicts::NonMember && failure.empty())
          failure = "G/N not in A_pi for N " + describe(n) + "; " + describe(*v.witness);
      } catch (const CapExceeded&) {
        ++skipped;
      }
    }
    if (!failure.empty()) t.fail(g.id, failure);
    else if (tested) t.pass(g.id, std::to_string(tested) + " quotients in A_pi" +
                                      (skipped ? ", " + std::to_string(skipped) + " skipped" : ""));
    else if (skipped) t.skip(g.id, std::to_string(skipped) + " quotients beyond caps");
  }
  return t.finish();
}

CheckResult check_t5_remark(const Corpus& c) {
  Tally t("T5-remark", "SL(2,7) in A_pi while SL(2,7)/Z is not in A_pi");
  const GroupAnalysis* g = c.find("SL(2,7)");
  if (!g) return t.finish();
  if (!member(*g, ClassId::A_pi)) {
    t.fail(g->id, "SL(2,7) is not in A_pi");
    return t.finish();
  }
  Subgroup z = center(g->group);
  Group q = quotient(g->group, z);
  Verdict v = decide(q, ClassId::A_pi, g->caps);
  if (v.kind == Verdicts::NonMember && verify_witness(q, *v.witness))
    t.pass(g->id, "|Z| = " + std::to_string(z.order()) + ", quotient of order " + std::to_string(q.order()) +
                      " has " + describe(*v.witness));
  else if (v.kind == Verdicts::Undecided)
    t.skip(g->id, v.note);
  else
    t.fail(g->id, "quotient by the center is in A_pi or its witness does not verify");
  return t.finish();
}

CheckResult check_shapes_nonsolvable(const Corpus& c, bool odd) {
  using Tag = SylowShape::Tag;
  Tally t(odd ? "T9" : "T10", odd ? "non-solvable G in A_pi => odd Sylow subgroups cyclic or elementary abelian"
                                  : "non-solvable G in A_pi => Sylow 2-subgroup in {Q_2^n, Q8, E4, E8, E32}");
  for (const auto& g : c.groups) {
    if (g.solvable || !member(g, ClassId::A_pi)) continue;
    if (g.sylow_shapes.empty()) {
      t.skip(g.id, "no Sylow data");
      continue;
    }
    bool ok = true;
    std::string bad;
    for (const auto& s : g.sylow_shapes) {
      if (odd && s.p != 2 && !(shape_is(s, Tag::Cyclic) || shape_is(s, Tag::ElementaryAbelian))) {
        ok = false;
        bad = s.label();
      }
      if (!odd && s.p == 2) {
        const bool allowed = shape_is(s, Tag::GeneralizedQuaternion) || shape_is(s, Tag::QuaternionQ8) ||
                             (shape_is(s, Tag::ElementaryAbelian) && (s.rank == 2 || s.rank == 3 || s.rank == 5));
        if (!allowed) {
          ok = false;
          bad = s.label();
        }
      }
    }
    if (ok) t.pass(g.id, shapes_text(g));
    else t.fail(g.id, "Sylow shape " + bad);
  }
  return t.finish();
}

// Suzuki 2-groups have more than one involution and all of them central.
bool suzuki_compatible(const Subgroup& s) {
  const auto& t = s.table();
  int involutions = 0;
  for (Elem x : s.elements()) {
    if (t.order(x) != 2) continue;
    ++involutions;
    for (Elem y : s.generators())
      if (t.mul(x, y) != t.mul(y, x)) return false;
  }
  return involutions > 1;
}

CheckResult check_t11(const Corpus& c) {
  using Tag = SylowShape::Tag;
  Tally t("T11", "solvable G in C_pi => Sylow subgroups cyclic, elementary abelian, Q8 or a Suzuki 2-group");
  int alternatives = 0;
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::C_pi) || g.sylow_shapes.empty()) continue;
    std::string bad, alt;
    for (const auto& s : g.sylow_shapes) {
      if (shape_is(s, Tag::Cyclic) || shape_is(s, Tag::ElementaryAbelian)) continue;
      if (s.p == 2 && shape_is(s, Tag::QuaternionQ8)) continue;
      if (s.p == 2 && suzuki_compatible(sylow_subgroup(g.group, 2))) {
        alt = s.label();
        continue;
      }
      bad = s.label();
    }
    if (!bad.empty()) t.fail(g.id, "Sylow shape " + bad);
    else if (!alt.empty()) {
      ++alternatives;
      t.pass(g.id, "Sylow 2-subgroup " + alt + " reported as the Suzuki alternative (not classified)");
    } else {
      t.pass(g.id, shapes_text(g));
    }
  }
  t.note(std::to_string(alternatives) + " Suzuki alternatives reported");
  return t.finish();
}

bool t12_shape_ok(const SylowShape& s) {
  using Tag = SylowShape::Tag;
  if (s.tag == Tag::Cyclic) return true;
  if (s.tag == Tag::QuaternionQ8) return true;
  if (s.tag != Tag::ElementaryAbelian) return false;
  if (s.p == 2) return s.rank == 2 || s.rank == 3 || s.rank == 5;
  return s.rank == 2 || s.rank == 3;
}

CheckResult check_t12(const Corpus& c) {
  Tally t("T12",
          "solvable G in A_pi => Sylow shapes in {C, E_p^2, E_p^3 (p odd), E4, E8, E32, Q8} and G/O_2'(G) in "
          "{C_2^a, E4:C3, E8:(C7:C3), E8:C7, E32:(C31:C5), Q8:C3}");
  int exact = 0, fingerprint = 0;
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi)) continue;
    std::string bad;
    for (const auto& s : g.sylow_shapes)
      if (!t12_shape_ok(s)) bad = s.label();
    if (!bad.empty()) {
      t.fail(g.id, "Sylow shape " + bad);
      continue;
    }
    try {
      Subgroup o = o_pprime(g.group, 2);
      Group q = quotient(g.group, o);
      std::string matched, level;
      if (p_part(q.order(), 2) == q.order() && whole_group(q).is_cyclic()) {
        matched = "C" + std::to_string(q.order());
        level = "exact";
      } else {
        for (const auto& target : t12_targets()) {
          level = match_level(q, target.group, g.caps);
          if (!level.empty()) {
            matched = target.name;
            break;
          }
        }
      }
      if (matched.empty()) {
        t.fail(g.id, "G/O_2'(G) of order " + std::to_string(q.order()) + " matches no target");
        continue;
      }
      (level == "exact" ? exact : fingerprint)++;
      t.pass(g.id, "G/O_2'(G) = " + matched + " (" + level + ")");
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  t.note(std::to_string(exact) + " exact, " + std::to_string(fingerprint) + " fingerprint-consistent");
  return t.finish();
}

CheckResult check_c13(const Corpus& c) {
  Tally t("C13", "solvable G in A_pi with non-cyclic Sylow p-subgroup S => S normal or S = Q8");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi)) continue;
    std::string failure, seen;
    bool any = false;
    for (const auto& s : g.sylow_shapes) {
      if (s.tag == SylowShape::Tag::Cyclic) continue;
      any = true;
      Subgroup sp = sylow_subgroup(g.group, s.p);
      const bool normal = is_normal(sp);
      if (!normal && s.tag != SylowShape::Tag::QuaternionQ8) failure = s.label() + " is neither normal nor Q8";
      seen += (seen.empty() ? "" : ", ") + s.label() + (normal ? " normal" : " non-normal");
    }
    if (!any) continue;
    if (failure.empty()) t.pass(g.id, seen);
    else t.fail(g.id, failure);
  }
  return t.finish();
}

CheckResult check_c14(const Corpus& c) {
  Tally t("C14", "E25:SL(2,3) is in B and its Q8 Sylow 2-subgroup is not normal");
  const GroupAnalysis* g = c.find("E25:SL(2,3)");
  if (!g) return t.finish();
  const Verdict& b = g->report.at(ClassId::B);
  Subgroup s2 = sylow_subgroup(g->group, 2);
  const SylowShape shape = sylow_shape(s2);
  const bool normal = is_normal(s2);
  if (b.kind == Verdicts::Undecided) {
    t.skip(g->id, b.note);
  } else if (b.kind == Verdicts::Member && shape.tag == SylowShape::Tag::QuaternionQ8 && !normal) {
    t.pass(g->id, "member of B, Sylow 2-subgroup " + shape.label() + " not normal");
  } else {
    t.fail(g->id, std::string("B ") + std::string(verdict_name(b.kind)) + ", Sylow 2-subgroup " + shape.label() +
                      (normal ? " normal" : " not normal"));
  }
  return t.finish();
}

CheckResult check_t15(const Corpus& c) {
  Tally t("T15", "solvable G in A_pi => G in B_pi");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi)) continue;
    const Verdict& v = g.report.at(ClassId::B_pi);
    if (v.kind == Verdicts::Member) t.pass(g.id, "");
    else if (v.kind == Verdicts::Undecided) t.skip(g.id, v.note);
    else t.fail(g.id, describe(*v.witness));
  }
  return t.finish();
}

CheckResult check_t17(const Corpus& c) {
  Tally t("T17", "G = A x B with coprime orders, G/A and G/B in A_pi => G in A_pi");
  for (const auto& g : c.groups) {
    if (!g.name || g.name->factors.size() < 2) continue;
    NamedGroupId left = g.name->factors.front();
    NamedGroupId right;
    right.family = NamedGroupId::Family::DirectProduct;
    right.factors.assign(g.name->factors.begin() + 1, g.name->factors.end());
    if (right.factors.size() == 1) right = right.factors.front();
    const Group a = construct(left);
    const std::uint64_t oa = a.order(), ob = g.group.order() / oa;
    if (std::gcd(oa, ob) != 1) continue;
    const std::size_t da = a.degree();
    // the factors are the pointwise stabilizers of the other factor's block
    const auto& tab = g.group.elements();
    std::vector<Elem> n1, n2;
    for (Elem e = 0; e < tab.size(); ++e) {
      auto img = tab.images(e);
      bool fixes_left = true, fixes_right = true;
      for (std::size_t i = 0; i < img.size(); ++i)
        (i < da ? fixes_left : fixes_right) &= img[i] == i;
      if (fixes_right) n1.push_back(e);
      if (fixes_left) n2.push_back(e);
    }
    try {
      Verdict q1 = decide(quotient(g.group, Subgroup::from_elements(g.group, n1)), ClassId::A_pi, g.caps);
      Verdict q2 = decide(quotient(g.group, Subgroup::from_elements(g.group, n2)), ClassId::A_pi, g.caps);
      if (q1.kind == Verdicts::Undecided || q2.kind == Verdicts::Undecided) {
        t.skip(g.id, "quotient verdict undecided");
        continue;
      }
      if (q1.kind != Verdicts::Member || q2.kind != Verdicts::Member) continue;
      const Verdict& v = g.report.at(ClassId::A_pi);
      if (v.kind == Verdicts::Member) t.pass(g.id, "both quotients and G in A_pi");
      else if (v.kind == Verdicts::Undecided) t.skip(g.id, v.note);
      else t.fail(g.id, describe(*v.witness));
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  return t.finish();
}

CheckResult check_facts(const Corpus& c) {
  Tally t("T1/T4", "PSL(2,8) in B_pi (and B); SL(2,5) in B; A5 in B");
  struct Fact {
    const char* id;
    ClassId cls;
  };
  for (const Fact& f : {Fact{"PSL(2,8)", ClassId::B_pi}, Fact{"PSL(2,8)", ClassId::B}, Fact{"SL(2,5)", ClassId::B},
                        Fact{"A5", ClassId::B}}) {
    const GroupAnalysis* g = c.find(f.id);
    if (!g) continue;
    const Verdict& v = g->report.at(f.cls);
    const std::string label = std::string(f.id) + " in " + std::string(class_name(f.cls));
    if (v.kind == Verdicts::Member) t.pass(label, v.inferred ? v.note : "");
    else if (v.kind == Verdicts::Undecided) t.skip(label, v.note);
    else t.fail(label, describe(*v.witness));
  }
  return t.finish();
}

bool all_cyclic(const GroupAnalysis& g) {
  return std::all_of(g.sylow_shapes.begin(), g.sylow_shapes.end(),
                     [](const SylowShape& s) { return s.tag == SylowShape::Tag::Cyclic; });
}

CheckResult check_t20_1(const Corpus& c) {
  Tally t("T20-1",
          "solvable G in A_pi with all Sylow subgroups cyclic => G in B, G' and G/G' cyclic, gcd(|G'|, |G/G'|) = 1");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi) || !all_cyclic(g)) continue;
    const Verdict& b = g.report.at(ClassId::B);
    Subgroup d = derived_subgroup(whole_group(g.group));
    const std::uint64_t index = g.group.order() / d.order();
    std::string failure;
    if (b.kind == Verdicts::NonMember) failure = "not in B: " + describe(*b.witness);
    else if (!d.is_cyclic()) failure = "G' not cyclic";
    else if (!quotient_is_cyclic(g.group, d)) failure = "G/G' not cyclic";
    else if (std::gcd(d.order(), index) != 1) failure = "|G'| and |G/G'| not coprime";
    if (!failure.empty()) t.fail(g.id, failure);
    else if (b.kind == Verdicts::Undecided) t.skip(g.id, b.note);
    else t.pass(g.id, "|G'| = " + std::to_string(d.order()) + ", |G/G'| = " + std::to_string(index));
  }
  return t.finish();
}

std::vector<Subgroup> normal_of_order(const Group& g, std::uint64_t order) {
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(g))
    if (n.order() == order) out.push_back(std::move(n));
  return out;
}

CheckResult check_t20_3(const Corpus& c) {
  Tally t("T20-3",
          "solvable G in A_pi with normal E4 => Sylow 2 = E4, Sylow 3 = <f> cyclic, E4<f> in B, O_2'(G)<f> in B_pi");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi) || g.group.order() % 4) continue;
    try {
      std::optional<Subgroup> e4;
      for (auto& n : normal_of_order(g.group, 4))
        if (!n.is_cyclic()) e4 = n;
      if (!e4) continue;
      std::string failure;
      const SylowShape* s2 = g.shape_for(2);
      const SylowShape* s3 = g.shape_for(3);
      if (!s2 || s2->order != 4) failure = "Sylow 2-subgroup is not E4";
      else if (!s3 || s3->tag != SylowShape::Tag::Cyclic) failure = "Sylow 3-subgroup missing or not cyclic";
      if (failure.empty()) {
        Subgroup f = sylow_subgroup(g.group, 3);
        Verdict vb = decide(join(*e4, f).as_group(), ClassId::B, g.caps);
        Subgroup hall = join(o_pprime(g.group, 2), f);
        Verdict vh = decide(hall.as_group(), ClassId::B_pi, g.caps);
        if (vb.kind == Verdicts::NonMember) failure = "E4<f> not in B";
        else if (hall.order() % 2 == 0 || vh.kind == Verdicts::NonMember) failure = "O_2'(G)<f> not an odd B_pi group";
        else if (vb.kind == Verdicts::Undecided || vh.kind == Verdicts::Undecided) {
          t.skip(g.id, "subgroup verdict undecided");
          continue;
        }
      }
      if (failure.empty()) t.pass(g.id, "E4<f> in B, O_2'(G)<f> in B_pi");
      else t.fail(g.id, failure);
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  return t.finish();
}

CheckResult check_t20_5(const Corpus& c) {
  Tally t("T20-5",
          "solvable G in A_pi containing Q8 => either Q8 normal with G/C_G(Q8) = A4 and G/O_2'(G) = SL(2,3), or "
          "QF/F normal in G/F with G/F in B");
  static const Group a4 = construct("A4");
  static const Group sl23 = construct("Q8:C3");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi)) continue;
    const SylowShape* s2 = g.shape_for(2);
    if (!s2 || s2->tag != SylowShape::Tag::QuaternionQ8) continue;
    try {
      Subgroup q = sylow_subgroup(g.group, 2);
      if (is_normal(q)) {
        Group mod_c = quotient(g.group, centralizer(q));
        Group mod_o = quotient(g.group, o_pprime(g.group, 2));
        const bool a4_ok = is_isomorphic_small(mod_c, a4, std::max<std::uint64_t>(g.caps.iso, 24));
        const bool sl_ok = is_isomorphic_small(mod_o, sl23, std::max<std::uint64_t>(g.caps.iso, 24));
        if (a4_ok && sl_ok) t.pass(g.id, "Q8 normal, G/C(Q8) = A4, G/O_2'(G) = SL(2,3) (exact)");
        else t.fail(g.id, std::string("Q8 normal but ") + (a4_ok ? "G/O_2'(G) is not SL(2,3)" : "G/C(Q8) is not A4"));
      } else {
        Subgroup f = fitting_subgroup(g.group);
        const bool qf_normal = is_normal(join(q, f));
        Verdict vb = decide(quotient(g.group, f), ClassId::B, g.caps);
        if (!qf_normal) t.fail(g.id, "QF/F not normal in G/F");
        else if (vb.kind == Verdicts::NonMember) t.fail(g.id, "G/F(G) not in B");
        else if (vb.kind == Verdicts::Undecided) t.skip(g.id, vb.note);
        else t.pass(g.id, "Q8 not normal, QF/F normal, G/F(G) of order " + std::to_string(g.group.order() / f.order()) +
                              " in B");
      }
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  return t.finish();
}

CheckResult check_t20_6(const Corpus& c) {
  Tally t("T20-6",
          "solvable G in A_pi with a normal C2 => cyclic Sylow 2 with G/O_2'(G) cyclic, or normal Sylow 2 = Q8");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi) || g.group.order() % 2) continue;
    try {
      if (normal_of_order(g.group, 2).empty()) continue;
      const SylowShape* s2 = g.shape_for(2);
      Subgroup o = o_pprime(g.group, 2);
      if (s2->tag == SylowShape::Tag::Cyclic && quotient_is_cyclic(g.group, o) &&
          g.group.order() / o.order() == s2->order)
        t.pass(g.id, "G/O_2'(G) = C" + std::to_string(s2->order));
      else if (s2->tag == SylowShape::Tag::QuaternionQ8 && is_normal(sylow_subgroup(g.group, 2)))
        t.pass(g.id, "normal Sylow 2-subgroup Q8");
      else
        t.fail(g.id, "Sylow 2-subgroup " + s2->label() + " fits neither alternative");
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  return t.finish();
}

// Smallest prime p for which G has an elementary abelian subgroup of order p^2.
std::vector<std::uint64_t> primes_with_e_p2(const GroupAnalysis& g) {
  std::vector<std::uint64_t> out;
  for (const auto& s : g.sylow_shapes) {
    if (s.order < s.p * s.p || s.tag == SylowShape::Tag::Cyclic) continue;
    for (const auto& cls : p_subgroup_classes(g.group, s.p, g.caps)) {
      const auto& fp = cls.fingerprint;
      if (fp.order == s.p * s.p && fp.abelian && fp.element_orders.size() == 2) {
        out.push_back(s.p);
        break;
      }
    }
  }
  return out;
}

CheckResult check_t18(const Corpus& c, bool corollary) {
  Tally t(corollary ? "C19" : "T18",
          corollary ? "solvable G in A_pi with E_p^2 < G => G/O_p'(G) in B"
                    : "solvable G in A_pi with E_p^2 < G => G/O_p'(G) has a normal non-cyclic elementary abelian "
                      "Sylow p and cyclic other Sylows, or p in {5, 11} with the E_p^2:SL(2,3) exceptions");
  static const Group e25 = construct("E25:SL(2,3)");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi)) continue;
    try {
      for (std::uint64_t p : primes_with_e_p2(g)) {
        const std::string label = g.id + " (p=" + std::to_string(p) + ")";
        Group q = quotient(g.group, o_pprime(g.group, p));
        if (corollary) {
          Verdict v = decide(q, ClassId::B, g.caps);
          if (v.kind == Verdicts::Member) t.pass(label, "quotient of order " + std::to_string(q.order()) + " in B");
          else if (v.kind == Verdicts::Undecided) t.skip(label, v.note);
          else t.fail(label, describe(*v.witness));
          continue;
        }
        Subgroup sp = sylow_subgroup(q, p);
        const SylowShape shp = sylow_shape(sp);
        bool first = is_normal(sp) && shp.tag == SylowShape::Tag::ElementaryAbelian;
        for (std::uint64_t r : prime_divisors(q.order()))
          if (r != p && !sylow_subgroup(q, r).is_cyclic()) first = false;
        if (first) {
          t.pass(label, "normal Sylow " + shp.label() + ", other Sylows cyclic");
        } else if (p == 5 && !match_level(q, e25, g.caps).empty()) {
          t.pass(label, "G/O_5'(G) = E25:SL(2,3) (" + match_level(q, e25, g.caps) + ")");
        } else if (p == 11) {
          t.skip(label, "E121 exceptions are not constructible here");
        } else {
          t.fail(label, "quotient of order " + std::to_string(q.order()) + " fits neither alternative");
        }
      }
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  return t.finish();
}

CheckResult check_t21(const Corpus& c) {
  Tally t("T21", "G in A_pi of even order with cyclic Sylow 2 and a non-cyclic Sylow p-subgroup A => A normal, "
                 "elementary abelian of rank 2 or 3");
  for (const auto& g : c.groups) {
    if (!member(g, ClassId::A_pi) || g.group.order() % 2) continue;
    const SylowShape* s2 = g.shape_for(2);
    if (!s2 || s2->tag != SylowShape::Tag::Cyclic) continue;
    for (const auto& s : g.sylow_shapes) {
      if (s.p == 2 || s.tag == SylowShape::Tag::Cyclic) continue;
      const bool ok = s.tag == SylowShape::Tag::ElementaryAbelian && (s.rank == 2 || s.rank == 3) &&
                      is_normal(sylow_subgroup(g.group, s.p));
      if (ok) t.pass(g.id, s.label() + " normal");
      else t.fail(g.id, "Sylow " + s.label() + " violates the conclusion");
    }
  }
  return t.finish();
}

CheckResult check_c22(const Corpus& c) {
  Tally t("C22", "solvable G in A_pi, no normal Q8, a normal C2 => cyclic Sylow 2 and G 2-nilpotent");
  for (const auto& g : c.groups) {
    if (!g.solvable || !member(g, ClassId::A_pi) || g.group.order() % 2) continue;
    try {
      if (normal_of_order(g.group, 2).empty()) continue;
      bool normal_q8 = false;
      for (const auto& n : normal_of_order(g.group, 8))
        if (sylow_shape(n).tag == SylowShape::Tag::QuaternionQ8) normal_q8 = true;
      if (normal_q8) continue;
      const SylowShape* s2 = g.shape_for(2);
      Subgroup o = o_pprime(g.group, 2);
      if (s2->tag == SylowShape::Tag::Cyclic && g.group.order() / o.order() == s2->order)
        t.pass(g.id, "Sylow " + s2->label() + ", normal 2-complement of order " + std::to_string(o.order()));
      else
        t.fail(g.id, "Sylow 2-subgroup " + s2->label());
    } catch (const CapExceeded& e) {
      t.skip(g.id, e.what());
    }
  }
  return t.finish();
}

CheckResult check_hierarchy_equal(const Corpus& c) {
  Tally t("H-eq", "B_pi = H_pi = N_pi verdicts agree on every group");
  for (const auto& g : c.groups) {
    const auto b = g.report.at(ClassId::B_pi).kind;
    const auto h = g.report.at(ClassId::H_pi).kind;
    const auto n = g.report.at(ClassId::N_pi).kind;
    if (b == Verdicts::Undecided || h == Verdicts::Undecided || n == Verdicts::Undecided) {
      t.skip(g.id, "undecided");
      continue;
    }
    if (b == h && h == n) t.pass(g.id, std::string(verdict_name(b)));
    else t.fail(g.id, "verdicts differ");
  }
  return t.finish();
}

CheckResult check_hierarchy_chain(const Corpus& c) {
  Tally t("H-chain", "membership respects B <= H <= N <= A <= C, the _pi chain and X <= X_pi");
  for (const auto& g : c.groups) {
    std::string failure;
    for (ClassId sub : kAllClassIds)
      for (ClassId super : kAllClassIds)
        if (class_contained_in(sub, super) && g.report.member(sub) && g.report.non_member(super))
          failure = std::string(class_name(sub)) + " member but " + std::string(class_name(super)) + " not";
    if (failure.empty()) t.pass(g.id, "");
    else t.fail(g.id, failure);
  }
  return t.finish();
}

CheckResult check_strict(const Corpus& c, ClassId in, ClassId out, const std::string& id) {
  Tally t(id, std::string(class_name(out)) + " is properly contained in " + std::string(class_name(in)));
  WitnessSearchResult w = witness_search(c, in, out);
  if (w.group_id) t.pass(*w.group_id, "smallest corpus witness, order " + std::to_string(w.order));
  else t.note("no corpus group is in " + std::string(class_name(in)) + " but outside " + std::string(class_name(out)));
  return t.finish();
}

CheckResult check_witnesses(const Corpus& c) {
  Tally t("W-verify", "every emitted witness re-verifies by exhaustive conjugator search");
  for (const auto& g : c.groups) {
    int n = 0;
    std::string failure;
    for (const auto& [cls, v] : g.report.verdicts) {
      if (v.kind != Verdicts::NonMember || v.inferred) continue;
      ++n;
      if (!verify_witness(g.group, *v.witness)) failure = std::string(class_name(cls)) + " witness fails";
    }
    if (!n) continue;
    if (failure.empty()) t.pass(g.id, std::to_string(n) + " witnesses");
    else t.fail(g.id, failure);
  }
  return t.finish();
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&](std::string id, CheckFn fn) { v.push_back({std::move(id), {}, std::move(fn)}); };
    add("T1/T4", check_facts);
    add("T5", [](const Corpus& c) { return check_t5(c, false); });
    add("T5-remark", check_t5_remark);
    add("T9", [](const Corpus& c) { return check_shapes_nonsolvable(c, true); });
    add("T10", [](const Corpus& c) { return check_shapes_nonsolvable(c, false); });
    add("T11", check_t11);
    add("T12", check_t12);
    add("C13", check_c13);
    add("C14", check_c14);
    add("T15", check_t15);
    add("T16", [](const Corpus& c) { return check_t5(c, true); });
    add("T17", check_t17);
    add("T18", [](const Corpus& c) { return check_t18(c, false); });
    add("C19", [](const Corpus& c) { return check_t18(c, true); });
    add("T20-1", check_t20_1);
    add("T20-3", check_t20_3);
    add("T20-5", check_t20_5);
    add("T20-6", check_t20_6);
    add("T21", check_t21);
    add("C22", check_c22);
    add("H-eq", check_hierarchy_equal);
    add("H-chain", check_hierarchy_chain);
    add("H-strict-NA", [](const Corpus& c) { return check_strict(c, ClassId::A_pi, ClassId::N_pi, "H-strict-NA"); });
    add("H-strict-AC", [](const Corpus& c) { return check_strict(c, ClassId::C_pi, ClassId::A_pi, "H-strict-AC"); });
    add("W-verify", check_witnesses);
    return v;
  }();
  return defs;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

CheckResult run_check(std::string_view id, const Corpus& corpus) {
  for (const auto& d : registry())
    if (d.id == id) return d.fn(corpus);
  throw InvalidArgument("unknown check '" + std::string(id) + "'");
}

std::vector<CheckResult> run_checks(const Corpus& corpus, const std::vector<std::string>& only) {
  for (const auto& id : only)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw InvalidArgument("unknown check '" + id + "'");
  std::vector<CheckResult> out;
  for (const auto& d : registry())
    if (only.empty() || std::find(only.begin(), only.end(), d.id) != only.end()) out.push_back(d.fn(corpus));
  return out;
}

WitnessSearchResult witness_search(const Corpus& corpus, ClassId in, ClassId out) {
  WitnessSearchResult r;
  for (const auto& g : corpus.groups) {
    if (!g.report.verdicts.count(in) || !g.report.verdicts.count(out)) continue;
    if (!g.report.member(in) || !g.report.non_member(out)) continue;
    if (!r.group_id || g.group.order() < r.order) {
      r.group_id = g.id;
      r.order = g.group.order();
    }
  }
  return r;
}

}  // namespace fgc
