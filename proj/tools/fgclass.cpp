// fgclass: class membership and corpus checks for finite permutation groups.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "fgc/error.hpp"
#include "fgc/harness.hpp"

namespace {

struct CapFlags {
  std::optional<std::uint64_t> element, full_enum, iso, sylow;

  void add_to(CLI::App& app) {
    app.add_option("--cap-element", element, "largest group order to enumerate");
    app.add_option("--cap-full-enum", full_enum, "largest order for full subgroup enumeration");
    app.add_option("--cap-iso", iso, "largest order for isomorphism tests");
    app.add_option("--cap-sylow", sylow, "largest Sylow order for p-subgroup enumeration");
  }
  fgc::Caps apply(fgc::Caps c) const {
    if (element) c.element = *element;
    if (full_enum) c.full_enum = *full_enum;
    if (iso) c.iso = *iso;
    if (sylow) c.sylow = *sylow;
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fgc::InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fgc::InvalidArgument("cannot write " + path);
  out << text;
}

fgc::ClassId class_arg(const std::string& s) {
  auto c = fgc::parse_class_id(s);
  if (!c) throw fgc::InvalidArgument("unknown class '" + s + "'");
  return *c;
}

void print_checks(const std::vector<fgc::CheckResult>& checks, bool verbose) {
  for (const auto& c : checks) {
    std::cout << c.id << ": " << fgc::check_status_name(c.status) << " (" << c.details << ")\n";
    if (verbose)
      for (const auto& i : c.instances) std::cout << "    " << i << '\n';
  }
}

std::string generators_text(const fgc::Subgroup& s) {
  std::string out = "<";
  for (const auto& p : s.generator_perms()) out += (out.size() > 1 ? ", " : "") + p.to_cycle_string();
  return out + ">";
}

int checks_exit(const std::vector<fgc::CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == fgc::CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide finite-group class membership and check structural statements over a corpus"};
  app.require_subcommand(1);
  app.fallthrough();
  CapFlags caps;
  caps.add_to(app);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "report class verdicts for one group");
  std::string target, classes = "all", analyze_json;
  analyze->add_option("group", target, "group file path or name, e.g. \"SL(2,7)\" or \"Q8 x C3\"")->required();
  analyze->add_option("--classes", classes, "all ten classes or only the prime-power ones")
      ->check(CLI::IsMember({"all", "pi"}));
  analyze->add_option("--json", analyze_json, "write a JSON report to this path ('-' for stdout)");

  // corpus run
  auto* corpus = app.add_subcommand("corpus", "corpus operations");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto* run = corpus->add_subcommand("run", "analyse a corpus and run every check");
  std::string manifest_path, json_out, md_out;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> only;
  bool verbose = false;
  run->add_option("--manifest", manifest_path, "manifest file (default: built-in corpus)");
  run->add_option("--jobs,-j", jobs, "worker threads");
  run->add_option("--json", json_out, "write the JSON report to this path ('-' for stdout)");
  run->add_option("--markdown", md_out, "write a markdown summary to this path");
  run->add_option("--only", only, "restrict to these check ids")->delimiter(',');
  run->add_flag("--verbose,-v", verbose, "print per-group instances");

  // theorems
  auto* theorems = app.add_subcommand("theorems", "run checks over the built-in corpus");
  theorems->add_option("--only", only, "restrict to these check ids")->delimiter(',');
  theorems->add_option("--jobs,-j", jobs, "worker threads");
  theorems->add_flag("--verbose,-v", verbose, "print per-group instances");
  bool list = false;
  theorems->add_flag("--list", list, "list check ids and exit");

  // witness
  auto* witness = app.add_subcommand("witness", "smallest corpus group in one class but not another");
  std::string in_class, out_class;
  witness->add_option("class_in", in_class, "class the group must belong to, e.g. A_pi")->required();
  witness->add_option("class_out", out_class, "class the group must not belong to, e.g. B_pi")->required();
  witness->add_option("--manifest", manifest_path, "manifest file (default: built-in corpus)");
  witness->add_option("--jobs,-j", jobs, "worker threads");

  // construct
  auto* build = app.add_subcommand("construct", "write a named group as a group file");
  std::string group_name, out_path;
  build->add_option("group", group_name, "group name")->required();
  build->add_option("--emit", out_path, "output path (default stdout)");
  bool enable_large = false;
  build->add_flag("--enable-large", enable_large, "allow constructions over GF(32)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const fgc::Caps effective = caps.apply(fgc::default_caps());
  auto load_manifest = [&] {
    auto m = manifest_path.empty() ? fgc::CorpusManifest::default_corpus()
                                   : fgc::CorpusManifest::parse(read_file(manifest_path));
    for (auto& e : m.entries) e.caps = caps.apply(e.caps);
    return m;
  };

  try {
    if (*analyze) {
      const bool is_file = std::filesystem::is_regular_file(target);
      fgc::Group g = is_file ? fgc::ingest(target) : fgc::construct(target);
      const std::string id = is_file ? target : fgc::parse_group_name(target).to_string();
      fgc::Corpus c;
      c.groups.push_back(fgc::analyze_group(id, g, effective, classes == "pi"));
      if (!analyze_json.empty()) {
        write_or_print(analyze_json, fgc::emit_json(c, {}));
        if (analyze_json == "-") return 0;
      }
      const auto& a = c.groups.front();
      std::cout << a.id << ": order " << g.order() << ", degree " << g.degree() << ", "
                << (a.solvable ? "solvable" : "non-solvable") << '\n';
      std::cout << "Sylow subgroups:";
      for (const auto& s : a.sylow_shapes) std::cout << ' ' << s.label();
      std::cout << '\n';
      for (const auto& [cls, v] : a.report.verdicts) {
        std::cout << "  " << fgc::class_name(cls) << ": " << fgc::verdict_name(v.kind);
        if (v.inferred) std::cout << " (inferred)";
        if (v.witness && !v.inferred) {
          std::cout << "; order-" << v.witness->order << " witness " << generators_text(v.witness->first) << " vs "
                    << generators_text(v.witness->second);
        } else if (!v.note.empty()) {
          std::cout << "; " << v.note;
        }
        std::cout << '\n';
      }
      return 0;
    }
    if (*corpus) {
      fgc::Corpus c = fgc::run_corpus(load_manifest(), jobs);
      auto checks = fgc::run_checks(c, only);
      if (!json_out.empty()) write_or_print(json_out, fgc::emit_json(c, checks));
      if (!md_out.empty()) write_or_print(md_out, fgc::emit_markdown(c, checks));
      if (json_out != "-" && md_out != "-") print_checks(checks, verbose);
      return checks_exit(checks);
    }
    if (*theorems) {
      if (list) {
        for (const auto& id : fgc::check_ids()) std::cout << id << '\n';
        return 0;
      }
      auto m = fgc::CorpusManifest::default_corpus();
      for (auto& e : m.entries) e.caps = effective;
      fgc::Corpus c = fgc::run_corpus(m, jobs);
      auto checks = fgc::run_checks(c, only);
      print_checks(checks, verbose);
      return checks_exit(checks);
    }
    if (*witness) {
      const auto in = class_arg(in_class), out = class_arg(out_class);
      fgc::Corpus c = fgc::run_corpus(load_manifest(), jobs);
      auto w = fgc::witness_search(c, in, out);
      if (!w.group_id) {
        std::cout << "no corpus group is in " << in_class << " but not in " << out_class << '\n';
        return 1;
      }
      std::cout << *w.group_id << " (order " << w.order << ")\n";
      return 0;
    }
    if (*build) {
      fgc::ZooOptions opts;
      opts.enable_large = enable_large;
      fgc::Group g = fgc::construct(group_name, opts);
      write_or_print(out_path, fgc::emit_group_file(g, fgc::parse_group_name(group_name).to_string()));
      return 0;
    }
  } catch (const fgc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fgc::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fgc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
