#include <fstream>
#include <sstream>

#include "fgc/error.hpp"
#include "fgc/zoo.hpp"

namespace fgc {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// "keyword <number>" -> number, or nothing when the keyword does not match.
std::optional<std::uint64_t> keyword_value(std::string_view line, std::string_view keyword, std::size_t lineno) {
  if (line.substr(0, keyword.size()) != keyword) return std::nullopt;
  std::string_view rest = trim(line.substr(keyword.size()));
  if (rest.empty() || rest.size() > 18 || rest.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("expected a number after '" + std::string(keyword) + "'", lineno);
  return std::stoull(std::string(rest));
}

}  // namespace

Group parse_group_file(std::string_view text) {
  std::optional<std::size_t> degree;
  std::optional<std::uint64_t> order;
  std::size_t order_line = 0;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (!degree) {
      auto d = keyword_value(line, "degree", lineno);
      if (!d) throw ParseError("first line must be 'degree N'", lineno);
      if (*d < 1 || *d > kMaxDegree)
        throw ParseError("degree " + std::to_string(*d) + " outside 1.." + std::to_string(kMaxDegree), lineno);
      degree = static_cast<std::size_t>(*d);
      continue;
    }
    if (auto o = keyword_value(line, "order", lineno)) {
      if (order || !gens.empty()) throw ParseError("'order' must follow 'degree' and appear once", lineno);
      order = *o;
      order_line = lineno;
      continue;
    }
    try {
      Permutation p = Permutation::parse(line, *degree);
      if (p.degree() != *degree)
        throw ParseError("point beyond declared degree " + std::to_string(*degree));
      gens.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!degree) throw ParseError("missing 'degree N' line", lineno);
  Group g = gens.empty() ? Group::trivial(*degree) : Group(std::move(gens));
  if (order && *order != g.order())
    throw InvalidArgument("line " + std::to_string(order_line) + ": declared order " + std::to_string(*order) +
                          " but the generators give " + std::to_string(g.order()));
  return g;
}

Group ingest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string emit_group_file(const Group& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "degree " << g.degree() << "\n";
  out << "order " << g.order() << "\n";
  for (const auto& p : g.generators())
    if (!p.is_identity()) out << p.to_cycle_string() << "\n";
  return out.str();
}

}  // namespace fgc
