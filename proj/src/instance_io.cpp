#include "b1grid/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "b1grid/errors.hpp"

namespace b1grid {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::istringstream words{raw};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::int64_t to_int(const Line& line, std::size_t k) {
  const std::string& s = line.tokens[k];
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(line.number, "not an integer: '" + s + "'");
  return v;
}

std::size_t to_count(const Line& line, std::size_t k) {
  const std::int64_t v = to_int(line, k);
  if (v < 0) throw ParseError(line.number, "negative value: " + line.tokens[k]);
  return static_cast<std::size_t>(v);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw ParseError(line.number, "'" + line.tokens[0] + "' takes " + std::to_string(n - 1) + " arguments, got " +
                                      std::to_string(line.tokens.size() - 1));
}

}  // namespace

ReductionInstance parse_labelled_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'mode' line");

  ReductionInstance inst;
  const Line& head = lines.front();
  if (head.tokens[0] != "mode") throw ParseError(head.number, "first directive must be 'mode'");
  expect_arity(head, 2);
  if (head.tokens[1] == "vpg")
    inst.rep.mode = Mode::VPG;
  else if (head.tokens[1] == "epg")
    inst.rep.mode = Mode::EPG;
  else
    throw ParseError(head.number, "mode must be 'vpg' or 'epg'");

  std::set<PathId> ids;
  std::vector<std::pair<std::size_t, PathId>> label_lines;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& what = line.tokens[0];
    if (what == "path") {
      expect_arity(line, 6);
      const GridPath p =
          GridPath::make(to_int(line, 1), to_int(line, 2), to_int(line, 3), to_int(line, 4), to_int(line, 5));
      if (!ids.insert(p.id).second) throw ParseError(line.number, "duplicate path id " + line.tokens[1]);
      inst.rep.paths.push_back(p);
    } else if (what == "line") {
      expect_arity(line, 3);
      if (line.tokens[1] != "v" && line.tokens[1] != "h") throw ParseError(line.number, "line axis must be 'v' or 'h'");
      auto& slot = line.tokens[1] == "v" ? inst.rep.vline : inst.rep.hline;
      if (slot) throw ParseError(line.number, "repeated 'line " + line.tokens[1] + "'");
      slot = to_int(line, 2);
    } else if (what == "label") {
      expect_arity(line, 3);
      const PathId id = to_int(line, 1);
      auto role = parse_role(line.tokens[2]);
      if (!role) throw ParseError(line.number, "bad role '" + line.tokens[2] + "'");
      if (!inst.labels.emplace(id, *role).second) throw ParseError(line.number, "repeated label for " + line.tokens[1]);
      label_lines.emplace_back(line.number, id);
    } else if (what == "mode") {
      throw ParseError(line.number, "repeated 'mode'");
    } else {
      throw ParseError(line.number, "unknown directive '" + what + "'");
    }
  }
  for (const auto& [number, id] : label_lines)
    if (!ids.count(id)) throw ParseError(number, "label for unknown path " + std::to_string(id));
  return inst;
}

Representation parse_instance(std::string_view text) { return parse_labelled_instance(text).rep; }

std::string emit_instance(const Representation& rep) { return emit_instance(ReductionInstance{rep, {}}); }

std::string emit_instance(const ReductionInstance& inst) {
  std::ostringstream out;
  const Representation& rep = inst.rep;
  out << "mode " << to_string(rep.mode) << '\n';
  if (rep.vline) out << "line v " << *rep.vline << '\n';
  if (rep.hline) out << "line h " << *rep.hline << '\n';
  for (const auto& p : rep.paths)
    out << "path " << p.id << ' ' << p.corner.x << ' ' << p.corner.y << ' ' << p.h_tip.x << ' ' << p.v_tip.y << '\n';
  for (const auto& [id, role] : inst.labels) out << "label " << id << ' ' << to_token(role) << '\n';
  return out.str();
}

SimpleGraph parse_graph(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'graph' line");
  const Line& head = lines.front();
  if (head.tokens[0] != "graph") throw ParseError(head.number, "first directive must be 'graph'");
  expect_arity(head, 2);

  SimpleGraph g;
  g.n = to_count(head, 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "edge") throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    expect_arity(line, 3);
    std::size_t u = to_count(line, 1), v = to_count(line, 2);
    if (u >= g.n || v >= g.n) throw ParseError(line.number, "endpoint out of range");
    if (u == v) throw ParseError(line.number, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw ParseError(line.number, "repeated edge");
    g.edges.emplace_back(u, v);
  }
  return g;
}

std::string emit_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph " << g.n << '\n';
  for (const auto& [u, v] : g.edges) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

Solution parse_solution(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing 'solution' line");
  const Line& head = lines.front();
  if (head.tokens[0] != "solution") throw ParseError(head.number, "first directive must be 'solution'");
  expect_arity(head, 3);

  Solution s;
  s.kind = head.tokens[1];
  const std::size_t size = to_count(head, 2);
  std::set<std::int64_t> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "member") throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
    expect_arity(line, 2);
    if (!seen.insert(to_int(line, 1)).second) throw ParseError(line.number, "repeated member " + line.tokens[1]);
  }
  if (seen.size() != size)
    throw ParseError(head.number, "declared size " + std::to_string(size) + " but found " +
                                      std::to_string(seen.size()) + " members");
  s.members.assign(seen.begin(), seen.end());
  return s;
}

std::string emit_solution(const std::string& kind, const std::vector<std::int64_t>& members) {
  std::vector<std::int64_t> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << "solution " << kind << ' ' << sorted.size() << '\n';
  for (auto m : sorted) out << "member " << m << '\n';
  return out.str();
}

}  // namespace b1grid
