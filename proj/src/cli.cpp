#include "b1grid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "b1grid/errors.hpp"
#include "b1grid/exact.hpp"
#include "b1grid/generators.hpp"
#include "b1grid/greedy_epg.hpp"
#include "b1grid/hitting_set.hpp"
#include "b1grid/instance_io.hpp"
#include "b1grid/mis.hpp"
#include "b1grid/reduction.hpp"

namespace b1grid {

namespace {

// Bad invocation detected after argument parsing (missing file, bad choice).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::vector<std::int64_t> as_members(const IdSet& ids) { return {ids.begin(), ids.end()}; }

std::vector<std::int64_t> as_members(const std::vector<std::size_t>& values) {
  std::vector<std::int64_t> out;
  for (std::size_t v : values) out.push_back(static_cast<std::int64_t>(v));
  return out;
}

// Input graph recovered from the labels of a reduction instance.
SimpleGraph graph_from_labels(const ReductionInstance& inst) {
  SimpleGraph g;
  for (const auto& [id, role] : inst.labels) {
    if (role.kind == RoleKind::Gh) g.n = std::max(g.n, role.i + 1);
    if (role.kind == RoleKind::E1) g.edges.emplace_back(role.i, role.j);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Strict crossing holds for every x in (max lo, min hi]; the lowest such x.
std::optional<Coord> strict_line(const std::vector<Interval>& spans) {
  if (spans.empty()) return std::nullopt;
  Coord lo = std::numeric_limits<Coord>::min(), hi = std::numeric_limits<Coord>::max();
  for (const auto& s : spans) {
    lo = std::max(lo, s.lo);
    hi = std::min(hi, s.hi);
  }
  if (lo >= hi) return std::nullopt;
  return lo + 1;
}

std::optional<Coord> vertical_line_of(const Representation& rep) {
  if (rep.vline) return rep.vline;
  std::vector<Interval> spans;
  for (const auto& p : rep.paths) spans.push_back(p.h_span());
  return strict_line(spans);
}

std::optional<Coord> horizontal_line_of(const Representation& rep) {
  if (rep.hline) return rep.hline;
  std::vector<Interval> spans;
  for (const auto& p : rep.paths) spans.push_back(p.v_span());
  return strict_line(spans);
}

Representation instance_for(const std::string& family, std::size_t n, std::uint64_t seed) {
  if (family == "vpg") return gen_vpg(n, seed, true);
  if (family == "vpg-any") return gen_vpg(n, seed, false);
  if (family == "double-crossing") return gen_epg_double_crossing(n, seed);
  if (family == "vertical-crossing") return gen_epg_vertical_crossing(n, seed);
  throw UsageError("unknown family '" + family + "'");
}

std::string default_family(const std::string& algo) {
  if (algo == "mis" || algo == "mds-vpg") return "vpg";
  if (algo == "mds-epg") return "double-crossing";
  throw UsageError("unknown algorithm '" + algo + "'");
}

IdSet solve_with(const std::string& algo, const Representation& rep, std::uint64_t seed) {
  if (algo == "mis") return approx_mis(rep);
  if (algo == "mds-vpg") {
    NetParams params;
    params.rng_seed = seed;
    return approx_mds_one_string(rep, params);
  }
  if (algo == "mds-epg") return greedy_line_mds(rep);
  throw UsageError("unknown algorithm '" + algo + "'");
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct Options {
  std::string input, output, graph, solution, csv, check, family, algo;
  std::uint64_t seed = 1;
  std::size_t n = 10, m = 0, n_min = 0, n_max = 0, seeds = 3;
  bool one_string = false, no_timing = false;
};

int verify_command(const Options& o, std::ostream& out) {
  const ReductionInstance inst = parse_labelled_instance(read_file(o.input));
  const Representation& rep = inst.rep;
  bool ok = false;
  std::string why;

  if (o.check == "one-string") {
    ok = is_one_string(rep);
    if (!ok) why = "some pair of paths crosses more than once or overlaps";
  } else if (o.check == "general-position") {
    ok = weak_general_position(rep);
    if (!ok) why = "two paths share a corner";
  } else if (o.check == "double-crossing") {
    const auto ell = vertical_line_of(rep);
    const auto L = horizontal_line_of(rep);
    ok = !rep.paths.empty() ? ell && L && is_double_crossing(rep, *L, *ell) : true;
    if (!ok) why = "not every path crosses both reference lines";
  } else if (o.check == "vertical-crossing") {
    const auto ell = vertical_line_of(rep);
    ok = !rep.paths.empty() ? ell && is_vertical_crossing(rep, *ell) : true;
    if (!ok) why = "not every path crosses the vertical reference line";
  } else if (o.check == "non-containment") {
    ok = check_non_containment(rep);
    if (!ok) why = "a vertical part contains an edge-sharing neighbour's";
  } else if (o.check == "reduction") {
    const SimpleGraph g = o.graph.empty() ? graph_from_labels(inst) : parse_graph(read_file(o.graph));
    ok = verify_reduction(inst, g, &why);
  } else {
    throw UsageError("unknown check '" + o.check + "'");
  }
  out << (ok ? "ok\n" : "fail: " + why + "\n");
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

std::string bench(const BenchSuite& suite) {
  const std::string family = suite.family.empty() ? default_family(suite.algo) : suite.family;
  const bool maximize = suite.algo == "mis";

  struct Row {
    std::string id, text;
  };
  std::vector<Row> rows;
  for (std::size_t n = suite.n_min; n <= suite.n_max; ++n)
    for (std::uint64_t s = suite.seed; s < suite.seed + suite.seeds; ++s) {
      char id[96];
      std::snprintf(id, sizeof id, "%s-n%03zu-s%06llu", family.c_str(), n, static_cast<unsigned long long>(s));
      const Representation rep = instance_for(family, n, s);

      const auto start = std::chrono::steady_clock::now();
      const IdSet sol = solve_with(suite.algo, rep, s);
      const auto stop = std::chrono::steady_clock::now();

      std::string opt, ratio;
      if (n <= (maximize ? caps::kMis : caps::kMds)) {
        const IntersectionGraph g = build_graph(rep);
        const std::size_t best = maximize ? brute_mis(g).size() : brute_mds(g).size();
        opt = std::to_string(best);
        if (maximize && !sol.empty())
          ratio = fixed(static_cast<double>(best) / static_cast<double>(sol.size()), 4);
        else if (!maximize && best > 0)
          ratio = fixed(static_cast<double>(sol.size()) / static_cast<double>(best), 4);
        else if (best == 0 && sol.empty())
          ratio = fixed(1.0, 4);
      }
      std::string ms;
      if (suite.timing) ms = fixed(std::chrono::duration<double, std::milli>(stop - start).count(), 3);

      rows.push_back({id, std::string(id) + "," + std::to_string(n) + "," + suite.algo + "," +
                              std::to_string(sol.size()) + "," + opt + "," + ratio + "," + ms});
    }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });

  std::string csv = "instance_id,n,algo,size,opt,ratio,runtime_ms\n";
  for (const auto& r : rows) csv += r.text + "\n";
  return csv;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation algorithms on single-bend grid path graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen_vpg_cmd = app.add_subcommand("gen-vpg", "random VPG instance");
  gen_vpg_cmd->add_option("--n", o.n, "number of paths");
  gen_vpg_cmd->add_option("--seed", o.seed, "generator seed");
  gen_vpg_cmd->add_flag("--one-string", o.one_string, "reject pairs crossing more than once");
  gen_vpg_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* gen_epg_cmd = app.add_subcommand("gen-epg", "random EPG instance");
  // No default_val: it would write into the field bench shares.
  gen_epg_cmd->add_option("--family", o.family, "double-crossing (default) or vertical-crossing")
      ->check(CLI::IsMember({"double-crossing", "vertical-crossing"}));
  gen_epg_cmd->add_option("--n", o.n, "number of paths");
  gen_epg_cmd->add_option("--seed", o.seed, "generator seed");
  gen_epg_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* gen_graph_cmd = app.add_subcommand("gen-graph", "random graph of maximum degree 3");
  gen_graph_cmd->add_option("--n", o.n, "vertices");
  gen_graph_cmd->add_option("--m", o.m, "edges");
  gen_graph_cmd->add_option("--seed", o.seed, "generator seed");
  gen_graph_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* solve_cmd = app.add_subcommand("solve", "run an approximation algorithm");
  solve_cmd->add_option("algo", o.algo, "mis, mds-vpg or mds-epg")
      ->required()
      ->check(CLI::IsMember({"mis", "mds-vpg", "mds-epg"}));
  solve_cmd->add_option("--input", o.input, "instance file")->required();
  solve_cmd->add_option("--seed", o.seed, "sampling seed for mds-vpg");
  solve_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* exact_cmd = app.add_subcommand("exact", "run an exact solver");
  exact_cmd->add_option("problem", o.algo, "mis, mds, vc or hs")
      ->required()
      ->check(CLI::IsMember({"mis", "mds", "vc", "hs"}));
  exact_cmd->add_option("--input", o.input, "instance file (graph file for vc)")->required();
  exact_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* reduce_cmd = app.add_subcommand("reduce", "vertex cover graph to dominating set instance");
  reduce_cmd->add_option("--input", o.input, "graph file")->required();
  reduce_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* map_back_cmd = app.add_subcommand("map-back", "dominating set of a reduced instance to a vertex cover");
  map_back_cmd->add_option("--input", o.input, "labelled instance file")->required();
  map_back_cmd->add_option("--solution", o.solution, "dominating set solution file")->required();
  map_back_cmd->add_option("--graph", o.graph, "input graph file; recovered from the labels when omitted");
  map_back_cmd->add_option("--output", o.output, "write here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check a property of an instance");
  verify_cmd->add_option("--check", o.check, "property to check")
      ->required()
      ->check(CLI::IsMember({"one-string", "general-position", "double-crossing", "vertical-crossing",
                             "non-containment", "reduction"}));
  verify_cmd->add_option("--input", o.input, "instance file")->required();
  verify_cmd->add_option("--graph", o.graph, "input graph file for the reduction check");

  auto* bench_cmd = app.add_subcommand("bench", "ratio table over seeded instances");
  bench_cmd->add_option("--algo", o.algo, "mis, mds-vpg or mds-epg")
      ->check(CLI::IsMember({"mis", "mds-vpg", "mds-epg"}))
      ->default_val("mis");
  bench_cmd->add_option("--family", o.family, "instance family; defaults to the algorithm's own")
      ->check(CLI::IsMember({"vpg", "vpg-any", "double-crossing", "vertical-crossing"}));
  bench_cmd->add_option("--n", o.n, "single size (sets both --n-min and --n-max)");
  bench_cmd->add_option("--n-min", o.n_min, "smallest size");
  bench_cmd->add_option("--n-max", o.n_max, "largest size");
  bench_cmd->add_option("--seed", o.seed, "first seed");
  bench_cmd->add_option("--seeds", o.seeds, "seeds per size");
  bench_cmd->add_option("--csv", o.csv, "write the table here instead of stdout");
  bench_cmd->add_flag("--no-timing", o.no_timing, "leave runtime_ms blank");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_vpg_cmd->parsed()) {
      write_output(emit_instance(gen_vpg(o.n, o.seed, o.one_string)), o.output, out);
    } else if (gen_epg_cmd->parsed()) {
      const Representation rep = o.family == "vertical-crossing" ? gen_epg_vertical_crossing(o.n, o.seed)
                                                                 : gen_epg_double_crossing(o.n, o.seed);
      write_output(emit_instance(rep), o.output, out);
    } else if (gen_graph_cmd->parsed()) {
      write_output(emit_graph(gen_degree3_graph(o.n, o.m, o.seed)), o.output, out);
    } else if (solve_cmd->parsed()) {
      const Representation rep = parse_instance(read_file(o.input));
      const IdSet sol = solve_with(o.algo, rep, o.seed);
      write_output(emit_solution(o.algo, as_members(sol)), o.output, out);
    } else if (exact_cmd->parsed()) {
      std::string text;
      if (o.algo == "vc") {
        text = emit_solution("vc", as_members(brute_vc(parse_graph(read_file(o.input)))));
      } else {
        const Representation rep = parse_instance(read_file(o.input));
        if (o.algo == "mis") text = emit_solution("mis", as_members(brute_mis(build_graph(rep))));
        if (o.algo == "mds") text = emit_solution("mds", as_members(brute_mds(build_graph(rep))));
        if (o.algo == "hs") text = emit_solution("hs", as_members(brute_hs(build_set_system(rep))));
      }
      write_output(text, o.output, out);
    } else if (reduce_cmd->parsed()) {
      write_output(emit_instance(reduce_vc_to_mds(parse_graph(read_file(o.input)))), o.output, out);
    } else if (map_back_cmd->parsed()) {
      const ReductionInstance inst = parse_labelled_instance(read_file(o.input));
      const SimpleGraph g = o.graph.empty() ? graph_from_labels(inst) : parse_graph(read_file(o.graph));
      const Solution d = parse_solution(read_file(o.solution));
      write_output(emit_solution("vc", as_members(map_back(normalize(d.members), inst, g))), o.output, out);
    } else if (verify_cmd->parsed()) {
      return verify_command(o, out);
    } else if (bench_cmd->parsed()) {
      BenchSuite suite;
      suite.algo = o.algo;
      suite.family = o.family;
      suite.n_min = bench_cmd->count("--n-min") ? o.n_min : o.n;
      suite.n_max = bench_cmd->count("--n-max") ? o.n_max : o.n;
      suite.seed = o.seed;
      suite.seeds = o.seeds;
      suite.timing = !o.no_timing;
      write_output(bench(suite), o.csv, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace b1grid
