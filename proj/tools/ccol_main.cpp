#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ccol/gadgets.hpp"
#include "ccol/generate.hpp"
#include "ccol/io.hpp"
#include "ccol/oracle.hpp"
#include "ccol/solver.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 20;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

// First token after 'p' on the header line: "3cc" or "stubborn".
std::string detect_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok != "p") break;
    std::string kind;
    ls >> kind;
    return kind;
  }
  throw std::runtime_error("missing 'p' header line");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string json_colouring(const ccol::VertexColouring& phi) {
  std::string out = "[";
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (v) out += ",";
    out += "\"";
    out += ccol::colour_char(phi[v]);
    out += "\"";
  }
  return out + "]";
}

std::string json_stubborn(const ccol::StubbornColouring& phi) {
  std::string out = "[";
  for (std::size_t v = 0; v < phi.size(); ++v) {
    if (v) out += ",";
    out += std::to_string(int(phi[v]));
  }
  return out + "]";
}

struct BoundChecks {
  bool ops_per_path_le_3n;
  bool leaves_le_root_mass;
  bool mass_violations_zero;
  bool potential_violations_zero;

  bool all() const {
    return ops_per_path_le_3n && leaves_le_root_mass && mass_violations_zero &&
           potential_violations_zero;
  }
};

BoundChecks bound_checks(const ccol::StatsCounter& st, int solver_n) {
  return BoundChecks{
      st.max_ops_per_path <= 3 * static_cast<std::uint64_t>(solver_n) &&
          st.path_bound_violations == 0,
      st.leaf_bound_violations == 0 && st.max_leaves_per_branch <= st.root_mass,
      st.mass_violations == 0 && st.disjointness_violations == 0,
      st.potential_violations == 0,
  };
}

std::string json_bounds(const BoundChecks& b) {
  std::ostringstream o;
  o << std::boolalpha << "{\"ops_per_path_le_3n\":" << b.ops_per_path_le_3n
    << ",\"leaves_le_root_mass\":" << b.leaves_le_root_mass
    << ",\"mass_violations_zero\":" << b.mass_violations_zero
    << ",\"potential_violations_zero\":" << b.potential_violations_zero << "}";
  return o.str();
}

int report_invariant_failure(const ccol::StatsCounter& st) {
  if (st.invariant_violations == 0 && st.disjointness_violations == 0) return -1;
  std::cerr << "error: invariant checking found " << st.invariant_violations
            << " proper-invariant and " << st.disjointness_violations
            << " branch-disjointness violations\n";
  return kExitUsage;
}

int cmd_solve(const std::string& path, bool stats, bool verify, const std::string& format) {
  const ccol::Instance3cc inst = ccol::parse_3cc(read_file(path));
  ccol::SolveOptions opts{verify};
  const auto start = std::chrono::steady_clock::now();

  ccol::Verdict verdict;
  if (inst.restricted()) {
    // List constraints compile away through type-one gadgets.
    auto [reduced, map] = ccol::reduce_list_3cc(inst.graph, inst.lists);
    verdict = ccol::solve(reduced, opts);
    if (verdict.sat())
      verdict.colouring->resize(inst.graph.vertex_count());
  } else {
    verdict = ccol::solve(inst.graph, opts);
  }
  const double ms = elapsed_ms(start);

  if (verify) {
    const int rc = report_invariant_failure(verdict.stats);
    if (rc >= 0) return rc;
  }
  const std::string stats_obj = ccol::stats_json(verdict.stats, verdict.sat(), ms);
  if (format == "json") {
    std::cout << "{\"verdict\":\"" << (verdict.sat() ? "SAT" : "UNSAT") << "\",\"colouring\":"
              << (verdict.sat() ? json_colouring(*verdict.colouring) : "null")
              << ",\"stats\":" << stats_obj << "}\n";
  } else {
    if (stats) std::cout << "c stats " << stats_obj << "\n";
    std::cout << ccol::serialize_3cc_solution(verdict.colouring);
  }
  return verdict.sat() ? kExitSat : kExitUnsat;
}

int cmd_solve_stubborn(const std::string& path, bool stats, bool verify,
                       const std::string& format) {
  const ccol::StubbornInstance inst = ccol::parse_stubborn(read_file(path));
  ccol::SolveOptions opts{verify};
  const auto start = std::chrono::steady_clock::now();
  const ccol::StubbornVerdict verdict = ccol::solve_stubborn(inst, opts);
  const double ms = elapsed_ms(start);

  if (verify) {
    const int rc = report_invariant_failure(verdict.stats);
    if (rc >= 0) return rc;
  }
  const std::string stats_obj = ccol::stats_json(verdict.stats, verdict.sat(), ms);
  if (format == "json") {
    std::cout << "{\"verdict\":\"" << (verdict.sat() ? "SAT" : "UNSAT") << "\",\"colouring\":"
              << (verdict.sat() ? json_stubborn(*verdict.colouring) : "null")
              << ",\"reduced_n\":" << verdict.reduced_n << ",\"stats\":" << stats_obj << "}\n";
  } else {
    if (stats) std::cout << "c stats " << stats_obj << "\n";
    std::cout << ccol::serialize_stubborn_solution(verdict.colouring);
  }
  return verdict.sat() ? kExitSat : kExitUnsat;
}

int check_outcome(bool ok, const std::string& reason, const std::string& format) {
  if (format == "json") {
    std::cout << "{\"ok\":" << (ok ? "true" : "false");
    if (!reason.empty()) std::cout << ",\"reason\":\"" << reason << "\"";
    std::cout << "}\n";
  } else if (ok) {
    std::cout << "OK\n";
  } else {
    std::cout << "FAIL: " << reason << "\n";
  }
  return ok ? kExitSat : kExitCheckFail;
}

int cmd_check(const std::string& inst_path, const std::string& sol_path,
              const std::string& format) {
  const std::string inst_text = read_file(inst_path);
  const std::string sol_text = read_file(sol_path);
  const std::string kind = detect_kind(inst_text);
  if (kind == "3cc") {
    const ccol::Instance3cc inst = ccol::parse_3cc(inst_text);
    const auto phi = ccol::parse_3cc_solution(sol_text);
    if (!phi) return check_outcome(false, "solution claims UNSAT; nothing to verify", format);
    if (static_cast<int>(phi->size()) != inst.graph.vertex_count())
      return check_outcome(false, "solution size does not match instance", format);
    if (!ccol::feasible_3cc(inst.graph, inst.lists, *phi))
      return check_outcome(false, "colouring is not feasible", format);
    return check_outcome(true, "", format);
  }
  if (kind == "stubborn") {
    const ccol::StubbornInstance inst = ccol::parse_stubborn(inst_text);
    const auto phi = ccol::parse_stubborn_solution(sol_text);
    if (!phi) return check_outcome(false, "solution claims UNSAT; nothing to verify", format);
    if (static_cast<int>(phi->size()) != inst.vertex_count())
      return check_outcome(false, "solution size does not match instance", format);
    if (!ccol::feasible_stubborn(inst, *phi))
      return check_outcome(false, "colouring is not feasible", format);
    return check_outcome(true, "", format);
  }
  throw std::runtime_error("unknown instance kind '" + kind + "'");
}

int cmd_reduce_stubborn(const std::string& in_path, const std::string& out3cc,
                        const std::string& out_map) {
  const ccol::StubbornInstance inst = ccol::parse_stubborn(read_file(in_path));
  const auto [reduced, map] = ccol::reduce_stubborn(inst);
  write_file(out3cc, ccol::serialize_3cc(reduced));
  write_file(out_map, ccol::reduction_map_json(map) + "\n");
  return 0;
}

int cmd_oracle(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  const std::string kind = detect_kind(text);
  if (kind == "3cc") {
    const ccol::Instance3cc inst = ccol::parse_3cc(text);
    const auto phi = ccol::brute_force_3cc(inst.graph, inst.lists);
    if (format == "json")
      std::cout << "{\"verdict\":\"" << (phi ? "SAT" : "UNSAT")
                << "\",\"colouring\":" << (phi ? json_colouring(*phi) : "null") << "}\n";
    else
      std::cout << ccol::serialize_3cc_solution(phi);
    return phi ? kExitSat : kExitUnsat;
  }
  if (kind == "stubborn") {
    const ccol::StubbornInstance inst = ccol::parse_stubborn(text);
    const auto phi = ccol::brute_force_stubborn(inst);
    if (format == "json")
      std::cout << "{\"verdict\":\"" << (phi ? "SAT" : "UNSAT")
                << "\",\"colouring\":" << (phi ? json_stubborn(*phi) : "null") << "}\n";
    else
      std::cout << ccol::serialize_stubborn_solution(phi);
    return phi ? kExitSat : kExitUnsat;
  }
  throw std::runtime_error("unknown instance kind '" + kind + "'");
}

int cmd_bench(const std::string& family, int n, int count, std::uint64_t seed, double p,
              bool verify) {
  for (int i = 0; i < count; ++i) {
    const std::uint64_t inst_seed = seed + static_cast<std::uint64_t>(i);
    ccol::SolveOptions opts{verify};
    ccol::StatsCounter st;
    bool sat = false;
    int solver_n = n;
    double ms = 0.0;

    if (family == "stubborn") {
      const ccol::StubbornInstance inst = ccol::gen_stubborn(n, p, inst_seed);
      const auto start = std::chrono::steady_clock::now();
      const ccol::StubbornVerdict v = ccol::solve_stubborn(inst, opts);
      ms = elapsed_ms(start);
      st = v.stats;
      sat = v.sat();
      solver_n = v.reduced_n;
    } else {
      const ccol::EdgeColouring inst = family == "planted3cc"
                                           ? ccol::gen_planted3cc(n, inst_seed).graph
                                           : ccol::gen_uniform3cc(n, inst_seed);
      const auto start = std::chrono::steady_clock::now();
      const ccol::Verdict v = ccol::solve(inst, opts);
      ms = elapsed_ms(start);
      st = v.stats;
      sat = v.sat();
    }

    std::cout << "{\"family\":\"" << family << "\",\"n\":" << n;
    if (family == "stubborn") std::cout << ",\"p\":" << p << ",\"reduced_n\":" << solver_n;
    std::cout << ",\"seed\":" << inst_seed << ",\"stats\":" << ccol::stats_json(st, sat, ms)
              << ",\"bounds\":" << json_bounds(bound_checks(st, solver_n)) << "}\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-compatible colouring / stubborn list-partition solver"};
  app.require_subcommand(1);

  std::string file, sol_file, out3cc, out_map, out_file;
  std::string format = "text";
  std::string family = "uniform3cc";
  bool stats = false, verify = false;
  int n = 0, count = 1;
  std::uint64_t seed = 0;
  double p = 0.5;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* solve = app.add_subcommand("solve", "Decide a 3CC instance file");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_flag("--stats", stats, "Emit solver statistics");
  solve->add_flag("--verify-invariants", verify, "Run the full invariant checks");
  add_format(solve);

  CLI::App* solve_st = app.add_subcommand("solve-stubborn", "Decide a Stubborn instance file");
  solve_st->add_option("file", file, "Instance file")->required();
  solve_st->add_flag("--stats", stats, "Emit solver statistics");
  solve_st->add_flag("--verify-invariants", verify, "Run the full invariant checks");
  add_format(solve_st);

  CLI::App* check = app.add_subcommand("check", "Verify a solution against an instance");
  check->add_option("instance", file, "Instance file")->required();
  check->add_option("solution", sol_file, "Solution file")->required();
  add_format(check);

  CLI::App* reduce = app.add_subcommand("reduce-stubborn", "Reduce a Stubborn instance to 3CC");
  reduce->add_option("in", file, "Stubborn instance file")->required();
  reduce->add_option("out3cc", out3cc, "Output 3CC instance file")->required();
  reduce->add_option("outmap", out_map, "Output reduction map JSON file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force decide a small instance");
  oracle->add_option("file", file, "Instance file")->required();
  add_format(oracle);

  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("--family", family, "uniform3cc | planted3cc | stubborn")
      ->required()
      ->check(CLI::IsMember({"uniform3cc", "planted3cc", "stubborn"}));
  gen->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--p", p, "Edge probability (stubborn)")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "64-bit seed")->required();
  gen->add_option("--out", out_file, "Output file")->required();

  CLI::App* bench = app.add_subcommand("bench", "Solve seeded instances, one JSON line each");
  bench->add_option("--family", family, "uniform3cc | planted3cc | stubborn")
      ->required()
      ->check(CLI::IsMember({"uniform3cc", "planted3cc", "stubborn"}));
  bench->add_option("--n", n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  bench->add_option("--count", count, "Number of instances")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Base seed; instance i uses seed + i")->required();
  bench->add_option("--p", p, "Edge probability (stubborn)")->check(CLI::Range(0.0, 1.0));
  bench->add_flag("--verify-invariants", verify, "Run the full invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) return cmd_solve(file, stats, verify, format);
    if (app.got_subcommand(solve_st)) return cmd_solve_stubborn(file, stats, verify, format);
    if (app.got_subcommand(check)) return cmd_check(file, sol_file, format);
    if (app.got_subcommand(reduce)) return cmd_reduce_stubborn(file, out3cc, out_map);
    if (app.got_subcommand(oracle)) return cmd_oracle(file, format);
    if (app.got_subcommand(gen)) {
      ccol::GenSpec spec;
      spec.family = family == "uniform3cc"  ? ccol::GenFamily::uniform3cc
                    : family == "planted3cc" ? ccol::GenFamily::planted3cc
                                              : ccol::GenFamily::stubborn;
      spec.n = n;
      spec.p = p;
      spec.seed = seed;
      write_file(out_file, ccol::gen_file(spec));
      return 0;
    }
    if (app.got_subcommand(bench)) return cmd_bench(family, n, count, seed, p, verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
