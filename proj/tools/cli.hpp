#pragma once

// Command-line front end. run() takes the arguments after the program name
// and explicit streams so tests can drive it in-process.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domcyc/domcyc.hpp"

namespace domcyc::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Graph> read_input(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return read_graph6_stream(in);
    std::ifstream file(path);
    if (!file) throw DataError("cannot open " + path);
    return read_graph6_stream(file);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

inline std::string cycle_text(const Cycle& c) {
  std::string out;
  for (Vertex v : c.vertices()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

inline std::string extension(const std::string& path) {
  const auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot);
}

// Edge-list text: one graph per line, "<order> u-v u-v ...".
inline std::string write_edge_line(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (auto [u, v] : g.edges()) out += " " + std::to_string(u) + "-" + std::to_string(v);
  return out;
}

inline Graph read_edge_line(const std::string& line, std::size_t line_no) {
  std::istringstream words(line);
  long order = -1;
  auto fail = [&](const std::string& why) { throw DataError("line " + std::to_string(line_no) + ": " + why); };
  if (!(words >> order) || order < 0) fail("expected a vertex count");
  Graph::Builder b(static_cast<std::size_t>(order));
  std::string token;
  while (words >> token) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) fail("bad edge '" + token + "'");
    try {
      b.add_edge(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    } catch (const std::exception&) {
      fail("bad edge '" + token + "'");
    }
  }
  return std::move(b).build();
}

inline std::optional<FamilyId> parse_family(const std::string& name) {
  for (FamilyId id : {FamilyId::kA, FamilyId::kAPrime, FamilyId::kADoublePrime, FamilyId::kA1, FamilyId::kA2,
                      FamilyId::kA3, FamilyId::kA4, FamilyId::kA5, FamilyId::kFsst})
    if (family_name(id) == name) return id;
  return std::nullopt;
}

inline ForbiddenSet parse_set(const std::string& text) {
  for (const auto& p : pair_list())
    if (p.name == text) return p.set;
  std::vector<Graph> members;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      members.push_back(read_graph6(item));
    } catch (const ParseError& e) {
      throw UsageError("--set: '" + item + "' is neither a set name nor graph6 (" + e.what() + ")");
    }
  }
  try {
    return ForbiddenSet(std::move(members));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--set: ") + e.what());
  }
}

}  // namespace detail

/// Runs one command; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forbidden subgraphs, dominating cycles and exhaustive checks on small graphs", "domcyc"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "Print one family member, or every graph of an order, as graph6");
  std::string family;
  std::size_t s = 0, sp = 0, t = 0, order = 0;
  bool connected = false, two_connected = false;
  gen->add_option("--family", family, "A|Ap|App|A1..A5|Fsst|F1..F4");
  gen->add_option("--s", s, "family parameter s");
  gen->add_option("--sp", sp, "F_{s,s',t} parameter s'");
  gen->add_option("--t", t, "F_{s,s',t} parameter t");
  gen->add_option("--order", order, "print all graphs on this many vertices (1..10) instead")->excludes("--family");
  gen->add_flag("--connected", connected, "with --order, connected graphs only");
  gen->add_flag("--two-connected", two_connected, "with --order, 2-connected graphs only");
  gen->callback([&] {
    action = [&]() -> int {
      if (order > 0) {
        if (order > kMaxGeneratedOrder) throw UsageError("--order must be in 1..10");
        GraphFilter f;
        f.connected = connected;
        f.two_connected = two_connected;
        GraphStream stream = GraphStream::generate(order, f);
        while (auto g = stream.next()) out << write_graph6(*g) << '\n';
        return 0;
      }
      if (family.empty()) throw UsageError("gen needs --family or --order");
      if (family.size() == 2 && family[0] == 'F' && family[1] >= '1' && family[1] <= '4') {
        out << write_graph6(make_F_sporadic(family[1] - '0')) << '\n';
        return 0;
      }
      const auto id = detail::parse_family(family);
      if (!id) throw UsageError("unknown family '" + family + "'");
      try {
        out << write_graph6(make_family({*id, s, sp, t})) << '\n';
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return 0;
    };
  });

  // named
  auto* named = app.add_subcommand("named", "Print a named small graph as graph6");
  std::string which;
  std::size_t l = 0, m = 0, n = 0;
  named->add_option("--graph", which, "K13|K13s|K13ss|P|Z|B|N|W|Ws|K4m")->required();
  named->add_option("--l", l, "first leg (N)");
  named->add_option("--m", m, "leg (B, N)");
  named->add_option("--n", n, "length (P), leg (Z, B, N)");
  named->callback([&] {
    action = [&]() -> int {
      static const std::vector<std::pair<std::string, NamedId>> ids = {
          {"K13", NamedId::kClaw}, {"K13s", NamedId::kClawStar}, {"K13ss", NamedId::kClawStarStar},
          {"P", NamedId::kPath},   {"Z", NamedId::kZ},           {"B", NamedId::kB},
          {"N", NamedId::kN},      {"W", NamedId::kW},           {"Ws", NamedId::kWStar},
          {"K4m", NamedId::kK4Minus}};
      auto it = std::find_if(ids.begin(), ids.end(), [&](const auto& p) { return p.first == which; });
      if (it == ids.end()) throw UsageError("unknown graph '" + which + "'");
      try {
        out << write_graph6(make_named({it->second, l, m, n})) << '\n';
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return 0;
    };
  });

  // free
  auto* free_cmd = app.add_subcommand("free", "Test each input graph for freeness of a forbidden set");
  std::string set_text, graphs_file, free_in;
  auto* set_opt = free_cmd->add_option("--set", set_text, "H1..H7, H5P, or a comma-separated graph6 list");
  auto* file_opt = free_cmd->add_option("--graphs-file", graphs_file, "graph6 file holding the forbidden graphs");
  set_opt->excludes(file_opt);
  free_cmd->add_option("--in", free_in, "graph6 input, - for stdin")->required();
  free_cmd->callback([&] {
    action = [&]() -> int {
      ForbiddenSet set;
      if (!set_text.empty()) {
        set = detail::parse_set(set_text);
      } else if (!graphs_file.empty()) {
        try {
          set = ForbiddenSet(detail::read_input(graphs_file, in));
        } catch (const std::invalid_argument& e) {
          throw DataError(graphs_file + ": " + e.what());
        }
      } else {
        throw UsageError("free needs --set or --graphs-file");
      }
      for (const Graph& g : detail::read_input(free_in, in))
        out << write_graph6(g) << ' ' << (is_free(g, set) ? "true" : "false") << '\n';
      return 0;
    };
  });

  // cycle
  auto* cycle = app.add_subcommand("cycle", "Cycle queries on each input graph");
  std::string mode, cycle_in;
  std::uint64_t cycle_budget = CycleSearchBudget{}.max_expansions;
  cycle->add_option("--mode", mode, "longest|hamilton|dominating|all-longest-dominating")
      ->required()
      ->check(CLI::IsMember({"longest", "hamilton", "dominating", "all-longest-dominating"}));
  cycle->add_option("--in", cycle_in, "graph6 input, - for stdin")->required();
  cycle->add_option("--budget", cycle_budget, "node-expansion cap per graph")->check(CLI::PositiveNumber);
  cycle->callback([&] {
    action = [&]() -> int {
      CycleSearchBudget budget;
      budget.max_expansions = cycle_budget;
      for (const Graph& g : detail::read_input(cycle_in, in)) {
        out << write_graph6(g) << ' ';
        if (mode == "longest") {
          const auto c = longest_cycle(g, budget);
          out << (c ? std::to_string(c->length()) + " " + detail::cycle_text(*c) : std::string("0 none"));
        } else if (mode == "hamilton") {
          const auto c = hamilton_cycle(g, budget);
          out << (c ? "true " + detail::cycle_text(*c) : std::string("false"));
        } else if (mode == "dominating") {
          const auto c = exists_dominating_cycle(g, budget);
          out << (c ? "true " + detail::cycle_text(*c) : std::string("false"));
        } else {
          const auto audit = all_longest_cycles_dominating(g, budget);
          out << (audit.holds ? std::string("true") : "false " + detail::cycle_text(*audit.counterexample));
        }
        out << '\n';
      }
      return 0;
    };
  });

  // closure
  auto* clos = app.add_subcommand("closure", "Closure of each claw-free input graph");
  std::string closure_in;
  bool trace = false;
  clos->add_option("--in", closure_in, "graph6 input, - for stdin")->required();
  clos->add_flag("--trace", trace, "append the completion steps as v:u-w,u-w;...");
  clos->callback([&] {
    action = [&]() -> int {
      for (const Graph& g : detail::read_input(closure_in, in)) {
        ClosureResult r;
        try {
          r = closure(g);
        } catch (const std::invalid_argument& e) {
          throw DataError(write_graph6(g) + ": " + e.what());
        }
        out << write_graph6(g) << ' ' << write_graph6(r.graph);
        if (trace) {
          std::string steps;
          for (const auto& step : r.trace) {
            steps += (steps.empty() ? "" : ";") + std::to_string(step.vertex) + ":";
            for (std::size_t i = 0; i < step.added.size(); ++i)
              steps += (i ? "," : "") + std::to_string(step.added[i].first) + "-" +
                       std::to_string(step.added[i].second);
          }
          out << ' ' << (steps.empty() ? "-" : steps);
        }
        out << '\n';
      }
      return 0;
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run a theorem check and print its report");
  std::string theorem, report_path;
  VerifyOptions vopt;
  bool long_run = false;
  std::size_t s_ref = 6, k_max = 4;
  ver->add_option("--theorem", theorem,
                  "THM4-FAMILIES|THM9|THM10|THM11|LEM4|LEM10|LEM11i|THM-BRF|THM-R|NECESSITY")
      ->required();
  ver->add_option("--nmax", vopt.n_max, "largest corpus order (default 8)");
  ver->add_option("--smax", vopt.s_max, "largest family parameter (default 7)");
  ver->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--seed", vopt.seed, "seed for randomized checks");
  ver->add_option("--budget", vopt.budget.max_expansions, "node-expansion cap per cycle search")
      ->check(CLI::PositiveNumber);
  ver->add_option("--report", report_path, "write the JSON report here instead of stdout");
  ver->add_flag("--long-run", long_run, "allow --nmax 9 or 10");
  ver->add_option("--sref", s_ref, "NECESSITY: family parameter (default 6)");
  ver->add_option("--kmax", k_max, "NECESSITY: largest subgraph order, at most 6 (default 4)");
  ver->callback([&] {
    action = [&]() -> int {
      std::string json;
      std::string summary;
      int code = 0;
      if (theorem == "NECESSITY") {
        if (k_max < 3 || k_max > 6) throw UsageError("--kmax must be in 3..6");
        if (s_ref < 3) throw UsageError("--sref must be at least 3");
        const NecessityReport r = verify_necessity_scan(s_ref, k_max);
        json = r.to_json().dump(2);
        summary = "NECESSITY " + status_name(r.status());
        code = exit_code(r.status());
      } else {
        const auto id = parse_theorem(theorem);
        if (!id) throw UsageError("unknown theorem '" + theorem + "'");
        if (vopt.n_max < 1 || vopt.n_max > kMaxGeneratedOrder) throw UsageError("--nmax must be in 1..10");
        if (vopt.n_max >= 9 && !long_run) throw UsageError("--nmax 9 and above need --long-run");
        const VerificationReport r = verify(*id, vopt);
        json = r.to_json().dump(2);
        summary = r.theorem + " " + status_name(r.status()) + " scanned=" + std::to_string(r.scanned) +
                  " violations=" + std::to_string(r.violation_count);
        code = exit_code(r.status());
      }
      if (report_path.empty()) {
        out << json << '\n';
      } else {
        std::ofstream file(report_path);
        if (!file) throw DataError("cannot write " + report_path);
        file << json << '\n';
        out << summary << '\n';
      }
      return code;
    };
  });

  // convert
  auto* conv = app.add_subcommand("convert", "Convert between graph6 (.g6) and edge lists (.edges)");
  std::string conv_in, conv_out;
  conv->add_option("--in", conv_in, "input file, .g6 or .edges")->required();
  conv->add_option("--out", conv_out, "output file, .g6 or .edges")->required();
  conv->callback([&] {
    action = [&]() -> int {
      const std::string ein = detail::extension(conv_in), eout = detail::extension(conv_out);
      for (const auto& e : {ein, eout})
        if (e != ".g6" && e != ".edges") throw UsageError("convert: extensions must be .g6 or .edges");
      std::vector<Graph> graphs;
      if (ein == ".g6") {
        graphs = detail::read_input(conv_in, in);
      } else {
        std::ifstream file(conv_in);
        if (!file) throw DataError("cannot open " + conv_in);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(file, line)) {
          ++line_no;
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          graphs.push_back(detail::read_edge_line(line, line_no));
        }
      }
      std::ofstream file(conv_out);
      if (!file) throw DataError("cannot write " + conv_out);
      for (const Graph& g : graphs) file << (eout == ".g6" ? write_graph6(g) : detail::write_edge_line(g)) << '\n';
      return 0;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "domcyc: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "domcyc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "domcyc: " << e.what() << '\n';
    return kExitData;
  } catch (const ResourceExhausted& e) {
    err << "domcyc: " << e.what() << '\n';
    return exit_code(Status::kResourceExhausted);
  } catch (const std::invalid_argument& e) {
    // Parameter combinations the library rejects.
    err << "domcyc: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace domcyc::cli
