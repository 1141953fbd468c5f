#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace domcyc;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "domcyc_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, GenFamilyMember) {
  const CliResult r = invoke({"gen", "--family", "A5", "--s", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, write_graph6(make_family({FamilyId::kA5, 3})) + "\n");
  EXPECT_EQ(invoke({"gen", "--family", "Fsst", "--s", "3", "--sp", "3", "--t", "1"}).out,
            write_graph6(make_family({FamilyId::kFsst, 3, 3, 1})) + "\n");
  EXPECT_EQ(invoke({"gen", "--family", "F2"}).out, write_graph6(make_F_sporadic(2)) + "\n");
}

TEST(Cli, GenOrder) {
  const CliResult r = invoke({"gen", "--order", "4", "--two-connected"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(invoke({"gen", "--order", "11"}).code, cli::kExitUsage);
}

TEST(Cli, Named) {
  EXPECT_EQ(invoke({"named", "--graph", "W"}).out, write_graph6(w_graph()) + "\n");
  EXPECT_EQ(invoke({"named", "--graph", "N", "--l", "1", "--m", "1", "--n", "2"}).out,
            write_graph6(n_graph(1, 1, 2)) + "\n");
  EXPECT_EQ(invoke({"named", "--graph", "Q"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"named", "--graph", "Z"}).code, cli::kExitUsage);
}

TEST(Cli, FreePipe) {
  const std::string a14 = invoke({"gen", "--family", "A1", "--s", "4"}).out;
  const std::string a14_g6 = write_graph6(make_family({FamilyId::kA1, 4}));
  const CliResult r = invoke({"free", "--set", write_graph6(claw()), "--in", "-"}, a14);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, a14_g6 + " true\n");
  // A^(1)_4 is claw-free but a triangle with one of its paths is an induced Z_4.
  EXPECT_EQ(invoke({"free", "--set", "H1", "--in", "-"}, a14).out, a14_g6 + " false\n");
  const std::string c5 = write_graph6(cycle_graph(5));
  EXPECT_EQ(invoke({"free", "--set", write_graph6(path_graph(4)), "--in", "-"}, c5 + "\n").out, c5 + " false\n");
  EXPECT_EQ(invoke({"free", "--set", "nonsense!", "--in", "-"}, c5).code, cli::kExitUsage);
}

TEST(Cli, FreeGraphsFile) {
  const auto path = scratch("forbidden.g6");
  std::ofstream(path) << write_graph6(claw()) << "\n";
  const CliResult r = invoke({"free", "--graphs-file", path.string(), "--in", "-"}, write_graph6(complete_graph(5)));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("true"), std::string::npos);
}

TEST(Cli, CycleModes) {
  const std::string ap = write_graph6(make_family({FamilyId::kAPrime, 3}));
  EXPECT_EQ(invoke({"cycle", "--mode", "longest", "--in", "-"}, ap).out.substr(ap.size(), 3), " 6 ");
  EXPECT_EQ(invoke({"cycle", "--mode", "all-longest-dominating", "--in", "-"}, ap).out.substr(ap.size(), 6), " false");
  const std::string pet = "IheA@GUAo";
  EXPECT_EQ(invoke({"cycle", "--mode", "hamilton", "--in", "-"}, pet).out, pet + " false\n");
  const std::string a43 = write_graph6(make_family({FamilyId::kA4, 3}));
  EXPECT_EQ(invoke({"cycle", "--mode", "dominating", "--in", "-"}, a43).out, a43 + " false\n");
  EXPECT_EQ(invoke({"cycle", "--mode", "hamilton", "--in", "-", "--budget", "3"}, pet).code, 2);
  EXPECT_EQ(invoke({"cycle", "--mode", "sideways", "--in", "-"}, pet).code, cli::kExitUsage);
}

TEST(Cli, Closure) {
  const std::string k4m = write_graph6(k4_minus());
  const CliResult r = invoke({"closure", "--in", "-", "--trace"}, k4m);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(k4m + " " + write_graph6(complete_graph(4)) + " ", 0), 0u) << r.out;
  EXPECT_EQ(invoke({"closure", "--in", "-"}, write_graph6(claw())).code, cli::kExitData);
}

TEST(Cli, VerifySmall) {
  const CliResult r = invoke({"verify", "--theorem", "THM10", "--nmax", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "verified");
  EXPECT_EQ(j["parameters"]["n_max"], 7);
  const auto report = scratch("report.json");
  const CliResult s = invoke({"verify", "--theorem", "LEM4", "--smax", "4", "--report", report.string()});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("LEM4 verified", 0), 0u) << s.out;
  std::ifstream file(report);
  EXPECT_EQ(nlohmann::json::parse(file)["theorem"], "LEM4");
  EXPECT_EQ(invoke({"verify", "--theorem", "NECESSITY"}).code, 0);
}

TEST(Cli, VerifyGuards) {
  EXPECT_EQ(invoke({"verify", "--theorem", "THM10", "--nmax", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--theorem", "THM99"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--theorem", "NECESSITY", "--kmax", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--theorem", "THM10", "--jobs", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "--theorem", "THM9", "--nmax", "7", "--budget", "5"}).code, 2);
}

TEST(Cli, UsageAndDataErrors) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"cycle", "--mode", "longest"}).code, cli::kExitUsage);
  const CliResult bad = invoke({"cycle", "--mode", "longest", "--in", "-"}, "C~~\n");
  EXPECT_EQ(bad.code, cli::kExitData);
  EXPECT_NE(bad.err.find("line 1"), std::string::npos) << bad.err;
  EXPECT_EQ(invoke({"cycle", "--mode", "longest", "--in", "/nonexistent/x.g6"}).code, cli::kExitData);
}

TEST(Cli, HelpForEverySubcommand) {
  const CliResult top = invoke({"--help"});
  EXPECT_EQ(top.code, 0);
  for (const std::string sub : {"gen", "named", "free", "cycle", "closure", "verify", "convert"}) {
    EXPECT_NE(top.out.find(sub), std::string::npos) << sub;
    const CliResult r = invoke({sub, "--help"});
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("--"), std::string::npos) << sub;
  }
}

TEST(Cli, ConvertRoundTrip) {
  const auto g6 = scratch("in.g6"), edges = scratch("mid.edges"), back = scratch("out.g6");
  {
    std::ofstream f(g6);
    for (const Graph& g : generate_all(5)) f << write_graph6(g) << "\n";
  }
  EXPECT_EQ(invoke({"convert", "--in", g6.string(), "--out", edges.string()}).code, 0);
  EXPECT_EQ(invoke({"convert", "--in", edges.string(), "--out", back.string()}).code, 0);
  std::ifstream a(g6), b(back);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  std::ifstream e(edges);
  std::string first;
  std::getline(e, first);
  EXPECT_EQ(first, "5");
  EXPECT_EQ(invoke({"convert", "--in", g6.string(), "--out", scratch("x.txt").string()}).code, cli::kExitUsage);
  const auto broken = scratch("broken.edges");
  std::ofstream(broken) << "3 0-1 1-7\n";
  EXPECT_EQ(invoke({"convert", "--in", broken.string(), "--out", back.string()}).code, cli::kExitData);
}
