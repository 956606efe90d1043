#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "genpow/cli.hpp"
#include "oracles.hpp"

using namespace genpow;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("genpow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

double field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + " ", 0) == 0) return std::stod(line.substr(key.size() + 1));
  return NAN;
}

} // namespace

TEST_F(CliTest, PowerThenRhoOfTriangle) {
  auto tri = write("tri.g", "graph 3 3\n0 1\n1 2\n0 2\n");
  auto r = run({"power", "--k", "4", "--s", "2", "--in", tri, "--out", path("tri.h")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_hypergraph(slurp(path("tri.h"))), half_power(cycle_graph(3), 4).hypergraph);

  r = run({"rho", "--operator", "adjacency", "--in", path("tri.h")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(field(r.out, "rho"), 2.0, 1e-9);
  EXPECT_NE(r.out.find("bracket ["), std::string::npos);

  r = run({"oddbip", "--in", path("tri.h")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "non-odd-bipartite\n");
}

TEST_F(CliTest, PowerDefaultsToHalf) {
  auto c4 = write("c4.g", serialize_graph(cycle_graph(4)));
  auto r = run({"power", "--k", "6", "--in", c4});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_hypergraph(r.out), half_power(cycle_graph(4), 6).hypergraph);
}

TEST_F(CliTest, RoundTripMatchesMatrixRho) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = oracle::random_connected_graph(3 + trial, 0.4, rng);
    auto gfile = write("g.g", serialize_graph(g));
    for (std::string op : {"adjacency", "signless-laplacian"}) {
      ASSERT_EQ(run({"power", "--k", "4", "--in", gfile, "--out", path("g.h")}).code, 0);
      auto tensor = run({"rho", "--operator", op, "--in", path("g.h"), "--tol", "1e-12"});
      auto matrix = run({"rho", "--operator", op, "--in", gfile, "--tol", "1e-12"});
      ASSERT_EQ(tensor.code, 0);
      ASSERT_EQ(matrix.code, 0);
      EXPECT_NEAR(field(tensor.out, "rho"), field(matrix.out, "rho"), 1e-8);
      EXPECT_NEAR(field(matrix.out, "rho"), oracle::eigen_rho(g, op != "adjacency"), 1e-9);
    }
  }
}

TEST_F(CliTest, OddbipPrintsCertificate) {
  auto r = run({"scycle", "--k", "4", "--s", "3", "--d", "8", "--out", path("c.h")});
  ASSERT_EQ(r.code, 0);
  r = run({"oddbip", "--in", path("c.h")});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string verdict, one, two;
  std::getline(in, verdict);
  std::getline(in, one);
  std::getline(in, two);
  EXPECT_EQ(verdict, "odd-bipartite");
  auto ids = [](const std::string& s) {
    std::vector<vertex_t> v;
    std::istringstream ss(s);
    for (vertex_t x; ss >> x;) v.push_back(x);
    return v;
  };
  EXPECT_TRUE(verify_odd_bipartition(s_cycle(4, 3, 8), {ids(one), ids(two)}));

  auto g = write("c5.g", serialize_graph(cycle_graph(5)));
  EXPECT_EQ(run({"oddbip", "--in", g}).out, "non-bipartite\n");
}

TEST_F(CliTest, SpathAndSubdivide) {
  auto r = run({"spath", "--k", "4", "--s", "2", "--d", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_hypergraph(r.out), s_path(4, 2, 3));

  auto g = write("p2.g", "graph 2 1\n0 1\n");
  r = run({"subdivide", "--in", g, "--u", "0", "--w", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "graph 3 2\n0 2\n1 2\n");
  EXPECT_EQ(run({"subdivide", "--in", g, "--u", "0", "--w", "0"}).code, 2);
}

TEST_F(CliTest, Bounds) {
  auto h = write("e.h", "hypergraph 4 4 1\n0 1 2 3\n");
  auto r = run({"bounds", "--in", h, "--operator", "signless-laplacian", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "operator,min_row_sum,max_row_sum\nsignless-laplacian,2,2\n");
}

TEST_F(CliTest, ExperimentsPassAndEmitCsv) {
  auto r = run({"minrho", "--n", "5", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("rho,edges\n2,", 0), 0u);
  EXPECT_NE(r.out.find("check,tolerance,verdict,detail\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  EXPECT_EQ(run({"limitpoints"}).code, 0);
  EXPECT_EQ(run({"converge"}).code, 0);
  EXPECT_EQ(run({"verify-nob", "--n-max", "5", "--k-list", "4,6,8"}).code, 0);

  r = run({"limitpoints", "--n-max", "3", "--out", path("lp.csv"), "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path("lp.csv")).rfind("n,beta,alpha,threshold_gap\n1,1,2,", 0), 0u);
}

TEST_F(CliTest, FailedCheckExitsOne) {
  // The pendant-cycle gap falls below double resolution well before n = 80.
  EXPECT_EQ(run({"converge", "--n-max", "80"}).code, 1);
  // Iteration cap too small to converge.
  auto h = write("p.h", serialize_hypergraph(s_path(4, 2, 6)));
  EXPECT_EQ(run({"rho", "--in", h, "--max-iter", "2"}).code, 1);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"rho", "--bogus"}).code, 2);
  EXPECT_EQ(run({"rho", "--in", path("missing.h")}).code, 2);
  EXPECT_EQ(run({"rho", "--operator", "laplacian", "--in", path("missing.h")}).code, 2);
  EXPECT_EQ(run({"minrho", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"power", "--k", "4"}).code, 2);
  EXPECT_EQ(run({"rho", "--in", write("bad.h", "hypergraph 3 3 1\n0 1 5\n")}).code, 2);
  auto r = run({"oddbip", "--in", write("bad2.g", "graph 3 1\n0 0\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run({"--help"}).code, 0);
}
