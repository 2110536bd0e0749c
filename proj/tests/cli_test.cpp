#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "rrbin/cli.hpp"

namespace rrbin {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("rrbin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args)
  {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p)
  {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static int lines(const std::string& p)
  {
    std::ifstream in(p);
    int count = 0;
    for (std::string line; std::getline(in, line);) ++count;
    return count;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, BinIsByteIdenticalAcrossRuns)
{
  ASSERT_EQ(run({"pattern", "--kind", "cross", "--n", "500", "--seed", "3", "--out", path("line.csv")}), 0);
  const std::vector<std::string> bin{"bin", "--input", path("line.csv"), "--score", "chi",
                                     "--max-depth", "6", "--seed", "7"};
  auto first = bin, second = bin;
  first.insert(first.end(), {"--out", path("a.json"), "--plot", path("a.svg")});
  second.insert(second.end(), {"--out", path("b.json")});
  ASSERT_EQ(run(first), 0) << err_.str();
  EXPECT_NE(out_.str().find("n_bin="), std::string::npos);
  ASSERT_EQ(run(second), 0) << err_.str();
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_NE(slurp(path("a.svg")).find("<svg"), std::string::npos);
}

TEST_F(Cli, NullsimRowCount)
{
  ASSERT_EQ(run({"nullsim", "--n", "1000", "--sims", "100", "--depths", "2..10", "--out",
                 path("null.csv")}),
            0)
      << err_.str();
  EXPECT_EQ(lines(path("null.csv")), 901);
  ASSERT_EQ(run({"nullsim", "--n", "50", "--sims", "3", "--depths", "2,4", "--out", path("null.json")}), 0);
  EXPECT_NE(slurp(path("null.json")).find("\"entries\""), std::string::npos);
}

TEST_F(Cli, PvalueOfZeroIsOne)
{
  ASSERT_EQ(run({"nullsim", "--n", "200", "--sims", "20", "--depths", "6", "--out", path("null.csv")}), 0);
  ASSERT_EQ(run({"pvalue", "--null", path("null.csv"), "--nbin", "40", "--chi2", "0"}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "1.0\n");
  // Above every entry: the add-one floor 1 / (1 + entries in the window).
  ASSERT_EQ(run({"pvalue", "--null", path("null.csv"), "--nbin", "20", "--chi2", "1e9", "--window",
                 "1000"}),
            0);
  EXPECT_NEAR(std::stod(out_.str()), 1.0 / 21.0, 1e-10);
}

TEST_F(Cli, UsageErrors)
{
  EXPECT_EQ(run({"bin", "--bogus"}), exit_usage);
  EXPECT_NE(err_.str().find("--input"), std::string::npos);
  EXPECT_EQ(run({}), exit_usage);
  EXPECT_EQ(run({"bin", "--input", path("x.csv"), "--out", path("o.json"), "--score", "gini"}), exit_usage);
}

TEST_F(Cli, DataErrors)
{
  EXPECT_EQ(run({"bin", "--input", path("missing.csv"), "--out", path("o.json")}), exit_data);
  std::ofstream(path("bad.csv")) << "x,y\n1,2\n3,oops\n";
  EXPECT_EQ(run({"bin", "--input", path("bad.csv"), "--out", path("o.json")}), exit_data);
  EXPECT_NE(err_.str().find("oops"), std::string::npos);
}

TEST_F(Cli, ScanEndToEnd)
{
  {
    std::ofstream m(path("m.csv"));
    m << "a,b,c,d\n";
    for (int i = 0; i < 120; ++i) m << i << "," << (i * 37) % 120 << "," << (i * 7) % 11 << "," << 2 * i + 1 << "\n";
  }
  ASSERT_EQ(run({"nullsim", "--n", "120", "--sims", "50", "--depths", "6", "--out", path("null.json")}), 0);
  ASSERT_EQ(run({"scan", "--input", path("m.csv"), "--null", path("null.json"), "--out", path("s.csv"),
                 "--plot-top", "1", "--plot-dir", path("plots")}),
            0)
      << err_.str();
  EXPECT_EQ(lines(path("s.csv")), 7);
  const auto csv = slurp(path("s.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name_a,name_b,n_bin,chi2,p_emp");
  EXPECT_EQ(csv.substr(csv.find('\n') + 1, 4), "a,d,");
  int svgs = 0;
  for (const auto& e : fs::directory_iterator(path("plots"))) svgs += e.path().extension() == ".svg";
  EXPECT_EQ(svgs, 3);

  // A null simulated with another score is refused.
  ASSERT_EQ(run({"nullsim", "--n", "120", "--sims", "5", "--depths", "6", "--score", "mi", "--out",
                 path("mi.json")}),
            0);
  EXPECT_EQ(run({"scan", "--input", path("m.csv"), "--null", path("mi.json"), "--out", path("t.csv")}),
            exit_data);
}

} // namespace
} // namespace rrbin
