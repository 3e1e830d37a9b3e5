#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "latticelab/cli.hpp"

namespace {

struct Result
{
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  args.insert(args.begin(), "latticelab");
  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = latticelab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(std::string const &s, std::string const &needle)
{
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    n += line.find(needle) != std::string::npos;
  return n;
}

/// Restores LATTICELAB_MAX_ORDER on scope exit.
struct EnvGuard
{
  std::optional<std::string> saved;
  EnvGuard()
  {
    if (char const *v = std::getenv("LATTICELAB_MAX_ORDER"))
      saved = v;
  }
  ~EnvGuard()
  {
    if (saved)
      setenv("LATTICELAB_MAX_ORDER", saved->c_str(), 1);
    else
      unsetenv("LATTICELAB_MAX_ORDER");
  }
};

} // namespace

TEST(Cli, Subcount)
{
  auto a5 = run({"subcount", "A5"});
  EXPECT_EQ(a5.code, 0);
  EXPECT_EQ(a5.out, "Sub = 59\n");
  EXPECT_EQ(run({"subcount", "SL(2,5)"}).out, "Sub = 76\n");
  EXPECT_EQ(run({"subcount", "gid(81,10)"}).out, "Sub = 23\n");
  EXPECT_EQ(run({"--json", "subcount", "C6"}).out, "{\"group\":\"C6\",\"order\":6,\"sub\":4}\n");
}

TEST(Cli, PropsJson)
{
  auto r = run({"--json", "props", "A4"});
  ASSERT_EQ(r.code, 0);
  auto j = latticelab::cli::Json::parse(r.out);
  for (char const *key : {"order", "sub", "cyclic", "abelian", "nilpotent", "supersolvable",
                          "solvable", "perfect", "lagrangian"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["sub"], 10);
  EXPECT_EQ(j["supersolvable"], false);
  EXPECT_EQ(j["lagrangian"], false);
  EXPECT_EQ(j["derived_length"], 2);
}

TEST(Cli, PropsText)
{
  auto r = run({"props", "SL(2,5)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("perfect: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("solvable: no\n"), std::string::npos);
  EXPECT_NE(r.out.find("derived_length: -\n"), std::string::npos);
}

TEST(Cli, LatticeSylowHall)
{
  auto l = run({"lattice", "S3", "--orders-only"});
  EXPECT_EQ(l.out, "order=1 count=1 normal=1\norder=2 count=3 normal=0\n"
                   "order=3 count=1 normal=1\norder=6 count=1 normal=1\n");
  auto full = run({"lattice", "C4"});
  EXPECT_EQ(count_lines(full.out, "order="), 3u);
  EXPECT_NE(full.out.find("Sub = 3\n"), std::string::npos);
  EXPECT_EQ(run({"sylow", "A5", "-p", "5"}).out.substr(0, 10), "count = 6\n");
  EXPECT_EQ(run({"hall", "A4", "--primes", "2"}).out.substr(0, 10), "count = 1\n");
  EXPECT_EQ(run({"sylow", "A5", "-p", "4"}).code, 1);
}

TEST(Cli, Table1)
{
  auto r = run({"table1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, " FAIL"), 0u);
  EXPECT_EQ(count_lines(r.out, " FLAG"), 1u);
  EXPECT_GE(count_lines(r.out, " PASS"), 36u);
}

TEST(Cli, Figure1HasNoConflict)
{
  auto r = run({"figure1", "--jobs", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "verdict=CONFLICT"), 0u);
  EXPECT_EQ(count_lines(r.out, "verdict="), 76u);
  EXPECT_NE(r.out.find("CONFLICT 0 bound=360\n"), std::string::npos);
}

TEST(Cli, Verify23)
{
  auto r = run({"verify-23", "--max-order", "1000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, " PASS"), 7u);
  EXPECT_NE(r.out.find("verified\n"), std::string::npos);
}

TEST(Cli, Propagate)
{
  auto r = run({"propagate", "A4", "-k", "3", "-p", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order=300 sub=30 expected=30"), std::string::npos);
  EXPECT_EQ(run({"propagate", "A4", "-p", "2"}).code, 1);
}

TEST(Cli, Errors)
{
  auto unknown = run({"subcount", "A5", "--bogus"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);

  auto bad = run({"subcount", "C4 x"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(std::count(bad.err.begin(), bad.err.end(), '\n'), 1);

  EXPECT_EQ(run({"--cap", "50", "subcount", "A5"}).code, 1);
  EXPECT_EQ(run({"subcount", "gid(81,99)"}).code, 1);
  EXPECT_EQ(run({"--catalog", "/nonexistent.cat", "subcount", "gid(16,3)"}).code, 1);
  EXPECT_EQ(run({"subcount", "A5"}).err, "");
}

TEST(Cli, MaxOrderPrecedence)
{
  EnvGuard guard;
  unsetenv("LATTICELAB_MAX_ORDER");
  EXPECT_NE(run({"scan", "--for-n", "59"}).out.find("bound=360"), std::string::npos);

  setenv("LATTICELAB_MAX_ORDER", "50", 1);
  auto env = run({"scan", "--for-n", "59"});
  EXPECT_EQ(env.out, "n=59 class=Vacuous bound=50 witnesses=\n");
  auto flag = run({"scan", "--for-n", "59", "--max-order", "100"});
  EXPECT_NE(flag.out.find("bound=100 witnesses=A5:non-cyclic"), std::string::npos);

  setenv("LATTICELAB_MAX_ORDER", "many", 1);
  EXPECT_EQ(run({"scan", "--for-n", "59"}).code, 1);
}

TEST(Cli, ScanIsIndependentOfJobs)
{
  auto one = run({"scan", "--max-order", "400", "--jobs", "1"});
  auto four = run({"scan", "--max-order", "400", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(run({"scan", "--for-n", "10"}).out.find("n=10 class=StrictSolvable"), 0u);
  auto j1 = run({"--json", "scan", "--jobs", "1"});
  auto j3 = run({"--json", "scan", "--jobs", "3"});
  EXPECT_EQ(j1.out, j3.out);
}

TEST(Cli, ComaximalOutput)
{
  auto s = run({"comaximal", "C6", "--alpha"});
  EXPECT_EQ(s.out, "order=2 size=1 degrees=1,1\nalpha=1\n");
  auto a = run({"comaximal", "A5", "--dot", "-"});
  auto b = run({"comaximal", "A5", "--dot", "-"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("graph comaximal {\n", 0), 0u);
  EXPECT_EQ(count_lines(a.out, "[label="), 57u);
  EXPECT_EQ(run({"comaximal", "C6", "--csv", "-"}).out, "0,1\n");
  EXPECT_EQ(run({"comaximal", "A5", "--alpha"}).code, 1);
}
