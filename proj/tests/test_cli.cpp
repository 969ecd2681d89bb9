#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cgadg/cli.hpp"
#include "cgadg/io.hpp"
#include "cgadg/oracle.hpp"

using namespace cgadg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cgadg_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate, solve and verify") {
  TempDir dir;
  const std::string inst = dir / "i.txt";
  const std::string truth = dir / "truth.txt";
  auto r = cli({"generate", "--n", "10", "--seed", "7", "--extra-edges", "0", "--out", inst, "--truth", truth});
  REQUIRE(r.code == kExitOk);
  CHECK(fs::exists(inst));
  CHECK(fs::exists(truth));

  r = cli({"solve", inst, "--all"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("solutions: 128\n", 0) == 0);

  r = cli({"verify", inst, truth});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("max violation: 0\n") != std::string::npos);

  const std::string sol = dir / "sol.txt";
  r = cli({"solve", inst, "--all", "--out", sol});
  REQUIRE(r.code == kExitOk);
  for (int k = 1; k <= 128; ++k) {
    const std::string file = dir / ("sol_" + std::to_string(k) + ".txt");
    REQUIRE(fs::exists(file));
    CHECK(cli({"verify", inst, file}).code == kExitOk);
  }
  CHECK(!fs::exists(dir / "sol_129.txt"));
  CHECK(read_text_file(dir / "sol_1.txt").rfind("# path +++++++\n", 0) == 0);

  const std::string first = dir / "first.txt";
  r = cli({"solve", inst, "--out", first});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "solutions: 1\n");
  CHECK(fs::exists(first));

  CHECK(cli({"solve", inst, "--max-solutions", "5"}).out.rfind("solutions: 5\n", 0) == 0);
  CHECK(cli({"solve", inst, "--all", "--symmetric"}).out.rfind("solutions: 128\n", 0) == 0);
  CHECK(cli({"solve", inst, "--all", "--parallel"}).out.rfind("solutions: 128\n", 0) == 0);
  r = cli({"solve", inst, "--eps", "1e-6"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("# solution 1\n# path +++++++\n1 0 0 0\n") != std::string::npos);
}

TEST_CASE("verification failure") {
  TempDir dir;
  const std::string inst = dir / "i.txt";
  const std::string truth = dir / "truth.txt";
  REQUIRE(cli({"generate", "--n", "6", "--seed", "1", "--out", inst, "--truth", truth}).code == kExitOk);
  Realization r = parse_realization(read_text_file(truth));
  r.at(5).x += 0.01;
  const std::string bad = dir / "bad.txt";
  write_text_file(bad, format_realization(r));
  auto res = cli({"verify", inst, bad});
  CHECK(res.code == kExitNoSolution);
  CHECK(res.out.find("violated") != std::string::npos);
  CHECK(cli({"verify", inst, bad, "--eps", "0.1"}).code == kExitOk);

  r.resize(5);
  write_text_file(bad, format_realization(r));
  CHECK(cli({"verify", inst, bad}).code == kExitUsage);
}

TEST_CASE("no solutions") {
  TempDir dir;
  const std::string inst = dir / "i.txt";
  // d(1,4) can never be met: 1-2-3-4 is only 3 long.
  write_text_file(inst, "4 6\n1 2 1\n2 3 1\n3 4 1\n1 3 1.5\n2 4 1.5\n1 4 3.5\n");
  const auto r = cli({"solve", inst, "--all"});
  CHECK(r.code == kExitNoSolution);
  CHECK(r.out == "solutions: 0\n");
}

TEST_CASE("input errors") {
  TempDir dir;
  const std::string missing = dir / "missing.txt";
  write_text_file(missing, "4 5\n1 2 1\n2 3 1\n3 4 1\n1 3 1.5\n2 4 1.5\n");
  auto r = cli({"solve", missing});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("not a DMDGP instance") != std::string::npos);
  CHECK(r.err.find("(1,4)") != std::string::npos);

  const std::string garbled = dir / "garbled.txt";
  write_text_file(garbled, "# header next\n4 6\n1 2 oops\n");
  r = cli({"solve", garbled});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);

  const std::string bad_real = dir / "bad_real.txt";
  write_text_file(bad_real, "1 0 0 0\n2 0 0\n");
  r = cli({"verify", missing, bad_real});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(cli({"solve", dir / "nope.txt"}).code == kExitUsage);
  CHECK(cli({"generate", "--n", "3", "--seed", "1", "--out", dir / "x.txt"}).code == kExitUsage);
  CHECK(cli({"generate", "--n", "8", "--seed", "1", "--extra-edges", "2", "--out", dir / "x.txt"}).code == kExitUsage);
  CHECK(cli({"generate", "--n", "8", "--seed", "1", "--out", "/nonexistent/dir/x.txt"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"solve"}).code == kExitUsage);
  CHECK(cli({"solve", "a.txt", "--eps", "-1"}).code == kExitUsage);
  CHECK(cli({"solve", "a.txt", "--bogus"}).code == kExitUsage);
  CHECK(cli({"generate", "--n", "8"}).code == kExitUsage);
  CHECK(cli({"bench", "--count", "0"}).code == kExitUsage);
  const auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("bench command") {
  const auto r = cli({"bench", "--count", "500", "--seed", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("op=compose iterations=500") != std::string::npos);
  CHECK(r.out.find("op=placement iterations=500") != std::string::npos);
  CHECK(r.out.find("cross_check=fail") == std::string::npos);
}

TEST_CASE("eps from the environment") {
  TempDir dir;
  const std::string inst = dir / "i.txt";
  const std::string truth = dir / "truth.txt";
  REQUIRE(cli({"generate", "--n", "6", "--seed", "1", "--out", inst, "--truth", truth}).code == kExitOk);
  Realization r = parse_realization(read_text_file(truth));
  r.at(6).x += 0.001;
  const std::string near = dir / "near.txt";
  write_text_file(near, format_realization(r));

  CHECK(cli({"verify", inst, near}).code == kExitNoSolution);
  ::setenv("CGADG_EPS", "0.01", 1);
  CHECK(cli({"verify", inst, near}).code == kExitOk);
  CHECK(cli({"verify", inst, near, "--eps", "1e-6"}).code == kExitNoSolution);
  ::setenv("CGADG_EPS", "lots", 1);
  const auto bad = cli({"verify", inst, near});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("CGADG_EPS") != std::string::npos);
  ::unsetenv("CGADG_EPS");
}
