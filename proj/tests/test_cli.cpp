#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "tiltcat/cli/commands.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the built executable through the shell, capturing stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(TILTCAT_BIN) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

fs::path temp_dir() {
  auto d = fs::temp_directory_path() / ("tiltcat_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') == std::string::npos ? 0 : t.rfind('\n') + 1);
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST(Cli, Count) {
  auto r = run("count --blocks 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "5");
  EXPECT_EQ(last_line(run("count --blocks 1,1,1").out), "1");
  EXPECT_EQ(last_line(run("count --blocks 4,6").out), "1848");
  EXPECT_EQ(run("count --blocks 0").code, 2);
  EXPECT_EQ(run("count --blocks x").code, 2);
  EXPECT_EQ(run("count").code, 2);
  const auto j = nlohmann::json::parse(run("count --blocks 4,6 --format json").out);
  EXPECT_EQ(j["count"], 1848);
}

TEST(Cli, Enumerate) {
  const auto r = run("enumerate --blocks 3 --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 5u);
  EXPECT_NE(r.out.find("block1: (1,5)(2,4)(2,5)\n"), std::string::npos);
  EXPECT_EQ(run("enumerate --blocks 1").out, "block1: (1,3)\n");
  EXPECT_EQ(nlohmann::json::parse(run("enumerate --blocks 2,2 --format json").out).size(), 4u);
  EXPECT_EQ(count_lines(run("enumerate --blocks 4 --limit 3").out), 3u);
  EXPECT_EQ(run("enumerate --blocks 13").code, 2);
  EXPECT_EQ(last_line(run("enumerate --blocks 13 --count-only").out), "742900");
  EXPECT_EQ(run("enumerate --blocks 3 --out /nonexistent/dir/x.txt").code, 2);
  EXPECT_EQ(run("enumerate --blocks 4,2 --format json").out, run("enumerate --blocks 4,2 --format json").out);
}

TEST(Cli, VerifyRoundTrip) {
  const auto dir = temp_dir();
  const auto listed = dir / "all.json";
  ASSERT_EQ(run("enumerate --blocks 3,2 --format json --out " + listed.string()).code, 0);
  auto r = run("verify " + listed.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 10u);
  const auto arr = nlohmann::json::parse(std::ifstream(listed));
  const auto one = dir / "one.json";
  write(one, arr[0].dump());
  EXPECT_EQ(run("verify " + one.string()).code, 0);
}

TEST(Cli, VerifyRejects) {
  const auto dir = temp_dir();
  const auto crossing = dir / "crossing.json";
  // P1,1 swapped for S1[1,2]; its image (1,3) crosses both (2,5) and (2,4)
  write(crossing, R"({"type":{"blocks":[3]},"summands":[{"block":1,"quot":[1,2]},{"block":1,"quot":[2,3]},{"block":1,"proj":2}]})");
  auto r = run("verify " + crossing.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "reject: Ext^1(S1[1,2], P1,2) != 0\n");
  const auto short_one = dir / "short.json";
  write(short_one, R"({"type":{"blocks":[3]},"summands":[{"block":1,"proj":1},{"block":1,"proj":2}]})");
  r = run("verify " + short_one.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "reject: summand count\n");
  const auto junk = dir / "junk.json";
  write(junk, "{not json");
  EXPECT_EQ(run("verify " + junk.string()).code, 2);
  EXPECT_EQ(run("verify " + (dir / "missing.json").string()).code, 2);
}

TEST(Cli, Crosscheck) {
  auto r = run("crosscheck --blocks 2 --lambda trunc:2 --prime 101 --seed 42");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(last_line(r.out), "tilting count 2");
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run("crosscheck --blocks 3 --lambda field");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "tilting count 5");
  r = run("crosscheck --blocks 2,1 --lambda nakayama:2:2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "tilting count 2");
  EXPECT_EQ(run("crosscheck --blocks 2,1 --lambda trunc:2").code, 2);
  EXPECT_EQ(run("crosscheck --blocks 2 --lambda nakayama:3:2").code, 2);
  EXPECT_EQ(run("crosscheck --blocks 2 --lambda bogus").code, 2);
  EXPECT_EQ(run("crosscheck --blocks 2 --prime 4").code, 2);
  EXPECT_EQ(run("crosscheck --blocks 2 --lambda trunc:2 --seed 7").out,
            run("crosscheck --blocks 2 --lambda trunc:2 --seed 7").out);
}

TEST(Cli, CrosscheckFromAlgebraFile) {
  const auto dir = temp_dir();
  const auto alg = dir / "alg.json";
  ASSERT_EQ(run("algebra --blocks 2 --lambda trunc:3 --out " + alg.string()).code, 0);
  const auto r = run("crosscheck --algebra " + alg.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "tilting count 2");
}

TEST(Cli, PrimeFromEnvironment) {
  const auto r = run("crosscheck --blocks 1 --lambda trunc:2");
  EXPECT_NE(r.out.find(", p 101"), std::string::npos);
  const std::string cmd = "TILTCAT_PRIME=7 " + std::string(TILTCAT_BIN) + " crosscheck --blocks 1 --lambda trunc:2";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::array<char, 256> buf{};
  std::string out;
  while (fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  EXPECT_NE(out.find(", p 7"), std::string::npos);
  EXPECT_NE(run("crosscheck --blocks 1 --lambda trunc:2 --prime 3").out.find(", p 3"), std::string::npos);
}

TEST(Cli, Render) {
  const auto dir = temp_dir() / "svg";
  fs::remove_all(dir);
  auto r = run("render --n 3 --what triangulations --format svg --out " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator()), 5);
  r = run("render --n 1 --what arquiver");
  EXPECT_EQ(r.out, "vertices 1: (1,3)\narrows 0:\n");
  r = run("render --n 3 --what arquiver");
  EXPECT_NE(r.out.find("vertices 6:"), std::string::npos);
  EXPECT_NE(r.out.find("arrows 6:"), std::string::npos);
  EXPECT_EQ(run("render --n 13 --what arquiver").code, 2);
  EXPECT_EQ(run("render --n 3 --what nothing").code, 2);
  EXPECT_EQ(count_lines(run("render --n 4 --what triangulations").out), 14u);
}

TEST(CliLibrary, BuildLambda) {
  using tiltcat::cli::build_lambda;
  EXPECT_EQ(build_lambda("field", 3, 101)->dim(), 3u);
  EXPECT_EQ(build_lambda("trunc:3", 1, 101)->dim(), 3u);
  EXPECT_EQ(build_lambda("nakayama:2:2", 2, 101)->dim(), 4u);
  EXPECT_THROW(build_lambda("trunc:0", 1, 101), std::invalid_argument);
  EXPECT_THROW(build_lambda("nakayama:2", 2, 101), std::invalid_argument);
}
