// End-to-end checks against the installed command-line binary.  The
// binary path and the sample-data directory come in from the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  const std::string command =
      std::string(THETALIFT_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) {
  return std::string(THETALIFT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze") {
  const RunResult result = run("analyze --param " + data("u45.json") + " --nu 0");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("k_lambda: 1") != std::string::npos);
  CHECK(result.output.find("r_lambda: 5") != std::string::npos);
  CHECK(result.output.find("s_lambda: 3") != std::string::npos);
  CHECK(result.output.find("signature: (4,5)") != std::string::npos);
  CHECK(result.output.find("hc: 6,5,4,-8;3,1,0,-3,-7") != std::string::npos);
  CHECK(result.output.find("(-8,+)") != std::string::npos);
}

TEST_CASE("analyze a pure-pair parameter") {
  const RunResult result = run("analyze --param " + data("pair_u2.json") + " --nu 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("kappa: 1") != std::string::npos);
  CHECK(result.output.find("k_lambda: -1") != std::string::npos);
  CHECK(result.output.find("r_lambda: 1") != std::string::npos);
  CHECK(result.output.find("s_lambda: 1") != std::string::npos);
  CHECK(result.output.find("X: {}") != std::string::npos);
}

TEST_CASE("first-occurrence") {
  const RunResult result =
      run("first-occurrence --param " + data("u45.json") + " --nu 0 --d 4");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "12\n");
}

TEST_CASE("convert both directions") {
  const RunResult to_param = run("convert --hc \"6,5,4,-8;3,1,0,-3,-7\"");
  CHECK(to_param.exit_code == 0);
  const auto doc = nlohmann::json::parse(to_param.output);
  CHECK(doc["n"] == 9);
  std::vector<int> etas;
  for (const auto& entry : doc["relevant"]) etas.push_back(entry["eta"].get<int>());
  CHECK(etas == std::vector<int>{1, -1, 1, 1, -1, 1, -1, 1, 1});

  const RunResult to_hc = run("convert --param " + data("u45.json"));
  CHECK(to_hc.exit_code == 0);
  CHECK(to_hc.output == "6,5,4,-8;3,1,0,-3,-7\n");
}

TEST_CASE("diagram formats") {
  const RunResult json_run = run("diagram --param " + data("holomorphic.json") +
                                 " --nu 0 --rmax 14 --smax 14 --format json");
  CHECK(json_run.exit_code == 0);
  const auto cells = nlohmann::json::parse(json_run.output);
  // spot-check the three regions of the weight-8 picture
  auto cell = [&](std::int64_t r, std::int64_t s) -> bool {
    for (const auto& c : cells)
      if (c["r"] == r && c["s"] == s) return c["nonzero"].get<bool>();
    FAIL("missing cell");
    return false;
  };
  CHECK(cell(4, 0));
  CHECK(cell(8, 0));
  CHECK(!cell(10, 0));
  CHECK(cell(10, 2));
  CHECK(!cell(2, 4));
  CHECK(cell(4, 4));

  const RunResult ascii_run = run("diagram --param " + data("holomorphic.json") +
                                  " --nu 0 --rmax 6 --smax 2 --format ascii");
  CHECK(ascii_run.exit_code == 0);
  CHECK(ascii_run.output == ". . # #\n . . # \n. . # #\n");

  const RunResult svg_run = run("diagram --param " + data("holomorphic.json") +
                                " --nu 0 --rmax 6 --smax 2 --format svg");
  CHECK(svg_run.exit_code == 0);
  CHECK(svg_run.output.rfind("<svg", 0) == 0);
}

TEST_CASE("verify") {
  const RunResult all = run("verify --param " + data("u45.json") + " --nu 0");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("ok   conservation") != std::string::npos);
  CHECK(all.output.find("ok   appendix-j") != std::string::npos);

  const RunResult some =
      run("verify --param " + data("pair_u2.json") + " --nu 1 --checks conservation,tower");
  CHECK(some.exit_code == 0);
  CHECK(some.output.find("tower") != std::string::npos);
  CHECK(some.output.find("appendix-j") == std::string::npos);
}

TEST_CASE("ggp") {
  const RunResult result = run("ggp " + data("ggp_u1.json") + " " + data("ggp_u2.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("signature_n: (1,0)") != std::string::npos);
  CHECK(result.output.find("signature_n1: (2,0)") != std::string::npos);

  // multiplicity-general inputs get the route-comparison note
  const RunResult noted =
      run("ggp " + data("ggp_u3_mult.json") + " " + data("ggp_u4_mult.json"), true);
  CHECK(noted.exit_code == 0);
  CHECK(noted.output.find("not multiplicity-free") != std::string::npos);
  CHECK(noted.output.find("agree") != std::string::npos);
}

TEST_CASE("failure exit codes") {
  CHECK(run("analyze --param /nonexistent.json --nu 0").exit_code == 1);
  CHECK(run("first-occurrence --param " + data("u45.json") + " --nu 0 --d 3").exit_code == 1);
  CHECK(run("convert").exit_code == 1);
  CHECK(run("bogus-subcommand").exit_code == 1);
  CHECK(run("verify --param " + data("u45.json") + " --nu 0 --checks nope").exit_code == 1);
}
