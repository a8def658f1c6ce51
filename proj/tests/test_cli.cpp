#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "parkbraid/commands.hpp"

using namespace parkbraid;

namespace {

struct Run {
  std::string out;
  std::string err;
  int code;
};

// Runs the CLI through the shell with `input` on stdin.
Run run(const std::string& args, const std::string& input = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in_path = dir / "parkbraid_test_in.json";
  const auto err_path = dir / "parkbraid_test_err.txt";
  std::ofstream(in_path) << input;
  const std::string cmd =
      std::string(PARKBRAID_EXE) + " " + args + " < " + in_path.string() + " 2> " + err_path.string();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  std::stringstream err;
  err << std::ifstream(err_path).rdbuf();
  return {out, err.str(), WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

void check_error_line(const Run& r, const std::string& code) {
  CHECK(r.code != 0);
  CHECK(r.out.empty());
  const std::regex line("parkbraid: error: " + code + ": [^\n]+\n");
  CHECK_MESSAGE(std::regex_match(r.err, line), r.err);
}

}  // namespace

TEST_CASE("convert") {
  const auto r = run("convert", R"({"n":3,"f":[2,2,1]})");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":3,\"basis\":[[2,3],[2,2],[1,3]],\"verified\":true}\n");
  const auto back = run("convert basis-to-pf", R"({"n":3,"basis":[[2,3],[2,2],[1,3]]})");
  CHECK(back.out == "{\"n\":3,\"f\":[2,2,1],\"verified\":true}\n");
  const auto big = run("convert pf-to-basis", R"({"n":12,"f":[3,11,7,5,9,8,5,2,1,10,2,12]})");
  CHECK(big.out ==
        "{\"n\":12,\"basis\":[[3,3],[11,11],[7,7],[5,7],[9,9],[8,9],[5,5],[2,9],[1,9],[10,11],[2,3],[12,12]],"
        "\"verified\":true}\n");
}

TEST_CASE("convert round trips every basis of A_3") {
  for (const auto& a : enumerate_recursive(3)) {
    const auto pf = cmd_convert(to_json(a), "basis-to-pf");
    CHECK(pf["verified"] == true);
    const auto back = cmd_convert(pf, "pf-to-basis");
    CHECK(back["basis"] == to_json(a)["basis"]);
  }
}

TEST_CASE("enumerate counts") {
  CHECK(run("enumerate 3 bases --count").out == "16\n");
  CHECK(run("enumerate 4 pf --count").out == "125\n");
  CHECK(run("enumerate 5 nondecreasing --count").out == "42\n");
  CHECK(run("enumerate 3 chains --count").out == "16\n");
  const auto list = run("enumerate 2 pf");
  CHECK(list.out == "{\"n\":2,\"f\":[1,1]}\n{\"n\":2,\"f\":[1,2]}\n{\"n\":2,\"f\":[2,1]}\n");
}

TEST_CASE("enumerate limits") {
  const auto r = run("enumerate 9 pf --count");
  check_error_line(r, "limit_exceeded");
  CHECK(r.err.find("--max-n") != std::string::npos);
  CHECK(cmd_enumerate(9, "nondecreasing", true) == "4862\n");
  check_error_line(run("enumerate 13 nondecreasing --count"), "limit_exceeded");
}

TEST_CASE("braid apply") {
  const auto r = run("braid apply 1", R"({"n":3,"f":[1,2,1]})");
  CHECK(r.code == 0);
  const auto j = parse_json(r.out);
  CHECK(j["f"] == Json::array({2, 1, 1}));
  CHECK(j["orders"] == Json::array({2, 3}));
  const auto id = parse_json(run("braid apply \"1 -1\"", R"({"n":3,"f":[1,2,1]})").out);
  CHECK(id["f"] == Json::array({1, 2, 1}));
  check_error_line(run("braid apply 5", R"({"n":3,"f":[1,2,1]})"), "bad_letter");
}

TEST_CASE("braid relation through the command layer") {
  for (const auto& a : enumerate_recursive(4)) {
    const Json in = to_json(a);
    CHECK(cmd_braid(in, "1 2 1")["basis"] == cmd_braid(in, "2 1 2")["basis"]);
    CHECK(cmd_braid(in, "2 3 2")["basis"] == cmd_braid(in, "3 2 3")["basis"]);
  }
}

TEST_CASE("orbit and render") {
  const auto dot = run("orbit 2 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph PF2 {", 0) == 0);
  const auto diag = run("render diagram", R"({"n":5,"f":[1,5,3,1,4]})");
  CHECK(diag.out == "#### 2\n###  5\n##   3\n.    4\n     1\n");
  check_error_line(run("render arcs --format dot", R"({"n":2,"f":[1,1]})"), "unsupported_render");
  const auto svg = run("render arcs --format svg", R"({"n":3,"f":[2,2,1]})");
  CHECK(svg.out.find("data-left=\"0\" data-right=\"3\"") != std::string::npos);
}

TEST_CASE("quiver table and nc") {
  const auto q = parse_json(run("quiver table", R"({"n":3,"f":[2,2,1]})").out);
  CHECK(q["exceptional"] == true);
  CHECK(q["hom"].size() == 3);
  const auto c = parse_json(run("nc to-chain", R"({"n":3,"f":[2,2,1]})").out);
  CHECK(c["lambda"] == Json::array({1, 1, 0}));
  const auto b = parse_json(run("nc", c.dump()).out);
  CHECK(b["f"] == Json::array({2, 2, 1}));
}

TEST_CASE("verify") {
  const auto ok = run("verify 3 all");
  CHECK(ok.code == 0);
  const auto report = parse_json(ok.out);
  CHECK(report["passed"] == true);
  CHECK(report["checks"].size() > 10);
  const auto braid5 = run("verify 5 braid");
  CHECK(braid5.code == 0);
  const auto bad = run("verify 3 all --inject-fault");
  CHECK(bad.code == 1);
  const auto failed = parse_json(bad.out);
  CHECK(failed["passed"] == false);
  CHECK(failed["fault_injected"] == true);
  bool has_payload = false;
  for (const auto& c : failed["checks"]) has_payload |= c["passed"] == false && c.contains("counterexample");
  CHECK(has_payload);
  check_error_line(run("verify 3 everything"), "unknown_suite");
  check_error_line(run("verify 8 all"), "limit_exceeded");
}

TEST_CASE("errors are one machine-readable line") {
  check_error_line(run("convert", "{not json"), "parse_error");
  check_error_line(run("convert", R"({"n":3,"f":[3,3,3]})"), "invalid_parking");
  check_error_line(run("convert basis-to-pf", R"({"n":2,"basis":[[2,2],[1,1]]})"), "invalid_basis");
  check_error_line(run("convert --in /nonexistent/file.json"), "io_error");
  const auto usage = run("frobnicate");
  CHECK(usage.code != 0);
  CHECK(usage.err.rfind("parkbraid: error: usage: ", 0) == 0);
}

TEST_CASE("files in and out") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in = dir / "parkbraid_file_in.json";
  const auto out = dir / "parkbraid_file_out.json";
  std::ofstream(in) << R"({"n":3,"f":[2,1,1]})";
  const auto r = run("convert --in " + in.string() + " --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::stringstream got;
  got << std::ifstream(out).rdbuf();
  CHECK(got.str() == "{\"n\":3,\"basis\":[[2,2],[1,3],[1,2]],\"verified\":true}\n");
}
