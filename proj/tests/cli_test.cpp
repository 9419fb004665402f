#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lawforge/json_io.hpp"

namespace {

std::string g_binary;

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("exponent subcommand agrees and exits 0") {
  auto r = run("exponent --group 'SL(3,2)'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"formula\": 84") != std::string::npos);
  CHECK(r.out.find("\"brute_force\": 84") != std::string::npos);
  CHECK(r.out.find("\"agree\": true") != std::string::npos);
}

TEST_CASE("build-law verifies exhaustively for SL(2,2)") {
  auto r = run("build-law --group 'SL(2,2)' --verify exhaustive --emit json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"group_bound\": 64") != std::string::npos);
  CHECK(r.out.find("\"verdict\": \"identity\"") != std::string::npos);
}

TEST_CASE("verify flags odd short words by parity and exits 2") {
  auto r = run("verify --group 'SL(2,3)' --word x1^5");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"parity_note\": true") != std::string::npos);
  CHECK(r.out.find("\"counterexample\"") != std::string::npos);
}

TEST_CASE("verify accepts word files in both formats") {
  {
    std::ofstream f("/tmp/lawforge_w.json");
    f << "[[1, 6]]";
  }
  auto r = run("verify --group 'SL(2,2)' --word-file /tmp/lawforge_w.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verdict\": \"identity\"") != std::string::npos);
  {
    std::ofstream f("/tmp/lawforge_w.txt");
    f << "x1^2";
  }
  auto r2 = run("verify --group 'SL(2,2)' --word-file /tmp/lawforge_w.txt");
  CHECK(r2.exit_code == 2);
  CHECK(r2.out.find("\"verdict\": \"counterexample\"") != std::string::npos);
}

TEST_CASE("search finds alpha(SL(2,2)) = 6") {
  auto r = run("search --group 'SL(2,2)' --max-len 6 --report json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"alpha\": 6") != std::string::npos);
  CHECK(r.out.find("x1^6") != std::string::npos);
}

TEST_CASE("bounds emits the chain report") {
  auto r = run("bounds --family 2A --rank 5 --q 3 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"q_star\": 9") != std::string::npos);
  CHECK(r.out.find("A4(9)") != std::string::npos);  // 2A lower chain terminal

  auto bad = run("bounds --family 2G2 --rank 1 --q 9 --json");
  CHECK(bad.exit_code == 1);  // Ree field constraint
}

TEST_CASE("certify exits 2 when the bound refutes the claim") {
  auto r = run("certify --q 7 --word x1^2 --json");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"length_consistent\": false") != std::string::npos);

  auto ok = run("certify --q 5 --word x1*x2*x1^-1*x2^-1 --json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"case_i\": false") != std::string::npos);
}

TEST_CASE("embed checks the blow-up") {
  auto r = run("embed --q 2 --exhaustive");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"homomorphism_ok\": true") != std::string::npos);
  CHECK(r.out.find("\"pairs_checked\": 3600") != std::string::npos);
}

TEST_CASE("tool failures exit 1") {
  CHECK(run("verify --group 'SL(2,6)' --word x1^2").exit_code == 1);
  CHECK(run("verify --group 'SL(2,3)'").exit_code == 1);  // no word given
  CHECK(run("exponent --group 'GL(2,3)'").exit_code == 1);
  {
    std::ofstream f("/tmp/lawforge_bad.txt");
    f << "zz^^3";
  }
  CHECK(run("verify --group 'SL(2,3)' --word-file /tmp/lawforge_bad.txt").exit_code == 1);
}

TEST_CASE("word JSON round-trips exactly") {
  using lawforge::Word;
  for (const char* text : {"x1^2*x2*x1^-3", "x1", "x2^-84", "x1*x2*x1^-1*x2^-1"}) {
    Word w = Word::parse_text(text);
    CHECK(lawforge::word_from_json(lawforge::word_json(w)) == w);
    CHECK(lawforge::word_json(w).dump() ==
          lawforge::word_json(lawforge::word_from_json(lawforge::word_json(w))).dump());
  }
  CHECK(lawforge::word_from_json(nlohmann::json::parse("[[1,2],[2,1],[1,-3]]")).to_text() ==
        "x1^2*x2*x1^-3");
}

TEST_CASE("every JSON report re-parses") {
  for (const char* cmd : {
           "exponent --group 'SL(2,3)'",
           "build-law --group 'PSL(2,5)' --verify random --samples 200 --seed 4",
           "verify --group 'SL(2,3)' --word x1^5",
           "search --group 'SL(2,2)'",
           "bounds --family 2D --rank 5 --q 9 --json",
           "certify --q 3 --word 'x1*x2*x1^-1*x2^-1' --psl --json",
           "embed --q 2 --samples 100 --seed 1",
       }) {
    auto r = run(cmd);
    nlohmann::json parsed;
    CHECK_NOTHROW(parsed = nlohmann::json::parse(r.out));
    CHECK(parsed.at("schema_version").get<int>() == 1);
  }
}

TEST_CASE("fixed seeds give byte-identical output") {
  for (const char* cmd : {
           "exponent --group 'SL(2,3)'",
           "build-law --group 'SL(2,3)' --verify random --samples 500 --seed 11",
           "verify --group 'SL(2,5)' --word x1^60 --mode random --samples 300 --seed 7",
           "verify --group 'SL(2,3)' --word x1*x2*x1^-1*x2^-1 --mode exhaustive --jobs 2",
           "search --group 'SL(2,2)' --max-len 6 --seed 3",
           "bounds --family 3D4 --rank 2 --q 3 --json",
           "certify --q 5 --word x1^4 --json",
           "embed --q 3 --samples 200 --seed 5",
       }) {
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-') g_binary = arg;
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: cli_test <path-to-lawforge>\n");
    return 1;
  }
  return ctx.run();
}
