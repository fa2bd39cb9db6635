#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "blalg/cli.hpp"
#include "blalg/serialize.hpp"
#include "oracles.hpp"

using namespace blalg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "blalg_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("algebra JSON round trips", "[serialize]") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& e : enumerate_bl(n)) {
      const auto j = to_json(e.algebra, e.provenance);
      CHECK(j.at("provenance") == e.provenance);
      const auto back = algebra_from_json_text(j.dump());
      CHECK(back.same_tables(e.algebra));
      CHECK(to_json(back, e.provenance).dump() == j.dump());
    }
  }
}

TEST_CASE("algebra JSON is validated", "[serialize]") {
  CHECK_THROWS_AS(algebra_from_json_text("{"), ParseError);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"n": 2})"), ParseError);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"n": 2, "leq": [[0,0],[1,1],[0,1]], "odot": [[0,0],[0,1]],
                                              "imp": [[1,1],[1,1]]})"),
                  ResiduationFails);
  CHECK_THROWS_AS(algebra_from_json_text(R"({"n": 2, "leq": [[0,5]], "odot": [[0,0],[0,1]], "imp": [[1,1],[0,1]]})"),
                  DimensionMismatch);
  const auto ok = algebra_from_json_text(R"({"n": 2, "leq": [[0,0],[1,1],[0,1]], "odot": [[0,0],[0,1]],
                                             "imp": [[1,1],[0,1]]})");
  CHECK(ok.same_tables(mv_chain(2)));
}

TEST_CASE("reports serialize", "[serialize]") {
  const auto L = oracle::l5();
  const auto j = to_json(L, classify(L));
  CHECK(j.at("pivot") == "a");
  CHECK(j.at("d_set") == json({"0", "a"}));
  CHECK(j.at("classification") == "CometNonChain");
  const auto r = to_json(L, check_axioms(L));
  CHECK(r.at("bl") == true);
  CHECK(r.at("mv") == false);
  const auto q = to_json(make_ring(3, 2));
  CHECK(q.at("ideals").size() == 8u);
  const auto dot = to_dot(L, "L5");
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> n2") != std::string::npos);
  CHECK(dot.find("n1 -> n4") == std::string::npos);
}

TEST_CASE("cli: cipher", "[cli]") {
  auto r = run_cli({"encrypt", "--p", "3", "--beta", "2", "--text", "BJ"});
  CHECK(r.code == 0);
  CHECK(r.out == "G\nkey 3,2,2\n");
  r = run_cli({"encrypt", "--p", "7", "--beta", "6", "--text", "DECADE", "--ideal", "x^2+2x"});
  CHECK(r.out.rfind("DJEDID\n", 0) == 0);
  r = run_cli({"encrypt", "--p", "3", "--beta", "2", "--text", "CF", "--trace"});
  const auto t = json::parse(r.out);
  CHECK(t.at("ciphertext") == "JH");
  CHECK(t.at("path") == "UnitInverseDoubled");
  CHECK(t.at("key").at("beta") == 4);
  r = run_cli({"decrypt", "--key", "3,4,2", "--text", "JH"});
  CHECK(r.code == 0);
  CHECK(r.out == "CF\n");
  r = run_cli({"decrypt", "--key", "5,2,4", "--text", "FD", "--format", "json"});
  const auto cands = json::parse(r.out);
  CHECK(std::find(cands.begin(), cands.end(), "ABBA") != cands.end());

  const auto alpha = write("alpha.txt", "q\nr\ns\nt\nu\nv\nw\nx\ny\nz\n");
  r = run_cli({"encrypt", "--p", "5", "--beta", "3", "--text", "ut", "--alphabet", alpha});
  REQUIRE(r.code == 0);
  const auto ct = r.out.substr(0, r.out.find('\n'));
  const auto key = r.out.substr(r.out.find("key ") + 4);
  r = run_cli({"decrypt", "--key", key.substr(0, key.size() - 1), "--text", ct, "--alphabet", alpha});
  CHECK(r.out.find("ut\n") != std::string::npos);

  // three symbols cannot spell every decimal label
  const auto small = write("small.txt", "x\ny\nz\n");
  r = run_cli({"encrypt", "--p", "5", "--beta", "3", "--text", "zyx", "--alphabet", small});
  CHECK(r.code == 1);
  CHECK(r.err.find("UnknownSymbol") != std::string::npos);
}

TEST_CASE("cli: exit codes", "[cli]") {
  auto r = run_cli({"encrypt", "--p", "4", "--beta", "2", "--text", "BJ"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotPrime") != std::string::npos);
  r = run_cli({"encrypt", "--p", "3", "--beta", "3", "--text", "BJ"});
  CHECK(r.code == 1);
  CHECK(r.err.find("SquarefreeViolation") != std::string::npos);
  r = run_cli({"encrypt", "--p", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("usage error") != std::string::npos);
  r = run_cli({"frobnicate"});
  CHECK(r.code == 2);
  r = run_cli({"census", "--max", "6", "--format", "xml"});
  CHECK(r.code == 2);
  r = run_cli({"algebra", "check", "--in", (scratch() / "missing.json").string()});
  CHECK(r.code == 1);
  r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("encrypt") != std::string::npos);

  auto bad = to_json(oracle::l5());
  bad["imp"][2][1] = 2;
  r = run_cli({"algebra", "check", "--in", write("bad.json", bad.dump())});
  CHECK(r.code == 1);
  CHECK(r.err.find("ResiduationFails") != std::string::npos);
  CHECK(r.err.find("[witness") != std::string::npos);
}

TEST_CASE("cli: algebra commands", "[cli]") {
  const auto l5 = write("l5.json", to_json(oracle::l5()).dump());
  auto r = run_cli({"algebra", "check", "--in", l5, "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("bl") == true);
  CHECK(j.at("mv") == false);

  r = run_cli({"algebra", "classify", "--in", l5, "--format", "table"});
  CHECK(r.out.find("classification CometNonChain") != std::string::npos);
  r = run_cli({"algebra", "split", "--in", l5, "--format", "json"});
  CHECK(json::parse(r.out).size() == 1u);

  const auto c2 = write("c2.json", to_json(mv_chain(2)).dump());
  const auto b4 = write("b4.json", to_json(boolean_algebra(2)).dump());
  r = run_cli({"build", "ordsum", "--a", c2, "--b", b4});
  REQUIRE(r.code == 0);
  const auto built = write("built.json", r.out);
  r = run_cli({"algebra", "iso", "--in", built, "--with", l5, "--format", "table"});
  CHECK(r.out.rfind("isomorphic\n", 0) == 0);
  r = run_cli({"algebra", "iso", "--in", built, "--with", b4});
  CHECK(json::parse(r.out).at("isomorphic") == false);

  r = run_cli({"build", "ring", "--desc", "Prod(Zn(2),Zn(2))"});
  CHECK(json::parse(r.out).at("provenance") == "Id(Z_2×Z_2)");
  r = run_cli({"build", "ring", "--desc", "Zn(30030)", "--cap", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("CapExceeded") != std::string::npos);
  r = run_cli({"build", "mvchain", "--m", "4", "--format", "dot"});
  CHECK(r.out.rfind("digraph", 0) == 0);
  r = run_cli({"ring-ideals", "--p", "3", "--beta", "2"});
  CHECK(r.out.find("ideals: 8") != std::string::npos);
  r = run_cli({"ring-ideals", "--p", "2", "--modulus", "x^2", "--format", "json"});
  CHECK(json::parse(r.out).at("ideals").size() == 3u);
}

TEST_CASE("cli: census, enumerate, scan", "[cli]") {
  auto r = run_cli({"census", "--max", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("rows").back().at("bl_algebras") == 20);
  r = run_cli({"census", "--max", "6"});
  CHECK(r.out.find("BL-algebras        1     2     5     9    20") != std::string::npos);

  const auto dir = scratch() / "enum5";
  fs::remove_all(dir);
  r = run_cli({"enumerate", "--n", "5", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const auto doc = json::parse(ss.str());
    CHECK(doc.contains("provenance"));
    CHECK_NOTHROW(algebra_from_json(doc));
    ++files;
  }
  CHECK(files == 9u);

  r = run_cli({"scan", "--desc", "Zn(12)", "--desc", "Quot(3,x^3-x)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 rings, 0 violations") != std::string::npos);
}

TEST_CASE("cli output is deterministic", "[cli]") {
  const std::vector<std::vector<std::string>> cmds{
      {"census", "--max", "5", "--format", "json"},
      {"enumerate", "--n", "4"},
      {"encrypt", "--p", "7", "--beta", "6", "--text", "DECADE", "--trace"},
      {"ring-ideals", "--p", "5", "--beta", "4", "--format", "dot"},
  };
  for (const auto& c : cmds) {
    const auto a = run_cli(c), b = run_cli(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // Everything the enumerate command prints re-ingests.
  const auto list = json::parse(run_cli({"enumerate", "--n", "6"}).out);
  CHECK(list.size() == 20u);
  for (const auto& doc : list) CHECK(to_json(algebra_from_json(doc), doc.at("provenance").get<std::string>()) == doc);
}
