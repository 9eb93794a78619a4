#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "sigchar/cli.hpp"
#include "sigchar/multisegment.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sigchar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zel reproduces the worked dual") {
  Run r = run({"zel", "[3,4];[2,3,4];[1,2];[1/2];[0];[-1/2];[-1,0,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "4;4;3;[1,2,3];[0,1,2];0;[-1/2,1/2];-1\n");
}

TEST_CASE("sig outputs table values with provenance") {
  Run r = run({"sig", "--nu", "1/4,-1/4"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1^2)+(2)   [proven]\n");

  Run rj = run({"--json", "sig", "--nu", "1/4,-1/4"});
  CHECK(rj.code == 0);
  json j = json::parse(rj.out);
  CHECK(j["signature"]["2"] == 1);
  CHECK(j["signature"]["1^2"] == 1);
  CHECK(j["provenance"] == "proven");
  CHECK(j["conjecture_uses"].empty());
}

TEST_CASE("sig accepts D_M coordinates with --n") {
  Run a = run({"sig", "--nu", "13/10,3/10", "--n", "4", "--mode", "conjectural"});
  CHECK(a.code == 0);
  CHECK(a.out.find("-(2^2)+(3,1)+(4)") != std::string::npos);
  CHECK(a.out.find("conjectural") != std::string::npos);
}

TEST_CASE("proven mode exits 3 on conjectural values") {
  Run r = run({"--mode", "proven", "sig", "--nu", "13/10,3/10,-3/10,-13/10"});
  CHECK(r.code == 3);
  CHECK(r.err.find("Conj") != std::string::npos);
}

TEST_CASE("exit codes for parse and domain errors") {
  CHECK(run({"sig", "--nu", "bogus"}).code == 2);
  CHECK(run({"kostka"}).code == 2);
  CHECK(run({"--mode", "sideways", "sig", "--nu", "1/4,-1/4"}).code == 2);
  CHECK(run({"nonsense-subcommand"}).code == 2);
  CHECK(run({"sig", "--nu", "1/4,1/4"}).code == 1);       // not antisymmetric
  CHECK(run({"zel", "[0,2]"}).code == 2);                 // bad segment
  CHECK(run({"sigma-nmr", "4", "3", "0"}).code == 1);     // m > [N/2]
}

TEST_CASE("classify emits the documented JSON") {
  Run r = run({"--json", "classify", "[2,3];[0,1,2];[1]"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["multisegment"] == "[2,3];1;[0,1,2]");
  CHECK(j["e"] == "3,2,1");
  CHECK(j["block_sizes"] == json::array({2, 4}));
  CHECK(j["nu"] == json::array({"5/2", "1"}));
  CHECK(j["tempered_parts"] == json::array({"[-1/2,1/2]", "0;[-1,0,1]"}));
  CHECK(j["flags"]["hermitian"] == false);
  CHECK(j["flags"]["irreducible_standard"] == false);
  CHECK(j["flags"]["tempered"] == false);
  CHECK(j["flags"]["unramified"] == false);
  CHECK(j["flags"]["unitary"] == false);
}

TEST_CASE("infinity command") {
  Run r = run({"infinity", "--blocks", "1,2,1", "--tempered", "[0];[-1/2,1/2];[0]"});
  CHECK(r.code == 0);
  CHECK(r.out == "-(1^4)-(2^2)+(3,1)\n");
}

TEST_CASE("sigma-nmr command") {
  Run r = run({"sigma-nmr", "4", "2", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-(1^4)-(2,1^2)+(3,1)+(4)   [proven]\n");
}

TEST_CASE("verify kostka-identity") {
  Run r = run({"verify", "kostka-identity", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("OK:") == 0);
}

TEST_CASE("oracle command") {
  Run r = run({"--json", "oracle", "--nu", "1,0,-1", "--det-order"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["counts"]["2,1"]["zero"] == 4);
  CHECK(j["counts"]["2,1"]["signature"] == 0);
  CHECK(j["signature"]["3"] == 1);
  CHECK(j["signature"]["2,1"] == 0);
  CHECK(j["det_order"] == 6);
}

TEST_CASE("paper-tables output is deterministic and round-trips") {
  Run a = run({"paper-tables", "--n", "3"});
  Run b = run({"paper-tables", "--n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("erratum") != std::string::npos);

  Run j4 = run({"--json", "paper-tables", "--n", "4"});
  json rows = json::parse(j4.out);
  CHECK(rows.size() == 33);
}

TEST_CASE("every multisegment printed by a command re-parses to an equal value") {
  for (const char* s : {"[3,4];[2,3,4];[1,2];[1/2];[0];[-1/2];[-1,0,1]", "0;0", "[-1/2,1/2]"}) {
    Run r = run({"zel", s});
    REQUIRE(r.code == 0);
    std::string printed = r.out.substr(0, r.out.size() - 1);
    CHECK(sigchar::Multisegment::parse(printed) ==
          sigchar::zelevinsky(sigchar::Multisegment::parse(s)));
  }
}

TEST_CASE("HSIG_MAX_N caps enumeration") {
  setenv("HSIG_MAX_N", "3", 1);
  CHECK(run({"sig", "--nu", "1/4,1/8,-1/8,-1/4"}).code == 1);
  unsetenv("HSIG_MAX_N");
  CHECK(run({"sig", "--nu", "1/4,1/8,-1/8,-1/4"}).code == 0);
}
