#include "doctest.h"
#include "penthex/cli.hpp"
#include "penthex/patch_graph.hpp"

using namespace penthex;

TEST_CASE("decide subcommand") {
  auto r = run_cli_captured({"decide", "322232222"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("yes\n") == 0);
  CHECK(r.out.find("answer=yes\n") != std::string::npos);
  CHECK(r.out.find("f5=1\n") != std::string::npos);
  CHECK(r.out.find("n=9\n") != std::string::npos);
  CHECK(r.out.find("d=6\n") != std::string::npos);
  CHECK(r.out.find("nodes=") != std::string::npos);
  CHECK(r.out.find("time_ms=") != std::string::npos);

  auto no = run_cli_captured({"decide", "2222222"});
  CHECK(no.exit_code == 0);
  CHECK(no.out.find("no\n") == 0);
}

TEST_CASE("f5 = 6 needs the conjecture flag") {
  auto r = run_cli_captured({"decide", "2323232323"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("Unsupported") != std::string::npos);

  auto c = run_cli_captured({"decide", "2323232323", "--conjecture"});
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("yes (conditional)\n") == 0);
  CHECK(c.out.find("conditional=1\n") != std::string::npos);
}

TEST_CASE("bad input exits 1") {
  auto r = run_cli_captured({"decide", "2423"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("BadDigit") != std::string::npos);
}

TEST_CASE("count subcommand") {
  auto r = run_cli_captured({"count", "222222", "--cap", "10"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1\n") == 0);
  CHECK(r.out.find("count=1\n") != std::string::npos);
  CHECK(r.out.find("saturated=0\n") != std::string::npos);
  CHECK(r.out.find("cap=10\n") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  auto r = run_cli_captured({"oracle", "222222", "--budget", "36"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1 solution\n") == 0);
  CHECK(r.out.find("count=1\n") != std::string::npos);
  CHECK(r.out.find("budget=36\n") != std::string::npos);
}

TEST_CASE("witness record round-trips") {
  auto r = run_cli_captured({"witness", "322232222", "--format", "record"});
  CHECK(r.exit_code == 0);
  auto at = r.out.find("witness\n");
  REQUIRE(at != std::string::npos);
  auto ps = parse_patchset_record(r.out.substr(at + 8));
  REQUIRE(ps.size() == 1);
  CHECK(compact(ps[0].boundary_code()) == "322232222");
  CHECK(r.out.find("trace steps=") != std::string::npos);
  CHECK(r.out.find("step II seq=0") != std::string::npos);
}

TEST_CASE("drawing output") {
  auto r = run_cli_captured({"witness", "22222", "--format", "drawing"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
}

TEST_CASE("bench smoke") {
  auto r = run_cli_captured({"bench", "6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# code n f5") != std::string::npos);
  CHECK(r.out.find("agree=") != std::string::npos);
}
