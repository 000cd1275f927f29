#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = maip::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return std::string(MAIP_FIXTURE_DIR) + "/" + name + ".tangle"; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("compute") {
  Run r = run({"compute", fx("ex3")});
  CHECK(r.code == maip::cli::kOk);
  CHECK(r.out == "t1^(c1-c3-1) - t2^(c2-c3)\n");

  CHECK(run({"compute", fx("ex1")}).out ==
        "1 - t1^(-1) - t1 + t1^(c1-c2) + t2^(-c1+c2-1) - t2^(-c1+c2)\n");
  CHECK(run({"compute", fx("kink")}).out == "0\n");

  Run j = run({"compute", fx("ex3"), "--json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rendered"] == "t1^(c1-c3-1) - t2^(c2-c3)");
  CHECK(doc["delta"] == nlohmann::json::array({-1, 1, 0}));
  CHECK(doc["terms"].size() == 2);

  CHECK(run({"compute", fx("ex3"), "--numeric", "all=0", "--collapse"}).out == "-1 + t1^(-1)\n");
  CHECK(run({"compute", fx("ex3"), "--numeric", "c1=1", "--numeric", "c2=1", "--numeric", "c3=0"}).out ==
        "1 - t2\n");
}

TEST_CASE("compute --expect") {
  Run ok = run({"compute", fx("ex3"), "--expect", "t1^(c1-c3-1) - t2^(c2-c3)"});
  CHECK(ok.code == maip::cli::kOk);
  CHECK(contains(ok.out, "expect: match"));
  Run bad = run({"compute", fx("ex3"), "--expect", "0"});
  CHECK(bad.code == maip::cli::kPropertyFailure);
  CHECK(contains(bad.out, "MISMATCH"));
}

TEST_CASE("input errors exit 2") {
  Run missing = run({"compute", "/nonexistent.tangle"});
  CHECK(missing.code == maip::cli::kInputError);
  CHECK(contains(missing.err, "error: "));
  Run sing = run({"compute", fx("sing")});
  CHECK(sing.code == maip::cli::kInputError);
  CHECK(contains(sing.err, "diagram has singular crossings; use resolve"));
  CHECK(run({"compute", fx("ex3"), "--collapse"}).code == maip::cli::kInputError);
  CHECK(run({"resolve", fx("ex3")}).code == maip::cli::kInputError);
  CHECK(run({"compose", fx("ex3"), fx("ex3")}).code == maip::cli::kInputError);
  CHECK(run({"check", "--what", "moves"}).code == maip::cli::kInputError);
  CHECK(run({"bogus"}).code == maip::cli::kInputError);
}

TEST_CASE("resolve") {
  Run r = run({"resolve", fx("sing")});
  CHECK(r.code == maip::cli::kOk);
  CHECK(r.out == "-t1 + t1^(c1-c2) + t2^(-c1+c2) - t2^(-1)\n");
  CHECK(run({"resolve", fx("two_sing")}).out == "0\n");
  // D+ plus D- instead of D+ minus D-.
  CHECK(run({"resolve", fx("sing"), "--expect", "t1^(c1-c2) - t1 - t2^(c2-c1) + t2^(-1)"}).code ==
        maip::cli::kPropertyFailure);
}

TEST_CASE("tensor and compose") {
  Run t = run({"tensor", fx("ex3"), fx("kink")});
  CHECK(t.code == maip::cli::kOk);
  CHECK(contains(t.out, "component 4 closed : O3+ U3+"));
  CHECK(contains(t.out, "additivity: agree"));

  Run c = run({"compose", fx("ex3"), fx("ex2")});
  CHECK(c.code == maip::cli::kOk);
  CHECK(contains(c.out, "delta: (1, -1)"));
  CHECK(contains(c.out, "cross-check: agree"));
  CHECK(contains(c.out, "component 1 long from T1 to T2 : O1+ U4+ O2-"));
}

TEST_CASE("check") {
  for (const char* what : {"moves", "prop2", "corollary", "compose", "vassiliev"}) {
    CAPTURE(what);
    Run r = run({"check", "--what", what, "--random", "--trials", "10", "--seed", "4", "--moves", "10"});
    CHECK(r.code == maip::cli::kOk);
    CHECK(contains(r.out, std::string("check ") + what + ": 10/10 passed (seed 4)"));
  }
  Run f = run({"check", fx("ex1"), "--what", "prop2"});
  CHECK(f.code == maip::cli::kOk);
  CHECK(contains(f.out, "1/1 passed"));
}
