#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ipf/cli.hpp"
#include "ipf/words.hpp"
#include "test_util.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const code = ipf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  auto const r = run({"eval", "-n", "2", "P1*Q1"});
  CHECK(r.code == 0);
  CHECK(r.out == "ipf{n=2; s=[1,2]; x=[1,1]; y=[1,1]}\n");
  CHECK(r.err.empty());

  auto const bad = run({"eval", "-n", "2", "P3"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("IndexOutOfRange") != std::string::npos);

  auto const syntax = run({"eval", "-n", "2", "P1**Q1"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("offset 3") != std::string::npos);

  CHECK(run({"eval", "P1"}).code == 2);  // no dimension anywhere
  CHECK(run({"eval", "s[2,1]*P1"}).out == "ipf{n=2; s=[2,1]; x=[1,1]; y=[2,1]}\n");
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("expressions from files") {
  char const *path = "cli_test_expr.txt";
  std::ofstream(path) << "Q1*P1\n";
  auto const r = run({"eval", "-n", "2", std::string("@") + path});
  std::remove(path);
  CHECK(r.out == "ipf{n=2; s=[1,2]; x=[2,1]; y=[2,1]}\n");
  CHECK(run({"eval", "-n", "2", "@does-not-exist"}).code == 2);
}

TEST_CASE("order, quotient, congruence, solve, units") {
  auto const order =
      run({"order", "ipf{n=1; s=[1]; x=[3]; y=[2]}", "ipf{n=1; s=[1]; x=[2]; y=[1]}"});
  CHECK(order.out ==
        "leq(A,B)=true\nleq(B,A)=false\nmg_related=true\n"
        "green: L=false R=false H=false D=true J=true\n");

  auto const q = run({"quotient", "ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}"});
  CHECK(q.out ==
        "upsilon=quo{s=[2,1]; z=[0,-1]}\npsi=sdp{s=[2,1]; p=[(0,0),(1,2)]}\n"
        "top=ipf{n=2; s=[2,1]; x=[1,1]; y=[1,2]}\n");

  auto const c = run({"congruence", "-n", "2", "s[2,1]", "I"});
  CHECK(c.out == "cong{kind=group; K=[[1,2],[2,1]]; reps=[[0,0],[0,0]]; L=[[1,-1]]}\n");
  auto const ct = run({"congruence", "-n", "1", "e[4]*Q1*Q1*Q1", "I", "--test", "P1*P1*P1", "I"});
  CHECK(ct.code == 0);
  CHECK(ct.out.find("relates=true") != std::string::npos);

  auto const s = run({"solve", "--right", "-n", "1", "P1", "e[2]"});
  CHECK(s.out == "solutions=1\nipf{n=1; s=[1]; x=[3]; y=[2]}\n");
  CHECK(run({"solve", "-n", "1", "P1", "e[2]"}).code == 2);

  CHECK(run({"units", "2"}).out ==
        "ipf{n=2; s=[1,2]; x=[1,1]; y=[1,1]}\nipf{n=2; s=[2,1]; x=[1,1]; y=[1,1]}\n");
  CHECK(run({"units", "40"}).code == 2);
}

TEST_CASE("json output") {
  auto const r = run({"--json", "eval", "-n", "2", "Q1*P1"});
  CHECK(r.code == 0);
  auto const doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema"] == ipf::cli::kJsonSchema);
  auto const text = doc["element"].get<std::string>();
  CHECK(ipf::evaluate(ipf::parse(text), 2) == elem({1, 2}, {2, 1}, {2, 1}));

  auto const o = nlohmann::json::parse(
      run({"--json", "order", "-n", "2", "P1", "I"}).out);
  CHECK(o["command"] == "order");
  CHECK(o["green"]["D"] == true);
}

TEST_CASE("check") {
  auto const r = run({"check", "--n", "1", "--max", "2", "--suite", "quotient"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary: 4/4 passed") != std::string::npos);
  CHECK(run({"check", "--suite", "bogus"}).code == 2);
  // Determinism.
  CHECK(run({"check", "--n", "1", "--max", "2", "--suite", "words"}).out ==
        run({"check", "--n", "1", "--max", "2", "--suite", "words"}).out);
}
