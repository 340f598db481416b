#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ospnil/cli.hpp"
#include "ospnil/io.hpp"
#include "ospnil/kappa.hpp"

using namespace ospnil;
using io::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::main_entry(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args, const std::string& input = "") {
  const auto r = call(std::move(args), input);
  REQUIRE(r.code == cli::Ok);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate") {
  const auto j = call_json({"--m", "3", "--n", "1", "enumerate"});
  CHECK(j.at("count") == 4);
  CHECK(j.at("diagrams").size() == 4);
  for (const auto& d : j.at("diagrams")) {
    const auto g = io::diagram_from_json(d);
    CHECK(d.at("orbit_dim") == orbit_dim(g, 3, 2));
    CHECK(io::partition_from_json(d.at("d0")) == d0d1(g).first);
  }
}

TEST_CASE("hasse json round trips and dot output") {
  const auto j = call_json({"--m", "4", "--n", "2", "hasse"});
  const auto h = io::hasse_from_json(j);
  CHECK(h.nodes == hasse_delta(4, 4).nodes);
  CHECK(h.covers == hasse_delta(4, 4).covers);
  const auto dot = call({"--m", "4", "--n", "2", "--format", "dot", "hasse"});
  CHECK(dot.code == cli::Ok);
  CHECK(dot.out == io::hasse_to_dot(hasse_delta(4, 4), 4, 4));
  CHECK(dot.out.find("dim ") != std::string::npos);
  const auto gamma = call({"--m", "4", "--n", "2", "--format", "dot", "hasse", "--graph", "gamma"});
  CHECK(gamma.out == io::hasse_to_dot(hasse_gamma(4, 4), 4, 4));
}

TEST_CASE("repeated runs are byte identical") {
  const std::vector<std::vector<std::string>> cases{
      {"--m", "5", "--n", "2", "enumerate"},
      {"--m", "4", "--n", "2", "--format", "text", "dims"},
      {"--m", "3", "--n", "1", "--seed", "5", "borel", "--cover"},
      {"--m", "4", "--n", "2", "desing"},
  };
  for (const auto& args : cases) {
    const auto a = call(args), b = call(args);
    CHECK(a.code == cli::Ok);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("rep output classifies back to the diagram") {
  for (const char* key : {"01010", "101,0,0", "01,10,0", "0,0,0,1,1"}) {
    const auto rep = call_json({"--m", "3", "--n", "1", "rep", "--diagram", key});
    CHECK(rep.at("member") == true);
    CHECK(rep.at("recovered") == key);
    const auto u = io::matrix_from_json(rep.at("u"));
    const auto cls = call_json({"--m", "3", "--n", "1", "classify"}, Json{{"u", io::to_json(u)}}.dump());
    CHECK(io::diagram_from_json(cls.at("diagram")) == GradedDiagram::parse(key));
    CHECK(cls.at("orbit_dim") == orbit_dim(GradedDiagram::parse(key), 3, 2));
    const auto bare = call_json({"--m", "3", "--n", "1", "classify"}, io::to_json(u).dump());
    CHECK(bare == cls);
  }
}

TEST_CASE("classify reports kappa Jordan types") {
  const auto cls = call_json({"--m", "3", "--n", "1", "classify"}, R"({"u": [["0","1","0"],["0","0","1"]]})");
  CHECK(cls.at("diagram").at("key") == "01010");
  CHECK(io::partition_from_json(cls.at("kappa_jordan_types").at("ortho")) == Partition({3}));
  CHECK(io::partition_from_json(cls.at("kappa_jordan_types").at("symp")) == Partition({2}));
  CHECK(cls.at("label") == "none");
  CHECK(cls.at("closure_size") == 4);
}

TEST_CASE("fiber and maxdiag") {
  const auto f = call_json({"--m", "3", "--n", "1", "fiber", "--lambda", "(1,1,1)", "--mu", "(1,1)"});
  CHECK(f.at("size") == 2);
  const auto mx = call_json({"--m", "3", "--n", "1", "maxdiag", "--lambda", "(1,1,1)", "--mu", "(1,1)"});
  CHECK(mx.at("unique") == true);
  CHECK(io::labeled_from_json(mx.at("maximal").at(0)).diagram == GradedDiagram::parse("01,10,0"));
  CHECK(mx.at("fiber_dim") == 3);
  const auto top = call_json({"--m", "3", "--n", "1", "maxdiag"});
  CHECK(top.dump().find("01010") != std::string::npos);
}

TEST_CASE("order") {
  const auto j = call_json({"--m", "3", "--n", "1", "order", "--diagram", "01,10,0", "--other", "101,0,0"});
  CHECK(j.dump().find("true") != std::string::npos);
}

TEST_CASE("desing families") {
  const auto j = call_json({"--m", "5", "--n", "2", "desing"});
  CHECK(j.at("chi").at("total_dim") == orbit_dim(global_max(5, 4), 5, 4));
  CHECK(j.at("commuting_square") == true);
  const auto bad = call({"--m", "3", "--n", "2", "desing"});
  CHECK(bad.code == cli::Domain);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("borel") {
  const auto j = call_json({"--m", "4", "--n", "2", "borel"});
  CHECK(j.at("order_case") == "2");
  CHECK(j.at("b1_dim") == 8);
  const auto kac = call_json({"--m", "3", "--n", "1", "borel", "--kac", "--cover"});
  CHECK(kac.at("order_case") == "kac");
}

TEST_CASE("exit codes") {
  CHECK(call({"--m", "3", "--n", "1", "enumerate"}).code == cli::Ok);
  CHECK(call({"--help"}).code == cli::Ok);
  CHECK(call({"enumerate"}).code == cli::Usage);
  CHECK(call({"--m", "3", "--n", "1"}).code == cli::Usage);
  CHECK(call({"--m", "3", "--n", "1", "frobnicate"}).code == cli::Usage);
  CHECK(call({"--m", "3", "--n", "1", "--format", "dot", "enumerate"}).code == cli::Usage);
  CHECK(call({"--m", "3", "--n", "1", "rep", "--diagram", "010"}).code == cli::Domain);
  CHECK(call({"--m", "3", "--n", "1", "fiber", "--lambda", "(2,1)", "--mu", "(2)"}).code == cli::Domain);
  CHECK(call({"--m", "3", "--n", "1", "classify"}, "{not json").code == cli::Domain);
  CHECK(call({"--m", "3", "--n", "1", "classify"}, R"({"u": [["1","0","0"]]})").code == cli::Domain);
}

TEST_CASE("text format") {
  const auto r = call({"--m", "3", "--n", "1", "--format", "text", "borel"});
  CHECK(r.code == cli::Ok);
  CHECK(r.out.find("order_case: 1") != std::string::npos);
}

}  // TEST_SUITE
