#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "digrev/errors.hpp"
#include "digrev/io.hpp"
#include "support.hpp"

using namespace digrev;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("DIGREV_LIMITS", value, 1); }
  ~EnvGuard() { unsetenv("DIGREV_LIMITS"); }
};

}  // namespace

TEST_CASE("JSON round trip is byte-identical") {
  for (const char* name : {"triangle.json", "bik3.json", "double_uv.json", "fan2.json"}) {
    const std::string text = slurp(fixture(name));
    const Digraph d = io::parse_digraph(text);
    CHECK(io::dump(io::to_json(d)) == text);
    const Result r = run({"convert", fixture(name)});
    CHECK(r.code == 0);
    CHECK(r.out == text);
  }
  const Digraph l = gen_ladder(6);
  const std::string once = io::dump(io::to_json(l));
  CHECK(io::dump(io::to_json(io::parse_digraph(once))) == once);
}

TEST_CASE("edges may be listed out of id order") {
  const Digraph d = io::parse_digraph(
      R"({"vertices": ["a", "b"], "edges": [{"id": 1, "tail": "b", "head": "a"}, {"id": 0, "tail": "a", "head": "b"}]})");
  CHECK(d.arc(EdgeId{0}) == Arc{0, 1});
  CHECK(d.arc(EdgeId{1}) == Arc{1, 0});
}

TEST_CASE("malformed documents") {
  try {
    io::parse_digraph(slurp(fixture("malformed.json")));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(io::parse_digraph(R"({"vertices": ["a"]})"), InputError);
  CHECK_THROWS_AS(io::parse_digraph(R"({"vertices": ["a", "b"], "edges": [{"id": 1, "tail": "a", "head": "b"}]})"),
                  InputError);
  CHECK_THROWS_AS(io::parse_digraph(R"({"vertices": ["a", "b"], "edges": [{"id": 0, "tail": "a", "head": "z"}]})"),
                  InputError);
  CHECK_THROWS_AS(io::parse_digraph(R"({"vertices": ["a", "b"], "edges": [{"id": 0, "tail": "a", "head": "a"}]})"),
                  InputError);
  CHECK_THROWS_AS(io::parse_digraph(R"({"vertices": [1], "edges": []})"), InputError);
}

TEST_CASE("DOT export") {
  CHECK(io::to_dot(fixtures::triangle()) ==
        "digraph D {\n"
        "  \"a\";\n  \"b\";\n  \"c\";\n"
        "  \"a\" -> \"b\" [label=\"0\"];\n"
        "  \"b\" -> \"c\" [label=\"1\"];\n"
        "  \"c\" -> \"a\" [label=\"2\"];\n"
        "}\n");
  const Digraph q = fixtures::make({"x\"y", "z"}, {{"x\"y", "z"}});
  CHECK(io::to_dot(q).find("\"x\\\"y\" -> \"z\"") != std::string::npos);
}

TEST_CASE("chi prints the number and a colouring") {
  const Result r = run({"chi", fixture("triangle.json")});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 2) == "2\n");
  const auto j = io::parse_json(r.out.substr(2));
  CHECK(j["num_colors"] == 2);
  CHECK(verify_coloring(fixtures::triangle(), {{j["assignment"]["a"], j["assignment"]["b"], j["assignment"]["c"]}, 2}));
}

TEST_CASE("reduce on the biorientation of K3") {
  const Result r = run({"reduce", fixture("bik3.json"), "--order", "u,v,w"});
  REQUIRE(r.code == 0);
  const auto j = io::parse_json(r.out);
  CHECK(j["sequence"].size() == 1);
  CHECK(j["coloring"]["num_colors"].get<int>() <= 2);
  CHECK(io::dump(j["final"]) == slurp(fixture("doubled_triangle.json")));
  CHECK(run({"reduce", fixture("bik3.json"), "--order", "u,v"}).code == 1);
  CHECK(run({"reduce", fixture("bik3.json"), "--order", "u,v,q"}).code == 1);
}

TEST_CASE("gen ladder piped into convert") {
  const Result g = run({"gen", "--ladder", "4"});
  REQUIRE(g.code == 0);
  const Result dot = run({"convert", "-", "--format", "dot"}, g.out);
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("digraph D {", 0) == 0);
  CHECK(count(dot.out, "->") == 7);
  CHECK(run({"gen"}).code == 2);
  CHECK(run({"gen", "--random", "--n", "5", "--m", "0"}).out == run({"gen", "--random", "--n", "5"}).out);
  CHECK(run({"gen", "--tournament", "--ladder", "3", "--n", "4"}).code == 2);
}

TEST_CASE("certificate commands") {
  Result r = run({"cert-check", fixture("bik3.json"), "--order", "u,v,w", "--k", "2"});
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["violating_cycle"] == io::Json::array({4, 3, 1}));

  r = run({"cert-check", fixture("triangle.json"), "--k", "2"});
  CHECK(io::parse_json(r.out)["ok"] == true);

  r = run({"cert-find", fixture("triangle.json"), "--k", "1"});
  CHECK(io::parse_json(r.out)["found"] == false);
  r = run({"cert-find", fixture("triangle.json"), "--k", "2"});
  j = io::parse_json(r.out);
  CHECK(j["found"] == true);
  CHECK(j["coloring"]["num_colors"] == 2);
  CHECK(run({"cert-find", fixture("triangle.json"), "--k", "0"}).code == 2);
}

TEST_CASE("connectivity commands") {
  Result r = run({"lambda", fixture("bik3.json"), "u", "v"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"lambda", fixture("bik3.json"), "u", "u"}).code == 1);
  CHECK(run({"lambda", fixture("bik3.json"), "u", "nope"}).code == 1);
  CHECK(run({"lambda", fixture("bik3.json"), "u"}).code == 2);

  r = run({"menger", fixture("bik3.json"), "u", "v"});
  auto j = io::parse_json(r.out);
  CHECK(j["paths"].size() == 2);
  CHECK(j["cut"].size() == 2);
  CHECK(j["side"] == io::Json::array({"u"}));

  r = run({"flip-sep", fixture("bik3.json"), "u", "v"});
  j = io::parse_json(r.out);
  CHECK(j["lambda_before"] == 2);
  CHECK(j["lambda_after"] == 0);
  CHECK(j["path_after"] == false);
  CHECK(j["reachable_by_reversion"] == false);
}

TEST_CASE("reversion commands") {
  Result r = run({"reach", fixture("triangle.json"), fixture("triangle_reversed.json")});
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out);
  CHECK(j["reachable"] == true);
  CHECK(j["sequence"].size() == 1);

  r = run({"reach", fixture("double_uv.json"), fixture("double_uv_toward_u.json")});
  j = io::parse_json(r.out);
  CHECK(j["reachable"] == false);
  CHECK(j["sequence"].is_null());
  CHECK(run({"reach", fixture("triangle.json"), fixture("path_abc.json")}).code == 1);

  r = run({"canon", fixture("triangle.json"), fixture("triangle_seq.json")});
  j = io::parse_json(r.out);
  CHECK(j["canonical"] == io::Json::array({io::Json::array({0, 1, 2})}));
  CHECK(j["inverse"].size() == 3);

  r = run({"canon", fixture("triangle.json"), fixture("triangle_bad_seq.json")});
  CHECK(r.code == 1);
  j = io::parse_json(r.err);
  CHECK(j["error"] == "validation");
  CHECK(j["index"] == 1);
}

TEST_CASE("structural commands") {
  Result r = run({"flip-path", fixture("fan2.json"), fixture("fan2_plan.json")});
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out);
  CHECK(j["touch_counts"] == io::Json({{"0", 1}, {"1", 2}, {"2", 2}, {"3", 1}, {"4", 1}}));
  CHECK(j["stage_ends"].size() == 2);

  r = run({"two-chain", fixture("triangle.json")});
  j = io::parse_json(r.out);
  CHECK(j["order"] == io::Json::array({"a", "b", "c"}));
  CHECK(j["sequence"].size() == 1);
  CHECK(run({"two-chain", fixture("bik3.json")}).code == 1);

  r = run({"oracle", fixture("triangle.json")});
  j = io::parse_json(r.out);
  CHECK(j["classes"] == io::Json::array({io::Json::array({0, 7}), io::Json::array({1}), io::Json::array({2}),
                                         io::Json::array({3}), io::Json::array({4}), io::Json::array({5}),
                                         io::Json::array({6})}));
}

TEST_CASE("errors and exit codes") {
  Result r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(io::parse_json(r.err)["error"] == "usage");
  CHECK(run({}).code == 2);
  CHECK(run({"chi", "--bogus", fixture("triangle.json")}).code == 2);
  CHECK(run({"convert", fixture("triangle.json"), "--format", "svg"}).code == 2);
  CHECK(run({"chi", fixture("missing.json")}).code == 1);

  r = run({"chi", fixture("malformed.json")});
  CHECK(r.code == 1);
  CHECK(count(r.err, "\n") == 1);
  const auto j = io::parse_json(r.err);
  CHECK(j["error"] == "parse");
  CHECK(j["line"] == 4);

  r = run({"chi", "-"}, "{\"vertices\": [");
  CHECK(r.code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("limits from flags and the environment") {
  const std::string big = io::dump(io::to_json(gen_random(21, 0, 1)));
  Result r = run({"chi", "-"}, big);
  CHECK(r.code == 1);
  CHECK(io::parse_json(r.err)["error"] == "resource");
  CHECK(run({"chi", "-", "--max-vertices", "21"}, big).code == 0);
  {
    EnvGuard env("max-vertices=21");
    CHECK(run({"chi", "-"}, big).code == 0);
    CHECK(run({"chi", "-", "--max-vertices", "20"}, big).code == 1);
  }
  {
    EnvGuard env("max-edges=2");
    CHECK(run({"oracle", fixture("triangle.json")}).code == 1);
    CHECK(run({"oracle", fixture("triangle.json"), "--max-edges", "3"}).code == 0);
  }
  {
    EnvGuard env("max-vertices=lots");
    CHECK(run({"chi", fixture("triangle.json")}).code == 2);
  }
  {
    EnvGuard env("colours=3");
    CHECK(run({"chi", fixture("triangle.json")}).code == 2);
  }
  const std::string ten = io::dump(io::to_json(gen_random(10, 3, 1)));
  CHECK(run({"cert-find", "-"}, ten).code == 1);
  CHECK(run({"cert-find", "-", "--max-vertices", "10"}, ten).code == 0);
}

TEST_CASE("output file") {
  const std::string path = std::string(FIXTURE_DIR) + "/../out_test.json";
  CHECK(run({"convert", fixture("triangle.json"), "-o", path}).code == 0);
  CHECK(slurp(path) == slurp(fixture("triangle.json")));
  std::remove(path.c_str());
}

TEST_CASE("batch command") {
  Result r = run({"batch", "--suite", "lambda-invariance", "--n", "100", "--seed", "3"});
  REQUIRE(r.code == 0);
  auto j = io::parse_json(r.out);
  CHECK(j["instances"] == 100);
  CHECK(j["failures"].empty());
  CHECK_FALSE(j.contains("wall_time_ms"));

  r = run({"batch", "--suite", "thm14-equivalence", "--n", "0", "--exhaustive"});
  j = io::parse_json(r.out);
  CHECK(j["instances"].get<int>() > 18000);
  CHECK(j["failures"].empty());

  r = run({"batch", "--suite", "menger", "--n", "40", "--mutant"});
  j = io::parse_json(r.out);
  CHECK_FALSE(j["failures"].empty());
  CHECK(j["failures"][0].contains("counterexample"));

  r = run({"batch", "--suite", "canonicalize", "--n", "5", "--timing"});
  CHECK(io::parse_json(r.out).contains("wall_time_ms"));

  CHECK(run({"batch", "--suite", "nope"}).code == 2);
  CHECK(run({"batch"}).code == 2);
  CHECK(run({"batch", "--suite", "charbit", "--mutant"}).code == 2);
}

TEST_CASE("identical arguments give identical bytes") {
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "--random", "--n", "8", "--m", "20", "--seed", "9"},
      {"gen", "--tournament", "--n", "7", "--seed", "2"},
      {"reduce", fixture("bik3.json")},
      {"batch", "--suite", "menger", "--n", "30", "--seed", "4"},
  };
  for (const auto& c : commands) {
    const Result a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"gen", "--random", "--n", "8", "--m", "20", "--seed", "9"}).out !=
        run({"gen", "--random", "--n", "8", "--m", "20", "--seed", "10"}).out);
}
