#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "algebras.hpp"
#include "hopfind/cli.hpp"
#include "hopfind/document.hpp"
#include "hopfind/error.hpp"

using namespace hopfind;
using namespace hopfind::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture_path(name).string(); }

// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("hopfind-cli-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

std::string canonical(const HopfAlgebraData& h) { return format_document(algebra_to_json(h)); }

}  // namespace

TEST_CASE("algebra documents round-trip byte for byte") {
  for (const auto& h : {kg(s3(), 3), function_algebra(cyclic_group(4), 2), h_delta(5, 1), u_heisenberg(2),
                        tensor(kg(cyclic_group(2), 3), h_delta(3, 0))}) {
    const std::string text = canonical(h);
    const LoadedAlgebra back = algebra_from_json(parse_json(text));
    CHECK(same_structure(back.algebra, h));
    CHECK(back.algebra.labels == h.labels);
    CHECK(canonical(back.algebra) == text);
  }
  const std::vector<std::size_t> degrees = {0, 1, 2};
  const std::string text = format_document(algebra_to_json(h_delta(3, 0), &degrees));
  const LoadedAlgebra back = algebra_from_json(parse_json(text));
  REQUIRE(back.degrees.has_value());
  CHECK(*back.degrees == degrees);
}

TEST_CASE("document parse errors") {
  CHECK_THROWS_AS(parse_json("{\"p\": 2,"), ParseError);
  CHECK_THROWS_AS(read_json_file(fx("malformed.json")), ParseError);
  CHECK_THROWS_AS(read_json_file(fx("does-not-exist.json")), ParseError);
  Json doc = algebra_to_json(h_delta(3, 0));
  Json bad = doc;
  bad["mult"].push_back({0, 0, 0, 3});
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = doc;
  bad["mult"].push_back(bad["mult"][0]);
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = doc;
  bad["mult"].push_back({0, 0, 5, 1});
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = doc;
  bad["schema"] = "hopf-v0";
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = doc;
  bad.erase("counit");
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
}

TEST_CASE("constructor documents") {
  const fs::path dir = fixture_path("c2.json").parent_path();
  CHECK(same_structure(build_algebra(parse_json(R"({"kind": "h_delta", "p": 3, "delta": 1})"), dir).algebra,
                       h_delta(3, 1)));
  CHECK(same_structure(
      build_algebra(parse_json(R"({"kind": "group", "p": 3, "cayley": "groups/s3.json"})"), dir).algebra,
      kg(s3(), 3)));
  CHECK(same_structure(
      build_algebra(parse_json(R"({"kind": "function", "p": 2, "cayley": "groups/c4.json"})"), dir).algebra,
      function_algebra(cyclic_group(4), 2)));
  CHECK(same_structure(build_algebra(parse_json(R"({"kind": "dual", "of": "c4.json"})"), dir).algebra,
                       dual(load_algebra(fixture_path("c4.json")).algebra)));
  CHECK(same_structure(build_algebra(parse_json(R"({"kind": "tensor", "of": ["c2.json", "c2.json"]})"), dir).algebra,
                       tensor(kg(cyclic_group(2), 2), kg(cyclic_group(2), 2))));
  const LoadedAlgebra u = build_algebra(parse_json(R"({"kind": "lie", "p": 2, "dim": 3, "bracket": [[0, 1, 2, 1]],
                                                       "pmap": [], "name": "heis"})"),
                                        dir);
  CHECK(u.name == "heis");
  CHECK(same_structure(u.algebra, u_heisenberg(2)));
  CHECK(same_structure(load_algebra(fixture_path("lie/heisenberg-p3.json")).algebra, u_heisenberg(3)));
  CHECK_THROWS_AS(build_algebra(parse_json(R"({"kind": "tensor", "of": ["c2.json"]})"), dir), ParseError);
  CHECK_THROWS_AS(build_algebra(parse_json(R"({"kind": "quantum"})"), dir), ParseError);
  // Mathematically bad input is an Error, not a parse failure.
  CHECK_THROWS_AS(build_algebra(parse_json(R"({"kind": "lie", "p": 2, "dim": 2, "bracket": [[0, 0, 1, 1]],
                                               "pmap": []})"),
                                dir),
                  Error);
  const GroupTable s = s3();
  CHECK(group_from_json(group_to_json(s)).table == s.table);
  const RestrictedLieData lie = heisenberg_lie(3);
  CHECK(same_structure(restricted_enveloping(lie_from_json(lie_to_json(lie))), u_heisenberg(3)));
}

TEST_CASE("validate exit codes") {
  const Run ok = run({"validate", fx("c2.json")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("valid") != std::string::npos);
  const Run broken = run({"validate", fx("broken-antipode.json")});
  CHECK(broken.code == kExitMath);
  CHECK(broken.out.find("antipode axiom") != std::string::npos);
  CHECK(run({"validate", fx("malformed.json")}).code == kExitInput);
  CHECK(run({"validate", fx("missing.json")}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"indicators", fx("c2.json"), "--from", "x"}).code == kExitInput);
}

TEST_CASE("indicators command") {
  const Run r = run({"indicators", fx("c2.json"), "--from", "1", "--to", "4"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("n  nu_n\n1  1\n2  0\n3  1\n4  0\n") != std::string::npos);
  CHECK(r.out.find("min poly: x^2 + 1\n") != std::string::npos);
  CHECK(r.out.find("period: 2\n") != std::string::npos);
  CHECK(r.out.find("p-pertinent: yes\n") != std::string::npos);

  const Run js = run({"indicators", fx("c2.json"), "--from", "1", "--to", "1", "--json"});
  REQUIRE(js.code == kExitOk);
  const Json one = parse_json(js.out);
  CHECK(one["values"] == Json::array({1}));

  const Run neg = run({"indicators", fx("c2.json"), "--from", "-3", "--to", "3", "--json"});
  const Json doc = parse_json(neg.out);
  CHECK(doc["window"] == Json::array({-3, 3}));
  CHECK(doc["values"] == Json::array({1, 0, 1, 0, 1, 0, 1}));
  CHECK(run({"indicators", fx("broken-antipode.json")}).code == kExitMath);
  CHECK(run({"indicators", fx("c2.json"), "--from", "3", "--to", "1"}).code == kExitInput);
}

TEST_CASE("JSON output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"indicators", fx("c4.json"), "--json", "--threads", "3"},
        {"filtration", fx("lie/heisenberg-p2.json"), "--kind", "coradical"},
        {"gr", fx("h3-delta0.json"), "--kind", "c"},
        {"check", fx("c3-functions.json"), "--json"},
        {"dual", fx("c4.json")}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
  CHECK(run({"indicators", fx("c4.json"), "--json", "--threads", "3"}).out ==
        run({"indicators", fx("c4.json"), "--json", "--threads", "1"}).out);
}

TEST_CASE("structure commands") {
  const Run rad = run({"radical", fx("c3-functions.json")});
  REQUIRE(rad.code == kExitOk);
  CHECK(parse_json(rad.out)["dims"] == Json::array({0}));

  const Json filt = parse_json(run({"filtration", fx("lie/heisenberg-p2.json"), "--kind", "coradical"}).out);
  CHECK(filt["kind"] == "coradical");
  CHECK(filt["dims"] == Json::array({1, 4, 7, 8}));
  CHECK(parse_json(run({"filtration", fx("c4.json"), "--kind", "jadic"}).out)["dims"] ==
        Json::array({4, 3, 2, 1, 0}));
  CHECK(run({"filtration", fx("c4.json"), "--kind", "both"}).code == kExitInput);

  const Run chk = run({"check", fx("h3-delta0.json")});
  CHECK(chk.code == kExitOk);
  CHECK(chk.out.find("connected: true") != std::string::npos);
  CHECK(chk.out.find("local-dual-Chevalley: true") != std::string::npos);
  CHECK(chk.out.find("3 = 3^1") != std::string::npos);

  const Json cj = parse_json(run({"check", fx("c3-functions.json"), "--json"}).out);
  CHECK(cj["connected_chevalley"] == true);
  CHECK(cj["local"] == false);
}

TEST_CASE("emitted documents re-ingest identically") {
  TempDir tmp;
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"dual", fx("c4.json")},
        {"op", fx("lie/heisenberg-p2.json")},
        {"cop", fx("h3-delta0.json")},
        {"build", fx("lie/heisenberg-p3.json")},
        {"tensor", fx("c2.json"), fx("c4.json")},
        {"gr", fx("c4.json"), "--kind", "j"}}) {
    const Run r = run(args);
    REQUIRE(r.code == kExitOk);
    const std::string path = tmp.write("out.json", r.out);
    CHECK(run({"validate", path}).code == kExitOk);
    CHECK(run({"build", path}).out == r.out);
  }
}

TEST_CASE("graded pipeline through files") {
  TempDir tmp;
  const std::string c4 = fx("c4.json");
  const std::string gj = tmp.write("gj.json", run({"gr", c4, "--kind", "j"}).out);
  const auto values = [](const std::string& path) {
    return parse_json(run({"indicators", path, "--from", "-8", "--to", "8", "--json"}).out)["values"];
  };
  CHECK(values(gj) == values(c4));
  CHECK(parse_json(run({"build", gj}).out).contains("degrees"));
  const std::string gcj = tmp.write("gcj.json", run({"gr", gj, "--kind", "c"}).out);
  CHECK(values(gcj) == values(c4));
  const std::string d = tmp.write("d.json", run({"dual", gcj}).out);
  CHECK(values(d) == values(c4));

  // Over GF(2) the J-adic graded of kS3 does not exist.
  const std::string s3 = tmp.write("s3.json", R"({"kind": "group", "p": 2, "cayley": ")" +
                                                  fixture_path("groups/s3.json").string() + R"("})");
  const Run fail = run({"gr", s3, "--kind", "j"});
  CHECK(fail.code == kExitMath);
  CHECK(fail.err.find("J not a Hopf ideal") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
  const Run sw = run({"oracle", "sweedler", fx("c4.json"), "--m", "2"});
  CHECK(sw.code == kExitOk);
  CHECK(run({"oracle", "sweedler", fx("c4.json"), "--m", "12"}).code == kExitMath);
  const Json rad = parse_json(run({"oracle", "radical", fx("c4.json")}).out);
  CHECK(rad["dims"] == Json::array({3}));
  const Json gl = parse_json(run({"oracle", "grouplikes", fx("h3-delta0.json")}).out);
  CHECK(gl["count"] == 1);
  const Run cnt = run({"oracle", "group-count", fx("groups/c4.json"), "--n", "2", "--p", "2"});
  CHECK(cnt.code == kExitOk);
  CHECK(cnt.out.find('0') != std::string::npos);
  CHECK(run({"oracle", "group-count", fx("groups/c4.json"), "--n", "2", "--p", "4"}).code != kExitOk);
}
