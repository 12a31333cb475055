#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"

#include "nlohmann/json.hpp"
#include "semitrans/cli.hpp"

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args, std::string const& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int                code = semitrans::cli_main(args, out, err, in);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    auto path = std::filesystem::temp_directory_path() / ("semitrans_" + name);
    std::ofstream(path) << text;
    return path.string();
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }
}  // namespace

TEST_CASE("build writes a loadable file") {
  auto r = run({"build", "--type", "1", "--n", "8", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(fixtures::from_text(r.out) == fixtures::from_text(fixtures::example1));

  auto e2 = run({"build", "--type", "4", "--n", "10", "--p", "2", "--l", "2",
                 "--group", "(3,5,4,6)"});
  CHECK(e2.code == 0);
  CHECK(fixtures::from_text(e2.out) == fixtures::from_text(fixtures::example2));

  auto ref = run({"build", "--type", "ref", "--n", "4", "--p", "2"});
  CHECK(ref.code == 0);
  CHECK(fixtures::from_text(ref.out).size() == 5);

  CHECK(run({"build", "--type", "1", "--n", "8", "--p", "3"}).code == 2);
  CHECK(run({"build", "--type", "7", "--n", "8", "--p", "2"}).code == 2);
  CHECK(run({"build", "--type", "1", "--n", "8", "--p", "2", "--m", "3"}).code == 2);
  CHECK(run({"build", "--n", "8"}).code == 2);
}

TEST_CASE("analyze") {
  auto r = run({"analyze", "-", "--json"}, fixtures::example1);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["size"] == 15);
  CHECK(j["is_semitransitive"] == true);
  CHECK(j["is_transitive"] == false);
  CHECK(j["gpd"] == 4);
  CHECK(j["bound"] == 13);
  CHECK(j["block_sizes"] == nlohmann::json::array({2, 2, 2, 2}));
  CHECK(j["nilpotents"] == 6);
  CHECK(j["audits"].size() == 8);
  CHECK(j["audits"]["nilpotent_count"]["status"] == "pass");

  auto text = run({"analyze", "-"}, fixtures::example2);
  CHECK(text.code == 0);
  CHECK(contains(text.out, "semitransitive"));

  auto path = temp_file("ex3.txt", fixtures::example3);
  CHECK(run({"analyze", path, "--expect-semitransitive", "--expect-size", "15",
             "--expect-audits-pass"})
            .code
        == 0);
  auto wrong = run({"analyze", path, "--expect-size", "14"});
  CHECK(wrong.code == 1);
  CHECK(contains(wrong.err, "expected 14"));

  CHECK(run({"analyze", "-", "--expect-semitransitive"}, "n=2\n(1)(2]\n(1](2)\n0\n").code
        == 1);
  auto bad = run({"analyze", "-"}, "n=2\n(1,3]\n");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "line 2"));
  CHECK(run({"analyze", "/nonexistent/file"}).code == 2);
}

TEST_CASE("verify-example") {
  for (std::string k : {"1", "2", "3"}) {
    auto r = run({"verify-example", k});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "diff confined to documented lines: yes"));
  }
  auto r1 = run({"verify-example", "1"});
  CHECK(contains(r1.out, "flagged (1,6](2,7](3](4](7](8]"));
  CHECK(contains(r1.out, "likely (1,6](2,5](3](4](7](8]"));
  CHECK(run({"verify-example", "4"}).code == 2);
}

TEST_CASE("search") {
  auto r = run({"search", "--n", "3", "--classify"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "minimum 6 with 5 similarity classes"));
  CHECK_FALSE(contains(r.out, "unclassified"));

  auto j = run({"search", "--n", "2", "--json", "--prune", "none"});
  REQUIRE(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["minimal_cardinality"] == 4);
  CHECK(parsed["complete"] == true);

  CHECK(run({"search", "--n", "5"}).code == 2);
  CHECK(run({"search", "--n", "3", "--prune", "some"}).code == 2);
  CHECK(run({"search", "--n", "4", "--prune", "none", "--max-nodes", "5"}).code == 1);
}

TEST_CASE("similar") {
  auto a = temp_file("a.txt", "n=2\n(1)(2]\n(1](2)\n(1,2]\n0\n");
  auto b = temp_file("b.txt", "n=2\n(1)(2]\n(1](2)\n(2,1]\n0\n");
  auto c = temp_file("c.txt", "n=2\n(1)(2]\n(1](2)\n0\n");
  auto r = run({"similar", a, b});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,2)\n");
  auto no = run({"similar", a, c});
  CHECK(no.code == 0);
  CHECK(no.out == "not similar\n");
}

TEST_CASE("bound and sweep") {
  auto b = run({"bound", "--n", "8"});
  CHECK(b.code == 0);
  CHECK(b.out == "p=4 bound=13\n");
  CHECK(run({"bound", "--n", "1"}).code == 2);

  auto s = run({"sweep", "--from", "2", "--to", "8", "--quiet"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "all ok"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
