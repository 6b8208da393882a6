#include <doctest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "../tools/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  for (auto& a : args) {
    if (a.starts_with("@")) a = std::string(DEFSEM_GOLDEN_DIR) + "/" + a.substr(1);
  }
  const int code = defsem::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("extensions") {
  auto r = run({"extensions", "@f10.tgf"});
  CHECK(r.code == 0);
  CHECK(r.out == "{}\n{b}\n");
  CHECK(run({"extensions", "@f3.tgf", "-s", "grounded"}).out == "{a,c}\n");
  CHECK(run({"extensions", "@f3.apx", "--semantics", "gr"}).out == "{a,c}\n");
  CHECK(run({"extensions", "@f12.tgf", "-s", "stable"}).out == "{a,d,e,g}\n{b,d,e,g}\n");
  r = run({"extensions", "@f10.tgf", "--format", "json"});
  CHECK(r.out == "{\n  \"semantics\": \"complete\",\n  \"extensions\": [\n    [],\n    [\n      \"b\"\n    ]\n  ]\n}\n");
}

TEST_CASE("input handling") {
  CHECK(run({"extensions", "-"}, "a\nb\n#\na b\n").out == "{a}\n");
  CHECK(run({"extensions", "-"}, "arg(a). arg(b). att(b,a).").out == "{b}\n");
  CHECK(run({"extensions", "-", "--input-format", "apx"}, "arg(a).").out == "{a}\n");
  auto r = run({"extensions", "@malformed.tgf"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("undeclared-endpoint") != std::string::npos);
  r = run({"extensions", "@no_such_file.tgf"});
  CHECK(r.code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"extensions", "@f3.tgf", "-s", "ideal"}).code == 2);
  CHECK(run({"reasons", "@f3.tgf"}).code == 2);
  CHECK(run({"equiv", "@f3.tgf", "@f4.tgf"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("defense graph") {
  auto r = run({"defense-graph", "@f3.tgf"});
  CHECK(r.code == 0);
  CHECK(r.out.find("->") == std::string::npos);
  r = run({"defense-graph", "@f9.tgf", "-f", "json"});
  CHECK(r.out.find("\"defender\": \"EMPTY\"") != std::string::npos);
  r = run({"defense-graph", "@f6.tgf"});
  CHECK(r.out.find("shape=box") != std::string::npos);
}

TEST_CASE("defense extensions") {
  CHECK(run({"defense-extensions", "@f10.tgf"}).out == "{}\n{<b,b>}\n");
  CHECK(run({"defense-extensions", "@f1.tgf"}).out ==
        "{}\n{<a,c2>,<c2,c3>,<c3,a>}\n{<b,c4>,<c1,b>,<c4,c1>}\n");
  CHECK(run({"defense-extensions", "@f12.tgf"}).out ==
        "{<EMPTY,e>,<e,g>,<g,d>}\n"
        "{<EMPTY,e>,<a,a>,<e,g>,<g,d>}\n"
        "{<EMPTY,e>,<b,b>,<b,d>,<e,g>,<g,d>}\n");
}

TEST_CASE("reasons") {
  CHECK(run({"reasons", "@f12.tgf", "--arg", "d", "--kind", "direct"}).out == "{g}\n{g}\n{b,g}\n");
  CHECK(run({"reasons", "@f12.tgf", "--arg", "d"}).out == "{e}\n{e}\n{b,e}\n");
  CHECK(run({"reasons", "@f12.tgf", "--arg", "e"}).out == "{EMPTY}\n{EMPTY}\n{EMPTY}\n");
  auto r = run({"reasons", "@f12.tgf", "--arg", "z"});
  CHECK(r.code == 1);
  CHECK(r.err.find("unknown-argument") != std::string::npos);
}

TEST_CASE("equivalence") {
  auto r = run({"equiv", "@f3.tgf", "@f4.tgf", "--kind", "standard"});
  CHECK(r.code == 0);
  CHECK(r.out == "equivalent\n");
  r = run({"equiv", "@f3.tgf", "@f4.tgf", "--kind", "defense"});
  CHECK(r.code == 3);
  CHECK(r.out.starts_with("not equivalent\nwitness: "));
  r = run({"equiv", "@f1.tgf", "@f2.tgf", "--kind", "root", "--restrict", "a,b"});
  CHECK(r.code == 0);
  CHECK(run({"equiv", "@f1.tgf", "@f2.tgf", "--kind", "root"}).code == 0);
  CHECK(run({"equiv", "@f3.tgf", "@f11.tgf", "--kind", "strong"}).code == 3);
  r = run({"equiv", "@f1.tgf", "@f2.tgf", "--kind", "root", "--restrict", "a,c1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("argument-outside-intersection") != std::string::npos);
}

TEST_CASE("summarization check") {
  auto r = run({"summarize-check", "@f13_summary.tgf", "@f13_full.tgf"});
  CHECK(r.code == 0);
  CHECK(r.out == "is-summarization\n");
  r = run({"summarize-check", "@f3.tgf", "@f3.tgf"});
  CHECK(r.code == 3);
  CHECK(r.out.starts_with("not a summarization\n"));
  CHECK(run({"summarize-check", "@f4.tgf", "@f3.tgf"}).code == 3);
}

TEST_CASE("check") {
  auto r = run({"check", "@f10.tgf"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "PASS d-map (complete)\nPASS def-map (complete)\nPASS decomposition\n"
        "PASS kernel-defense\nPASS kernel-complete\n");
  CHECK(run({"check", "@f12.tgf"}).code == 0);
  r = run({"check", "-", "-s", "stable"}, "a\nb\n#\na a\na b\nb a\n");
  CHECK(r.code == 3);
  CHECK(r.out.find("FAIL d-map (stable)") != std::string::npos);
}

TEST_CASE("golden files") {
  std::ifstream manifest(std::string(DEFSEM_GOLDEN_DIR) + "/cases.txt");
  REQUIRE(manifest);
  std::string line;
  std::size_t cases = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    for (std::string f; std::getline(row, f, '|');) {
      const auto b = f.find_first_not_of(' ');
      const auto e = f.find_last_not_of(' ');
      fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
    }
    REQUIRE(fields.size() == 3);
    std::vector<std::string> args;
    std::stringstream words(fields[2]);
    for (std::string w; words >> w;) args.push_back(w);

    std::ifstream expected_file(std::string(DEFSEM_GOLDEN_DIR) + "/expected/" + fields[0] + ".out",
                                std::ios::binary);
    REQUIRE(expected_file);
    const std::string expected((std::istreambuf_iterator<char>(expected_file)),
                               std::istreambuf_iterator<char>());
    const auto r = run(args);
    CAPTURE(fields[0]);
    CHECK(r.code == std::stoi(fields[1]));
    CHECK(r.out == expected);
    ++cases;
  }
  CHECK(cases >= 40);
}
