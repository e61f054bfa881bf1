#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "distideal/cli.hpp"
#include "distideal/groebner.hpp"
#include "fixtures.hpp"

using namespace distideal;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DISTIDEAL_TEST_DATA) + "/" + name; }

std::vector<IntPolynomial> parse_list(const std::string& bracketed) {
  // "[a, b, c]" -> polynomials in x0..x3
  std::vector<std::string> texts;
  std::string body = bracketed.substr(1, bracketed.size() - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(", ", start);
    texts.push_back(body.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 2;
  }
  return fixture::parse_all(indexed_ring(4), texts);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cycle of length four ideals") {
    const auto r = run({"ideals", "--family", "cycle:4", "--ring", "Z"});
    REQUIRE(r.code == kSuccess);
    CHECK(r.out.starts_with("distance matrix:\n[x0  1  2  1]\n[ 1 x1  1  2]\n[ 2  1 x2  1]\n[ 1  2  1 x3]\n"));
    CHECK(r.out.find("groebner basis: [x0 + 1, x1 + 1, x2 + 1, x3 + 1, 3]") != std::string::npos);
    CHECK(r.out.ends_with("Phi_Z = 1\n"));
    // Every printed basis generates the reference ideal.
    std::istringstream lines(r.out);
    std::size_t size = 0;
    for (std::string line; std::getline(lines, line);) {
      const std::string key = "  groebner basis: ";
      if (!line.starts_with(key)) continue;
      const auto printed = parse_list(line.substr(key.size()));
      const auto ring = indexed_ring(4);
      CHECK(ideals_equal(IntIdeal(ring, printed), IntIdeal(ring, fixture::c4_basis(size))));
      ++size;
    }
    CHECK(size == 5);
  }

  TEST_CASE("snf examples") {
    CHECK(run({"snf", "--family", "complete:4"}).out == "1 1 1 3\n");
    CHECK(run({"snf", "--family", "star:2", "--matrix", "laplacian"}).out == "1 5 0\n");
    CHECK(run({"snf", "--edges-file", data("p4.edges")}).out == "1 1 2 6\n");
    const auto t = run({"snf", "--family", "cycle:5", "--transforms"});
    CHECK(t.code == kSuccess);
    CHECK(t.out.ends_with("transforms verified\n"));
  }

  TEST_CASE("classify summaries") {
    const auto r = run({"classify", "--ring", "R", "--nmax", "4"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("n 4: pass 2/6, disagreements 0") != std::string::npos);
    const auto z = run({"classify", "--ring", "Z", "--nmax", "4", "--jobs", "2"});
    CHECK(z.out.find("n 4: pass 3/6, disagreements 0") != std::string::npos);
    const auto one = run({"classify", "--family", "cycle:4", "--ring", "Z"});
    CHECK(one.code == kSuccess);
  }

  TEST_CASE("charpoly and matrix") {
    CHECK(run({"charpoly", "--family", "complete:3"}).out == "lambda^3 - 3*lambda - 2\ninteger roots: -1 (x2) 2\n");
    CHECK(run({"matrix", "--graph6", "Bw"}).out == "[x0  1  1]\n[ 1 x1  1]\n[ 1  1 x2]\n");
  }

  TEST_CASE("families verify") {
    const auto r = run({"families", "verify", "--family", "star:3"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.ends_with("all families verified\n"));
    CHECK(run({"families", "verify", "--family", "complete:6"}).code == kBadInput);
  }

  TEST_CASE("json records carry the schema tag") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"matrix", "--family", "cycle:4", "--format", "json"},
             {"ideals", "--family", "star:3", "--index", "1..2", "--format", "json"},
             {"snf", "--family", "star:3", "--format", "json"},
             {"charpoly", "--family", "cycle:4", "--format", "json"},
             {"classify", "--nmax", "3", "--format", "json"},
             {"families", "verify", "--family", "complete:3", "--format", "json"},
             {"corpus", "--nmax", "3", "--format", "json"}}) {
      const auto r = run(args);
      CHECK(r.code == kSuccess);
      std::istringstream lines(r.out);
      std::size_t records = 0;
      for (std::string line; std::getline(lines, line); ++records) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("schema") == "v1");
        CHECK(j.contains("kind"));
      }
      CHECK(records > 0);
    }
    const auto j = nlohmann::json::parse(run({"snf", "--family", "complete:4", "--format", "json"}).out);
    CHECK(j.at("invariant_factors") == nlohmann::json::array({"1", "1", "1", "3"}));
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == kBadInput);
    CHECK(run({"bogus"}).code == kBadInput);
    CHECK(run({"snf"}).code == kBadInput);
    CHECK(run({"snf", "--graph6", "B"}).code == kBadInput);
    CHECK(run({"snf", "--graph6", "C?"}).code == kBadInput);
    CHECK(run({"snf", "--edges-file", data("loop.edges")}).code == kBadInput);
    CHECK(run({"snf", "--edges-file", data("split.edges")}).code == kBadInput);
    CHECK(run({"snf", "--edges-file", data("missing.edges")}).code == kBadInput);
    CHECK(run({"snf", "--family", "wheel:5"}).code == kBadInput);
    CHECK(run({"ideals", "--family", "cycle:4", "--ring", "F"}).code == kBadInput);
    CHECK(run({"ideals", "--family", "cycle:4", "--index", "7"}).code == kBadInput);
    CHECK(run({"ideals", "--family", "path:9", "--index", "5"}).code == kBadInput);
    CHECK(run({"ideals", "--family", "path:9", "--index", "5"}).out.empty());
    CHECK(run({"classify", "--nmax", "8"}).code == kBadInput);
    CHECK(run({"--help"}).code == kSuccess);
  }

  TEST_CASE("several graph sources follow the precedence") {
    const auto r = run({"matrix", "--family", "cycle:4", "--graph6", "Bw"});
    CHECK(r.code == kSuccess);
    CHECK(r.out == "[x0  1  1]\n[ 1 x1  1]\n[ 1  1 x2]\n");
    CHECK(r.err.find("note:") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"ideals", "--family", "complete_bipartite:2:3", "--format", "json"},
             {"classify", "--ring", "Z", "--nmax", "5", "--jobs", "3", "--format", "json"},
             {"families", "verify"}}) {
      const auto a = run(args);
      const auto b = run(args);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
  }
}
