#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hypersym/cli.hpp"
#include "hypersym/errors.hpp"
#include "hypersym/hypergraph_file.hpp"
#include "support.hpp"

using namespace hypersym;
using namespace hypersym::testing;

namespace {

const std::string kData = HYPERSYM_TEST_DATA;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Errc parse_error(std::string_view text, std::size_t* line = nullptr) {
  try {
    parse_hypergraph(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.code();
  }
  FAIL("parsed: " << text);
  return Errc::InvalidConfig;
}

}  // namespace

TEST_CASE("parse hypergraph files") {
  auto g = parse_hypergraph_file(data("prism.hg"));
  CHECK(g.ground().size() == 6);
  CHECK(g.edges() == prism().edges());

  auto e = parse_hypergraph("vertices: 3\n");
  CHECK(e.edge_count() == 0);

  auto labelled = parse_hypergraph("# comment\nvertices: b a c\n\nedge: a c  # trailing\nedge: b\n");
  CHECK(labelled.ground().size() == 3);
  CHECK(labelled.edge_count() == 2);
  CHECK(labelled.edge(0) == Edge{0, 2});

  auto round = parse_hypergraph(format_hypergraph(g));
  CHECK(round.edges() == g.edges());

  std::size_t line = 0;
  CHECK(parse_error("vertices: 3\nedge: 1 1\n", &line) == Errc::ParseError);
  CHECK(line == 2);
  CHECK(parse_error("vertices: 3\nedge: 1 4\n") == Errc::UnknownLabel);
  CHECK(parse_error("vertices: 3\nedge: 1 2\nedge: 2 1\n") == Errc::DuplicateEdge);
  CHECK(parse_error("vertices: a a\n") == Errc::DuplicateLabel);
  CHECK(parse_error("edge: 1 2\nvertices: 3\n", &line) == Errc::ParseError);
  CHECK(line == 1);
  CHECK(parse_error("vertices: 3\nvertices: 3\n", &line) == Errc::ParseError);
  CHECK(line == 2);
  CHECK(parse_error("vertices: 3\nedge:\n") == Errc::ParseError);
  CHECK(parse_error("vertices: 3\nloop: 1\n") == Errc::ParseError);
  CHECK(parse_error("# nothing\n") == Errc::ParseError);
}

TEST_CASE("aut command") {
  auto r = run({"aut", data("edgeless3.hg"), "--format", "count"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "6\n");

  r = run({"aut", data("path4.hg"), "--list"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "order: 2\n()\n(1 4)(2 3)\n");

  r = run({"aut", data("edgeless3.hg"), "--list", "--format", "tworow"});
  CHECK(r.out.starts_with("order: 6\n(1 2 3 // 1 2 3)\n(1 2 3 // 1 3 2)\n"));

  const auto want = run({"aut", data("prism.hg"), "--list", "--format", "tworow"}).out;
  CHECK(want.starts_with("order: 12\n"));
  for (const char* method : {"leibniz", "brute"}) {
    CAPTURE(method);
    CHECK(run({"aut", data("prism.hg"), "--list", "--format", "tworow", "--method", method})
              .out == want);
  }
  CHECK(run({"aut", data("prism.hg"), "--list", "--format", "tworow", "--order-heuristic",
             "given"})
            .out == want);
}

TEST_CASE("iso command") {
  auto r = run({"iso", data("prism.hg"), data("prism_relabeled.hg")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "isomorphisms: 12\n");

  r = run({"iso", data("prism.hg"), data("prism_relabeled.hg"), "--list"});
  CHECK(r.out.find("1->d 2->e 3->f 4->a 5->b 6->c\n") != std::string::npos);
  CHECK(r.out == run({"iso", data("prism.hg"), data("prism_relabeled.hg"), "--list",
                      "--method", "brute"})
                     .out);

  r = run({"iso", data("path4.hg"), data("star4.hg")});
  CHECK(r.code == kExitNotIsomorphic);
  CHECK(r.out == "isomorphisms: 0\n");
  CHECK(run({"iso", data("path4.hg"), data("star4.hg"), "--format", "count"}).out == "0\n");
}

TEST_CASE("det and verify commands") {
  auto r = run({"det", data("path4.hg")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "terms: 2\n(1 2 3 4 // 1 2 3 4)\n(1 2 3 4 // 4 3 2 1)\n");

  r = run({"verify", data("prism.hg")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS determinant-equals-oracle\n") != std::string::npos);
}

TEST_CASE("exit codes for bad input and caps") {
  auto r = run({"aut", data("bad_loop.hg")});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(run({"aut", data("missing.hg")}).code == kExitInputError);
  CHECK(run({"aut"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"aut", data("prism.hg"), "--format", "roman"}).code == kExitInputError);
  CHECK(run({"det", data("prism.hg"), "--method", "brute"}).code == kExitInputError);

  CHECK(run({"verify", data("big.hg")}).code == kExitCapExceeded);
  CHECK(run({"aut", data("big.hg"), "--list", "--max-expand", "10"}).code ==
        kExitCapExceeded);
  CHECK(run({"aut", data("big.hg")}).out == "order: 7257600\n");
  CHECK(run({"aut", data("prism.hg"), "--method", "leibniz", "--max-leibniz", "4"}).code ==
        kExitCapExceeded);
  CHECK(run({"aut", data("prism.hg"), "--max-arity", "1"}).code == kExitCapExceeded);
  CHECK(run({"aut", data("prism.hg"), "--method", "brute", "--max-ground", "5"}).code ==
        kExitCapExceeded);
}
