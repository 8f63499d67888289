#include "doctest.h"

#include <random>
#include <sstream>

#include "brickwork/canon.hpp"
#include "brickwork/errors.hpp"
#include "brickwork/io.hpp"
#include "brickwork/named.hpp"

using namespace brickwork;

TEST_CASE("graph6 fixtures") {
  CHECK(isomorphic(parse_graph6("C~"), complete_graph(4)));
  const MultiGraph p = parse_graph6("Ch");
  CHECK(p.edge_count() == 3);
  CHECK(p.adjacent(0, 1));
  CHECK(p.adjacent(1, 2));
  CHECK(p.adjacent(2, 3));
  const MultiGraph single = parse_graph6("@");
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(emit_graph6(parse_graph6("C~")) == "C~");
  CHECK(emit_graph6(path_graph(4)) == "Ch");
  CHECK(parse_graph6(">>graph6<<C~\n").edge_count() == 6);
}

TEST_CASE("graph6 rejects malformed input with offsets") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("C") == 1);     // missing adjacency byte
  CHECK(offset_of("C~~") == 2);   // extra byte
  CHECK(offset_of("C~ ") == 2);   // byte outside 63..126
  CHECK(offset_of("B@") == 1);    // n=3 uses 3 bits; padding must be zero
  CHECK(offset_of("") == 0);
  CHECK(offset_of("?") == 0);     // n = 0
}

TEST_CASE("graph6 extended sizes round trip") {
  const MultiGraph big = cycle_graph(70);
  const std::string line = emit_graph6(big);
  CHECK(line.substr(0, 1) == "~");
  CHECK(emit_graph6(parse_graph6(line)) == line);
}

TEST_CASE("graph6 refuses multigraphs") {
  CHECK_THROWS_AS(emit_graph6(add_parallel(complete_graph(4), 0)), UnsupportedFormat);
}

TEST_CASE("sparse6 matches the reference encoder") {
  // Strings produced by networkx.to_sparse6_bytes(header=False).
  CHECK(emit_sparse6(complete_graph(4)) == ":CcKI");
  CHECK(emit_sparse6(path_graph(4)) == ":Cdv");
  CHECK(emit_sparse6(odd_wheel(5)) == ":EaY_wCbR");
  const MultiGraph multi(2, {{0, 1}, {0, 1}});
  CHECK(emit_sparse6(multi) == ":Ab");
}

TEST_CASE("sparse6 round trip on multigraphs") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    MultiGraph g(n);
    if (n > 1) {
      const int m = static_cast<int>(rng() % 30);
      for (int i = 0; i < m; ++i) {
        const int u = static_cast<int>(rng() % n);
        const int v = static_cast<int>(rng() % n);
        if (u != v) g.add_edge(u, v);
      }
    }
    const MultiGraph h = parse_sparse6(emit_sparse6(g));
    CHECK(canonical_labeling(h).certificate == canonical_labeling(g).certificate);
    CHECK(emit_sparse6(h) == emit_sparse6(g));
  }
}

TEST_CASE("edge lists") {
  const MultiGraph k2 = parse_edge_list("2 1\n0 1");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(emit_edge_list(parse_edge_list("  3 3\n0 1\n1   2\n0 1 ")) == "3 3\n0 1\n1 2\n0 1\n");
  const MultiGraph d = odd_wheel(5, std::vector<int>{2, 1, 1, 1, 1});
  const MultiGraph back = parse_edge_list(emit_edge_list(d));
  CHECK(back.multiplicity(5, 0) == 2);
  CHECK(emit_edge_list(back) == emit_edge_list(d));
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n5"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x"), ParseError);
}

TEST_CASE("dot export highlights") {
  const MultiGraph w5 = odd_wheel(5);
  const DotHighlight spokes{{5, 6}, "red", "R1"};
  const std::string dot = emit_dot(w5, std::span<const DotHighlight>(&spokes, 1));
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("5 -- 0 [color=\"red\"") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("streams") {
  std::istringstream in("C~\n\nCh\n:CcKI\n");
  const auto graphs = read_all(in, Format::graph6);
  CHECK(graphs.size() == 3);
  std::istringstream bad("C~\nC~~\n");
  GraphReader reader(bad, Format::graph6);
  CHECK(reader.next());
  try {
    reader.next();
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  std::istringstream el("2 1\n0 1\n3 2\n0 1\n1 2\n");
  CHECK(read_all(el, Format::edgelist).size() == 2);
  CHECK(parse_format("g6") == Format::graph6);
  CHECK_THROWS_AS(parse_format("xml"), PreconditionError);
}
