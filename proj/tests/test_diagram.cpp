// Copyright 2026 The kvpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include "doctest.h"
#include "kv/diagram.hpp"

using namespace kv;

namespace {

std::set<int> arc_set(const std::vector<int>& arcs) { return {arcs.begin(), arcs.end()}; }

}  // namespace

TEST_CASE("parsing") {
  Diagram d = parse_diagram("V 1 1 2 2");
  CHECK(d.nodes().size() == 1);
  CHECK(d.nodes()[0].kind == NodeKind::Vertex);
  CHECK(d.bare_loops() == 0);
  CHECK(d.arcs() == std::vector<int>{1, 2});

  Diagram loop = parse_diagram("O");
  CHECK(loop.nodes().empty());
  CHECK(loop.bare_loops() == 1);

  Diagram two = parse_diagram("X 1 2 3 4\nV 1 2 3 4");
  CHECK(two.crossing_count() == 1);
  CHECK(two.vertex_count() == 1);
}

TEST_CASE("parsing accepts comments and blank lines") {
  Diagram d = parse_diagram("# a curl\nX 2 2 1 1  # the crossing\n\n");
  CHECK(d.crossing_count() == 1);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("X 1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_diagram("X 1 2 3 4"), ParseError);  // labels used once
  CHECK_THROWS_AS(parse_diagram("X 1 1 1 1"), ParseError);  // label used four times
  CHECK_THROWS_AS(parse_diagram("Y 1 2 1 2"), ParseError);
  CHECK_THROWS_AS(parse_diagram("O extra"), ParseError);
}

TEST_CASE("serialize round trip") {
  for (const char* text : {"X 1 2 2 1\n", "V 1 1 2 2\n", "O\n", "X 1 2 3 4\nV 1 2 3 4\nO\n"}) {
    Diagram d = parse_diagram(text);
    CHECK(serialize_diagram(d) == text);
    CHECK(parse_diagram(serialize_diagram(d)) == d);
  }
}

TEST_CASE("graph edges") {
  // Curl: both strand pairs glue arc 1 to arc 2; one closed strand.
  auto edges = graph_edges(parse_diagram("X 1 2 2 1"));
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].closed);
  CHECK(arc_set(edges[0].arcs) == std::set<int>{1, 2});

  // Vertex figure-eight: two loop edges at the single vertex.
  edges = graph_edges(parse_diagram("V 1 1 2 2"));
  REQUIRE(edges.size() == 2);
  CHECK(!edges[0].closed);
  CHECK(!edges[1].closed);

  // Each edge runs from the vertex through the crossing and back.
  edges = graph_edges(parse_diagram("X 1 2 3 4\nV 1 2 3 4"));
  REQUIRE(edges.size() == 2);
  std::set<std::set<int>> got;
  for (const auto& e : edges) {
    CHECK(!e.closed);
    got.insert(arc_set(e.arcs));
  }
  CHECK(got == std::set<std::set<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("circuits") {
  auto circ = circuits(parse_diagram("X 1 2 3 4\nV 1 2 3 4"));
  REQUIRE(circ.size() == 2);
  std::set<std::set<int>> got;
  for (const auto& c : circ) {
    CHECK(c.vertex_passages == 1);
    got.insert(arc_set(c.arcs));
  }
  CHECK(got == std::set<std::set<int>>{{1, 3}, {2, 4}});

  circ = circuits(parse_diagram("V 1 1 2 2"));
  REQUIRE(circ.size() == 1);
  CHECK(arc_set(circ[0].arcs) == std::set<int>{1, 2});
  CHECK(circ[0].vertex_passages == 2);

  circ = circuits(parse_diagram("O"));
  REQUIRE(circ.size() == 1);
  CHECK(circ[0].arcs.empty());
  CHECK(circ[0].vertex_passages == 0);
}

TEST_CASE("every circuit is a union of graph edges") {
  for (const char* text :
       {"X 1 2 2 1", "V 1 1 2 2", "X 1 2 3 4\nV 1 2 3 4", "X 4 1 2 5\nX 5 2 3 6\nX 6 3 1 4"}) {
    Diagram d = parse_diagram(text);
    auto circs = circuits(d);
    for (const GraphEdge& e : graph_edges(d)) {
      int containing = 0;
      for (const Circuit& c : circs) {
        auto cs = arc_set(c.arcs);
        bool all = std::all_of(e.arcs.begin(), e.arcs.end(),
                               [&](int a) { return cs.count(a) > 0; });
        bool none = std::none_of(e.arcs.begin(), e.arcs.end(),
                                 [&](int a) { return cs.count(a) > 0; });
        CHECK((all || none));
        if (all) ++containing;
      }
      CHECK(containing == 1);
    }
  }
}

TEST_CASE("component counts") {
  CHECK(graph_components(parse_diagram("X 1 2 2 1")) == 1);
  CHECK(graph_components(parse_diagram("O\nO")) == 2);
  CHECK(graph_components(parse_diagram("X 1 2 3 4\nV 1 2 3 4")) == 1);
  CHECK(diagram_components(parse_diagram("X 3 1 2 4\nX 4 2 1 3")) == 1);  // Hopf link
  CHECK(diagram_components(parse_diagram("O")) == 1);
  CHECK(diagram_components(parse_diagram("X 2 2 1 1\nX 3 4 4 3")) == 2);
  CHECK(graph_components(parse_diagram("X 3 1 2 4\nX 4 2 1 3")) == 2);
}

TEST_CASE("graph components dominate diagram components") {
  for (const char* text : {"X 1 2 2 1", "V 1 1 2 2", "X 3 1 2 4\nX 4 2 1 3",
                           "X 1 2 3 4\nV 1 2 3 4", "O\nO\nV 1 1 2 2"}) {
    Diagram d = parse_diagram(text);
    CHECK(graph_components(d) >= diagram_components(d));
  }
}

TEST_CASE("slot count bookkeeping") {
  for (const char* text : {"X 1 2 2 1", "X 1 2 3 4\nV 1 2 3 4", "X 4 1 2 5\nX 5 2 3 6\nX 6 3 1 4"}) {
    Diagram d = parse_diagram(text);
    CHECK(2 * d.arcs().size() == 4 * d.nodes().size());
  }
}

TEST_CASE("smoothing a curl") {
  Diagram pos = parse_diagram("X 2 2 1 1");
  CHECK(smooth_a(pos, 0) == parse_diagram("O\nO"));
  CHECK(smooth_b(pos, 0) == parse_diagram("O"));

  Diagram neg = parse_diagram("X 1 2 2 1");
  CHECK(smooth_a(neg, 0) == parse_diagram("O"));
  CHECK(smooth_b(neg, 0) == parse_diagram("O\nO"));
}

TEST_CASE("smoothing next to a vertex") {
  Diagram d = parse_diagram("X 1 2 3 4\nV 1 2 3 4");
  Diagram a = smooth_a(d, 0);
  CHECK(a.crossing_count() == 0);
  CHECK(a.vertex_count() == 1);
  CHECK(a == parse_diagram("V 1 1 3 3"));
  Diagram b = smooth_b(d, 0);
  CHECK(b == parse_diagram("V 1 2 2 1"));
}

TEST_CASE("smoothing errors") {
  Diagram d = parse_diagram("X 1 2 3 4\nV 1 2 3 4");
  CHECK_THROWS_AS(smooth_a(d, 1), std::invalid_argument);
  CHECK_THROWS_AS(smooth_a(d, 7), std::invalid_argument);
  CHECK_THROWS_AS(vertexify(d, 1), std::invalid_argument);
}

TEST_CASE("vertexify") {
  Diagram d = parse_diagram("X 1 2 2 1");
  Diagram v = vertexify(d, 0);
  CHECK(v == parse_diagram("V 1 2 2 1"));
  CHECK(v.vertex_count() == d.vertex_count() + 1);
  CHECK(v.crossing_count() == d.crossing_count() - 1);
  CHECK(v.arcs() == d.arcs());
}

TEST_CASE("crossing-removing operations preserve validity and count") {
  for (const char* text : {"X 4 1 2 5\nX 5 2 3 6\nX 6 3 1 4", "X 1 2 3 4\nV 1 2 3 4"}) {
    Diagram d = parse_diagram(text);
    for (int i = 0; i < static_cast<int>(d.nodes().size()); ++i) {
      if (d.nodes()[i].kind != NodeKind::Crossing) continue;
      for (const Diagram& r : {smooth_a(d, i), smooth_b(d, i), vertexify(d, i)}) {
        CHECK(r.crossing_count() == d.crossing_count() - 1);
        CHECK(parse_diagram(serialize_diagram(r)) == r);  // still valid
      }
    }
  }
}

TEST_CASE("curl insertion on a bare loop") {
  Diagram loop = parse_diagram("O");
  CHECK(insert_curl(loop, 0, 1) == parse_diagram("X 2 2 1 1"));
  CHECK(insert_curl(loop, 0, -1) == parse_diagram("X 1 2 2 1"));
}

TEST_CASE("curl insertion on an arc") {
  Diagram d = parse_diagram("V 1 1 2 2");
  Diagram curled = insert_curl(d, 1, 1);
  CHECK(curled.crossing_count() == d.crossing_count() + 1);
  CHECK(parse_diagram(serialize_diagram(curled)) == curled);
  CHECK_THROWS_AS(insert_curl(d, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(insert_curl(d, 1, 2), std::invalid_argument);
}

TEST_CASE("curl then matching smoothing keeps the circuit count") {
  for (const char* text : {"O", "V 1 1 2 2", "X 3 1 2 4\nX 4 2 1 3"}) {
    Diagram d = parse_diagram(text);
    size_t before = circuits(d).size();
    for (int sign : {1, -1}) {
      std::vector<int> choices = d.arcs();
      if (d.bare_loops() > 0) choices.push_back(0);
      for (int arc : choices) {
        Diagram curled = insert_curl(d, arc, sign);
        int idx = static_cast<int>(curled.nodes().size()) - 1;
        // The reconnecting smoothing: B for the A-weighted curl and vice versa.
        Diagram undone = sign > 0 ? smooth_b(curled, idx) : smooth_a(curled, idx);
        CHECK(circuits(undone).size() == before);
      }
    }
  }
}
