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

#pragma once

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kv {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class NodeKind { Crossing, Vertex };

/// A 4-valent node. Slots are counterclockwise, 0-based here (slot index 0..3
/// corresponds to slots 1..4 of the text format). Strands pair slots (0,2) and
/// (1,3); for a crossing, (0,2) is the under-strand.
struct Node {
  NodeKind kind;
  std::array<int, 4> slots;

  bool operator==(const Node&) const = default;
};

/// Position of one arc end: node index and slot index.
struct Occurrence {
  int node;
  int slot;

  auto operator<=>(const Occurrence&) const = default;
};

/// 4-valent rigid-vertex graph diagram in an extended PD code. Immutable
/// after construction; editing operations return new diagrams.
class Diagram {
 public:
  Diagram(std::vector<Node> nodes, int bare_loops);

  const std::vector<Node>& nodes() const { return nodes_; }
  int bare_loops() const { return bare_loops_; }

  int crossing_count() const;
  int vertex_count() const;

  /// Sorted list of arc labels.
  const std::vector<int>& arcs() const { return arcs_; }
  /// Index of an arc label in arcs().
  int arc_index(int label) const;
  /// The two ends of an arc, in scan order (nodes first, slots 0..3).
  const std::array<Occurrence, 2>& arc_ends(int label) const;

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<Node> nodes_;
  int bare_loops_;
  std::vector<int> arcs_;
  std::map<int, std::array<Occurrence, 2>> ends_;
};

/// Chain of arcs glued straight through crossings. Open edges terminate at
/// vertex slots; closed edges are free strands through crossings only.
/// forward[i] records whether arcs[i] is traversed from its first end to its
/// second under the edge's canonical direction.
struct GraphEdge {
  std::vector<int> arcs;
  std::vector<bool> forward;
  bool closed;
  Occurrence end0;  // open edges only; canonical direction runs end0 -> end1
  Occurrence end1;
};

/// Closed walk gluing arcs straight through at crossings and vertices.
/// Bare loops appear as circuits with no arcs.
struct Circuit {
  std::vector<int> arcs;
  std::vector<bool> forward;
  int vertex_passages;
};

Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

std::vector<GraphEdge> graph_edges(const Diagram& d);
std::vector<Circuit> circuits(const Diagram& d);

/// Components of the abstract graph: vertices join all four incident edges,
/// crossings join nothing. Counts each closed strand and bare loop once.
int graph_components(const Diagram& d);

/// Components when both crossings and vertices join all four incident arcs.
int diagram_components(const Diagram& d);

/// Assigns each arc its diagram-component id; bare loop k (0-based) gets
/// id = number-of-arc-components + k.
std::map<int, int> diagram_component_of_arc(const Diagram& d);

Diagram smooth_a(const Diagram& d, int node_index);
Diagram smooth_b(const Diagram& d, int node_index);
Diagram vertexify(const Diagram& d, int node_index);

/// Splices a one-crossing curl into the given arc (arc == 0 selects a bare
/// loop). sign +1 inserts the curl whose bracket factor is A, sign -1 the
/// A^-1 curl.
Diagram insert_curl(const Diagram& d, int arc, int sign);

}  // namespace kv
