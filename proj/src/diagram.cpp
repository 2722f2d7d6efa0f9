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

#include "kv/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kv {

namespace {

int partner_slot(int s) { return s ^ 2; }

// Plain union-find over arc labels.
class UnionFind {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int r = find(it->second);
    parent_[x] = r;
    return r;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::map<int, int> parent_;
};

}  // namespace

Diagram::Diagram(std::vector<Node> nodes, int bare_loops)
    : nodes_(std::move(nodes)), bare_loops_(bare_loops) {
  if (bare_loops_ < 0) throw std::invalid_argument("negative bare loop count");
  if (nodes_.empty() && bare_loops_ == 0) throw std::invalid_argument("empty diagram");
  std::map<int, std::vector<Occurrence>> occ;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    for (int s = 0; s < 4; ++s) {
      int label = nodes_[i].slots[s];
      if (label <= 0) throw std::invalid_argument("arc labels must be positive");
      occ[label].push_back({i, s});
    }
  }
  for (const auto& [label, ends] : occ) {
    if (ends.size() != 2) {
      throw std::invalid_argument("arc label " + std::to_string(label) + " occurs " +
                                  std::to_string(ends.size()) + " times, expected 2");
    }
    arcs_.push_back(label);
    ends_[label] = {ends[0], ends[1]};
  }
}

int Diagram::crossing_count() const {
  return static_cast<int>(
      std::count_if(nodes_.begin(), nodes_.end(),
                    [](const Node& n) { return n.kind == NodeKind::Crossing; }));
}

int Diagram::vertex_count() const {
  return static_cast<int>(nodes_.size()) - crossing_count();
}

int Diagram::arc_index(int label) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), label);
  if (it == arcs_.end() || *it != label) {
    throw std::invalid_argument("unknown arc label " + std::to_string(label));
  }
  return static_cast<int>(it - arcs_.begin());
}

const std::array<Occurrence, 2>& Diagram::arc_ends(int label) const {
  auto it = ends_.find(label);
  if (it == ends_.end()) {
    throw std::invalid_argument("unknown arc label " + std::to_string(label));
  }
  return it->second;
}

Diagram parse_diagram(const std::string& text) {
  std::vector<Node> nodes;
  int bare_loops = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "O") {
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "unexpected token after O");
      ++bare_loops;
    } else if (tok == "X" || tok == "V") {
      std::array<int, 4> slots;
      for (int s = 0; s < 4; ++s) {
        if (!(ls >> slots[s]) || slots[s] <= 0) {
          throw ParseError(lineno, "expected four positive arc labels after " + tok);
        }
      }
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "unexpected token after node line");
      nodes.push_back({tok == "X" ? NodeKind::Crossing : NodeKind::Vertex, slots});
    } else {
      throw ParseError(lineno, "unknown directive '" + tok + "'");
    }
  }
  try {
    return Diagram(std::move(nodes), bare_loops);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  for (const Node& n : d.nodes()) {
    out << (n.kind == NodeKind::Crossing ? "X" : "V");
    for (int s = 0; s < 4; ++s) out << " " << n.slots[s];
    out << "\n";
  }
  for (int i = 0; i < d.bare_loops(); ++i) out << "O\n";
  return out.str();
}

std::vector<GraphEdge> graph_edges(const Diagram& d) {
  std::vector<GraphEdge> edges;
  std::set<int> visited;
  std::set<Occurrence> used_ends;
  const auto& nodes = d.nodes();

  auto label_at = [&](Occurrence o) { return nodes[o.node].slots[o.slot]; };
  auto other_end = [&](int arc, Occurrence o) {
    const auto& e = d.arc_ends(arc);
    return e[0] == o ? e[1] : e[0];
  };

  // Open edges, starting at vertex slots.
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].kind != NodeKind::Vertex) continue;
    for (int s = 0; s < 4; ++s) {
      Occurrence start{i, s};
      if (used_ends.count(start)) continue;
      GraphEdge edge;
      edge.closed = false;
      edge.end0 = start;
      Occurrence cur = start;
      while (true) {
        int arc = label_at(cur);
        edge.arcs.push_back(arc);
        edge.forward.push_back(cur == d.arc_ends(arc)[0]);
        visited.insert(arc);
        Occurrence other = other_end(arc, cur);
        if (nodes[other.node].kind == NodeKind::Vertex) {
          edge.end1 = other;
          break;
        }
        cur = {other.node, partner_slot(other.slot)};
      }
      used_ends.insert(edge.end0);
      used_ends.insert(edge.end1);
      edges.push_back(std::move(edge));
    }
  }

  // Remaining arcs lie on closed strands through crossings only.
  for (int arc0 : d.arcs()) {
    if (visited.count(arc0)) continue;
    GraphEdge edge;
    edge.closed = true;
    Occurrence start = d.arc_ends(arc0)[0];
    Occurrence cur = start;
    do {
      int arc = label_at(cur);
      edge.arcs.push_back(arc);
      edge.forward.push_back(cur == d.arc_ends(arc)[0]);
      visited.insert(arc);
      Occurrence other = other_end(arc, cur);
      cur = {other.node, partner_slot(other.slot)};
    } while (!(cur == start));
    edges.push_back(std::move(edge));
  }
  return edges;
}

std::vector<Circuit> circuits(const Diagram& d) {
  std::vector<Circuit> result;
  std::set<int> visited;
  const auto& nodes = d.nodes();
  auto label_at = [&](Occurrence o) { return nodes[o.node].slots[o.slot]; };
  auto other_end = [&](int arc, Occurrence o) {
    const auto& e = d.arc_ends(arc);
    return e[0] == o ? e[1] : e[0];
  };

  for (int arc0 : d.arcs()) {
    if (visited.count(arc0)) continue;
    Circuit circ;
    circ.vertex_passages = 0;
    Occurrence start = d.arc_ends(arc0)[0];
    Occurrence cur = start;
    do {
      int arc = label_at(cur);
      circ.arcs.push_back(arc);
      circ.forward.push_back(cur == d.arc_ends(arc)[0]);
      visited.insert(arc);
      Occurrence other = other_end(arc, cur);
      if (nodes[other.node].kind == NodeKind::Vertex) ++circ.vertex_passages;
      cur = {other.node, partner_slot(other.slot)};
    } while (!(cur == start));
    result.push_back(std::move(circ));
  }
  for (int i = 0; i < d.bare_loops(); ++i) {
    result.push_back(Circuit{{}, {}, 0});
  }
  return result;
}

int graph_components(const Diagram& d) {
  UnionFind uf;
  for (int arc : d.arcs()) uf.find(arc);
  for (const Node& n : d.nodes()) {
    if (n.kind == NodeKind::Vertex) {
      uf.unite(n.slots[0], n.slots[1]);
      uf.unite(n.slots[1], n.slots[2]);
      uf.unite(n.slots[2], n.slots[3]);
    } else {
      uf.unite(n.slots[0], n.slots[2]);
      uf.unite(n.slots[1], n.slots[3]);
    }
  }
  std::set<int> roots;
  for (int arc : d.arcs()) roots.insert(uf.find(arc));
  return static_cast<int>(roots.size()) + d.bare_loops();
}

std::map<int, int> diagram_component_of_arc(const Diagram& d) {
  UnionFind uf;
  for (int arc : d.arcs()) uf.find(arc);
  for (const Node& n : d.nodes()) {
    uf.unite(n.slots[0], n.slots[1]);
    uf.unite(n.slots[1], n.slots[2]);
    uf.unite(n.slots[2], n.slots[3]);
  }
  std::map<int, int> root_id;
  std::map<int, int> comp;
  for (int arc : d.arcs()) {
    int r = uf.find(arc);
    auto [it, inserted] = root_id.try_emplace(r, static_cast<int>(root_id.size()));
    comp[arc] = it->second;
  }
  return comp;
}

int diagram_components(const Diagram& d) {
  auto comp = diagram_component_of_arc(d);
  int arc_comps = 0;
  for (const auto& [arc, c] : comp) arc_comps = std::max(arc_comps, c + 1);
  return arc_comps + d.bare_loops();
}

namespace {

Diagram smooth_impl(const Diagram& d, int node_index, bool type_a) {
  const auto& nodes = d.nodes();
  if (node_index < 0 || node_index >= static_cast<int>(nodes.size())) {
    throw std::invalid_argument("node index out of range");
  }
  const Node& n = nodes[node_index];
  if (n.kind != NodeKind::Crossing) {
    throw std::invalid_argument("smoothing requires a crossing");
  }
  // Type A joins (slot1,slot2),(slot3,slot4); type B joins (slot1,slot4),(slot2,slot3).
  std::array<std::array<int, 2>, 2> joins =
      type_a ? std::array<std::array<int, 2>, 2>{{{n.slots[0], n.slots[1]}, {n.slots[2], n.slots[3]}}}
             : std::array<std::array<int, 2>, 2>{{{n.slots[0], n.slots[3]}, {n.slots[1], n.slots[2]}}};

  UnionFind uf;
  for (int arc : d.arcs()) uf.find(arc);
  for (const auto& j : joins) uf.unite(j[0], j[1]);

  // Smallest label per merged class.
  std::map<int, int> min_label;
  for (int arc : d.arcs()) {
    int r = uf.find(arc);
    auto it = min_label.find(r);
    if (it == min_label.end() || arc < it->second) min_label[r] = arc;
  }

  std::vector<Node> new_nodes;
  std::set<int> roots_remaining;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (i == node_index) continue;
    Node m = nodes[i];
    for (int s = 0; s < 4; ++s) {
      int r = uf.find(m.slots[s]);
      roots_remaining.insert(r);
      m.slots[s] = min_label[r];
    }
    new_nodes.push_back(m);
  }

  // A joined class with no occurrence left is a closed circle.
  int new_loops = d.bare_loops();
  std::set<int> joined_roots;
  for (const auto& j : joins) {
    joined_roots.insert(uf.find(j[0]));
    joined_roots.insert(uf.find(j[1]));
  }
  for (int r : joined_roots) {
    if (!roots_remaining.count(r)) ++new_loops;
  }
  return Diagram(std::move(new_nodes), new_loops);
}

}  // namespace

Diagram smooth_a(const Diagram& d, int node_index) { return smooth_impl(d, node_index, true); }

Diagram smooth_b(const Diagram& d, int node_index) { return smooth_impl(d, node_index, false); }

Diagram vertexify(const Diagram& d, int node_index) {
  const auto& nodes = d.nodes();
  if (node_index < 0 || node_index >= static_cast<int>(nodes.size())) {
    throw std::invalid_argument("node index out of range");
  }
  if (nodes[node_index].kind != NodeKind::Crossing) {
    throw std::invalid_argument("vertexify requires a crossing");
  }
  std::vector<Node> new_nodes = nodes;
  new_nodes[node_index].kind = NodeKind::Vertex;
  return Diagram(std::move(new_nodes), d.bare_loops());
}

Diagram insert_curl(const Diagram& d, int arc, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  int max_label = d.arcs().empty() ? 0 : d.arcs().back();
  int n1 = max_label + 1;
  int n2 = max_label + 2;

  if (arc == 0) {
    if (d.bare_loops() == 0) throw std::invalid_argument("no bare loop to curl");
    std::vector<Node> nodes = d.nodes();
    Node curl{NodeKind::Crossing,
              sign > 0 ? std::array<int, 4>{n2, n2, n1, n1} : std::array<int, 4>{n1, n2, n2, n1}};
    nodes.push_back(curl);
    return Diagram(std::move(nodes), d.bare_loops() - 1);
  }

  const auto& ends = d.arc_ends(arc);  // throws on unknown arc
  std::vector<Node> nodes = d.nodes();
  Occurrence cut = ends[1];
  nodes[cut.node].slots[cut.slot] = n1;
  Node curl{NodeKind::Crossing,
            sign > 0 ? std::array<int, 4>{n2, n2, arc, n1} : std::array<int, 4>{arc, n2, n2, n1}};
  nodes.push_back(curl);
  return Diagram(std::move(nodes), d.bare_loops());
}

}  // namespace kv
