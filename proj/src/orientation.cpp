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

#include "kv/orientation.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kv {

namespace {

// Union-find with parity: tracks whether two variables are equal or opposite.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns (root, parity of x relative to root).
  std::pair<int, int> find(int x) {
    if (parent_[x] == x) return {x, 0};
    auto [root, p] = find(parent_[x]);
    parent_[x] = root;
    parity_[x] ^= p;
    return {root, parity_[x]};
  }

  // Imposes x ^ y == p. Returns false on contradiction.
  bool unite(int x, int y, int p) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == p;
    parent_[rx] = ry;
    parity_[rx] = px ^ py ^ p;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

bool arc_enters_at(const Diagram& d, const OrientationAssignment& h, Occurrence occ) {
  int arc = d.nodes()[occ.node].slots[occ.slot];
  const auto& ends = d.arc_ends(arc);
  Occurrence head = h.arc_dir[d.arc_index(arc)] ? ends[1] : ends[0];
  return head == occ;
}

int sign_from_entries(int under_entry, int over_entry) {
  // (1,4) -> +1, (1,2) -> -1, (3,2) -> +1, (3,4) -> -1
  return ((under_entry == 1) == (over_entry == 4)) ? 1 : -1;
}

}  // namespace

HyperbolicStructure hyperbolic_structure(const Diagram& d) {
  HyperbolicStructure hs;
  hs.edges = graph_edges(d);
  int ne = static_cast<int>(hs.edges.size());

  // Which edge end sits at each vertex slot.
  std::map<Occurrence, std::pair<int, int>> end_at;  // occurrence -> (edge, end index)
  for (int e = 0; e < ne; ++e) {
    if (hs.edges[e].closed) continue;
    end_at[hs.edges[e].end0] = {e, 0};
    end_at[hs.edges[e].end1] = {e, 1};
  }

  ParityUnionFind uf(ne);
  bool ok = true;
  const auto& nodes = d.nodes();
  for (int i = 0; i < static_cast<int>(nodes.size()) && ok; ++i) {
    if (nodes[i].kind != NodeKind::Vertex) continue;
    // pol(slot) = o_edge ^ [slot holds the edge's start end]; alternating
    // polarity means pol(s1)=pol(s3), pol(s2)=pol(s4), pol(s1)!=pol(s2).
    std::array<std::pair<int, int>, 4> at;
    for (int s = 0; s < 4; ++s) at[s] = end_at.at(Occurrence{i, s});
    auto offset = [](const std::pair<int, int>& a) { return a.second == 0 ? 1 : 0; };
    ok = ok && uf.unite(at[0].first, at[2].first, offset(at[0]) ^ offset(at[2]));
    ok = ok && uf.unite(at[1].first, at[3].first, offset(at[1]) ^ offset(at[3]));
    ok = ok && uf.unite(at[0].first, at[1].first, offset(at[0]) ^ offset(at[1]) ^ 1);
  }

  hs.consistent = ok;
  if (!ok) {
    hs.num_classes = 0;
    return hs;
  }

  hs.edge_class.resize(ne);
  hs.edge_parity.resize(ne);
  std::map<int, int> root_class;
  for (int e = 0; e < ne; ++e) {
    auto [root, p] = uf.find(e);
    auto [it, fresh] = root_class.try_emplace(root, static_cast<int>(root_class.size()));
    hs.edge_class[e] = it->second;
    hs.edge_parity[e] = static_cast<std::uint8_t>(p);
  }
  int edge_classes = static_cast<int>(root_class.size());
  hs.num_classes = edge_classes + d.bare_loops();

  auto arc_comp = diagram_component_of_arc(d);
  int arc_comp_count = 0;
  for (const auto& [arc, c] : arc_comp) arc_comp_count = std::max(arc_comp_count, c + 1);
  hs.class_diagram_comp.assign(hs.num_classes, -1);
  for (int e = 0; e < ne; ++e) {
    int cls = hs.edge_class[e];
    if (hs.class_diagram_comp[cls] < 0) {
      hs.class_diagram_comp[cls] = arc_comp.at(hs.edges[e].arcs.front());
    }
  }
  for (int k = 0; k < d.bare_loops(); ++k) {
    hs.class_diagram_comp[edge_classes + k] = arc_comp_count + k;
  }
  return hs;
}

OrientationAssignment assignment_from_bits(const Diagram& d, const HyperbolicStructure& hs,
                                           std::uint64_t bits) {
  OrientationAssignment h;
  h.arc_dir.assign(d.arcs().size(), 0);
  for (std::size_t e = 0; e < hs.edges.size(); ++e) {
    bool o = (((bits >> hs.edge_class[e]) & 1) ^ hs.edge_parity[e]) != 0;
    const GraphEdge& edge = hs.edges[e];
    for (std::size_t i = 0; i < edge.arcs.size(); ++i) {
      bool fwd = edge.forward[i];
      h.arc_dir[d.arc_index(edge.arcs[i])] = (o ? fwd : !fwd) ? 1 : 0;
    }
  }
  return h;
}

std::vector<OrientationAssignment> enumerate_hyperbolic(const Diagram& d) {
  HyperbolicStructure hs = hyperbolic_structure(d);
  if (!hs.consistent) return {};
  if (hs.num_classes > 24) {
    throw std::runtime_error("too many graph components to enumerate orientations");
  }
  std::vector<OrientationAssignment> out;
  out.reserve(std::size_t{1} << hs.num_classes);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << hs.num_classes); ++bits) {
    out.push_back(assignment_from_bits(d, hs, bits));
  }
  return out;
}

bool is_separable(const Diagram& d) { return hyperbolic_structure(d).consistent; }

int crossing_sign(const Diagram& d, const OrientationAssignment& h, int node_index) {
  const auto& nodes = d.nodes();
  if (node_index < 0 || node_index >= static_cast<int>(nodes.size())) {
    throw std::invalid_argument("node index out of range");
  }
  if (nodes[node_index].kind != NodeKind::Crossing) {
    throw std::invalid_argument("crossing sign requires a crossing");
  }
  bool under_in_1 = arc_enters_at(d, h, {node_index, 0});
  bool under_in_3 = arc_enters_at(d, h, {node_index, 2});
  bool over_in_2 = arc_enters_at(d, h, {node_index, 1});
  bool over_in_4 = arc_enters_at(d, h, {node_index, 3});
  if (under_in_1 == under_in_3 || over_in_2 == over_in_4) {
    throw std::invalid_argument("orientation is not consistent through the crossing");
  }
  return sign_from_entries(under_in_1 ? 1 : 3, over_in_2 ? 2 : 4);
}

int writhe(const Diagram& d, const OrientationAssignment& h) {
  int w = 0;
  for (int i = 0; i < static_cast<int>(d.nodes().size()); ++i) {
    if (d.nodes()[i].kind == NodeKind::Crossing) w += crossing_sign(d, h, i);
  }
  return w;
}

LaurentPolynomial hyperbolic_state_sum(const Diagram& d) {
  HyperbolicStructure hs = hyperbolic_structure(d);
  if (!hs.consistent) return LaurentPolynomial::zero();
  if (hs.num_classes > 24) {
    throw std::runtime_error("too many graph components to enumerate orientations");
  }
  LaurentPolynomial sum;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << hs.num_classes); ++bits) {
    OrientationAssignment h = assignment_from_bits(d, hs, bits);
    sum = sum + LaurentPolynomial::monomial(Dyadic(1), writhe(d, h));
  }
  return sum;
}

int twisting_number(const Diagram& d) {
  int t = 0;
  OrientationAssignment h;
  h.arc_dir.assign(d.arcs().size(), 0);
  for (const Circuit& circ : circuits(d)) {
    if (circ.arcs.empty()) continue;
    std::set<int> members(circ.arcs.begin(), circ.arcs.end());
    for (std::size_t i = 0; i < circ.arcs.size(); ++i) {
      h.arc_dir[d.arc_index(circ.arcs[i])] = circ.forward[i] ? 1 : 0;
    }
    for (int i = 0; i < static_cast<int>(d.nodes().size()); ++i) {
      const Node& n = d.nodes()[i];
      if (n.kind != NodeKind::Crossing) continue;
      // Self-crossing: both strands lie on this circuit.
      if (members.count(n.slots[0]) && members.count(n.slots[1])) {
        t += crossing_sign(d, h, i);
      }
    }
  }
  return t;
}

std::string serialize_orientation(const Diagram& d, const OrientationAssignment& h) {
  std::ostringstream out;
  auto edges = graph_edges(d);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    int first = edges[e].arcs.front();
    bool canonical = (h.arc_dir[d.arc_index(first)] != 0) == edges[e].forward.front();
    if (e) out << " ";
    out << "e" << e << (canonical ? "=+" : "=-");
  }
  return out.str();
}

}  // namespace kv
