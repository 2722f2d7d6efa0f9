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

#include <cstdint>
#include <string>
#include <vector>

#include "kv/diagram.hpp"
#include "kv/laurent.hpp"

namespace kv {

/// Direction of every arc: arc_dir[i] is true when arc arcs()[i] points
/// toward its second end (enters the node there).
struct OrientationAssignment {
  std::vector<std::uint8_t> arc_dir;
};

/// Result of propagating the alternating-polarity constraint at vertices.
/// When consistent, orientations are parameterized by one free bit per
/// class; classes [0, edge classes) cover graph edges and the remaining
/// bare_loops classes are free circles.
struct HyperbolicStructure {
  bool consistent;
  std::vector<GraphEdge> edges;
  std::vector<int> edge_class;            // class id per edge
  std::vector<std::uint8_t> edge_parity;  // edge direction = bit[class] ^ parity
  int num_classes;                        // includes bare-loop classes
  std::vector<int> class_diagram_comp;    // diagram component per class
};

HyperbolicStructure hyperbolic_structure(const Diagram& d);

/// Directions induced on all arcs by choosing the given bit per class.
OrientationAssignment assignment_from_bits(const Diagram& d, const HyperbolicStructure& hs,
                                           std::uint64_t bits);

/// All hyperbolic orientations; empty when the vertex constraints are
/// contradictory, otherwise exactly 2^(graph components) assignments.
std::vector<OrientationAssignment> enumerate_hyperbolic(const Diagram& d);

bool is_separable(const Diagram& d);

int crossing_sign(const Diagram& d, const OrientationAssignment& h, int node_index);

int writhe(const Diagram& d, const OrientationAssignment& h);

/// Sum over all hyperbolic orientations h of A^writhe(h); zero when none exist.
LaurentPolynomial hyperbolic_state_sum(const Diagram& d);

/// Sum over knot-theoretic circuits of the signs of their self-crossings.
int twisting_number(const Diagram& d);

/// Debug form: canonical edge id -> "+"/"-".
std::string serialize_orientation(const Diagram& d, const OrientationAssignment& h);

}  // namespace kv
