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

#include <string>
#include <vector>

#include "kv/diagram.hpp"
#include "kv/laurent.hpp"
#include "kv/orientation.hpp"

namespace kv {

enum class Mark { Vertical, Horizontal };

/// Orbit of hyperbolic orientations under per-diagram-component reversal.
/// Signature is the product over crossings of A (vertical mark) or A^-1
/// (horizontal mark), which equals A^writhe of any representative.
struct PartitionClass {
  std::vector<Mark> marks;  // one per crossing, in node order
  LaurentPolynomial signature;
  OrientationAssignment representative;
};

struct InvariantReport {
  LaurentPolynomial bracket;
  LaurentPolynomial braces;
  LaurentPolynomial normalized;
  int twist;
  int c;
  int v;
  int crossings;
  int diagram_components;
  bool separable;
};

/// The polynomial [G] at B=A^-1, a=A: (1/2)(-A-A^-1)^v * state sum.
LaurentPolynomial bracket(const Diagram& d);

std::vector<PartitionClass> partition_classes(const Diagram& d);

/// {G}: sum of partition signatures; zero for non-separable diagrams.
LaurentPolynomial braces(const Diagram& d);

/// P(G) = A^-t(G) [G] / (2^{c-1} (-A-A^-1)^v), computed division-free as
/// A^-t * state sum * 2^-c.
LaurentPolynomial normalized(const Diagram& d);

struct OneCrossingResult {
  bool vanishes;
  int components_a;
  int components_b;
  int components_v;
};

/// For a diagram with exactly one crossing: the bracket vanishes iff the A
/// smoothing, B smoothing and vertexification all have the same number of
/// graph components.
OneCrossingResult one_crossing_test(const Diagram& d);

InvariantReport compute_report(const Diagram& d);

std::string report_to_json(const InvariantReport& r);
std::string report_to_text(const InvariantReport& r);

}  // namespace kv
