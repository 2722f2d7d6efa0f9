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

#include "kv/skein.hpp"

#include <stdexcept>

#include "kv/invariant.hpp"

namespace kv {

namespace {

LaurentPolynomial planar_value(const Diagram& d) {
  int c = graph_components(d);
  int v = d.vertex_count();
  LaurentPolynomial factor = LaurentPolynomial::monomial(Dyadic(-1), 1) +
                             LaurentPolynomial::monomial(Dyadic(-1), -1);
  return factor.pow(v).scale(Dyadic(1LL << (c - 1)));
}

LaurentPolynomial expand(const Diagram& d, Pivot pivot) {
  int idx = -1;
  const auto& nodes = d.nodes();
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].kind != NodeKind::Crossing) continue;
    idx = i;
    if (pivot == Pivot::Lowest) break;
  }
  if (idx < 0) return planar_value(d);
  LaurentPolynomial a = LaurentPolynomial::monomial(Dyadic(1), 1);
  LaurentPolynomial a_inv = LaurentPolynomial::monomial(Dyadic(1), -1);
  return a * expand(smooth_a(d, idx), pivot) + a_inv * expand(smooth_b(d, idx), pivot) +
         expand(vertexify(d, idx), pivot);
}

}  // namespace

LaurentPolynomial oracle_bracket(const Diagram& d, int cap, Pivot pivot) {
  if (d.crossing_count() > cap) {
    throw std::length_error("crossing count exceeds skein expansion cap");
  }
  return expand(d, pivot);
}

LaurentPolynomial skein_residual(const Diagram& d, int crossing_index) {
  if (crossing_index < 0 || crossing_index >= static_cast<int>(d.nodes().size()) ||
      d.nodes()[crossing_index].kind != NodeKind::Crossing) {
    throw std::invalid_argument("skein residual requires a crossing index");
  }
  LaurentPolynomial a = LaurentPolynomial::monomial(Dyadic(1), 1);
  LaurentPolynomial a_inv = LaurentPolynomial::monomial(Dyadic(1), -1);
  return bracket(d) - (a * bracket(smooth_a(d, crossing_index)) +
                       a_inv * bracket(smooth_b(d, crossing_index)) +
                       bracket(vertexify(d, crossing_index)));
}

}  // namespace kv
