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

#include "kv/invariant.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kv {

namespace {

LaurentPolynomial loop_factor() {
  // -A - A^-1
  return LaurentPolynomial::monomial(Dyadic(-1), 1) +
         LaurentPolynomial::monomial(Dyadic(-1), -1);
}

std::uint64_t canonical_orbit(const HyperbolicStructure& hs, std::uint64_t bits) {
  // For each diagram component, flip all of its class bits if the lowest
  // class of that component has bit 1.
  int dcomps = 0;
  for (int c : hs.class_diagram_comp) dcomps = std::max(dcomps, c + 1);
  std::vector<std::uint64_t> comp_mask(dcomps, 0);
  std::vector<int> comp_low(dcomps, -1);
  for (int cls = 0; cls < hs.num_classes; ++cls) {
    int dc = hs.class_diagram_comp[cls];
    comp_mask[dc] |= std::uint64_t{1} << cls;
    if (comp_low[dc] < 0) comp_low[dc] = cls;
  }
  for (int dc = 0; dc < dcomps; ++dc) {
    if ((bits >> comp_low[dc]) & 1) bits ^= comp_mask[dc];
  }
  return bits;
}

}  // namespace

LaurentPolynomial bracket(const Diagram& d) {
  LaurentPolynomial sum = hyperbolic_state_sum(d);
  return sum.scale(Dyadic(1, 1)) * loop_factor().pow(d.vertex_count());
}

std::vector<PartitionClass> partition_classes(const Diagram& d) {
  HyperbolicStructure hs = hyperbolic_structure(d);
  if (!hs.consistent) return {};
  if (hs.num_classes > 24) {
    throw std::runtime_error("too many graph components to enumerate orientations");
  }
  std::set<std::uint64_t> seen;
  std::vector<PartitionClass> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << hs.num_classes); ++bits) {
    std::uint64_t canon = canonical_orbit(hs, bits);
    if (!seen.insert(canon).second) continue;
    PartitionClass pc;
    pc.representative = assignment_from_bits(d, hs, canon);
    pc.signature = LaurentPolynomial::one();
    for (int i = 0; i < static_cast<int>(d.nodes().size()); ++i) {
      if (d.nodes()[i].kind != NodeKind::Crossing) continue;
      int s = crossing_sign(d, pc.representative, i);
      pc.marks.push_back(s > 0 ? Mark::Vertical : Mark::Horizontal);
      pc.signature = pc.signature * LaurentPolynomial::monomial(Dyadic(1), s);
    }
    classes.push_back(std::move(pc));
  }
  return classes;
}

LaurentPolynomial braces(const Diagram& d) {
  LaurentPolynomial sum;
  for (const PartitionClass& pc : partition_classes(d)) sum = sum + pc.signature;
  return sum;
}

LaurentPolynomial normalized(const Diagram& d) {
  int c = graph_components(d);
  int t = twisting_number(d);
  LaurentPolynomial sum = hyperbolic_state_sum(d);
  return (LaurentPolynomial::monomial(Dyadic(1), -t) * sum).scale(Dyadic(1, c));
}

OneCrossingResult one_crossing_test(const Diagram& d) {
  if (d.crossing_count() != 1) {
    throw std::invalid_argument("diagram must have exactly one crossing");
  }
  int idx = 0;
  while (d.nodes()[idx].kind != NodeKind::Crossing) ++idx;
  OneCrossingResult r;
  r.components_a = graph_components(smooth_a(d, idx));
  r.components_b = graph_components(smooth_b(d, idx));
  r.components_v = graph_components(vertexify(d, idx));
  r.vanishes = r.components_a == r.components_b && r.components_b == r.components_v;
  return r;
}

InvariantReport compute_report(const Diagram& d) {
  InvariantReport r;
  r.bracket = bracket(d);
  r.braces = braces(d);
  r.normalized = normalized(d);
  r.twist = twisting_number(d);
  r.c = graph_components(d);
  r.v = d.vertex_count();
  r.crossings = d.crossing_count();
  r.diagram_components = diagram_components(d);
  r.separable = is_separable(d);
  return r;
}

std::string report_to_json(const InvariantReport& r) {
  nlohmann::json j;
  auto poly = [](const LaurentPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, n, k] : p.triples()) arr.push_back({e, n, k});
    return arr;
  };
  j["bracket"] = poly(r.bracket);
  j["braces"] = poly(r.braces);
  j["normalized"] = poly(r.normalized);
  j["twist"] = r.twist;
  j["c"] = r.c;
  j["v"] = r.v;
  j["crossings"] = r.crossings;
  j["diagram_components"] = r.diagram_components;
  j["separable"] = r.separable;
  return j.dump(2);
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "bracket:            " << r.bracket.to_string() << "\n"
      << "braces:             " << r.braces.to_string() << "\n"
      << "normalized:         " << r.normalized.to_string() << "\n"
      << "twisting number:    " << r.twist << "\n"
      << "graph components:   " << r.c << "\n"
      << "vertices:           " << r.v << "\n"
      << "crossings:          " << r.crossings << "\n"
      << "diagram components: " << r.diagram_components << "\n"
      << "separable:          " << (r.separable ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace kv
