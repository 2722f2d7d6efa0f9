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

#include "kv/diagram.hpp"
#include "kv/laurent.hpp"

namespace kv {

inline constexpr int kDefaultSkeinCap = 12;

enum class Pivot { Lowest, Highest };

/// Brute-force bracket by full skein expansion down to crossing-free
/// diagrams, which evaluate to 2^{c-1}(-A-A^-1)^v. Throws std::length_error
/// when the diagram has more crossings than the cap.
LaurentPolynomial oracle_bracket(const Diagram& d, int cap = kDefaultSkeinCap,
                                 Pivot pivot = Pivot::Lowest);

/// bracket(d) - (A*bracket(smooth_a) + A^-1*bracket(smooth_b) +
/// bracket(vertexify)), all via the state sum. Identically zero.
LaurentPolynomial skein_residual(const Diagram& d, int crossing_index);

}  // namespace kv
