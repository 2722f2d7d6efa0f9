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

#include <string>

#include "doctest.h"
#include "kv/invariant.hpp"
#include "kv/orientation.hpp"
#include "kv/skein.hpp"

using namespace kv;

namespace {

const char* kTrefoil = "X 1 2 5 4\nX 2 3 6 5\nX 3 1 4 6";
const char* kTrefoilMirror = "X 4 1 2 5\nX 5 2 3 6\nX 6 3 1 4";
const char* kFigureEight = "X 3 1 2 4\nX 4 5 8 7\nX 5 2 1 6\nX 6 3 7 8";
const char* kHopf = "X 3 1 2 4\nX 4 2 1 3";
const char* kNonSep = "X 1 2 3 4\nV 1 2 3 4";

LaurentPolynomial a_pow(int e) { return LaurentPolynomial::monomial(Dyadic(1), e); }

const char* kCorpusLike[] = {"O",       "O\nO",        "V 1 1 2 2",  "X 2 2 1 1",
                             "X 1 2 2 1", kTrefoil,     kTrefoilMirror, kFigureEight,
                             kHopf,     kNonSep,       "V 1 2 1 2",  "V 1 2 3 4\nV 4 3 2 1"};

}  // namespace

TEST_CASE("oracle hand expansions") {
  CHECK(oracle_bracket(parse_diagram("X 2 2 1 1")) == a_pow(1));
  CHECK(oracle_bracket(parse_diagram("X 1 2 2 1")) == a_pow(-1));
  CHECK(oracle_bracket(parse_diagram("O")) == LaurentPolynomial::one());
}

TEST_CASE("oracle knot values") {
  CHECK(oracle_bracket(parse_diagram(kTrefoil)) == a_pow(3));
  CHECK(oracle_bracket(parse_diagram(kTrefoilMirror)) == a_pow(-3));
  CHECK(oracle_bracket(parse_diagram(kFigureEight)) == LaurentPolynomial::one());
}

TEST_CASE("oracle equals the state sum bracket") {
  for (const char* text : kCorpusLike) {
    // The oracle's crossing-free base case presumes planar realizability,
    // which "V 1 2 1 2" lacks (its two vertex loops must intersect).
    if (std::string(text) == "V 1 2 1 2") continue;
    Diagram d = parse_diagram(text);
    CHECK(oracle_bracket(d) == bracket(d));
  }
}

TEST_CASE("oracle is pivot-order independent") {
  for (const char* text : kCorpusLike) {
    Diagram d = parse_diagram(text);
    CHECK(oracle_bracket(d, kDefaultSkeinCap, Pivot::Lowest) ==
          oracle_bracket(d, kDefaultSkeinCap, Pivot::Highest));
  }
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(oracle_bracket(parse_diagram(kTrefoil), 2), std::length_error);
}

TEST_CASE("vertex-free knot diagrams give A^writhe") {
  for (const char* text : {kTrefoil, kTrefoilMirror, kFigureEight, "X 2 2 1 1", "X 1 2 2 1"}) {
    Diagram d = parse_diagram(text);
    REQUIRE(circuits(d).size() == 1);  // a knot diagram
    CHECK(oracle_bracket(d) == a_pow(twisting_number(d)));
  }
}

TEST_CASE("skein residual vanishes everywhere") {
  for (const char* text : kCorpusLike) {
    Diagram d = parse_diagram(text);
    for (int i = 0; i < static_cast<int>(d.nodes().size()); ++i) {
      if (d.nodes()[i].kind != NodeKind::Crossing) continue;
      CHECK(skein_residual(d, i) == LaurentPolynomial::zero());
    }
  }
}

TEST_CASE("skein residual rejects vertices") {
  Diagram d = parse_diagram(kNonSep);
  CHECK_THROWS_AS(skein_residual(d, 1), std::invalid_argument);
  CHECK_THROWS_AS(skein_residual(d, 5), std::invalid_argument);
}
