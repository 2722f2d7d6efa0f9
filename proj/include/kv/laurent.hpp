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

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace kv {

/// Exact rational num / 2^log2_den, kept reduced (num odd or log2_den == 0).
struct Dyadic {
  long long num = 0;
  int log2_den = 0;

  Dyadic() = default;
  Dyadic(long long n, int k = 0);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return log2_den == 0; }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const = default;

  std::string to_string() const;
};

/// Laurent polynomial in the single variable A with dyadic coefficients.
/// Canonical: no zero coefficients stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(const Dyadic& coeff, int exponent);
  static LaurentPolynomial zero() { return LaurentPolynomial{}; }
  static LaurentPolynomial one() { return monomial(Dyadic(1), 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Dyadic>& terms() const { return terms_; }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const = default;

  LaurentPolynomial pow(int n) const;
  LaurentPolynomial scale(const Dyadic& c) const;

  /// Terms sorted by descending exponent, e.g. "A^2 + 2 + A^-2",
  /// non-integer coefficients as "num/2^k".
  std::string to_string() const;
  static LaurentPolynomial from_string(const std::string& text);

  /// Sorted (ascending exponent) list of [exponent, numerator, log2_den].
  std::vector<std::tuple<int, long long, int>> triples() const;
  static LaurentPolynomial from_triples(
      const std::vector<std::tuple<int, long long, int>>& triples);

 private:
  std::map<int, Dyadic> terms_;
};

}  // namespace kv
