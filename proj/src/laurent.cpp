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

#include "kv/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace kv {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient overflow in multiplication");
  }
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient overflow in addition");
  }
  return r;
}

long long checked_shift(long long a, int s) {
  if (s < 0 || s > 62) throw std::overflow_error("denominator exponent out of range");
  long long r = a;
  for (int i = 0; i < s; ++i) r = checked_mul(r, 2);
  return r;
}

int checked_exp_add(int a, int b) {
  long long r = static_cast<long long>(a) + b;
  if (r < -1000000 || r > 1000000) throw std::overflow_error("exponent overflow");
  return static_cast<int>(r);
}

}  // namespace

Dyadic::Dyadic(long long n, int k) : num(n), log2_den(k) {
  if (k < 0) throw std::invalid_argument("negative denominator exponent");
  if (num == 0) {
    log2_den = 0;
    return;
  }
  while (log2_den > 0 && num % 2 == 0) {
    num /= 2;
    --log2_den;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num = -num;
  r.log2_den = log2_den;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int k = std::max(log2_den, o.log2_den);
  long long a = checked_shift(num, k - log2_den);
  long long b = checked_shift(o.num, k - o.log2_den);
  return Dyadic(checked_add(a, b), k);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  if (log2_den + o.log2_den > 1000000) throw std::overflow_error("denominator overflow");
  return Dyadic(checked_mul(num, o.num), log2_den + o.log2_den);
}

std::string Dyadic::to_string() const {
  if (log2_den == 0) return std::to_string(num);
  return std::to_string(num) + "/2^" + std::to_string(log2_den);
}

LaurentPolynomial LaurentPolynomial::monomial(const Dyadic& coeff, int exponent) {
  LaurentPolynomial p;
  if (!coeff.is_zero()) p.terms_[exponent] = coeff;
  return p;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_[e] = c;
    } else {
      Dyadic s = it->second + c;
      if (s.is_zero()) {
        r.terms_.erase(it);
      } else {
        it->second = s;
      }
    }
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      int e = checked_exp_add(e1, e2);
      Dyadic p = c1 * c2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        if (!p.is_zero()) r.terms_[e] = p;
      } else {
        Dyadic s = it->second + p;
        if (s.is_zero()) {
          r.terms_.erase(it);
        } else {
          it->second = s;
        }
      }
    }
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  LaurentPolynomial r = one();
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

LaurentPolynomial LaurentPolynomial::scale(const Dyadic& c) const {
  LaurentPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : terms_) r.terms_[e] = coeff * c;
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int e = it->first;
    Dyadic c = it->second;
    bool neg = c.num < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    Dyadic mag = neg ? -c : c;
    bool unit = (mag.num == 1 && mag.log2_den == 0);
    if (e == 0) {
      out << mag.to_string();
    } else {
      if (!unit) out << mag.to_string() << (mag.is_integer() ? "" : " ");
      out << "A";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw std::invalid_argument("expected integer at position " + std::to_string(start));
    return std::stoll(s.substr(start, i - start));
  }
  bool digit_next() {
    skip_ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
};

}  // namespace

LaurentPolynomial LaurentPolynomial::from_string(const std::string& text) {
  Cursor cur{text};
  LaurentPolynomial result;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.eat('-')) {
      neg = true;
    } else if (cur.eat('+')) {
      // explicit plus between terms
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' between terms");
    }
    first = false;
    long long numv = 1;
    int log2den = 0;
    bool saw_coeff = false;
    if (cur.digit_next()) {
      numv = cur.integer();
      saw_coeff = true;
      if (cur.eat('/')) {
        if (!cur.eat('2') || !cur.eat('^')) throw std::invalid_argument("expected /2^k denominator");
        log2den = static_cast<int>(cur.integer());
      }
    }
    int exponent = 0;
    bool saw_var = false;
    if (cur.eat('A')) {
      saw_var = true;
      exponent = cur.eat('^') ? static_cast<int>(cur.integer()) : 1;
    }
    if (!saw_coeff && !saw_var) throw std::invalid_argument("empty term");
    if (neg) numv = -numv;
    result = result + monomial(Dyadic(numv, log2den), exponent);
  }
  if (first) throw std::invalid_argument("empty polynomial text");
  return result;
}

std::vector<std::tuple<int, long long, int>> LaurentPolynomial::triples() const {
  std::vector<std::tuple<int, long long, int>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, c.num, c.log2_den);
  return out;
}

LaurentPolynomial LaurentPolynomial::from_triples(
    const std::vector<std::tuple<int, long long, int>>& triples) {
  LaurentPolynomial r;
  for (const auto& [e, n, k] : triples) r = r + monomial(Dyadic(n, k), e);
  return r;
}

}  // namespace kv
