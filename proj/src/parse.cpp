// Copyright 2026 The polybergman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polybergman/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace polybergman {

namespace {

class SymbolParser {
 public:
  explicit SymbolParser(const std::string& text) : s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("symbol '" + s_ + "': " + what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const Polynomial d = unary();
        if (d.degree() != 0 || d.is_zero()) fail("division by a non-constant or zero");
        const ComplexRational c = d.coefficient(Monomial{0, 0});
        p = p * (ComplexRational(1) / c);
      } else if (starts_primary()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return unary() * ComplexRational(-1);
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    if (e > 256) fail("exponent too large");
    Polynomial out(1);
    for (unsigned long k = 0; k < e; ++k) out = out * base;
    return out;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      try {
        return Polynomial(ComplexRational(parse_rational(s_.substr(start, pos_ - start))));
      } catch (const std::exception&) {
        pos_ = start;
        fail("bad number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "z") return Polynomial::z();
      if (id == "zbar") return Polynomial::zbar();
      if (id == "i") return Polynomial(ComplexRational(Rational(0), Rational(1)));
      if (id == "conj") {
        if (!accept('(')) fail("expected '(' after conj");
        Polynomial p = expr();
        if (!accept(')')) fail("expected ')'");
        return p.conj();
      }
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_symbol(const std::string& text) { return SymbolParser(text).parse(); }

ComplexRational parse_complex_exact(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty complex number");
  auto bad = [&text]() { return std::invalid_argument("cannot parse complex number '" + text + "'"); };
  auto part = [&](const std::string& t) -> Rational {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    try {
      return parse_rational(t[0] == '+' ? t.substr(1) : t);
    } catch (const std::exception&) {
      throw bad();
    }
  };
  if (s.back() != 'i') return {part(s), 0};
  s.pop_back();
  // Split at the last sign that is not the leading one and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0, part(s)};
  const std::string re = s.substr(0, split);
  if (re.empty()) throw bad();
  return {part(re), part(s.substr(split))};
}

Complex parse_complex(const std::string& text) { return parse_complex_exact(text).to_complex(); }

}  // namespace polybergman
