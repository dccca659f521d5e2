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

#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "polybergman/parse.hpp"
#include "polybergman/rational.hpp"
#include "polybergman/report.hpp"

using namespace polybergman;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(Rational(-1, 8)) == "-1/8");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(exact_rational(0.1) == Rational(3602879701896397, Integer(1) << 55));
}

TEST_CASE("complex literals") {
  CHECK(parse_complex_exact("0.5") == ComplexRational(Rational(1, 2)));
  CHECK(parse_complex_exact("i") == ComplexRational(Rational(0), Rational(1)));
  CHECK(parse_complex_exact("-i") == ComplexRational(Rational(0), Rational(-1)));
  CHECK(parse_complex_exact("0.3-0.2i") == ComplexRational(Rational(3, 10), Rational(-1, 5)));
  CHECK(parse_complex_exact("1/4 + 1/4i") == ComplexRational(Rational(1, 4), Rational(1, 4)));
  CHECK(parse_complex_exact("-2.5i") == ComplexRational(Rational(0), Rational(-5, 2)));
  CHECK(parse_complex_exact("1e-1+1e-1i") == ComplexRational(Rational(1, 10), Rational(1, 10)));
  CHECK_THROWS_AS(parse_complex_exact(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_exact("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex_exact("1+2"), std::invalid_argument);
}

TEST_CASE("symbol expressions") {
  CHECK(parse_symbol("z") == Polynomial::z());
  CHECK(parse_symbol("zbar") == Polynomial::zbar());
  CHECK(parse_symbol("conj(z)") == Polynomial::zbar());
  CHECK(parse_symbol("1 - z*zbar") == Polynomial(1) - Polynomial::monomial(1, 1));
  CHECK(parse_symbol("(z + zbar)^2") == Polynomial::monomial(2, 0) + Polynomial::monomial(1, 1, ComplexRational(2)) + Polynomial::monomial(0, 2));
  CHECK(parse_symbol("2z^3/4") == Polynomial::monomial(3, 0, ComplexRational(Rational(1, 2))));
  CHECK(parse_symbol("(1/2 + i) z^2 zbar") == Polynomial::monomial(2, 1, ComplexRational(Rational(1, 2), Rational(1))));
  CHECK(parse_symbol("-0.25") == Polynomial(ComplexRational(Rational(-1, 4))));
  CHECK(parse_symbol("conj(i z)") == Polynomial::monomial(0, 1, ComplexRational(Rational(0), Rational(-1))));
  CHECK_THROWS_AS(parse_symbol("z/z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("w"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("(z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("z^-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol(""), std::invalid_argument);
  // Printed polynomials parse back.
  const Polynomial p = Polynomial::monomial(2, 1, ComplexRational(Rational(-3, 7), Rational(5, 2))) + Polynomial(4);
  CHECK(parse_symbol(p.to_string()) == p);
}

TEST_CASE("number formatting") {
  CHECK(format_double(2.5) == "2.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(1.0 / 0.0) == "inf");
  CHECK(format_double(-1.0 / 0.0) == "-inf");
}

TEST_CASE("Q report JSON") {
  const auto r = analyze_Q(SpaceOrder(2));
  const auto j = nlohmann::json::parse(qreport_json(r));
  CHECK(j["n"] == 2);
  CHECK(j["Q"] == nlohmann::json::array({"1", "-1/8", "1/64"}));
  CHECK(j["mu"] == nlohmann::json::array({"4", "-12", "9"}));
  CHECK(j["b"] == nlohmann::json::array({"1", "-6", "9"}));
  CHECK(j["verdict"] == "all_outside");
  CHECK(j["roots"].size() == 2);
  CHECK(j["roots"][0]["certified"] == true);
  CHECK(j["roots"][0]["re"] == "4");
  CHECK(j["margins"][0] == "64");
  CHECK(j["negative_real_parts"] == 0);
  CHECK_FALSE(j.contains("error"));
  const auto one = nlohmann::json::parse(qreport_json(analyze_Q(SpaceOrder(1))));
  CHECK(one["min_margin"].is_null());
  CHECK(one["roots"].empty());
}

TEST_CASE("Q report CSV") {
  const std::string csv = qreports_csv({analyze_Q(SpaceOrder(2))});
  CHECK(csv.rfind("n,root_index,re,im,radius,certified,margin\n", 0) == 0);
  CHECK(csv.find("\n2,0,4,6.9282032302755") != std::string::npos);
  CHECK(qreports_csv({}) == "n,root_index,re,im,radius,certified,margin\n");
}

TEST_CASE("Berezin grid reports") {
  CHECK(berezin_grid_csv({}) == "n,alpha_or_B,z_re,z_im,value_re,value_im\n");
  const std::vector<BerezinGridRow> rows{{2, "B", Complex(0.5, 0.0), Complex(0.25, 0.0)}, {0, "1", Complex(0.0, -0.5), Complex(1.0, 0.0)}};
  CHECK(berezin_grid_csv(rows) == "n,alpha_or_B,z_re,z_im,value_re,value_im\n2,B,0.5,0,0.25,0\n0,1,0,-0.5,1,0\n");
  const auto j = nlohmann::json::parse(berezin_grid_json(rows));
  CHECK(j.size() == 2);
  CHECK(j[0]["alpha_or_B"] == "B");
  CHECK(j[1]["z_im"] == "-0.5");
}

TEST_CASE("reports are deterministic") {
  CHECK(qreports_json(scan_Q(2, 6)) == qreports_json(scan_Q_serial(2, 6)));
}
