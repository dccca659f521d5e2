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

#include "polybergman/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace polybergman {

namespace {

using nlohmann::ordered_json;

ordered_json rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json to_json(const QReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["mu"] = rationals(r.mu.coefficients());
  j["b"] = rationals(r.b);
  j["Q"] = rationals(r.Q.coefficients());
  ordered_json roots = ordered_json::array();
  for (const auto& root : r.roots) {
    ordered_json e;
    e["re"] = format_double(root.approximation.real());
    e["im"] = format_double(root.approximation.imag());
    e["radius"] = format_double(root.radius);
    e["certified"] = root.certified;
    e["multiplicity"] = root.multiplicity;
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  ordered_json margins = ordered_json::array();
  for (double m : r.margins) margins.push_back(format_double(m));
  j["margins"] = std::move(margins);
  j["verdict"] = to_string(r.verdict);
  j["min_margin"] = r.roots.empty() ? ordered_json(nullptr) : ordered_json(format_double(r.min_margin));
  j["negative_real_parts"] = r.negative_real_parts;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

ordered_json to_json(const BerezinGridRow& row) {
  ordered_json j;
  j["n"] = row.n;
  j["alpha_or_B"] = row.alpha_or_B;
  j["z_re"] = format_double(row.z.real());
  j["z_im"] = format_double(row.z.imag());
  j["value_re"] = format_double(row.value.real());
  j["value_im"] = format_double(row.value.imag());
  return j;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string qreport_json(const QReport& report, int indent) { return to_json(report).dump(indent); }

std::string qreports_json(const std::vector<QReport>& reports, int indent) {
  ordered_json a = ordered_json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return a.dump(indent);
}

std::string qreports_csv(const std::vector<QReport>& reports) {
  std::ostringstream os;
  os << "n,root_index,re,im,radius,certified,margin\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      const auto& root = r.roots[i];
      os << r.n << ',' << i << ',' << format_double(root.approximation.real()) << ','
         << format_double(root.approximation.imag()) << ',' << format_double(root.radius) << ','
         << (root.certified ? "true" : "false") << ',' << format_double(r.margins[i]) << '\n';
    }
  }
  return os.str();
}

std::string berezin_grid_csv(const std::vector<BerezinGridRow>& rows) {
  std::ostringstream os;
  os << "n,alpha_or_B,z_re,z_im,value_re,value_im\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.alpha_or_B << ',' << format_double(row.z.real()) << ','
       << format_double(row.z.imag()) << ',' << format_double(row.value.real()) << ','
       << format_double(row.value.imag()) << '\n';
  }
  return os.str();
}

std::string berezin_grid_json(const std::vector<BerezinGridRow>& rows, int indent) {
  ordered_json a = ordered_json::array();
  for (const auto& row : rows) a.push_back(to_json(row));
  return a.dump(indent);
}

}  // namespace polybergman
