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

#pragma once

#include <string>
#include <vector>

#include "polybergman/diskgeom.hpp"
#include "polybergman/qanalysis.hpp"

namespace polybergman {

/// Decimal string with 17 significant digits ("inf", "-inf", "nan" for non-finite values).
std::string format_double(double x);

/// One QReport as a JSON object.
std::string qreport_json(const QReport& report, int indent = 2);

/// A scan as a JSON array of QReport objects, in input order.
std::string qreports_json(const std::vector<QReport>& reports, int indent = 2);

/// One row per (n, root): n,root_index,re,im,radius,certified,margin.
std::string qreports_csv(const std::vector<QReport>& reports);

struct BerezinGridRow {
  int n;
  /// "B" for the polyanalytic transform, otherwise the weight alpha.
  std::string alpha_or_B;
  Complex z;
  Complex value;
};

/// n,alpha_or_B,z_re,z_im,value_re,value_im; header only for an empty grid.
std::string berezin_grid_csv(const std::vector<BerezinGridRow>& rows);

/// The same rows as a JSON array.
std::string berezin_grid_json(const std::vector<BerezinGridRow>& rows, int indent = 2);

}  // namespace polybergman
