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

#include <functional>
#include <string>
#include <vector>

namespace polybergman {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Names of the available suites ("core", "quick").
std::vector<std::string> suite_names();

/// Runs every check of a suite, reporting each result as it completes. A check that
/// throws is recorded as failed. Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace polybergman
