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

#include "polybergman/polyalg.hpp"

namespace polybergman {

/// Parses a polynomial symbol in z and conj(z), e.g. "1 - z*zbar", "(1/2 + i) z^2 conj(z)".
/// Identifiers: z, zbar, i, conj(...). Division only by nonzero constants; exponents are
/// nonnegative integers. Throws std::invalid_argument with the offending position.
Polynomial parse_symbol(const std::string& text);

/// Parses "a", "b i", "a+bi", "a-bi" (also "i", "-i", "2.5i") with exact rational parts.
ComplexRational parse_complex_exact(const std::string& text);

/// parse_complex_exact converted to double.
Complex parse_complex(const std::string& text);

}  // namespace polybergman
