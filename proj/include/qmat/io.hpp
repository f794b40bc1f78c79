// Copyright 2026 The qmat Authors.
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

// Text formats.
//
// q-matroid file:
//
//   qmatroid q=2 n=2
//   0 0
//   1 1 01
//   1 1 10
//   1 1 11
//   1 2 10,01
//
// One line per subspace in canonical lattice order: rank, dimension, basis
// rows. The zero space has no row field.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qmat/core.hpp"

namespace qmat {

std::string WriteQMatroid(const QMatroid& m);
// Validates the header, the canonical order and the rank axioms. Throws
// ParseError or AxiomsFailed.
QMatroid ReadQMatroid(std::string_view text);
// Format checks only; the table may violate the axioms.
QMatroid ReadQMatroidUnchecked(std::string_view text);

// rank, independent, bases, circuits, flats, hyperplanes, spanning,
// cocircuits and loopspace, one labelled line each.
std::string RenderFamilies(const QMatroid& m);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

inline constexpr std::size_t kDiagramCap = 1000;

// Undirected DOT graph of the Hasse diagram. Nodes are labelled with basis
// rows and rank; cover edges carry color=red when the rank goes up and
// color=green otherwise. Throws TooLargeForDiagram above `cap` subspaces.
std::string EmitDot(const QMatroid& m, std::size_t cap = kDiagramCap);

}  // namespace qmat
