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

// Experiments on small q-matroids: connectedness relations, conjecture
// checks, the rank-2 variants on F_2^4, catalogue generation and the golden
// catalogue of all q-matroids on F_2^n for n <= 3.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qmat/core.hpp"

namespace qmat {

// ---------------------------------------------------------------------------
// Relations on 1-spaces.

enum class RelationKind { kCircuit, kHyperplane };

struct RelationClasses {
  RelationKind kind = RelationKind::kCircuit;
  std::vector<int> points;                  // the 1-spaces, lattice indices
  std::vector<std::pair<int, int>> pairs;   // related pairs x < y, x != y
  bool is_equivalence = false;
  std::vector<std::vector<int>> classes;    // only when is_equivalence
  std::optional<std::array<int, 3>> witness;  // x~y, y~z, not x~z

  bool related(int x, int y) const;
};

// x ~ y when x = y or some circuit contains both.
RelationClasses CircuitRelation(const QMatroid& m);
// x ~ y when x = y or some hyperplane contains neither.
RelationClasses HyperplaneRelation(const QMatroid& m);

struct ConjectureRow {
  std::string name;
  bool circuit_transitive = false;
  bool dual_circuit_transitive = false;
  bool has_dim_one_meet = false;  // some circuit meets some cocircuit in dim 1
  std::optional<std::pair<int, int>> dim_one_witness;  // (circuit, cocircuit)

  // Transitive in M or in M*.
  bool either_transitive() const { return circuit_transitive || dual_circuit_transitive; }
  // No dim-1 circuit/cocircuit meet forces transitivity.
  bool meet_condition_holds() const { return has_dim_one_meet || circuit_transitive; }
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  std::vector<std::string> either_counterexamples;
  std::vector<std::string> meet_counterexamples;
  std::string Render() const;
};

ConjectureReport CheckConjectures(
    const std::vector<std::pair<std::string, QMatroid>>& matroids);

// ---------------------------------------------------------------------------
// Rank-2 variants on F_2^4 with two fixed 2-dimensional circuits.

struct VariantRow {
  std::vector<std::string> extra;  // spread labels beyond E1, E2
  int two_dim_circuits = 0;
  bool rank_axioms = false;
  bool circuit_axioms = false;
  // M|E1 ≅ U12, M/E2 ≅ U12, M|E2 ≅ U12, M/E1 ≅ U12.
  bool four_minors = false;
};

struct NonuniquenessReport {
  std::vector<VariantRow> variants;
  bool pairwise_non_isomorphic = false;
  bool two_circuit_is_direct_sum = false;
  bool ok() const;
  std::string Render() const;
};

NonuniquenessReport NonuniquenessDemo();

// ---------------------------------------------------------------------------
// Spreads of F_2^4 through E1 and E2.

std::vector<int> Spread(const Lattice& f2_4, bool second);
bool IsSpread(const Lattice& lat, const std::vector<int>& members);
// Every 3-space contains a member.
bool EveryHyperplaneMeetsSpread(const Lattice& f2_4, const std::vector<int>& spread);
// A change of basis of F_2^4 carrying the first spread onto the second.
std::optional<LatticeIso> SpreadIsomorphism(const Lattice& f2_4);

// ---------------------------------------------------------------------------
// Catalogue.

// Every valid rank table on GF(q)^n, in the order produced by assigning
// ranks along the canonical lattice order.
std::vector<QMatroid> EnumerateQMatroids(const FieldPtr& field, int n);

// One representative per isomorphism class, first-seen order.
std::vector<QMatroid> GenerateCatalogue(const FieldPtr& field, int n,
                                        std::uint64_t cap = kIsoSearchCap);

// Finite-field representation: entries are exponents of the primitive
// element of GF(q), -1 for zero.
struct GoldenRepresentation {
  std::uint32_t q = 2;
  int k = 0;
  std::vector<int> exponents;  // k x n, row-major
};

// An entry of the F_2 catalogue in its stated coordinates. Family fields use
// a small notation: "none", "0", "E", "all k-spaces", "all k-spaces except
// X; Y", or explicit lists "X; Y" with X written as basis rows ("010,001").
struct GoldenEntry {
  std::string name;  // "U13", "P1", "P1*", ...
  std::string stem;  // file name stem
  int n = 0;
  std::function<QMatroid()> build;
  std::string independent, bases, circuits, hyperplanes, cocircuits;
  std::string dual;                                // partner entry name
  std::vector<std::vector<std::string>> sums;      // stated decompositions
  bool indecomposable = false;                     // stated "no"
  std::optional<GoldenRepresentation> representation;
};

const std::vector<GoldenEntry>& GoldenCatalogue();
const GoldenEntry& GoldenByName(const std::string& name);
std::vector<int> ParseFamily(const Lattice& lat, const std::string& text);

struct EntryCheck {
  std::string name;
  bool independent = true, bases = true, circuits = true, hyperplanes = true, cocircuits = true;
  bool dual = true, sums = true, representation = true;
  std::vector<std::string> notes;
  bool ok() const {
    return independent && bases && circuits && hyperplanes && cocircuits && dual && sums &&
           representation;
  }
};

EntryCheck VerifyGoldenEntry(const GoldenEntry& entry);

// Pairs (A, B) from the smaller golden entries with A ⊕ B ≅ m, dim A, dim B >= 1.
std::vector<std::pair<std::string, std::string>> DirectSumDecompositions(const QMatroid& m);

struct CatalogueReport {
  int n = 0;
  std::vector<QMatroid> classes;
  std::vector<std::string> matched;  // golden name per class, "" when unmatched
  bool all_matched() const;
  std::string Render() const;
};

CatalogueReport BuildCatalogueReport(int n);

// A q-matroid on F_2^n from a loop-space matroid in random coordinates,
// followed by two random union, intersection or dual steps.
QMatroid RandomQMatroid(int n, std::mt19937_64& rng);

}  // namespace qmat
