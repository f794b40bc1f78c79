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

// Exact arithmetic in GF(p^m).
//
// An element is stored as the integer sum c_i * p^i of its polynomial
// coefficients over GF(p) (c_0 is the constant term). That integer is also the
// canonical element order used for primitive-element selection and for every
// RREF tie-break in the lattice layer. Text form is the base-p digit string of
// length m, most significant coefficient first: in GF(2^3), "011" is x + 1.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmat {

using Elem = std::uint32_t;

inline constexpr int kMaxExtensionDegree = 16;
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // `modulus` holds the coefficients of a monic degree-m polynomial, constant
  // term first (length m + 1). When omitted, the least primitive polynomial
  // in the canonical order is chosen.
  static FieldPtr Make(std::uint32_t p, int m,
                       std::optional<std::vector<std::uint32_t>> modulus = {});

  // Parses "GF(p^m)", "GF(p)" or a bare prime power such as "8".
  static FieldPtr FromHeader(std::string_view text);
  // GF(q) for a prime power q with the default modulus.
  static FieldPtr FromOrder(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  int m() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime() const { return m_ == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;

  // Schoolbook product modulo the modulus, independent of the log tables.
  Elem mul_reference(Elem a, Elem b) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;
  // Least element (canonical order) of multiplicative order q - 1.
  Elem primitive_element() const { return primitive_; }
  // True for the elements of the prime subfield GF(p), i.e. constants.
  bool in_prime_field(Elem a) const { return a < p_; }

  std::string format(Elem a) const;
  Elem parse(std::string_view digits) const;
  std::string header() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, int m, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  int m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 1;
  // exp_[i] = g^i for i in [0, 2(q-1)), log_[a] for a != 0.
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool SameField(const Field& a, const Field& b);

bool IsPrime(std::uint64_t n);
// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, int>> PrimePowerDecompose(
    std::uint64_t q);
// Exhaustive check that a monic polynomial over GF(p) has no factor of degree
// 1 .. deg/2.
bool IsIrreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Value-semantic element bound to its field, for callers that want checked
// mixed-field arithmetic. Matrix code works on raw `Elem` for speed.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  bool is_zero() const { return value_ == 0; }
  bool operator==(const FieldElem& o) const;
  std::string str() const { return field_->format(value_); }

 private:
  const Field& checked(const FieldElem& o) const;

  FieldPtr field_;
  Elem value_;
};

}  // namespace qmat
