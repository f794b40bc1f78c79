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

#include "qmat/gf.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <unordered_map>

#include "qmat/error.hpp"

namespace qmat {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kNonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::kReducibleModulus: return "ReducibleModulus";
    case Errc::kSizeCapExceeded: return "SizeCapExceeded";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kMixedFields: return "MixedFields";
    case Errc::kLatticeTooLarge: return "LatticeTooLarge";
    case Errc::kColumnCountMismatch: return "ColumnCountMismatch";
    case Errc::kMixedLattices: return "MixedLattices";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kSingularMatrix: return "SingularMatrix";
    case Errc::kNotNested: return "NotNested";
    case Errc::kTableSizeMismatch: return "TableSizeMismatch";
    case Errc::kAxiomsFailed: return "AxiomsFailed";
    case Errc::kSubspaceNotInLattice: return "SubspaceNotInLattice";
    case Errc::kSearchCapExceeded: return "SearchCapExceeded";
    case Errc::kFlagsMissing: return "FlagsMissing";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kElementInBaseField: return "ElementInBaseField";
    case Errc::kWrongAmbient: return "WrongAmbient";
    case Errc::kTooLargeForDiagram: return "TooLargeForDiagram";
    case Errc::kParseError: return "ParseError";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

Poly ToDigits(Elem a, std::uint32_t p, int m) {
  Poly d(m, 0);
  for (int i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem FromDigits(const Poly& d, std::uint32_t p) {
  Elem v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// (a * b) mod modulus over GF(p); a, b are digit vectors of length m.
Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& modulus,
                std::uint32_t p) {
  const int m = static_cast<int>(modulus.size()) - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (int i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  // Modulus is monic: x^m = -(c_0 + ... + c_{m-1} x^{m-1}).
  for (int deg = 2 * m - 2; deg >= m; --deg) {
    const std::uint64_t c = prod[deg] % p;
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < m; ++i) {
      const std::uint64_t sub = c * modulus[i] % p;
      prod[deg - m + i] = (prod[deg - m + i] + p - sub) % p;
    }
  }
  Poly out(m);
  for (int i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p);
  return out;
}

Poly PolyPowMod(Poly base, std::uint64_t e, const Poly& modulus,
                std::uint32_t p) {
  const int m = static_cast<int>(modulus.size()) - 1;
  Poly result(m, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = PolyMulMod(result, base, modulus, p);
    base = PolyMulMod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool IsOne(const Poly& a) {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](auto c) { return c == 0; });
}

bool IsPrimitiveDigits(const Poly& g, const Poly& modulus, std::uint32_t p,
                       std::uint64_t group_order) {
  if (std::all_of(g.begin(), g.end(), [](auto c) { return c == 0; }))
    return false;
  if (!IsOne(PolyPowMod(g, group_order, modulus, p))) return false;
  for (std::uint64_t r : PrimeFactors(group_order)) {
    if (IsOne(PolyPowMod(g, group_order / r, modulus, p))) return false;
  }
  return true;
}

// Remainder of `num` modulo monic `den` over GF(p).
Poly PolyRem(Poly num, const Poly& den, std::uint32_t p) {
  const int dd = static_cast<int>(den.size()) - 1;
  for (int deg = static_cast<int>(num.size()) - 1; deg >= dd; --deg) {
    const std::uint64_t c = num[deg] % p;
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i) {
      const std::uint64_t sub = c * den[i] % p;
      num[deg - dd + i] = static_cast<std::uint32_t>((num[deg - dd + i] + p - sub) % p);
    }
  }
  num.resize(std::max(dd, 0));
  return num;
}

char DigitChar(std::uint32_t d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

int DigitValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, int>> PrimePowerDecompose(
    std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1);
  int m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

bool IsIrreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly f(d + 1);
      std::uint64_t v = low;
      for (int i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[d] = 1;
      const Poly r = PolyRem(poly, f, p);
      if (std::all_of(r.begin(), r.end(), [](auto c) { return c == 0; }))
        return false;
    }
  }
  return true;
}

FieldPtr Field::Make(std::uint32_t p, int m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!IsPrime(p))
    throw Error(Errc::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m < 1 || m > kMaxExtensionDegree)
    throw Error(Errc::kSizeCapExceeded, "extension degree " + std::to_string(m));
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw Error(Errc::kSizeCapExceeded,
                  "field order exceeds " + std::to_string(kMaxFieldSize));
  }

  // Identical specs share one table set.
  static std::mutex mu;
  static std::unordered_map<std::string, FieldPtr> cache;

  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (static_cast<int>(mod.size()) != m + 1 || mod.back() != 1)
      throw Error(Errc::kReducibleModulus, "modulus must be monic of degree m");
    for (auto c : mod)
      if (c >= p) throw Error(Errc::kReducibleModulus, "coefficient out of range");
    if (!IsIrreducible(p, mod))
      throw Error(Errc::kReducibleModulus, "modulus is reducible over GF(p)");
  } else if (m == 1) {
    mod = {0, 1};
  } else {
    const std::uint64_t group = q - 1;
    for (std::uint64_t low = 0; low < q; ++low) {
      Poly cand = ToDigits(static_cast<Elem>(low), p, m);
      cand.push_back(1);
      if (cand[0] == 0 || !IsIrreducible(p, cand)) continue;
      Poly x(m, 0);
      x[1] = 1;
      if (IsPrimitiveDigits(x, cand, p, group)) {
        mod = cand;
        break;
      }
    }
  }

  std::string key = std::to_string(p) + ":";
  for (auto c : mod) key += std::to_string(c) + ",";
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  FieldPtr f(new Field(p, m, mod));
  cache.emplace(key, f);
  return f;
}

FieldPtr Field::FromOrder(std::uint32_t q) {
  auto pm = PrimePowerDecompose(q);
  if (!pm)
    throw Error(Errc::kNonPrimeCharacteristic,
                std::to_string(q) + " is not a prime power");
  return Make(pm->first, pm->second);
}

FieldPtr Field::FromHeader(std::string_view text) {
  auto parse_u = [&](std::string_view s) -> std::uint32_t {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::kParseError, "bad field literal '" + std::string(text) + "'");
    return v;
  };
  if (text.starts_with("GF(") && text.ends_with(")")) {
    std::string_view inner = text.substr(3, text.size() - 4);
    const auto caret = inner.find('^');
    if (caret == std::string_view::npos) return FromOrder(parse_u(inner));
    return Make(parse_u(inner.substr(0, caret)),
                static_cast<int>(parse_u(inner.substr(caret + 1))));
  }
  return FromOrder(parse_u(text));
}

Field::Field(std::uint32_t p, int m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p_;
  const std::uint64_t group = q_ - 1;
  if (q_ == 2) {
    primitive_ = 1;
  } else {
    for (Elem g = 1; g < q_; ++g) {
      if (IsPrimitiveDigits(ToDigits(g, p_, m_), modulus_, p_, group)) {
        primitive_ = g;
        break;
      }
    }
  }
  exp_.assign(2 * group, 0);
  log_.assign(q_, 0);
  Poly cur(m_, 0);
  cur[0] = 1;
  const Poly g = ToDigits(primitive_, p_, m_);
  for (std::uint64_t i = 0; i < group; ++i) {
    const Elem v = FromDigits(cur, p_);
    exp_[i] = v;
    exp_[i + group] = v;
    log_[v] = static_cast<std::uint32_t>(i);
    cur = PolyMulMod(cur, g, modulus_, p_);
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return (p_ - a) % p_;
  Elem out = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw Error(Errc::kDivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "zero has no multiplicative order");
  std::uint64_t k = 1;
  for (Elem x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

Elem Field::mul_reference(Elem a, Elem b) const {
  return FromDigits(PolyMulMod(ToDigits(a, p_, m_), ToDigits(b, p_, m_), modulus_, p_), p_);
}

std::string Field::format(Elem a) const {
  if (p_ > 36) throw Error(Errc::kOutOfRange, "text form needs p <= 36");
  std::string s(m_, '0');
  for (int i = m_ - 1; i >= 0; --i) {
    s[i] = DigitChar(a % p_);
    a /= p_;
  }
  return s;
}

Elem Field::parse(std::string_view digits) const {
  if (static_cast<int>(digits.size()) != m_)
    throw Error(Errc::kParseError, "element '" + std::string(digits) + "' needs " +
                                       std::to_string(m_) + " digits");
  Elem v = 0;
  for (char c : digits) {
    const int d = DigitValue(c);
    if (d < 0 || static_cast<std::uint32_t>(d) >= p_)
      throw Error(Errc::kParseError, "bad digit in '" + std::string(digits) + "'");
    v = v * p_ + static_cast<Elem>(d);
  }
  return v;
}

std::string Field::header() const {
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

bool SameField(const Field& a, const Field& b) { return a == b; }

FieldElem::FieldElem(FieldPtr field, Elem value)
    : field_(std::move(field)), value_(value) {
  if (value_ >= field_->size())
    throw Error(Errc::kOutOfRange, "element outside the field");
}

const Field& FieldElem::checked(const FieldElem& o) const {
  if (!(*field_ == *o.field_))
    throw Error(Errc::kMixedFields, field_->header() + " vs " + o.field_->header());
  return *field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  return {field_, checked(o).add(value_, o.value_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  return {field_, checked(o).sub(value_, o.value_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  return {field_, checked(o).mul(value_, o.value_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  return {field_, checked(o).div(value_, o.value_)};
}
FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inverse() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const {
  return {field_, field_->pow(value_, e)};
}
bool FieldElem::operator==(const FieldElem& o) const {
  return *field_ == *o.field_ && value_ == o.value_;
}

}  // namespace qmat
