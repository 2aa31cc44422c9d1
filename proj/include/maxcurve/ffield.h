/* Copyright 2026 The maxcurve Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MAXCURVE_FFIELD_H_
#define MAXCURVE_FFIELD_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxcurve {

class FieldCtx;

// An element of F_{p^{2m}}. The value is the base-p code of its coefficient
// vector in the power basis of the modulus: code = sum c_i p^i, c_0 being the
// constant term. Elements hold a non-owning pointer to their context, so the
// context must outlive them.
class Element {
 public:
  Element() = default;

  const FieldCtx& ctx() const { return *ctx_; }
  uint32_t code() const { return code_; }

  // Coefficients c_0 .. c_{2m-1}, each reduced mod p.
  std::vector<uint32_t> Coeffs() const;

  bool IsZero() const { return code_ == 0; }
  bool IsOne() const { return code_ == 1; }

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;
  Element operator/(const Element& rhs) const;
  Element& operator+=(const Element& rhs) { return *this = *this + rhs; }
  Element& operator-=(const Element& rhs) { return *this = *this - rhs; }
  Element& operator*=(const Element& rhs) { return *this = *this * rhs; }

  Element Inverse() const;
  Element Pow(uint64_t e) const;
  // Signed exponent; negative powers require a nonzero element.
  Element PowSigned(int64_t e) const;

  std::string ToString() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.code_ <=> b.code_;
  }

 private:
  friend class FieldCtx;
  Element(const FieldCtx* ctx, uint32_t code) : ctx_(ctx), code_(code) {}

  const FieldCtx* ctx_ = nullptr;
  uint32_t code_ = 0;
};

// The field F_{q^2} = F_p[X]/(modulus) with q = p^m. Immutable after
// construction; share it through the returned shared_ptr.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // Largest supported field order; multiplication tables are dense.
  static constexpr uint64_t kMaxOrder = uint64_t{1} << 22;

  // Builds F_{p^{2m}}. `modulus` lists coefficients low to high and must be
  // monic of degree 2m; when omitted the lexicographically smallest monic
  // irreducible of that degree is used.
  static std::shared_ptr<const FieldCtx> Make(
      uint32_t p, uint32_t m,
      std::optional<std::vector<uint32_t>> modulus = std::nullopt);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t degree() const { return 2 * m_; }
  uint64_t q() const { return q_; }
  // q^2, the number of elements.
  uint64_t order() const { return order_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  std::string ModulusString() const;

  Element Zero() const { return Element(this, 0); }
  Element One() const { return Element(this, 1); }
  Element FromInt(int64_t value) const;
  Element FromCode(uint32_t code) const;
  Element FromCoeffs(std::span<const uint32_t> coeffs) const;
  // The class of X in F_p[X]/(modulus).
  Element Generator() const;
  // A fixed primitive element (generator of the multiplicative group).
  Element Primitive() const { return Element(this, exp_[1]); }

  // Every element in scan order (ascending code).
  std::vector<Element> Elements() const;

  // Discrete log base Primitive(); x must be nonzero.
  uint32_t Log(const Element& x) const { return log_[x.code()]; }
  Element Exp(uint64_t k) const {
    return Element(this, exp_[k % (order_ - 1)]);
  }

  uint32_t AddCodes(uint32_t a, uint32_t b) const;
  uint32_t NegCode(uint32_t a) const;

 private:
  FieldCtx(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

  uint32_t p_;
  uint32_t m_;
  uint64_t q_;
  uint64_t order_;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

// True iff x lies in F_q, i.e. x^q = x.
bool InSubfield(const Element& x);

// All x with x^d = 1, ascending code.
std::vector<Element> RootsOfUnity(const FieldCtx& ctx, uint64_t d);

// All x in F_{q^2} with x^d = c, ascending code. Throws ZeroRadicand on c = 0.
std::vector<Element> DthRoots(const Element& c, uint64_t d);

// Precomputed table of x^d for every element of a field, bucketed by value so
// that repeated root extraction is a lookup.
class DthPowerTable {
 public:
  DthPowerTable(const FieldCtx& ctx, uint64_t d);

  uint64_t d() const { return d_; }
  // All x with x^d = c, ascending code. Throws ZeroRadicand on c = 0.
  std::vector<Element> Roots(const Element& c) const;
  bool IsPower(const Element& c) const;

 private:
  const FieldCtx* ctx_;
  uint64_t d_;
  std::vector<uint32_t> offsets_;
  std::vector<uint32_t> roots_;
};

bool IsPrime(uint64_t n);
// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<uint32_t, uint32_t>> PrimePowerDecompose(uint64_t q);

namespace poly {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<uint32_t>;

void Trim(Poly& a);
Poly Mul(const Poly& a, const Poly& b, uint32_t p);
Poly Mod(Poly a, const Poly& m, uint32_t p);
Poly MulMod(const Poly& a, const Poly& b, const Poly& m, uint32_t p);
// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
bool IsIrreducible(const Poly& f, uint32_t p);
// Smallest monic irreducible of the given degree in the scan order of its
// non-leading coefficients.
Poly SmallestIrreducible(uint32_t degree, uint32_t p);
std::string ToString(const Poly& a, char var = 'x');

}  // namespace poly

}  // namespace maxcurve

#endif  // MAXCURVE_FFIELD_H_
