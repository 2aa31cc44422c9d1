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

#include "maxcurve/ffield.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxcurve/error.h"

namespace maxcurve {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonPrime: return "NonPrime";
    case ErrorKind::kReducibleModulus: return "ReducibleModulus";
    case ErrorKind::kZeroRadicand: return "ZeroRadicand";
    case ErrorKind::kGenusUnknown: return "GenusUnknown";
    case ErrorKind::kPointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::kDivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::kBadCharacteristic: return "BadCharacteristic";
    case ErrorKind::kUndefinedAtPoint: return "UndefinedAtPoint";
    case ErrorKind::kNotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorKind::kNotDivisible: return "NotDivisible";
    case ErrorKind::kInvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<uint32_t, uint32_t>> PrimePowerDecompose(uint64_t q) {
  if (q < 2) return std::nullopt;
  uint64_t p = 2;
  while (q % p != 0) ++p;
  uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<uint32_t>(p), m);
}

namespace poly {

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly Mul(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
    }
  }
  Trim(r);
  return r;
}

namespace {

uint32_t InvModP(uint32_t a, uint32_t p) {
  // Fermat inverse; p is prime.
  uint64_t result = 1, base = a % p;
  for (uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<uint32_t>(result);
}

}  // namespace

Poly Mod(Poly a, const Poly& m, uint32_t p) {
  Trim(a);
  const size_t dm = m.size() - 1;
  const uint32_t lead_inv = InvModP(m.back(), p);
  while (a.size() > dm) {
    const uint64_t factor = uint64_t{a.back()} * lead_inv % p;
    const size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      a[shift + i] =
          static_cast<uint32_t>((a[shift + i] + (p - factor) * m[i]) % p);
    }
    Trim(a);
  }
  return a;
}

Poly MulMod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  return Mod(Mul(a, b, p), m, p);
}

namespace {

// Monic polynomial of `degree` whose non-leading coefficients are the base-p
// digits of `index`.
Poly MonicFromIndex(uint64_t index, uint32_t degree, uint32_t p) {
  Poly f(degree + 1, 0);
  for (uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

uint64_t IntPow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool IsIrreducible(const Poly& f_in, uint32_t p) {
  Poly f = f_in;
  Trim(f);
  if (f.size() < 2) return false;
  const uint32_t deg = static_cast<uint32_t>(f.size() - 1);
  for (uint32_t k = 1; 2 * k <= deg; ++k) {
    const uint64_t count = IntPow(p, k);
    for (uint64_t idx = 0; idx < count; ++idx) {
      if (Mod(f, MonicFromIndex(idx, k, p), p).empty()) return false;
    }
  }
  return true;
}

Poly SmallestIrreducible(uint32_t degree, uint32_t p) {
  const uint64_t count = IntPow(p, degree);
  for (uint64_t idx = 0; idx < count; ++idx) {
    Poly f = MonicFromIndex(idx, degree, p);
    if (IsIrreducible(f, p)) return f;
  }
  throw Error(ErrorKind::kInvalidParams, "no irreducible polynomial found");
}

std::string ToString(const Poly& a, char var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i];
    os << var;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace poly

namespace {

poly::Poly CodeToPoly(uint32_t code, uint32_t p) {
  poly::Poly a;
  while (code > 0) {
    a.push_back(code % p);
    code /= p;
  }
  return a;
}

uint32_t PolyToCode(const poly::Poly& a, uint32_t p) {
  uint64_t code = 0;
  for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return static_cast<uint32_t>(code);
}

std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

poly::Poly PolyPowMod(poly::Poly base, uint64_t e, const poly::Poly& m,
                      uint32_t p) {
  poly::Poly result{1};
  while (e > 0) {
    if (e & 1) result = poly::MulMod(result, base, m, p);
    base = poly::MulMod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::Make(
    uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus) {
  if (!IsPrime(p)) {
    throw Error(ErrorKind::kNonPrime, std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(ErrorKind::kInvalidParams, "m must be positive");
  uint64_t order = 1;
  for (uint32_t i = 0; i < 2 * m; ++i) {
    order *= p;
    if (order > kMaxOrder) {
      throw Error(ErrorKind::kInvalidParams, "field order exceeds limit");
    }
  }
  std::vector<uint32_t> f;
  if (modulus) {
    f = *modulus;
    for (auto& c : f) c %= p;
    poly::Trim(f);
    if (f.size() != 2 * m + 1 || f.back() != 1) {
      throw Error(ErrorKind::kInvalidParams,
                  "modulus must be monic of degree " + std::to_string(2 * m));
    }
    if (!poly::IsIrreducible(f, p)) {
      throw Error(ErrorKind::kReducibleModulus,
                  poly::ToString(f) + " factors over F_" + std::to_string(p));
    }
  } else {
    f = poly::SmallestIrreducible(2 * m, p);
  }
  return std::shared_ptr<const FieldCtx>(new FieldCtx(p, m, std::move(f)));
}

FieldCtx::FieldCtx(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (uint32_t i = 0; i < m; ++i) q_ *= p;
  order_ = q_ * q_;
  const uint64_t group = order_ - 1;
  const auto factors = PrimeFactors(group);

  uint32_t primitive = 0;
  for (uint32_t cand = 2; cand < order_ && primitive == 0; ++cand) {
    const poly::Poly g = CodeToPoly(cand, p_);
    bool ok = true;
    for (uint64_t f : factors) {
      if (PolyPowMod(g, group / f, modulus_, p_) == poly::Poly{1}) {
        ok = false;
        break;
      }
    }
    if (ok) primitive = cand;
  }

  exp_.assign(group, 0);
  log_.assign(order_, 0);
  const poly::Poly g = CodeToPoly(primitive, p_);
  poly::Poly cur{1};
  for (uint64_t k = 0; k < group; ++k) {
    const uint32_t code = PolyToCode(cur, p_);
    exp_[k] = code;
    log_[code] = static_cast<uint32_t>(k);
    cur = poly::MulMod(cur, g, modulus_, p_);
  }
}

std::string FieldCtx::ModulusString() const {
  return poly::ToString(modulus_, 'x');
}

uint32_t FieldCtx::AddCodes(uint32_t a, uint32_t b) const {
  uint32_t result = 0, place = 1;
  while (a != 0 || b != 0) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    result += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

uint32_t FieldCtx::NegCode(uint32_t a) const {
  uint32_t result = 0, place = 1;
  while (a != 0) {
    const uint32_t c = a % p_;
    result += (c == 0 ? 0 : p_ - c) * place;
    a /= p_;
    place *= p_;
  }
  return result;
}

Element FieldCtx::FromInt(int64_t value) const {
  int64_t r = value % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return Element(this, static_cast<uint32_t>(r));
}

Element FieldCtx::FromCode(uint32_t code) const {
  if (code >= order_) {
    throw Error(ErrorKind::kInvalidParams, "element code out of range");
  }
  return Element(this, code);
}

Element FieldCtx::FromCoeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > degree()) {
    throw Error(ErrorKind::kInvalidParams, "too many coefficients");
  }
  uint64_t code = 0;
  for (size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return Element(this, static_cast<uint32_t>(code));
}

Element FieldCtx::Generator() const {
  return Element(this, static_cast<uint32_t>(p_ % order_));
}

std::vector<Element> FieldCtx::Elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (uint64_t c = 0; c < order_; ++c) {
    out.push_back(Element(this, static_cast<uint32_t>(c)));
  }
  return out;
}

std::vector<uint32_t> Element::Coeffs() const {
  std::vector<uint32_t> out(ctx_->degree(), 0);
  uint32_t c = code_;
  for (auto& digit : out) {
    digit = c % ctx_->p();
    c /= ctx_->p();
  }
  return out;
}

Element Element::operator+(const Element& rhs) const {
  return Element(ctx_, ctx_->AddCodes(code_, rhs.code_));
}

Element Element::operator-(const Element& rhs) const {
  return Element(ctx_, ctx_->AddCodes(code_, ctx_->NegCode(rhs.code_)));
}

Element Element::operator-() const { return Element(ctx_, ctx_->NegCode(code_)); }

Element Element::operator*(const Element& rhs) const {
  if (code_ == 0 || rhs.code_ == 0) return Element(ctx_, 0);
  return ctx_->Exp(uint64_t{ctx_->Log(*this)} + ctx_->Log(rhs));
}

Element Element::operator/(const Element& rhs) const {
  return *this * rhs.Inverse();
}

Element Element::Inverse() const {
  if (code_ == 0) throw Error(ErrorKind::kInvalidParams, "inverse of zero");
  const uint64_t group = ctx_->order() - 1;
  return ctx_->Exp(group - ctx_->Log(*this));
}

Element Element::Pow(uint64_t e) const {
  if (code_ == 0) return Element(ctx_, e == 0 ? 1 : 0);
  const uint64_t group = ctx_->order() - 1;
  const uint64_t k = (uint64_t{ctx_->Log(*this)} * (e % group)) % group;
  return ctx_->Exp(k);
}

Element Element::PowSigned(int64_t e) const {
  if (e >= 0) return Pow(static_cast<uint64_t>(e));
  return Inverse().Pow(static_cast<uint64_t>(-e));
}

std::string Element::ToString() const {
  poly::Poly a = Coeffs();
  poly::Trim(a);
  return poly::ToString(a, 'a');
}

bool InSubfield(const Element& x) { return x.Pow(x.ctx().q()) == x; }

std::vector<Element> RootsOfUnity(const FieldCtx& ctx, uint64_t d) {
  return DthRoots(ctx.One(), d);
}

std::vector<Element> DthRoots(const Element& c, uint64_t d) {
  if (c.IsZero()) throw Error(ErrorKind::kZeroRadicand, "radicand is zero");
  std::vector<Element> out;
  for (const Element& x : c.ctx().Elements()) {
    if (!x.IsZero() && x.Pow(d) == c) out.push_back(x);
  }
  return out;
}

DthPowerTable::DthPowerTable(const FieldCtx& ctx, uint64_t d)
    : ctx_(&ctx), d_(d) {
  if (d == 0) throw Error(ErrorKind::kInvalidParams, "d must be positive");
  const uint64_t n = ctx.order();
  std::vector<uint32_t> power(n, 0);
  offsets_.assign(n + 1, 0);
  for (uint64_t c = 1; c < n; ++c) {
    power[c] = ctx.FromCode(static_cast<uint32_t>(c)).Pow(d).code();
    ++offsets_[power[c] + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  roots_.assign(n - 1, 0);
  std::vector<uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (uint64_t c = 1; c < n; ++c) {
    roots_[fill[power[c]]++] = static_cast<uint32_t>(c);
  }
}

std::vector<Element> DthPowerTable::Roots(const Element& c) const {
  if (c.IsZero()) throw Error(ErrorKind::kZeroRadicand, "radicand is zero");
  std::vector<Element> out;
  for (uint32_t i = offsets_[c.code()]; i < offsets_[c.code() + 1]; ++i) {
    out.push_back(ctx_->FromCode(roots_[i]));
  }
  return out;
}

bool DthPowerTable::IsPower(const Element& c) const {
  if (c.IsZero()) return true;
  return offsets_[c.code()] != offsets_[c.code() + 1];
}

}  // namespace maxcurve
