#include "zassenhaus/field.hpp"

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "zassenhaus/error.hpp"

namespace zassenhaus {

namespace {

constexpr i64 kMaxPrime = i64(1) << 30;
constexpr i64 kFullTableMaxPrime = 2048;

// Bare arithmetic so primitivity can be tested before a QuadField exists.
FieldElement raw_mul(i64 p, i64 c1, i64 c0, FieldElement a, FieldElement b) {
  i64 vv = a.v * b.v % p;
  i64 u = mod(a.u * b.u - vv * c0, p);
  i64 v = mod(a.u * b.v + a.v * b.u + vv * c1, p);
  return {u, v};
}

FieldElement raw_pow(i64 p, i64 c1, i64 c0, FieldElement a, i64 e) {
  FieldElement r{1, 0};
  while (e > 0) {
    if (e & 1) r = raw_mul(p, c1, c0, r, a);
    a = raw_mul(p, c1, c0, a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

struct QuadField::Tables {
  // full tables (small p): dlog by element index, powers of alpha
  std::vector<std::int32_t> dlog;
  std::vector<std::int32_t> powers;
  // baby-step giant-step otherwise
  i64 step = 0;
  std::unordered_map<i64, i64> baby;
  FieldElement giant{};
};

FieldElement QuadField::add(FieldElement a, FieldElement b) const {
  return {(a.u + b.u) % p_, (a.v + b.v) % p_};
}

FieldElement QuadField::sub(FieldElement a, FieldElement b) const {
  return {mod(a.u - b.u, p_), mod(a.v - b.v, p_)};
}

FieldElement QuadField::neg(FieldElement a) const { return {mod(-a.u, p_), mod(-a.v, p_)}; }

FieldElement QuadField::mul(FieldElement a, FieldElement b) const { return raw_mul(p_, c1_, c0_, a, b); }

FieldElement QuadField::scale(i64 k, FieldElement a) const {
  k = mod(k, p_);
  return {a.u * k % p_, a.v * k % p_};
}

FieldElement QuadField::frobenius(FieldElement a) const {
  // conjugate root is c1 - alpha
  return {mod(a.u + a.v * c1_, p_), mod(-a.v, p_)};
}

i64 QuadField::norm(FieldElement a) const { return mul(a, frobenius(a)).u; }

i64 QuadField::trace(FieldElement a) const { return mod(2 * a.u + a.v * c1_, p_); }

FieldElement QuadField::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p_) + "^2");
  return scale(inv_mod(norm(a), p_), frobenius(a));
}

FieldElement QuadField::pow(FieldElement a, i64 e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  return raw_pow(p_, c1_, c0_, a, e);
}

i64 QuadField::dlog(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorCode::DlogOfZero, "dlog of zero in F_" + std::to_string(p_) + "^2");
  const Tables& t = *tables_;
  if (!t.dlog.empty()) return t.dlog[static_cast<std::size_t>(index(x))];
  FieldElement y = x;
  for (i64 i = 0; i <= t.step; ++i) {
    if (auto it = t.baby.find(index(y)); it != t.baby.end()) return mod(i * t.step + it->second, unit_order());
    y = mul(y, t.giant);
  }
  throw Error(ErrorCode::NotPrimitive, "dlog failed; alpha is not a generator");
}

FieldElement QuadField::alpha_pow(i64 k) const {
  k = mod(k, unit_order());
  if (!tables_->powers.empty()) return from_index(tables_->powers[static_cast<std::size_t>(k)]);
  return raw_pow(p_, c1_, c0_, alpha(), k);
}

bool is_irreducible(i64 p, i64 c1, i64 c0) {
  for (i64 x = 0; x < p; ++x) {
    if (mod(mulmod(x, x, p) - mulmod(c1, x, p) + c0, p) == 0) return false;
  }
  return true;
}

i64 alpha_order(i64 p, i64 c1, i64 c0) {
  i64 ord = p * p - 1;
  for (auto [pr, e] : factorize(ord)) {
    for (int i = 0; i < e; ++i) {
      if (raw_pow(p, c1, c0, {0, 1}, ord / pr) == FieldElement{1, 0})
        ord /= pr;
      else
        break;
    }
  }
  return ord;
}

QuadField make_field(i64 p, i64 c1, i64 c0) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) throw Error(ErrorCode::Unsupported, "prime too large for exact 64-bit arithmetic");
  if (c1 < 0 || c1 >= p || c0 < 0 || c0 >= p)
    throw Error(ErrorCode::Unsupported, "polynomial coefficients must be reduced mod " + std::to_string(p));
  if (!is_irreducible(p, c1, c0))
    throw Error(ErrorCode::ReduciblePolynomial,
                "X^2 - " + std::to_string(c1) + "X + " + std::to_string(c0) + " has a root mod " + std::to_string(p));
  const i64 ord = p * p - 1;
  if (i64 o = alpha_order(p, c1, c0); o != ord)
    throw Error(ErrorCode::NotPrimitive, "alpha has order " + std::to_string(o) + ", not " + std::to_string(ord));

  QuadField f;
  f.p_ = p;
  f.c1_ = c1;
  f.c0_ = c0;
  auto t = std::make_shared<QuadField::Tables>();
  if (p <= kFullTableMaxPrime) {
    t->dlog.assign(static_cast<std::size_t>(p * p), -1);
    t->powers.resize(static_cast<std::size_t>(ord));
    FieldElement x{1, 0};
    for (i64 k = 0; k < ord; ++k) {
      i64 ix = x.u * p + x.v;
      t->dlog[ix] = static_cast<std::int32_t>(k);
      t->powers[k] = static_cast<std::int32_t>(ix);
      x = raw_mul(p, c1, c0, x, {0, 1});
    }
  } else {
    t->step = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(ord))));
    FieldElement x{1, 0};
    for (i64 j = 0; j < t->step; ++j) {
      t->baby.emplace(x.u * p + x.v, j);
      x = raw_mul(p, c1, c0, x, {0, 1});
    }
    f.tables_ = t;
    t->giant = f.inv(x);
  }
  f.tables_ = std::move(t);
  return f;
}

std::pair<i64, i64> find_primitive_polynomial(i64 p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const i64 ord = p * p - 1;
  for (i64 c1 = 0; c1 < p; ++c1) {
    for (i64 c0 = 0; c0 < p; ++c0) {
      if (is_irreducible(p, c1, c0) && alpha_order(p, c1, c0) == ord) return {c1, c0};
    }
  }
  throw Error(ErrorCode::NotPrimitive, "no primitive quadratic found mod " + std::to_string(p));
}

}  // namespace zassenhaus
