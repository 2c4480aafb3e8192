#pragma once

#include <compare>
#include <memory>
#include <utility>

#include "zassenhaus/arith.hpp"

namespace zassenhaus {

// u + v*alpha with 0 <= u, v < p
struct FieldElement {
  i64 u = 0;
  i64 v = 0;

  bool is_zero() const { return u == 0 && v == 0; }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// F_{p^2} = F_p[X]/(X^2 - c1*X + c0), so alpha^2 = c1*alpha - c0.
class QuadField {
 public:
  i64 p() const { return p_; }
  i64 c1() const { return c1_; }
  i64 c0() const { return c0_; }
  i64 unit_order() const { return p_ * p_ - 1; }

  FieldElement zero() const { return {0, 0}; }
  FieldElement one() const { return {1, 0}; }
  FieldElement alpha() const { return {0, 1}; }
  FieldElement scalar(i64 a) const { return {mod(a, p_), 0}; }
  FieldElement elem(i64 u, i64 v) const { return {mod(u, p_), mod(v, p_)}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement scale(i64 k, FieldElement a) const;
  FieldElement inv(FieldElement a) const;  // DivisionByZero
  FieldElement pow(FieldElement a, i64 e) const;  // negative e allowed for a != 0
  FieldElement frobenius(FieldElement a) const;  // a^p

  i64 norm(FieldElement a) const;   // a^(p+1), in F_p
  i64 trace(FieldElement a) const;  // a + a^p, in F_p

  // alpha^dlog(x) = x, dlog in [0, p^2-2]; DlogOfZero for x = 0
  i64 dlog(FieldElement x) const;
  FieldElement alpha_pow(i64 k) const;

  i64 index(FieldElement a) const { return a.u * p_ + a.v; }
  FieldElement from_index(i64 i) const { return {i / p_, i % p_}; }
  bool same_field(const QuadField& o) const { return p_ == o.p_ && c1_ == o.c1_ && c0_ == o.c0_; }

 private:
  friend QuadField make_field(i64 p, i64 c1, i64 c0);
  struct Tables;

  i64 p_ = 0, c1_ = 0, c0_ = 0;
  std::shared_ptr<const Tables> tables_;
};

// Throws NotPrime, ReduciblePolynomial, NotPrimitive.
QuadField make_field(i64 p, i64 c1, i64 c0);
inline QuadField make_field(i64 p, std::pair<i64, i64> poly) { return make_field(p, poly.first, poly.second); }

bool is_irreducible(i64 p, i64 c1, i64 c0);
// Order of alpha = X mod (X^2 - c1 X + c0), computed from the factorization of p^2-1.
i64 alpha_order(i64 p, i64 c1, i64 c0);
// Lexicographically least (c1, c0) with irreducible minimal polynomial and primitive root.
std::pair<i64, i64> find_primitive_polynomial(i64 p);

}  // namespace zassenhaus
