#pragma once

#include <cstdint>
#include <utility>

#include "zassenhaus/arith.hpp"
#include "zassenhaus/field.hpp"

namespace zassenhaus {

using Poly = std::pair<i64, i64>;  // (c1, c0) for X^2 - c1 X + c0

// G = N x| A with N = F_{p^2} + F_{q^2} and A = <a, b, c | c^d = ab>, abelian.
struct GroupParams {
  i64 p = 0, q = 0, d = 0;
  QuadField fp, fq;
  std::uint64_t id = 0;  // fingerprint of (p, q, d, polys)

  i64 order_a() const { return (p * p - 1) / d; }  // |<a>|
  i64 order_b() const { return (q * q - 1) / d; }
  i64 order_A() const { return order_a() * order_b() * d; }
  i64 order_N() const { return p * p * q * q; }
  Factorization order() const;
};

// |G| for any d dividing both p^2-1 and q^2-1 (no primitivity or divisibility-of-p-1 requirement).
Factorization group_order(i64 p, i64 q, i64 d);

// BadD unless d > 1 odd with d | p-1 and d | q-1; EqualPrimes; field errors propagate.
GroupParams make_group(i64 p, i64 q, i64 d, Poly poly_p, Poly poly_q);

// a^r b^s c^t, 0 <= r < order_a, 0 <= s < order_b, 0 <= t < d
struct AElem {
  i64 r = 0, s = 0, t = 0;
  friend bool operator==(const AElem&, const AElem&) = default;
};

struct NElem {
  FieldElement x;  // F_{p^2}
  FieldElement y;  // F_{q^2}
  friend bool operator==(const NElem&, const NElem&) = default;
  friend auto operator<=>(const NElem&, const NElem&) = default;
};

// g = h * n, A-part first
struct GroupElement {
  AElem h;
  NElem n;
  std::uint64_t group = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

AElem a_normalize(const GroupParams& G, i64 r, i64 s, i64 t);
AElem a_mul(const GroupParams& G, AElem x, AElem y);
AElem a_inv(const GroupParams& G, AElem x);
AElem a_pow(const GroupParams& G, AElem x, i64 k);
// exponents of alpha and beta by which x acts
std::pair<i64, i64> a_exponents(const GroupParams& G, AElem x);
i64 a_order(const GroupParams& G, AElem x);

NElem n_add(const GroupParams& G, NElem a, NElem b);
NElem n_neg(const GroupParams& G, NElem a);
NElem act(const GroupParams& G, AElem x, NElem n);  // n^x

GroupElement identity(const GroupParams& G);
GroupElement element(const GroupParams& G, AElem h, NElem n = {});
GroupElement element(const GroupParams& G, NElem n);
GroupElement gen_a(const GroupParams& G);
GroupElement gen_b(const GroupParams& G);
GroupElement gen_c(const GroupParams& G);

GroupElement mul(const GroupParams& G, const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupParams& G, const GroupElement& g);
GroupElement conj(const GroupParams& G, const GroupElement& g, const GroupElement& x);  // x^-1 g x
i64 elem_order(const GroupParams& G, const GroupElement& g);

struct ClassIndex {
  enum class Kind { Identity, OrderP, OrderQ, OrderPQ };
  Kind kind = Kind::Identity;
  i64 i = 0;  // class of (alpha^i, 1) when kind == OrderPQ
  friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
};

i64 class_index(const GroupParams& G, NElem n);  // NotOrderPQ
ClassIndex classify(const GroupParams& G, NElem n);
ClassIndex classify(const GroupParams& G, const GroupElement& g);  // Unsupported off N
u128 centralizer_order(const GroupParams& G, NElem n);
u128 centralizer_order(const GroupParams& G, const GroupElement& g);  // Unsupported off N

}  // namespace zassenhaus
