#include "zassenhaus/group.hpp"

#include <numeric>
#include <string>

#include "zassenhaus/error.hpp"

namespace zassenhaus {

namespace {

std::uint64_t fingerprint(i64 p, i64 q, i64 d, Poly pp, Poly pq) {
  std::uint64_t h = 1469598103934665603ull;
  for (i64 v : {p, q, d, pp.first, pp.second, pq.first, pq.second}) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

void same_group(const GroupParams& G, const GroupElement& g) {
  if (g.group != G.id) throw Error(ErrorCode::MixedParams, "element belongs to a different group");
}

}  // namespace

Factorization group_order(i64 p, i64 q, i64 d) {
  if (d < 1 || (p * p - 1) % d != 0 || (q * q - 1) % d != 0)
    throw Error(ErrorCode::BadD, "d must divide p^2-1 and q^2-1");
  Factorization f = factorize(p) * factorize(p) * factorize(q) * factorize(q) * factorize(p * p - 1) *
                    factorize(q * q - 1);
  return divide(f, factorize(d));
}

Factorization GroupParams::order() const { return group_order(p, q, d); }

GroupParams make_group(i64 p, i64 q, i64 d, Poly poly_p, Poly poly_q) {
  if (p == q) throw Error(ErrorCode::EqualPrimes, "p and q must differ");
  if (d <= 1 || d % 2 == 0) throw Error(ErrorCode::BadD, "d must be odd and > 1, got " + std::to_string(d));
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  if ((p - 1) % d != 0) throw Error(ErrorCode::BadD, std::to_string(d) + " does not divide p-1 = " + std::to_string(p - 1));
  if ((q - 1) % d != 0) throw Error(ErrorCode::BadD, std::to_string(d) + " does not divide q-1 = " + std::to_string(q - 1));
  GroupParams G;
  G.p = p;
  G.q = q;
  G.d = d;
  G.fp = make_field(p, poly_p.first, poly_p.second);
  G.fq = make_field(q, poly_q.first, poly_q.second);
  G.id = fingerprint(p, q, d, poly_p, poly_q);
  return G;
}

AElem a_normalize(const GroupParams& G, i64 r, i64 s, i64 t) {
  // c^d = ab
  i64 carry = t >= 0 ? t / G.d : -((-t + G.d - 1) / G.d);
  t -= carry * G.d;
  return {mod(r + carry, G.order_a()), mod(s + carry, G.order_b()), t};
}

AElem a_mul(const GroupParams& G, AElem x, AElem y) { return a_normalize(G, x.r + y.r, x.s + y.s, x.t + y.t); }

AElem a_inv(const GroupParams& G, AElem x) { return a_normalize(G, -x.r, -x.s, -x.t); }

AElem a_pow(const GroupParams& G, AElem x, i64 k) {
  if (k < 0) {
    x = a_inv(G, x);
    k = -k;
  }
  AElem r{};
  while (k > 0) {
    if (k & 1) r = a_mul(G, r, x);
    x = a_mul(G, x, x);
    k >>= 1;
  }
  return r;
}

std::pair<i64, i64> a_exponents(const GroupParams& G, AElem x) {
  return {mod(G.d * x.r + x.t, G.p * G.p - 1), mod(G.d * x.s + x.t, G.q * G.q - 1)};
}

i64 a_order(const GroupParams& G, AElem x) {
  auto [ep, eq] = a_exponents(G, x);
  i64 np = G.p * G.p - 1, nq = G.q * G.q - 1;
  return std::lcm(np / std::gcd(ep, np), nq / std::gcd(eq, nq));
}

NElem n_add(const GroupParams& G, NElem a, NElem b) { return {G.fp.add(a.x, b.x), G.fq.add(a.y, b.y)}; }

NElem n_neg(const GroupParams& G, NElem a) { return {G.fp.neg(a.x), G.fq.neg(a.y)}; }

NElem act(const GroupParams& G, AElem x, NElem n) {
  auto [ep, eq] = a_exponents(G, x);
  return {G.fp.mul(G.fp.alpha_pow(ep), n.x), G.fq.mul(G.fq.alpha_pow(eq), n.y)};
}

GroupElement identity(const GroupParams& G) { return {AElem{}, NElem{}, G.id}; }

GroupElement element(const GroupParams& G, AElem h, NElem n) {
  return {a_normalize(G, h.r, h.s, h.t), NElem{G.fp.elem(n.x.u, n.x.v), G.fq.elem(n.y.u, n.y.v)}, G.id};
}

GroupElement element(const GroupParams& G, NElem n) { return element(G, AElem{}, n); }

GroupElement gen_a(const GroupParams& G) { return element(G, AElem{1, 0, 0}); }
GroupElement gen_b(const GroupParams& G) { return element(G, AElem{0, 1, 0}); }
GroupElement gen_c(const GroupParams& G) { return element(G, AElem{0, 0, 1}); }

// (h1 n1)(h2 n2) = h1 h2 (n1^h2 + n2)
GroupElement mul(const GroupParams& G, const GroupElement& g, const GroupElement& h) {
  same_group(G, g);
  same_group(G, h);
  return {a_mul(G, g.h, h.h), n_add(G, act(G, h.h, g.n), h.n), G.id};
}

GroupElement inv(const GroupParams& G, const GroupElement& g) {
  same_group(G, g);
  AElem hi = a_inv(G, g.h);
  return {hi, n_neg(G, act(G, hi, g.n)), G.id};
}

GroupElement conj(const GroupParams& G, const GroupElement& g, const GroupElement& x) {
  return mul(G, mul(G, inv(G, x), g), x);
}

i64 elem_order(const GroupParams& G, const GroupElement& g) {
  same_group(G, g);
  // g^k = h^k * sum_{i<k} n^(h^i); at k = ord(h) the sum vanishes on every
  // coordinate where h acts nontrivially and is k*n where it acts trivially
  i64 k = a_order(G, g.h);
  auto [ep, eq] = a_exponents(G, g.h);
  FieldElement sx = ep == 0 ? G.fp.scale(k, g.n.x) : G.fp.zero();
  FieldElement sy = eq == 0 ? G.fq.scale(k, g.n.y) : G.fq.zero();
  return k * (sx.is_zero() ? 1 : G.p) * (sy.is_zero() ? 1 : G.q);
}

i64 class_index(const GroupParams& G, NElem n) {
  if (n.x.is_zero() || n.y.is_zero()) throw Error(ErrorCode::NotOrderPQ, "class_index needs both coordinates nonzero");
  return mod(G.fp.dlog(n.x) - G.fq.dlog(n.y), G.d);
}

ClassIndex classify(const GroupParams& G, NElem n) {
  using K = ClassIndex::Kind;
  if (n.x.is_zero() && n.y.is_zero()) return {K::Identity, 0};
  if (n.y.is_zero()) return {K::OrderP, 0};
  if (n.x.is_zero()) return {K::OrderQ, 0};
  return {K::OrderPQ, class_index(G, n)};
}

ClassIndex classify(const GroupParams& G, const GroupElement& g) {
  same_group(G, g);
  if (!(g.h == AElem{})) throw Error(ErrorCode::Unsupported, "classify only handles elements of N");
  return classify(G, g.n);
}

u128 centralizer_order(const GroupParams& G, NElem n) {
  using K = ClassIndex::Kind;
  u128 nn = static_cast<u128>(G.order_N());
  switch (classify(G, n).kind) {
    case K::Identity: return value(G.order());
    case K::OrderP: return nn * static_cast<u128>(G.order_b());
    case K::OrderQ: return nn * static_cast<u128>(G.order_a());
    case K::OrderPQ: return nn;
  }
  return 0;
}

u128 centralizer_order(const GroupParams& G, const GroupElement& g) {
  same_group(G, g);
  if (!(g.h == AElem{})) throw Error(ErrorCode::Unsupported, "centralizer_order only handles elements of N");
  return centralizer_order(G, g.n);
}

}  // namespace zassenhaus
