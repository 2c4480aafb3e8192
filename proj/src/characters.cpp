#include "zassenhaus/characters.hpp"

#include <limits>
#include <numeric>

#include "zassenhaus/core.hpp"
#include "zassenhaus/error.hpp"

namespace zassenhaus {

std::string_view to_string(Side s) { return s == Side::P ? "p" : "q"; }

NElem side_generator(const GroupParams& G, Side s) {
  return s == Side::P ? NElem{G.fp.zero(), G.fq.one()} : NElem{G.fp.one(), G.fq.zero()};
}

NElem embed(const GroupParams& G, Side s, FieldElement m) {
  return s == Side::P ? NElem{m, G.fq.zero()} : NElem{G.fp.zero(), m};
}

EpsilonVector EpsilonVector::from_side(Side s, const IntVector& v) {
  const i64 d = v.size();
  IntVector c(d);
  for (i64 i = 0; i < d; ++i) c(i) = s == Side::P ? v(i) : v(mod(-i, d));
  return {c, s};
}

IntVector EpsilonVector::on_side(Side s) const {
  if (s == Side::P) return values;
  IntVector v(d());
  for (i64 i = 0; i < d(); ++i) v(i) = values(mod(-i, d()));
  return v;
}

ElemAbelianGroup side_group(const GroupParams& G, Side s) { return {side_prime(G, s)}; }

FieldElement n_part(const GroupParams& G, Side s, const Vec3& g) { return side_field(G, s).elem(g(0), g(1)); }

namespace {

i64 eps_of(const GroupParams& G, const EpsilonVector& eps, NElem n) {
  ClassIndex c = classify(G, n);
  return c.kind == ClassIndex::Kind::OrderPQ ? eps[c.i] : 0;
}

void same_group(const ElemAbelianGroup& a, const ElemAbelianGroup& b) {
  if (!(a == b)) throw Error(ErrorCode::MixedGroups, "class function and character live on different groups");
}

i64 exact_div(i64 a, i64 b, const char* what) {
  if (a % b != 0) throw Error(ErrorCode::NotIntegral, std::string(what) + ": " + std::to_string(a) + " / " + std::to_string(b));
  return a / b;
}

i64 multiplicity(const IntClassFunction& xi, const RationalIrrChar& phi, i64 total) {
  const i64 l = xi.group.ell;
  if (phi.trivial()) return exact_div(total, xi.group.size(), "trivial multiplicity");
  i64 ck = 0;
  for (const Vec3& g : kernel_elements(phi)) ck += xi(g);
  i64 ip = exact_div(l * ck - total, xi.group.size(), "rational inner product");
  return exact_div(ip, l - 1, "rational multiplicity");
}

i64 ramanujan(i64 n, i64 k) {
  // n squarefree
  i64 g = std::gcd(n, mod(k, n));
  if (g == 0) g = n;
  i64 m = n / g;
  auto f = factorize(m);
  i64 mu = (f.size() % 2 == 0) ? 1 : -1;
  auto phi = [](i64 x) {
    i64 r = x;
    for (auto [pr, e] : factorize(x)) r = r / pr * (pr - 1);
    return r;
  };
  return mu * phi(n) / phi(m);
}

FieldElement trace_zero(const QuadField& f) {
  // Tr(u + v alpha) = 2u + v c1
  return f.elem(mulmod(f.p() - f.c1(), inv_mod(2, f.p()), f.p()), 1);
}

// sum over j = 1..n of the root-of-unity multiset given by counts[e] copies of zeta_n^e
i64 cyclic_average(i64 n, const std::vector<i64>& counts, i64 scale) {
  std::vector<i64> bucket(n, 0);
  for (i64 e = 0; e < n; ++e) {
    if (counts[e] == 0) continue;
    for (i64 j = 1; j <= n; ++j) bucket[mulmod(j, e, n)] += counts[e];
  }
  i64 trace = 0;
  for (i64 k = 0; k < n; ++k)
    if (bucket[k]) trace += bucket[k] * ramanujan(n, k);
  i64 phin = ramanujan(n, 0);
  return exact_div(exact_div(trace, phin, "trace") , n * scale, "eigenvalue average");
}

}  // namespace

RationalIrrChar rational_char(const ElemAbelianGroup& E, Vec3 dual) {
  for (int i = 0; i < 3; ++i) dual(i) = mod(dual(i), E.ell);
  for (int i = 0; i < 3; ++i) {
    if (dual(i) != 0) {
      i64 s = inv_mod(dual(i), E.ell);
      for (int k = 0; k < 3; ++k) dual(k) = mulmod(dual(k), s, E.ell);
      break;
    }
  }
  return {E, dual};
}

std::vector<RationalIrrChar> rational_irreducibles(const ElemAbelianGroup& E) {
  const i64 l = E.ell;
  std::vector<RationalIrrChar> out;
  out.push_back({E, Vec3::Zero()});
  for (i64 a = 0; a < l; ++a)
    for (i64 b = 0; b < l; ++b) out.push_back({E, Vec3(1, a, b)});
  for (i64 b = 0; b < l; ++b) out.push_back({E, Vec3(0, 1, b)});
  out.push_back({E, Vec3(0, 0, 1)});
  return out;
}

std::vector<Vec3> kernel_elements(const RationalIrrChar& phi) {
  const i64 l = phi.group.ell;
  std::vector<Vec3> out;
  if (phi.trivial()) {
    out.reserve(phi.group.size());
    for (i64 i = 0; i < phi.group.size(); ++i) out.push_back(phi.group.coords(i));
    return out;
  }
  int k = 0;
  while (phi.dual(k) == 0) ++k;
  int f1 = (k + 1) % 3, f2 = (k + 2) % 3;
  out.reserve(l * l);
  for (i64 x = 0; x < l; ++x) {
    for (i64 y = 0; y < l; ++y) {
      Vec3 g;
      g(f1) = x;
      g(f2) = y;
      g(k) = mod(-(phi.dual(f1) * x + phi.dual(f2) * y), l);
      out.push_back(g);
    }
  }
  return out;
}

IntClassFunction xi_table(const GroupParams& G, const EpsilonVector& eps, Side s) {
  if (eps.d() != G.d) throw Error(ErrorCode::DimensionMismatch, "epsilon length differs from d");
  const ElemAbelianGroup E = side_group(G, s);
  const i64 l = E.ell;
  const NElem n = side_generator(G, s);
  IntClassFunction xi{E, IntVector::Zero(E.size())};
  for (i64 u = 0; u < l; ++u) {
    for (i64 v = 0; v < l; ++v) {
      const FieldElement m{u, v};
      const i64 e = eps_of(G, eps, n_add(G, embed(G, s, m), n));
      if (e == 0) continue;
      // 1 induced from <(m, c_l)> is l^2 on its l elements
      for (i64 k = 0; k < l; ++k) xi.values(E.index(Vec3(k * u, k * v, k))) += l * l * e;
    }
  }
  return xi;
}

i64 inner_product(const IntClassFunction& xi, const LinearChar& lambda) {
  same_group(xi.group, lambda.group);
  const i64 l = xi.group.ell;
  std::vector<i64> bucket(l, 0);
  for (i64 i = 0; i < xi.group.size(); ++i) bucket[xi.group.pair(lambda.dual, xi.group.coords(i))] += xi.values(i);
  for (i64 k = 2; k < l; ++k)
    if (bucket[k] != bucket[1]) throw Error(ErrorCode::NotIntegral, "class function is not rational on the character's fibres");
  // sum_k c_k zeta^-k with c_1 = ... = c_{l-1}
  return exact_div(bucket[0] - bucket[1], xi.group.size(), "linear inner product");
}

i64 inner_product(const IntClassFunction& xi, const RationalIrrChar& phi) {
  same_group(xi.group, phi.group);
  return multiplicity(xi, phi, xi.values.sum());
}

i64 inner_product_closed(const GroupParams& G, const EpsilonVector& eps, Side s, const Vec3& dual) {
  const i64 l = side_prime(G, s);
  const QuadField& f = side_field(G, s);
  const i64 wu = mod(dual(0), l), wv = mod(dual(1), l), wj = mod(dual(2), l);
  if (wu == 0 && wv == 0) {
    // [C_G(n) : N] * sum eps, or nothing meets the kernel
    return wj == 0 ? (l * l - 1) / G.d * eps.sum() : 0;
  }
  // the kernel contains (m, c_l) exactly for m on the line wu*u + wv*v = -wj
  const NElem n = side_generator(G, s);
  i64 total = 0;
  for (i64 t = 0; t < l; ++t) {
    FieldElement m = wv != 0 ? f.elem(t, mulmod(mod(-wj - wu * t, l), inv_mod(wv, l), l))
                             : f.elem(mulmod(mod(-wj - wv * t, l), inv_mod(wu, l), l), t);
    total += eps_of(G, eps, n_add(G, embed(G, s, m), n));
  }
  return total;
}

bool xi_is_proper(const IntClassFunction& xi) {
  const i64 total = xi.values.sum();
  for (const auto& phi : rational_irreducibles(xi.group))
    if (multiplicity(xi, phi, total) < 0) return false;
  return true;
}

bool xi_is_proper(const GroupParams& G, const EpsilonVector& eps, Side s, ProperMethod m) {
  if (m == ProperMethod::Brute) return xi_is_proper(xi_table(G, eps, s));
  if (eps.sum() < 0) return false;
  IntVector v = inequality_values(r_table(side_field(G, s), G.d), eps, s);
  return v.minCoeff() >= 0;
}

i64 chi_value(const GroupParams& G, const EpsilonVector& eps, NElem g, i64 j) {
  if (eps.d() != G.d) throw Error(ErrorCode::DimensionMismatch, "epsilon length differs from d");
  const ClassIndex cg = classify(G, g);
  const i64 jp = mod(j, G.p), jq = mod(j, G.q);
  __int128 acc = 0;
  for (i64 i = 0; i < G.d; ++i) {
    if (eps[i] == 0) continue;
    // (alpha^i, 1)^j, written additively
    NElem h{G.fp.scale(jp, G.fp.alpha_pow(i)), G.fq.scale(jq, G.fq.one())};
    if (classify(G, h) == cg) acc += eps[i];
  }
  acc *= static_cast<__int128>(centralizer_order(G, g));
  if (acc > std::numeric_limits<i64>::max() || acc < std::numeric_limits<i64>::min())
    throw Error(ErrorCode::Overflow, "character value exceeds 64 bits");
  return static_cast<i64>(acc);
}

EpsilonVector extract_eps(const GroupParams& G, const ChiOracle& chi) {
  IntVector v(G.d);
  for (i64 i = 0; i < G.d; ++i) {
    i64 x = chi(NElem{G.fp.alpha_pow(i), G.fq.one()}, 1);
    if (x % G.order_N() != 0)
      throw Error(ErrorCode::NonIntegralAugmentation, "chi((alpha^" + std::to_string(i) + ",1), c) = " + std::to_string(x) + " is not divisible by |N|");
    v(i) = x / G.order_N();
  }
  return EpsilonVector::canonical(v);
}

std::vector<FamilyValue> eigenvalue_families_closed(const GroupParams& G) {
  const i64 p = G.p, q = G.q, d = G.d;
  return {
      {"induced_from_N", G.order_A(), (p - 1) * (q - 1) / d, false},
      {"nontrivial_on_N_p", p * p - 1, p - 1, false},
      {"nontrivial_on_N_q", q * q - 1, q - 1, false},
      {"linear", 1, 1, false},
  };
}

std::vector<FamilyValue> eigenvalue_families_direct(const GroupParams& G) {
  const i64 p = G.p, q = G.q, n = p * q;
  const FieldElement w1 = trace_zero(G.fp), w0 = trace_zero(G.fq);
  auto exponent = [&](i64 tp, i64 tq) { return mod(tp * q + tq * p, n); };  // zeta_p^tp zeta_q^tq

  std::vector<FamilyValue> out;
  // induced from N: one representative per A-orbit of characters with (1,1) in the kernel
  i64 s1 = -1;
  for (i64 k = 0; k < G.d; ++k) {
    const FieldElement w2 = G.fq.mul(G.fq.alpha_pow((q + 1) * k), w0);
    std::vector<i64> counts(n, 0);
    for (i64 r = 0; r < G.order_a(); ++r) {
      for (i64 s = 0; s < G.order_b(); ++s) {
        for (i64 t = 0; t < G.d; ++t) {
          auto [ep, eq] = a_exponents(G, AElem{r, s, t});
          ++counts[exponent(G.fp.trace(G.fp.mul(w1, G.fp.alpha_pow(ep))), G.fq.trace(G.fq.mul(w2, G.fq.alpha_pow(eq))))];
        }
      }
    }
    i64 v = cyclic_average(n, counts, 1);
    if (s1 >= 0 && v != s1) throw Error(ErrorCode::CharacterMismatch, "family values differ across orbits");
    s1 = v;
  }
  out.push_back({"induced_from_N", G.order_A(), s1, true});

  std::vector<i64> counts(n, 0);
  for (i64 e = 0; e < p * p - 1; ++e) ++counts[exponent(G.fp.trace(G.fp.mul(w1, G.fp.alpha_pow(e))), 0)];
  out.push_back({"nontrivial_on_N_p", p * p - 1, cyclic_average(n, counts, 1), true});

  counts.assign(n, 0);
  for (i64 e = 0; e < q * q - 1; ++e) ++counts[exponent(0, G.fq.trace(G.fq.mul(w0, G.fq.alpha_pow(e))))];
  out.push_back({"nontrivial_on_N_q", q * q - 1, cyclic_average(n, counts, 1), true});

  counts.assign(n, 0);
  counts[0] = 1;
  out.push_back({"linear", 1, cyclic_average(n, counts, 1), true});
  return out;
}

EigenvalueResult eigenvalue_condition(const GroupParams& G, const EpsilonVector& eps, i64 direct_limit) {
  EigenvalueResult res;
  res.eps_sum = eps.sum();
  auto closed = eigenvalue_families_closed(G);
  const bool direct = static_cast<__int128>(G.order_A()) * G.p * G.q <= direct_limit;
  res.families = direct ? eigenvalue_families_direct(G) : closed;
  res.ok = true;
  for (std::size_t i = 0; i < res.families.size(); ++i) {
    if (res.families[i].s != closed[i].s) res.ok = false;
    if (res.eps_sum * res.families[i].s <= 0) res.ok = false;
  }
  return res;
}

DegreeCensus degree_census(const GroupParams& G) {
  DegreeCensus c;
  const i64 p2 = G.p * G.p - 1, q2 = G.q * G.q - 1;
  c.multiplicity[1] += G.order_A();
  c.multiplicity[p2] += q2 / G.d;
  c.multiplicity[q2] += p2 / G.d;
  c.multiplicity[G.order_A()] += G.d;
  for (auto [deg, m] : c.multiplicity) c.sum_squares += static_cast<u128>(deg) * static_cast<u128>(deg) * static_cast<u128>(m);
  c.sum_matches_order = c.sum_squares == value(G.order());
  c.min_nonlinear = 0;
  for (auto [deg, m] : c.multiplicity) {
    if (deg > 1) {
      c.min_nonlinear = deg;
      break;
    }
  }
  return c;
}

}  // namespace zassenhaus
