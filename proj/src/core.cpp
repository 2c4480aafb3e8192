#include "zassenhaus/core.hpp"

#include <cmath>
#include <numbers>

#include "zassenhaus/error.hpp"

namespace zassenhaus {

IntVector RTable::one_indexed_order() const {
  IntVector v(d);
  for (i64 i = 1; i <= d; ++i) v(i - 1) = one_indexed(i);
  return v;
}

RTable r_table(const QuadField& f, i64 d) {
  if (d < 1 || f.unit_order() % d != 0) throw Error(ErrorCode::BadD, "d must divide p^2-1");
  RTable rt{f.p(), d, IntVector::Zero(d)};
  for (i64 x = 0; x < f.p(); ++x) ++rt.r(mod(f.dlog(f.add(f.alpha(), f.scalar(x))), d));
  return rt;
}

RTable r_table_by_norm(const QuadField& f, i64 d) {
  if (d < 1 || f.unit_order() % d != 0) throw Error(ErrorCode::BadD, "d must divide p^2-1");
  const i64 p = f.p();
  // alpha^(p+1) = N(alpha) generates F_p^x
  const i64 g = f.norm(f.alpha());
  std::vector<i64> log(p, -1);
  for (i64 k = 0, y = 1; k < p - 1; ++k, y = mulmod(y, g, p)) log[y] = k;
  RTable rt{p, d, IntVector::Zero(d)};
  for (i64 x = 0; x < p; ++x) {
    i64 nr = mod(x * x + f.c1() * x + f.c0(), p);
    ++rt.r(mod(log[nr], d));
  }
  return rt;
}

IntVector inequality_values(const RTable& rt, const IntVector& eps_side) {
  if (eps_side.size() != rt.d)
    throw Error(ErrorCode::DimensionMismatch,
                "epsilon has " + std::to_string(eps_side.size()) + " entries, r-table has " + std::to_string(rt.d));
  return circulant(rt.r) * eps_side;
}

IntVector inequality_values(const RTable& rt, const EpsilonVector& eps, Side s) {
  if (eps.d() != rt.d) throw Error(ErrorCode::DimensionMismatch, "epsilon length differs from d");
  return inequality_values(rt, eps.on_side(s));
}

i64 coset_offset(const QuadField& f, i64 d, i64 i) {
  // alpha^(i(l+1)+1) = u*alpha + v; l(g) = dlog(u^-1) mod d
  FieldElement g = f.alpha_pow(i * (f.p() + 1) + 1);
  return mod(f.dlog(f.scalar(inv_mod(g.v, f.p()))), d);
}

MuTable mu_table(const GroupParams& G, const EpsilonVector& eps, Side s) {
  const QuadField& f = side_field(G, s);
  RTable rt = r_table(f, G.d);
  IntVector values = inequality_values(rt, eps, s);
  MuTable mu;
  mu.coset.resize(G.d);
  mu.offset.resize(G.d);
  for (i64 i = 0; i < G.d; ++i) {
    mu.offset(i) = coset_offset(f, G.d, i);
    mu.coset(i) = values(mu.offset(i));
  }
  return mu;
}

Verdict verdict(const GroupParams& G, const EpsilonVector& eps, i64 eigen_direct_limit) {
  if (eps.d() != G.d) throw Error(ErrorCode::DimensionMismatch, "epsilon length differs from d");
  Verdict v;
  v.p = G.p;
  v.q = G.q;
  v.d = G.d;
  v.poly_p = {G.fp.c1(), G.fp.c0()};
  v.poly_q = {G.fq.c1(), G.fq.c0()};
  v.eps = eps;
  v.eps_sum = eps.sum();
  v.support = eps.support();

  bool ineq_ok = true;
  for (Side s : {Side::P, Side::Q}) {
    SideReport& r = v.sides[s == Side::P ? 0 : 1];
    r.side = s;
    r.prime = side_prime(G, s);
    r.rt = r_table(side_field(G, s), G.d);
    r.eps_side = eps.on_side(s);
    r.inequalities = inequality_values(r.rt, r.eps_side);
    r.inequalities_ok = r.inequalities.minCoeff() >= 0;
    r.mu = mu_table(G, eps, s);
    for (i64 j = 0; j < G.d; ++j) {
      if (r.inequalities(j) < 0)
        v.reasons.push_back("inequality failed: " + std::string(to_string(s)) + "-side (prime " + std::to_string(r.prime) +
                            ") row j=" + std::to_string(j) + " value " + std::to_string(r.inequalities(j)));
    }
    ineq_ok = ineq_ok && r.inequalities_ok;
  }

  v.eigen = eigenvalue_condition(G, eps, eigen_direct_limit);
  v.census = degree_census(G);
  v.eichler_ok = v.census.sum_matches_order && v.census.min_nonlinear >= 3;

  v.centralizer_ok = true;
  for (i64 i = 0; i < G.d; ++i) {
    if (eps[i] != 0 && centralizer_order(G, NElem{G.fp.alpha_pow(i), G.fq.one()}) != static_cast<u128>(G.order_N()))
      v.centralizer_ok = false;
  }

  if (v.eps_sum != 1) v.reasons.push_back("sum of epsilon is " + std::to_string(v.eps_sum) + ", not 1");
  if (v.support < 2)
    v.reasons.push_back("support size " + std::to_string(v.support) +
                        (v.support == 1 ? ": unit exists but is trivially rationally conjugate" : ": no unit of order pq"));
  if (!v.eigen.ok) v.reasons.push_back("eigenvalue condition failed");
  if (!v.eichler_ok) v.reasons.push_back("character degree bound failed");
  if (!v.centralizer_ok) v.reasons.push_back("a supported class has centralizer larger than N");

  v.is_counterexample = v.eps_sum == 1 && v.support >= 2 && ineq_ok && v.eigen.ok && v.eichler_ok && v.centralizer_ok;
  return v;
}

double guarantee_threshold(i64 d, i64 M) {
  if (d < 3 || d % 2 == 0) throw Error(ErrorCode::BadD, "threshold needs odd d >= 3, got " + std::to_string(d));
  if (M < 1) throw Error(ErrorCode::Unsupported, "M must be >= 1");
  const double dd = static_cast<double>(d);
  return dd * dd * dd * dd * static_cast<double>(M * M) / (1.0 - std::abs(std::cos(2.0 * std::numbers::pi / dd)));
}

double delta_bound(i64 p, i64 d) {
  if (d < 3) throw Error(ErrorCode::BadD, "delta bound needs d >= 3");
  return std::sqrt(static_cast<double>(p) / (1.0 - std::abs(std::cos(2.0 * std::numbers::pi / static_cast<double>(d)))));
}

GaussSumCheck gauss_sum_check(const RTable& rt) {
  GaussSumCheck g;
  g.p = rt.p;
  g.d = rt.d;
  const double pd = static_cast<double>(rt.p) / static_cast<double>(rt.d);
  double re = 0, im = 0;
  for (i64 i = 0; i < rt.d; ++i) {
    const double delta = static_cast<double>(rt.r(i)) - pd;
    const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(rt.d);
    re += delta * std::cos(th);
    im += delta * std::sin(th);
    g.max_delta = std::max(g.max_delta, std::abs(delta));
  }
  g.omega_sq = re * re + im * im;
  g.float_ok = std::abs(g.omega_sq - static_cast<double>(rt.p)) <= 1e-6;
  if (rt.d == 3) {
    g.has_exact = true;
    i64 D[3];
    for (int i = 0; i < 3; ++i) D[i] = 3 * rt.r(i) - rt.p;
    g.exact_value = D[0] * D[0] + D[1] * D[1] + D[2] * D[2] - D[0] * D[1] - D[0] * D[2] - D[1] * D[2];
    g.exact_ok = g.exact_value == 9 * rt.p;
  }
  g.delta_ok = rt.d >= 3 && g.max_delta <= delta_bound(rt.p, rt.d) + 1e-9;
  return g;
}

GaussSumCheck gauss_sum_check(const QuadField& f, i64 d) { return gauss_sum_check(r_table(f, d)); }

}  // namespace zassenhaus
