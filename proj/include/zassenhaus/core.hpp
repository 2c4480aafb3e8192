#pragma once

#include <string>
#include <vector>

#include "zassenhaus/characters.hpp"

namespace zassenhaus {

// r(k) = #{x in F_p : dlog(alpha + x) = k mod d}, stored 0-indexed.
// The 1-indexed r_1..r_d convention is (r(1), ..., r(d-1), r(0)).
struct RTable {
  i64 p = 0;
  i64 d = 0;
  IntVector r;

  i64 one_indexed(i64 i) const { return r(mod(i, d)); }  // 1-indexed access, r_d = r(0)
  IntVector one_indexed_order() const;
};

RTable r_table(const QuadField& f, i64 d);
// Same table from norms in F_p: class of alpha + x is dlog_{N(alpha)} N(alpha + x) mod d.
RTable r_table_by_norm(const QuadField& f, i64 d);

// C(j, i) = r((j + i) mod d)
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> circulant(const Eigen::MatrixBase<Derived>& r) {
  const Eigen::Index d = r.size();
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> c(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) c(j, i) = r((j + i) % d);
  return c;
}

// entry j = sum_i r(j + i) * eps_side(i); eps_side already in the table's side ordering
IntVector inequality_values(const RTable& rt, const IntVector& eps_side);
IntVector inequality_values(const RTable& rt, const EpsilonVector& eps, Side s);

struct MuTable {
  i64 trivial = 1;
  i64 kernel_n = 0;     // kernel N_l
  i64 u_in_kernel = 1;  // kernel contains U_l
  IntVector coset;      // phi_i, kernel <(1, 1), (theta^(i(l+1)+1), c_l)>
  IntVector offset;     // l(g_i) mod d

  bool nonnegative() const { return coset.size() == 0 || coset.minCoeff() >= 0; }
};

i64 coset_offset(const QuadField& f, i64 d, i64 i);
MuTable mu_table(const GroupParams& G, const EpsilonVector& eps, Side s);

struct SideReport {
  Side side = Side::P;
  i64 prime = 0;
  RTable rt;
  IntVector eps_side;
  IntVector inequalities;
  bool inequalities_ok = false;
  MuTable mu;
};

struct Verdict {
  i64 p = 0, q = 0, d = 0;
  Poly poly_p, poly_q;
  EpsilonVector eps;
  i64 eps_sum = 0;
  i64 support = 0;
  SideReport sides[2];
  EigenvalueResult eigen;
  DegreeCensus census;
  bool eichler_ok = false;
  bool centralizer_ok = false;  // every class in the support has centralizer N
  bool is_counterexample = false;
  std::vector<std::string> reasons;
};

Verdict verdict(const GroupParams& G, const EpsilonVector& eps, i64 eigen_direct_limit = 50'000'000);

double guarantee_threshold(i64 d, i64 M);
double delta_bound(i64 p, i64 d);

struct GaussSumCheck {
  i64 p = 0, d = 0;
  double omega_sq = 0;  // |sum_i delta_i zeta_d^i|^2
  bool float_ok = false;
  bool has_exact = false;
  i64 exact_value = 0;  // d = 3: 9 * (sum D_i^2 - sum_{i<j} D_i D_j) with D = 3r - p; equals 9p
  bool exact_ok = false;
  double max_delta = 0;
  bool delta_ok = false;
  bool ok() const { return float_ok && (!has_exact || exact_ok) && delta_ok; }
};

GaussSumCheck gauss_sum_check(const RTable& rt);
GaussSumCheck gauss_sum_check(const QuadField& f, i64 d);

}  // namespace zassenhaus
