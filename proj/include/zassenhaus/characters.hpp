#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zassenhaus/epsilon.hpp"

namespace zassenhaus {

// N_l x U_l ~ F_l^3, coordinates (u, v, j): u + v*theta in N_l, c_l^j in U_l.
struct ElemAbelianGroup {
  i64 ell = 0;

  i64 size() const { return ell * ell * ell; }
  i64 index(const Vec3& g) const { return (mod(g(0), ell) * ell + mod(g(1), ell)) * ell + mod(g(2), ell); }
  Vec3 coords(i64 i) const { return Vec3(i / (ell * ell), (i / ell) % ell, i % ell); }
  i64 pair(const Vec3& w, const Vec3& g) const { return mod(w.dot(g), ell); }
  friend bool operator==(const ElemAbelianGroup&, const ElemAbelianGroup&) = default;
};

struct LinearChar {
  ElemAbelianGroup group;
  Vec3 dual = Vec3::Zero();  // value at g is zeta_l^<dual, g>
};

// Galois orbit sum over a linear character; determined by its kernel.
struct RationalIrrChar {
  ElemAbelianGroup group;
  Vec3 dual = Vec3::Zero();  // normalized (first nonzero entry 1); zero for the trivial character

  bool trivial() const { return dual.isZero(); }
  i64 degree() const { return trivial() ? 1 : group.ell - 1; }
  bool in_kernel(const Vec3& g) const { return group.pair(dual, g) == 0; }
};

struct IntClassFunction {
  ElemAbelianGroup group;
  IntVector values;

  i64 operator()(const Vec3& g) const { return values(group.index(g)); }
};

ElemAbelianGroup side_group(const GroupParams& G, Side s);
FieldElement n_part(const GroupParams& G, Side s, const Vec3& g);  // N_l coordinate as field element

RationalIrrChar rational_char(const ElemAbelianGroup& E, Vec3 dual);
std::vector<RationalIrrChar> rational_irreducibles(const ElemAbelianGroup& E);
// elements of the kernel of phi (ell^2 of them, or all for the trivial character)
std::vector<Vec3> kernel_elements(const RationalIrrChar& phi);

// xi_n = sum_m eps(class(m + n)) * 1 induced from <(m, c_l)>, by literal summation.
IntClassFunction xi_table(const GroupParams& G, const EpsilonVector& eps, Side s);

// Brute force over the whole group with root-of-unity bookkeeping.
// Linear: (xi, lambda).  Rational: multiplicity of phi in xi, i.e. (xi, phi) / (phi, phi).
i64 inner_product(const IntClassFunction& xi, const LinearChar& lambda);
i64 inner_product(const IntClassFunction& xi, const RationalIrrChar& phi);
// Case analysis by kernels: trivial, kernel misses every (m, c_l), or a coset count.
i64 inner_product_closed(const GroupParams& G, const EpsilonVector& eps, Side s, const Vec3& dual);

enum class ProperMethod { Brute, Circulant };
bool xi_is_proper(const GroupParams& G, const EpsilonVector& eps, Side s, ProperMethod m);
bool xi_is_proper(const IntClassFunction& xi);  // all rational multiplicities >= 0

// chi((g, c^j)) = |C_G(g)| * sum_i eps_i [g ~ (alpha^i, 1)^j]
i64 chi_value(const GroupParams& G, const EpsilonVector& eps, NElem g, i64 j);
using ChiOracle = std::function<i64(NElem, i64)>;
EpsilonVector extract_eps(const GroupParams& G, const ChiOracle& chi);

struct FamilyValue {
  std::string family;
  i64 degree = 0;
  i64 s = 0;          // (1/pq) sum_j eta((1,1)^j)
  bool direct = false;  // true when evaluated by the transversal sum
};

struct EigenvalueResult {
  std::vector<FamilyValue> families;
  i64 eps_sum = 0;
  bool ok = false;  // eps_sum * s > 0 for every family
};

// Direct evaluation is used when |A| * pq <= direct_limit, the closed counts otherwise.
EigenvalueResult eigenvalue_condition(const GroupParams& G, const EpsilonVector& eps, i64 direct_limit = 50'000'000);
std::vector<FamilyValue> eigenvalue_families_direct(const GroupParams& G);
std::vector<FamilyValue> eigenvalue_families_closed(const GroupParams& G);

struct DegreeCensus {
  std::map<i64, i64> multiplicity;  // degree -> number of irreducibles
  u128 sum_squares = 0;
  bool sum_matches_order = false;
  i64 min_nonlinear = 0;
};

DegreeCensus degree_census(const GroupParams& G);

}  // namespace zassenhaus
