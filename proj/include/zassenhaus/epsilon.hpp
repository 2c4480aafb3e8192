#pragma once

#include <Eigen/Core>
#include <string_view>

#include "zassenhaus/group.hpp"

namespace zassenhaus {

using IntVector = Eigen::Matrix<i64, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<i64, Eigen::Dynamic, Eigen::Dynamic>;
using Vec3 = Eigen::Matrix<i64, 3, 1>;

// Side names the prime l of the elementary abelian group N_l x U_l on which
// xi_n, the rational irreducibles phi and the multiplicities mu live.  n is the
// fixed generator of order "other prime": Side::P -> n = (0, 1), Side::Q -> n = (1, 0).
enum class Side { P, Q };

std::string_view to_string(Side s);
inline i64 side_prime(const GroupParams& G, Side s) { return s == Side::P ? G.p : G.q; }
inline i64 other_prime(const GroupParams& G, Side s) { return s == Side::P ? G.q : G.p; }
inline const QuadField& side_field(const GroupParams& G, Side s) { return s == Side::P ? G.fp : G.fq; }
NElem side_generator(const GroupParams& G, Side s);
// embeds m in N_l into N
NElem embed(const GroupParams& G, Side s, FieldElement m);

// Partial augmentations; entry i belongs to the class of (alpha^i, 1).
// On the q-side the natural representatives are (1, beta^j), which is class -j.
struct EpsilonVector {
  IntVector values;
  Side ordering = Side::P;  // which side's representatives the input was given in

  static EpsilonVector canonical(IntVector v) { return {std::move(v), Side::P}; }
  static EpsilonVector from_side(Side s, const IntVector& v);

  i64 d() const { return values.size(); }
  i64 sum() const { return values.sum(); }
  i64 support() const { return (values.array() != 0).count(); }
  i64 max_abs() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0; }
  // values in the side's representative ordering
  IntVector on_side(Side s) const;
  i64 operator[](i64 i) const { return values(mod(i, d())); }
};

}  // namespace zassenhaus
