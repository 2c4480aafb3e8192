#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zassenhaus/core.hpp"

namespace zassenhaus {

// Subspace of F_l^3 kept as a reduced row echelon basis (one row per generator).
struct Subspace {
  i64 ell = 0;
  IntMatrix basis = IntMatrix(0, 3);

  i64 rank() const { return basis.rows(); }
  bool contains(const Vec3& v) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ell == b.ell && a.basis == b.basis; }
};

Subspace span(i64 ell, const std::vector<Vec3>& vs);
Subspace with_trivial_u(const Subspace& s);  // intersection with the hyperplane j = 0
std::vector<Vec3> elements(const Subspace& s);

// (n, c^u) in N x U, u taken mod pq
struct Generator {
  NElem n;
  i64 u = 0;
};

struct SubgroupDescriptor {
  std::vector<Generator> generators;
  Subspace part_p;  // Sylow p-part in N_p x U_p coordinates
  Subspace part_q;
  i64 order = 1;

  friend bool operator==(const SubgroupDescriptor& a, const SubgroupDescriptor& b) {
    return a.part_p == b.part_p && a.part_q == b.part_q;
  }
};

SubgroupDescriptor make_subgroup(const GroupParams& G, std::vector<Generator> gens);
Vec3 coordinates(const GroupParams& G, Side s, const Generator& g);
const Subspace& part(const SubgroupDescriptor& X, Side s);

enum class CharFormula { FullKernel, PrimeIndexKernel };
std::string_view to_string(CharFormula f);

struct LatticeSummand {
  std::string label;  // trivial, kernel_N, kernel_contains_U, coset_<i>
  i64 coset = -1;
  SubgroupDescriptor X;
  Subspace kernel;        // X restricted to N_l x U_l
  i64 prime = 0;          // order of n, the second argument of M(X, ., .)
  i64 aux_prime = 0;
  i64 multiplicity = 0;
  bool projective = false;
  CharFormula formula = CharFormula::FullKernel;
};

struct LatticeAssembly {
  Side side = Side::P;
  i64 ell = 0;
  EpsilonVector eps;
  i64 aux_prime = 0;
  std::vector<LatticeSummand> summands;
  i64 degree = 0;     // sum of multiplicity * |C_G(n)/N| * deg(phi)
  i64 xi_degree = 0;  // xi_n(1) = l^2 [C_G(n):N] sum eps
};

// Kernels of the 3 + d orbit representatives, in census order.
std::vector<std::pair<std::string, Subspace>> kernel_representatives(const GroupParams& G, Side s);

// NegativeMultiplicity if some mu < 0; BadAuxPrime unless aux is a prime other than l.
LatticeAssembly build_assembly(const GroupParams& G, const EpsilonVector& eps, Side s, i64 aux_prime);
bool projectivity_check(const GroupParams& G, const SubgroupDescriptor& X, i64 aux_prime);
// true, or CharacterMismatch naming the first bad element of N_l x U_l
bool verify_assembly_character(const GroupParams& G, const EpsilonVector& eps, const LatticeAssembly& L);
CharFormula summand_char_formula(const GroupParams& G, const SubgroupDescriptor& X, Side s);

}  // namespace zassenhaus
