#include "zassenhaus/lattice.hpp"

#include "zassenhaus/error.hpp"

namespace zassenhaus {

std::string_view to_string(CharFormula f) {
  return f == CharFormula::FullKernel ? "full_kernel" : "prime_index_kernel";
}

Subspace span(i64 ell, const std::vector<Vec3>& vs) {
  IntMatrix m(static_cast<Eigen::Index>(vs.size()), 3);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = mod(vs[i](k), ell);
  Eigen::Index row = 0;
  for (int col = 0; col < 3 && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.row(row).swap(m.row(piv));
    const i64 s = inv_mod(m(row, col), ell);
    m.row(row) = m.row(row).unaryExpr([&](i64 x) { return mulmod(x, s, ell); });
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const i64 f = m(r, col);
      for (int k = 0; k < 3; ++k) m(r, k) = mod(m(r, k) - f * m(row, k), ell);
    }
    ++row;
  }
  return {ell, m.topRows(row)};
}

bool Subspace::contains(const Vec3& v) const {
  std::vector<Vec3> vs;
  for (Eigen::Index i = 0; i < basis.rows(); ++i) vs.push_back(basis.row(i).transpose());
  vs.push_back(v);
  return span(ell, vs).rank() == rank();
}

Subspace with_trivial_u(const Subspace& s) {
  std::vector<Vec3> rows;
  Eigen::Index piv = -1;
  for (Eigen::Index i = 0; i < s.basis.rows(); ++i)
    if (s.basis(i, 2) != 0 && piv < 0) piv = i;
  for (Eigen::Index i = 0; i < s.basis.rows(); ++i) {
    if (i == piv) continue;
    Vec3 r = s.basis.row(i).transpose();
    if (piv >= 0 && r(2) != 0) {
      const i64 f = mulmod(r(2), inv_mod(s.basis(piv, 2), s.ell), s.ell);
      r -= f * s.basis.row(piv).transpose();
    }
    rows.push_back(r);
  }
  return span(s.ell, rows);
}

std::vector<Vec3> elements(const Subspace& s) {
  std::vector<Vec3> out{Vec3::Zero()};
  for (Eigen::Index i = 0; i < s.basis.rows(); ++i) {
    std::vector<Vec3> next;
    next.reserve(out.size() * s.ell);
    for (const Vec3& v : out)
      for (i64 k = 0; k < s.ell; ++k)
        next.push_back((v + k * s.basis.row(i).transpose()).unaryExpr([&](i64 x) { return mod(x, s.ell); }));
    out = std::move(next);
  }
  return out;
}

Vec3 coordinates(const GroupParams& G, Side s, const Generator& g) {
  const FieldElement& m = s == Side::P ? g.n.x : g.n.y;
  return Vec3(m.u, m.v, mod(g.u, side_prime(G, s)));
}

const Subspace& part(const SubgroupDescriptor& X, Side s) { return s == Side::P ? X.part_p : X.part_q; }

SubgroupDescriptor make_subgroup(const GroupParams& G, std::vector<Generator> gens) {
  SubgroupDescriptor X;
  std::vector<Vec3> vp, vq;
  for (Generator& g : gens) {
    g.u = mod(g.u, G.p * G.q);
    vp.push_back(coordinates(G, Side::P, g));
    vq.push_back(coordinates(G, Side::Q, g));
  }
  X.generators = std::move(gens);
  X.part_p = span(G.p, vp);
  X.part_q = span(G.q, vq);
  for (i64 i = 0; i < X.part_p.rank(); ++i) X.order *= G.p;
  for (i64 i = 0; i < X.part_q.rank(); ++i) X.order *= G.q;
  return X;
}

std::vector<std::pair<std::string, Subspace>> kernel_representatives(const GroupParams& G, Side s) {
  const i64 l = side_prime(G, s);
  const QuadField& f = side_field(G, s);
  std::vector<std::pair<std::string, Subspace>> out;
  out.emplace_back("trivial", span(l, {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}));
  out.emplace_back("kernel_N", span(l, {Vec3(1, 0, 0), Vec3(0, 1, 0)}));
  out.emplace_back("kernel_contains_U", span(l, {Vec3(1, 0, 0), Vec3(0, 0, 1)}));
  for (i64 i = 0; i < G.d; ++i) {
    FieldElement g = f.alpha_pow(i * (l + 1) + 1);
    out.emplace_back("coset_" + std::to_string(i), span(l, {Vec3(1, 0, 0), Vec3(g.u, g.v, 1)}));
  }
  return out;
}

namespace {

SubgroupDescriptor summand_subgroup(const GroupParams& G, Side s, const Subspace& kernel) {
  const i64 l = side_prime(G, s), o = other_prime(G, s);
  std::vector<Generator> gens;
  // [n]_o = <(n, c_o)>
  gens.push_back({side_generator(G, s), crt(0, l, 1, o)});
  for (Eigen::Index i = 0; i < kernel.basis.rows(); ++i) {
    const Vec3 b = kernel.basis.row(i).transpose();
    gens.push_back({embed(G, s, side_field(G, s).elem(b(0), b(1))), crt(b(2), l, 0, o)});
  }
  return make_subgroup(G, std::move(gens));
}

}  // namespace

bool projectivity_check(const GroupParams& G, const SubgroupDescriptor& X, i64 aux_prime) {
  if (aux_prime != G.p && aux_prime != G.q) return true;
  return with_trivial_u(part(X, aux_prime == G.p ? Side::P : Side::Q)).rank() == 0;
}

CharFormula summand_char_formula(const GroupParams& G, const SubgroupDescriptor& X, Side s) {
  (void)G;
  switch (part(X, s).rank()) {
    case 3: return CharFormula::FullKernel;
    case 2: return CharFormula::PrimeIndexKernel;
    default:
      throw Error(ErrorCode::UnsupportedShape, "quotient of N_l x U_l by X_l is not cyclic (rank " +
                                                   std::to_string(part(X, s).rank()) + ")");
  }
}

LatticeAssembly build_assembly(const GroupParams& G, const EpsilonVector& eps, Side s, i64 aux_prime) {
  const i64 l = side_prime(G, s);
  if (!is_prime(aux_prime) || aux_prime == l)
    throw Error(ErrorCode::BadAuxPrime, "auxiliary prime must be a prime other than " + std::to_string(l) + ", got " +
                                            std::to_string(aux_prime));
  const MuTable mu = mu_table(G, eps, s);
  if (!mu.nonnegative())
    throw Error(ErrorCode::NegativeMultiplicity, "the " + std::string(to_string(s)) + "-side inequalities fail");

  LatticeAssembly L;
  L.side = s;
  L.ell = l;
  L.eps = eps;
  L.aux_prime = aux_prime;
  const i64 stab = (l * l - 1) / G.d;
  L.xi_degree = l * l * stab * eps.sum();

  auto reps = kernel_representatives(G, s);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const i64 m = k == 0 ? mu.trivial : k == 1 ? mu.kernel_n : k == 2 ? mu.u_in_kernel : mu.coset(k - 3);
    if (m == 0) continue;
    LatticeSummand S;
    S.label = reps[k].first;
    S.coset = k >= 3 ? static_cast<i64>(k - 3) : -1;
    S.kernel = reps[k].second;
    S.X = summand_subgroup(G, s, S.kernel);
    S.prime = other_prime(G, s);
    S.aux_prime = aux_prime;
    S.multiplicity = m;
    S.projective = projectivity_check(G, S.X, aux_prime);
    S.formula = summand_char_formula(G, S.X, s);
    L.degree += m * stab * (S.kernel.rank() == 3 ? 1 : l - 1);
    L.summands.push_back(std::move(S));
  }
  return L;
}

bool verify_assembly_character(const GroupParams& G, const EpsilonVector& eps, const LatticeAssembly& L) {
  const Side s = L.side;
  const IntClassFunction xi = xi_table(G, eps, s);
  const ElemAbelianGroup& E = xi.group;
  const i64 l = E.ell;
  const QuadField& f = side_field(G, s);
  const i64 stab = (l * l - 1) / G.d;
  // the generator of C_A(n) multiplies N_l by theta^d
  const FieldElement step = f.alpha_pow(G.d);

  IntVector acc = IntVector::Zero(E.size());
  i64 constant = 0;
  for (const LatticeSummand& S : L.summands) {
    if (S.kernel.rank() == 3) {
      constant += S.multiplicity * stab;
      continue;
    }
    if (S.kernel.rank() != 2) throw Error(ErrorCode::UnsupportedShape, "kernel of index other than 1 or l");
    // phi_H = l [g in H] - 1 for H of index l
    constant -= S.multiplicity * stab;
    Vec3 b1 = S.kernel.basis.row(0).transpose(), b2 = S.kernel.basis.row(1).transpose();
    FieldElement m1 = f.elem(b1(0), b1(1)), m2 = f.elem(b2(0), b2(1));
    for (i64 t = 0; t < stab; ++t) {
      for (i64 x = 0; x < l; ++x) {
        for (i64 y = 0; y < l; ++y) {
          FieldElement m = f.add(f.scale(x, m1), f.scale(y, m2));
          acc(E.index(Vec3(m.u, m.v, x * b1(2) + y * b2(2)))) += S.multiplicity * l;
        }
      }
      m1 = f.mul(m1, step);
      m2 = f.mul(m2, step);
    }
  }
  for (i64 i = 0; i < E.size(); ++i) {
    if (acc(i) + constant != xi.values(i)) {
      Vec3 g = E.coords(i);
      throw Error(ErrorCode::CharacterMismatch, "assembly character " + std::to_string(acc(i) + constant) +
                                                    " != xi_n " + std::to_string(xi.values(i)) + " at (" +
                                                    std::to_string(g(0)) + "," + std::to_string(g(1)) + "," +
                                                    std::to_string(g(2)) + ")");
    }
  }
  if (L.degree != L.xi_degree)
    throw Error(ErrorCode::CharacterMismatch, "degree bookkeeping " + std::to_string(L.degree) + " != " +
                                                  std::to_string(L.xi_degree));
  return true;
}

}  // namespace zassenhaus
