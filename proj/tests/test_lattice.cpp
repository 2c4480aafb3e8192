#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zassenhaus/error.hpp"
#include "zassenhaus/lattice.hpp"

using namespace zassenhaus;

namespace {

const GroupParams& g7_19_3() {
  static const GroupParams G = make_group(7, 19, 3, {1, 3}, {1, 2});
  return G;
}

EpsilonVector eps3(i64 a, i64 b, i64 c) {
  IntVector v(3);
  v << a, b, c;
  return EpsilonVector::canonical(v);
}

std::vector<std::pair<std::string, i64>> shape(const LatticeAssembly& L) {
  std::vector<std::pair<std::string, i64>> out;
  for (const auto& S : L.summands) out.emplace_back(S.label, S.multiplicity);
  return out;
}

}  // namespace

TEST_CASE("subspaces") {
  Subspace s = span(7, {Vec3(1, 2, 3), Vec3(2, 4, 6), Vec3(0, 1, 1)});
  CHECK(s.rank() == 2);
  CHECK(s.contains(Vec3(1, 3, 4)));
  CHECK_FALSE(s.contains(Vec3(0, 0, 1)));
  CHECK(elements(s).size() == 49u);
  CHECK(with_trivial_u(s).rank() == 1);
  CHECK(span(7, {Vec3(0, 1, 1), Vec3(1, 2, 3)}) == s);
}

TEST_CASE("multiplicities for (7,19,3) with eps (2,-1,0)") {
  const GroupParams& G = g7_19_3();
  LatticeAssembly q = build_assembly(G, eps3(2, -1, 0), Side::Q, 2);
  CHECK(shape(q) == std::vector<std::pair<std::string, i64>>{
                        {"trivial", 1}, {"kernel_contains_U", 1}, {"coset_0", 2}, {"coset_1", 14}, {"coset_2", 3}});
  LatticeAssembly p = build_assembly(G, eps3(2, -1, 0), Side::P, 2);
  CHECK(shape(p) == std::vector<std::pair<std::string, i64>>{{"trivial", 1}, {"kernel_contains_U", 1}, {"coset_2", 7}});
  CHECK(p.degree == p.xi_degree);
  CHECK(q.degree == q.xi_degree);
}

TEST_CASE("summand subgroups match the explicit generators") {
  const GroupParams& G = g7_19_3();
  const i64 cq = crt(1, 19, 0, 7), n7 = crt(0, 19, 1, 7);
  LatticeAssembly q = build_assembly(G, eps3(2, -1, 0), Side::Q, 2);
  const NElem one7{G.fp.one(), G.fq.zero()}, one19{G.fp.zero(), G.fq.one()};
  const i64 ks[] = {1, 2, 4};
  for (const auto& S : q.summands) {
    std::vector<Generator> gens{{one7, n7}};
    if (S.label == "trivial") {
      gens.push_back({NElem{G.fp.zero(), G.fq.one()}, 0});
      gens.push_back({NElem{G.fp.zero(), G.fq.alpha()}, 0});
      gens.push_back({NElem{}, cq});
    } else if (S.label == "kernel_contains_U") {
      gens.push_back({one19, 0});
      gens.push_back({NElem{}, cq});
    } else {
      gens.push_back({one19, 0});
      gens.push_back({NElem{G.fp.zero(), G.fq.scale(ks[S.coset], G.fq.alpha())}, cq});
    }
    CHECK(make_subgroup(G, gens) == S.X);
  }

  const i64 cp = crt(1, 7, 0, 19), n19 = crt(0, 7, 1, 19);
  LatticeAssembly p = build_assembly(G, eps3(2, -1, 0), Side::P, 2);
  const LatticeSummand& last = p.summands.back();
  std::vector<Generator> gens{{one19, n19}, {one7, 0}, {NElem{G.fp.scale(9, G.fp.alpha()), G.fq.zero()}, cp}};
  CHECK(make_subgroup(G, gens) == last.X);
}

TEST_CASE("summand orders by closure") {
  const GroupParams& G = g7_19_3();
  for (Side s : {Side::P, Side::Q}) {
    LatticeAssembly L = build_assembly(G, eps3(2, -1, 0), s, 2);
    const i64 l = side_prime(G, s), o = other_prime(G, s);
    for (const auto& S : L.summands) {
      i64 ker = 1;
      for (i64 i = 0; i < S.kernel.rank(); ++i) ker *= l;
      CHECK(S.X.order == o * ker);
      CHECK(static_cast<i64>(oracle::closure(G, S.X.generators).size()) == S.X.order);
    }
  }
}

TEST_CASE("projectivity") {
  const GroupParams& G = g7_19_3();
  for (Side s : {Side::P, Side::Q}) {
    for (i64 aux : {i64(2), i64(3), i64(5), other_prime(G, s)}) {
      LatticeAssembly L = build_assembly(G, eps3(2, -1, 0), s, aux);
      for (const auto& S : L.summands) CHECK(S.projective);
    }
  }
  // (n, 1) has a nontrivial q-part inside G
  SubgroupDescriptor X = make_subgroup(G, {{NElem{G.fp.one(), G.fq.one()}, 0}});
  CHECK_FALSE(projectivity_check(G, X, 7));
  CHECK_FALSE(projectivity_check(G, X, 19));
  CHECK(projectivity_check(G, X, 2));
}

TEST_CASE("assembly character") {
  const GroupParams& G = g7_19_3();
  for (EpsilonVector e : {eps3(2, -1, 0), eps3(1, 0, 0), eps3(0, 1, 0)}) {
    for (Side s : {Side::P, Side::Q}) {
      LatticeAssembly L = build_assembly(G, e, s, 2);
      CHECK(verify_assembly_character(G, e, L));
      LatticeAssembly bumped = L;
      bumped.summands.back().multiplicity += 1;
      CHECK_THROWS_AS(verify_assembly_character(G, e, bumped), Error);
    }
  }
}

TEST_CASE("character formula tags") {
  const GroupParams& G = g7_19_3();
  LatticeAssembly L = build_assembly(G, eps3(2, -1, 0), Side::Q, 2);
  CHECK(L.summands[0].formula == CharFormula::FullKernel);
  for (std::size_t i = 1; i < L.summands.size(); ++i) CHECK(L.summands[i].formula == CharFormula::PrimeIndexKernel);
  SubgroupDescriptor X = make_subgroup(G, {{NElem{G.fp.zero(), G.fq.one()}, 0}});
  CHECK_THROWS_AS(summand_char_formula(G, X, Side::Q), Error);
}

TEST_CASE("assembly errors") {
  const GroupParams& G = g7_19_3();
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Unsupported;
  };
  CHECK(code([&] { build_assembly(G, eps3(2, -1, 0), Side::Q, 19); }) == ErrorCode::BadAuxPrime);
  CHECK(code([&] { build_assembly(G, eps3(2, -1, 0), Side::Q, 4); }) == ErrorCode::BadAuxPrime);
  CHECK(code([&] { build_assembly(G, eps3(-1, 2, 0), Side::P, 2); }) == ErrorCode::NegativeMultiplicity);
}

TEST_CASE("assembly properties on random eps") {
  std::mt19937_64 rng(3);
  for (auto [p, q, d] : {std::tuple{7, 19, 3}, {31, 13, 3}, {11, 31, 5}}) {
    GroupParams G = make_group(p, q, d, find_primitive_polynomial(p), find_primitive_polynomial(q));
    const std::vector<i64> aux = {2, 3, 5, p, q};
    std::uniform_int_distribution<i64> dist(-3, 3);
    int built = 0;
    for (int k = 0; k < 200 && built < 12; ++k) {
      IntVector e(d);
      for (i64 i = 0; i < d; ++i) e(i) = dist(rng);
      e(d - 1) += 1 - e.sum();
      if (k < d) e = IntVector::Unit(d, k);
      EpsilonVector eps = EpsilonVector::canonical(e);
      for (Side s : {Side::P, Side::Q}) {
        MuTable mu = mu_table(G, eps, s);
        if (!mu.nonnegative()) continue;
        ++built;
        for (i64 a : aux) {
          if (a == side_prime(G, s)) continue;
          LatticeAssembly L = build_assembly(G, eps, s, a);
          std::vector<i64> cosets, expected;
          for (const auto& S : L.summands) {
            CHECK(S.projective);
            CHECK(S.multiplicity >= 1);
            if (S.coset >= 0) cosets.push_back(S.multiplicity);
          }
          for (i64 i = 0; i < d; ++i)
            if (mu.coset(i) > 0) expected.push_back(mu.coset(i));
          CHECK(cosets == expected);
        }
        Verdict v = verdict(G, eps);
        if (v.is_counterexample || eps.support() == 1)
          CHECK(verify_assembly_character(G, eps, build_assembly(G, eps, s, 2)));
      }
    }
  }
}
