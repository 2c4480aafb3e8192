// One line per acceptance criterion, with indented sub-checks.  Exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "zassenhaus/error.hpp"
#include "zassenhaus/lattice.hpp"
#include "zassenhaus/report.hpp"
#include "zassenhaus/search.hpp"

using namespace zassenhaus;

namespace {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string id, title;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = "") { checks.push_back({std::move(name), ok, std::move(detail)}); }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::string vec(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

IntVector iv(std::initializer_list<i64> xs) {
  IntVector v(xs.size());
  i64 i = 0;
  for (i64 x : xs) v(i++) = x;
  return v;
}

const GroupParams& g7_19_3() {
  static const GroupParams G = make_group(7, 19, 3, {1, 3}, {1, 2});
  return G;
}

const EpsilonVector kEps = EpsilonVector::canonical(iv({2, -1, 0}));

Criterion ac1() {
  Criterion c{"AC1", "r-table golden"};
  auto t0 = Clock::now();
  const RTable r7 = r_table(g7_19_3().fp, 3), r19 = r_table(g7_19_3().fq, 3);
  const double elapsed = ms_since(t0);
  c.add("p=7 one-indexed (2,4,1)", r7.one_indexed_order() == iv({2, 4, 1}), vec(r7.one_indexed_order()));
  c.add("p=19 one-indexed (9,6,4)", r19.one_indexed_order() == iv({9, 6, 4}), vec(r19.one_indexed_order()));

  // x, norm of alpha + x (signed residues), 1-indexed class
  const std::vector<std::array<i64, 3>> t7 = {{0, 3, 1}, {1, -2, 2}, {2, 2, 2}, {3, 1, 3}, {-3, 2, 2}, {-2, -2, 2}, {-1, 3, 1}};
  const std::vector<std::array<i64, 3>> t19 = {
      {0, 2, 1},  {1, 4, 2},   {2, 8, 3},  {3, -5, 1},  {4, 3, 1},   {5, -6, 2}, {6, 6, 2},
      {7, 1, 3},  {8, -2, 1},  {9, -3, 1}, {-9, -2, 1}, {-8, 1, 3},  {-7, 6, 2}, {-6, -6, 2},
      {-5, 3, 1}, {-4, -5, 1}, {-3, 8, 3}, {-2, 4, 2},  {-1, 2, 1}};
  for (auto [f, table, name] : {std::tuple{&g7_19_3().fp, &t7, "norm table F_7"}, {&g7_19_3().fq, &t19, "norm table F_19"}}) {
    i64 bad = 0;
    for (auto [x, nr, cls] : *table) {
      const FieldElement a = f->add(f->alpha(), f->scalar(mod(x, f->p())));
      const i64 res = mod(f->dlog(a), 3);
      if (f->norm(a) != mod(nr, f->p()) || (res == 0 ? 3 : res) != cls) ++bad;
    }
    c.add(std::string(name) + " entry-by-entry", bad == 0, std::to_string(table->size() - bad) + "/" + std::to_string(table->size()));
  }
  c.add("runtime < 1 ms", elapsed < 1.0, std::to_string(elapsed) + " ms");
  return c;
}

Criterion ac2() {
  Criterion c{"AC2", "verdict for (7,19,3), eps (2,-1,0)"};
  const Verdict v = verdict(g7_19_3(), kEps);
  c.add("p-side inequalities (0,0,7)", v.sides[0].inequalities == iv({0, 0, 7}), vec(v.sides[0].inequalities));
  c.add("q-side inequalities (2,14,3)", v.sides[1].inequalities == iv({2, 14, 3}), vec(v.sides[1].inequalities));
  c.add("eigenvalue condition", v.eigen.ok);
  c.add("Eichler degree bound", v.eichler_ok);
  c.add("is_counterexample", v.is_counterexample);
  RunConfig cfg;
  cfg.p = 7;
  cfg.q = 19;
  cfg.d = 3;
  cfg.poly_p = {1, 3};
  cfg.poly_q = {1, 2};
  cfg.epsilon = kEps.values;
  const VerifyOutcome out = verify_config(cfg);
  c.add("pipeline exit code 0", out.exit_code == 0, std::to_string(out.exit_code));
  return c;
}

Criterion ac3() {
  Criterion c{"AC3", "mu-table golden and lattice assemblies"};
  const GroupParams& G = g7_19_3();
  const MuTable m7 = mu_table(G, kEps, Side::P), m19 = mu_table(G, kEps, Side::Q);
  c.add("side-7 cosets (0,0,7)", m7.coset == iv({0, 0, 7}), vec(m7.coset));
  c.add("side-19 cosets (2,14,3)", m19.coset == iv({2, 14, 3}), vec(m19.coset));

  const i64 n7 = crt(0, 19, 1, 7), n19 = crt(0, 7, 1, 19), c19 = crt(1, 19, 0, 7), c7 = crt(1, 7, 0, 19);
  const NElem e7{G.fp.one(), G.fq.zero()}, e19{G.fp.zero(), G.fq.one()};
  auto nq = [&](i64 k) { return NElem{G.fp.zero(), G.fq.scale(k, G.fq.alpha())}; };
  auto np = [&](i64 k) { return NElem{G.fp.scale(k, G.fp.alpha()), G.fq.zero()}; };

  // side 19: [(1,0)]_7 x kernel, five summands
  struct Expected {
    std::vector<Generator> gens;
    i64 mult;
  };
  const std::vector<Expected> l19 = {
      {{{e7, n7}, {e19, 0}, {nq(1), 0}, {NElem{}, c19}}, 1},
      {{{e7, n7}, {e19, 0}, {NElem{}, c19}}, 1},
      {{{e7, n7}, {e19, 0}, {nq(1), c19}}, 2},
      {{{e7, n7}, {e19, 0}, {nq(2), c19}}, 14},
      {{{e7, n7}, {e19, 0}, {nq(4), c19}}, 3},
  };
  const std::vector<Expected> l7 = {
      {{{e19, n19}, {e7, 0}, {np(1), 0}, {NElem{}, c7}}, 1},
      {{{e19, n19}, {e7, 0}, {NElem{}, c7}}, 1},
      {{{e19, n19}, {e7, 0}, {np(9), c7}}, 7},
  };
  for (auto [s, expected, name] : {std::tuple{Side::Q, &l19, "side-19 lattice, five summands"}, {Side::P, &l7, "side-7 lattice, three summands"}}) {
    const LatticeAssembly L = build_assembly(G, kEps, s, 2);
    bool match = L.summands.size() == expected->size();
    for (std::size_t i = 0; match && i < expected->size(); ++i)
      match = L.summands[i].multiplicity == (*expected)[i].mult && make_subgroup(G, (*expected)[i].gens) == L.summands[i].X;
    std::string detail;
    for (const auto& S : L.summands) detail += S.label + "^" + std::to_string(S.multiplicity) + " ";
    c.add(name, match, detail);
    bool character = false;
    try {
      character = verify_assembly_character(G, kEps, L);
    } catch (const Error&) {
    }
    c.add(std::string(name) + " character equals xi_n", character);
  }
  return c;
}

IntVector random_eps(std::mt19937_64& rng, i64 d) {
  std::uniform_int_distribution<i64> dist(-3, 3);
  while (true) {
    IntVector e(d);
    for (i64 i = 0; i + 1 < d; ++i) e(i) = dist(rng);
    e(d - 1) = 1 - e.head(d - 1).sum();
    if (std::abs(e(d - 1)) <= 3) return e;
  }
}

Criterion ac4() {
  Criterion c{"AC4", "oracle equivalence, brute-force properness vs circulant inequalities"};
  auto t0 = Clock::now();
  std::mt19937_64 rng(20240607);
  for (auto [p, q, d] : {std::tuple{7, 19, 3}, {31, 13, 3}, {11, 31, 5}}) {
    const GroupParams G = make_group(p, q, d, find_primitive_polynomial(p), find_primitive_polynomial(q));
    i64 agree = 0, proper = 0;
    const i64 trials = 200;
    for (i64 k = 0; k < trials; ++k) {
      const EpsilonVector e = EpsilonVector::canonical(random_eps(rng, d));
      bool all = true;
      for (Side s : {Side::P, Side::Q}) {
        const bool brute = xi_is_proper(G, e, s, ProperMethod::Brute);
        const bool circ = xi_is_proper(G, e, s, ProperMethod::Circulant);
        all = all && brute == circ;
        proper += brute;
      }
      agree += all;
    }
    c.add("(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(d) + ")", agree == trials,
          std::to_string(agree) + "/" + std::to_string(trials) + " agree, " + std::to_string(proper) + " proper side-checks");
  }
  const double elapsed = ms_since(t0);
  c.add("runtime < 2 min", elapsed < 120'000, std::to_string(elapsed / 1000) + " s");
  return c;
}

Criterion ac5() {
  Criterion c{"AC5", "character identities"};
  const GroupParams& G = g7_19_3();
  const NElem reps[] = {NElem{G.fp.one(), G.fq.zero()}, NElem{G.fp.zero(), G.fq.one()}, NElem{G.fp.one(), G.fq.one()},
                        NElem{G.fp.alpha(), G.fq.one()}, NElem{G.fp.alpha_pow(2), G.fq.one()}};
  bool regular = chi_value(G, kEps, NElem{}, 0) == static_cast<i64>(value(G.order()));
  for (const NElem& g : reps) regular = regular && chi_value(G, kEps, g, 0) == 0;
  c.add("(a) chi restricted to G is regular", regular);

  for (Side s : {Side::P, Side::Q}) {
    const i64 l = side_prime(G, s), o = other_prime(G, s);
    const IntClassFunction xi = xi_table(G, kEps, s);
    const NElem n = side_generator(G, s);
    i64 bad = 0;
    for (i64 i = 0; i < xi.group.size(); ++i) {
      const Vec3 g = xi.group.coords(i);
      const NElem hn = n_add(G, embed(G, s, side_field(G, s).elem(g(0), g(1))), n);
      if (chi_value(G, kEps, hn, crt(g(2), l, 1, o)) != o * o * xi.values(i)) ++bad;
    }
    c.add("(b) chi(h n, c) = |N_" + std::to_string(o) + "| xi_n over N_" + std::to_string(l) + " x U_" + std::to_string(l),
          bad == 0, std::to_string(xi.group.size() - bad) + "/" + std::to_string(xi.group.size()));
  }

  std::mt19937_64 rng(7);
  i64 round = 0;
  const i64 trials = 100;
  for (i64 k = 0; k < trials; ++k) {
    const EpsilonVector e = EpsilonVector::canonical(random_eps(rng, 3));
    const EpsilonVector back = extract_eps(G, [&](NElem g, i64 j) { return chi_value(G, e, g, j); });
    round += back.values == e.values;
  }
  c.add("(c) extract_eps . chi_value = id", round == trials, std::to_string(round) + "/" + std::to_string(trials));
  return c;
}

Criterion ac6() {
  Criterion c{"AC6", "Gauss-sum identity and delta bound"};
  for (i64 p : {7, 19, 163, 167}) {
    const GaussSumCheck g = gauss_sum_check(make_field(p, find_primitive_polynomial(p)), 3);
    c.add("p=" + std::to_string(p) + " exact |omega|^2 = p", g.ok(),
          "sum D^2 - sum D_i D_j = " + std::to_string(g.exact_value) + ", expected " + std::to_string(9 * p) +
              ", float " + std::to_string(g.omega_sq) + (p == 167 ? " (3 does not divide 166)" : ""));
  }
  const SearchResult r = search_prime_pairs(3, 1, 200);
  bool all = !r.primes.empty();
  for (const auto& pr : r.primes) all = all && pr.gauss.ok();
  c.add("every field built by the search", all, std::to_string(r.primes.size()) + " fields");
  bool delta = true;
  for (i64 p : admissible_primes(3, 400)) delta = delta && gauss_sum_check(prime_record(p, 3).rt).delta_ok;
  for (i64 p : admissible_primes(5, 400)) delta = delta && gauss_sum_check(prime_record(p, 5).rt).delta_ok;
  c.add("delta bound on all computed tables (d=3,5, p<400)", delta);
  return c;
}

Criterion ac7() {
  Criterion c{"AC7", "search golden"};
  auto t0 = Clock::now();
  SearchOptions opt;
  opt.effective_check = true;
  const SearchResult r = search_prime_pairs(3, 1, 200, opt);
  const double elapsed = ms_since(t0);
  c.add("threshold 162", std::abs(r.threshold - 162) < 1e-9, std::to_string(r.threshold));
  const std::string first = r.pairs.empty() ? "none" : std::to_string(r.pairs[0].p) + "," + std::to_string(r.pairs[0].q);
  c.add("smallest admissible pair (163,167)", !r.pairs.empty() && r.pairs[0].p == 163 && r.pairs[0].q == 167,
        "found (" + first + "); 3 does not divide 167-1, so 167 is not admissible");
  bool effective = !r.pairs.empty();
  for (const auto& rec : r.pairs) effective = effective && rec.effective && rec.effective->ok;
  c.add("effective checks on every pair", effective);
  const std::string f1 = to_string(group_order(163, 167, 3));
  c.add("order for (163,167) = 2^7 * 3^4 * 7 * 41 * 83 * 163^2 * 167^2", f1 == "2^7 * 3^4 * 7 * 41 * 83 * 163^2 * 167^2", f1);
  const std::string f2 = to_string(group_order(7, 19, 3));
  c.add("order for (7,19) = 2^7 * 3^2 * 5 * 7^2 * 19^2", f2 == "2^7 * 3^2 * 5 * 7^2 * 19^2", f2);
  c.add("runtime < 30 s", elapsed < 30'000, std::to_string(elapsed / 1000) + " s");
  return c;
}

Criterion ac8() {
  Criterion c{"AC8", "degree census"};
  const DegreeCensus d = degree_census(g7_19_3());
  std::string degrees;
  for (auto [deg, n] : d.multiplicity) degrees += std::to_string(deg) + "x" + std::to_string(n) + " ";
  const bool set = d.multiplicity.size() == 4 && d.multiplicity.count(1) && d.multiplicity.count(48) &&
                   d.multiplicity.count(360) && d.multiplicity.count(5760);
  c.add("degrees {1, 48, 360, 5760}", set, degrees);
  c.add("sum of squares 101888640 = |G|", d.sum_squares == 101'888'640 && d.sum_matches_order, to_string(d.sum_squares));
  c.add("minimal nonlinear degree >= 3", d.min_nonlinear >= 3, std::to_string(d.min_nonlinear));
  return c;
}

}  // namespace

int main() {
  bool all = true;
  for (auto run : {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8}) {
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.add("threw", false, e.what());
    }
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << "\n";
    for (const auto& k : c.checks)
      std::cout << "    " << (k.ok ? "ok   " : "FAIL ") << k.name << (k.detail.empty() ? "" : ": " + k.detail) << "\n";
    all = all && c.ok();
  }
  return all ? 0 : 1;
}
