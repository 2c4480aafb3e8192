#include <functional>
#include <ostream>
#include <random>

#include "zassenhaus/cli.hpp"
#include "zassenhaus/error.hpp"

namespace zassenhaus::cli {

namespace {

IntVector random_eps(std::mt19937_64& rng, i64 d, i64 bound) {
  std::uniform_int_distribution<i64> dist(-bound, bound);
  while (true) {
    IntVector e(d);
    for (i64 i = 0; i + 1 < d; ++i) e(i) = dist(rng);
    e(d - 1) = 1 - e.head(d - 1).sum();
    if (std::abs(e(d - 1)) <= bound) return e;
  }
}

struct Suite {
  std::string name;
  std::function<std::pair<int, int>()> body;
};

std::vector<GroupParams> small_groups() {
  std::vector<GroupParams> out;
  for (auto [p, q, d] : {std::tuple{7, 19, 3}, {31, 13, 3}, {11, 31, 5}})
    out.push_back(make_group(p, q, d, find_primitive_polynomial(p), find_primitive_polynomial(q)));
  return out;
}

}  // namespace

int cmd_selftest(std::ostream& out) {
  std::mt19937_64 rng(20261014);
  std::vector<Suite> suites;

  suites.push_back({"xi properness: bruteforce vs circulant", [&] {
                      int pass = 0, total = 0;
                      for (const auto& G : small_groups()) {
                        for (int k = 0; k < 30; ++k) {
                          EpsilonVector e = EpsilonVector::canonical(random_eps(rng, G.d, 3));
                          for (Side s : {Side::P, Side::Q}) {
                            ++total;
                            pass += xi_is_proper(G, e, s, ProperMethod::Brute) == xi_is_proper(G, e, s, ProperMethod::Circulant);
                          }
                        }
                      }
                      return std::pair{pass, total};
                    }});

  suites.push_back({"inner products: closed form vs bruteforce", [&] {
                      int pass = 0, total = 0;
                      const GroupParams G = make_group(7, 19, 3, {1, 3}, {1, 2});
                      for (int k = 0; k < 40; ++k) {
                        EpsilonVector e = EpsilonVector::canonical(random_eps(rng, 3, 3));
                        Side s = k % 2 ? Side::Q : Side::P;
                        IntClassFunction xi = xi_table(G, e, s);
                        const i64 l = xi.group.ell;
                        std::uniform_int_distribution<i64> w(0, l - 1);
                        Vec3 dual(w(rng), w(rng), w(rng));
                        ++total;
                        pass += inner_product(xi, LinearChar{xi.group, dual}) == inner_product_closed(G, e, s, dual);
                      }
                      return std::pair{pass, total};
                    }});

  suites.push_back({"Gauss sums", [&] {
                      int pass = 0, total = 0;
                      for (i64 p : {7, 19, 163, 181, 193, 199}) {
                        auto poly = find_primitive_polynomial(p);
                        ++total;
                        pass += gauss_sum_check(make_field(p, poly.first, poly.second), 3).ok();
                      }
                      return std::pair{pass, total};
                    }});

  suites.push_back({"r-table: dlog route vs norm route", [&] {
                      int pass = 0, total = 0;
                      for (i64 p : {7, 13, 19, 31, 37, 43, 163}) {
                        auto poly = find_primitive_polynomial(p);
                        QuadField f = make_field(p, poly.first, poly.second);
                        ++total;
                        pass += r_table(f, 3).r == r_table_by_norm(f, 3).r;
                      }
                      return std::pair{pass, total};
                    }});

  suites.push_back({"round trips: extract_eps(chi) and report JSON", [&] {
                      int pass = 0, total = 0;
                      for (const auto& G : small_groups()) {
                        for (int k = 0; k < 10; ++k) {
                          EpsilonVector e = EpsilonVector::canonical(random_eps(rng, G.d, 3));
                          ChiOracle chi = [&](NElem g, i64 j) { return chi_value(G, e, g, j); };
                          ++total;
                          pass += extract_eps(G, chi).values == e.values;
                        }
                      }
                      RunConfig cfg;
                      cfg.p = 7;
                      cfg.q = 19;
                      cfg.d = 3;
                      cfg.poly_p = {1, 3};
                      cfg.poly_q = {1, 2};
                      cfg.epsilon = IntVector(3);
                      cfg.epsilon << 2, -1, 0;
                      ReportDocument r = verify_config(cfg).report;
                      ++total;
                      pass += ReportDocument::parse(r.dump()).dump() == r.dump();
                      return std::pair{pass, total};
                    }});

  bool ok = true;
  for (auto& s : suites) {
    std::pair<int, int> res{0, 1};
    try {
      res = s.body();
    } catch (const std::exception& e) {
      out << s.name << ": exception " << e.what() << "\n";
    }
    out << s.name << ": " << res.first << "/" << res.second << " passed\n";
    ok = ok && res.first == res.second;
  }
  out << (ok ? "all suites passed" : "FAILURES") << "\n";
  return ok ? 0 : 1;
}

}  // namespace zassenhaus::cli
