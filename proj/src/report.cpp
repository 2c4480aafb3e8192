#include "zassenhaus/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "zassenhaus/error.hpp"

namespace zassenhaus {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ConfigParse, "field '" + field + "': " + msg);
}

i64 get_int(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) bad(path + key, "missing (no defaults for parameters)");
  const json& v = j.at(key);
  if (!v.is_number_integer()) bad(path + key, "expected an integer, got " + v.dump());
  return v.get<i64>();
}

std::vector<i64> get_ints(const json& j, const std::string& key, const std::string& path, std::optional<std::size_t> n) {
  if (!j.contains(key)) bad(path + key, "missing");
  const json& v = j.at(key);
  if (!v.is_array()) bad(path + key, "expected an array of integers, got " + v.dump());
  std::vector<i64> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) bad(path + key + "[" + std::to_string(i) + "]", "expected an integer, got " + v[i].dump());
    out.push_back(v[i].get<i64>());
  }
  if (n && out.size() != *n)
    bad(path + key, "expected " + std::to_string(*n) + " entries, got " + std::to_string(out.size()));
  return out;
}

bool get_bool(const json& j, const std::string& key, const std::string& path, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) bad(path + key, "expected true or false");
  return j.at(key).get<bool>();
}

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  if (!j.is_object()) bad(path.empty() ? "<root>" : path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) bad(path + it.key(), "unknown field");
}

ojson ints(const IntVector& v) {
  ojson a = ojson::array();
  for (i64 i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

ojson elem_json(const FieldElement& x) { return ojson::array({x.u, x.v}); }

ojson dlog_json(const QuadField& f, const FieldElement& x) { return x.is_zero() ? ojson(nullptr) : ojson(f.dlog(x)); }

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ConfigParse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  only_keys(j, {"p", "q", "d", "poly_p", "poly_q", "epsilon", "options"}, "");
  RunConfig c;
  c.p = get_int(j, "p", "");
  c.q = get_int(j, "q", "");
  c.d = get_int(j, "d", "");
  auto pp = get_ints(j, "poly_p", "", 2);
  auto pq = get_ints(j, "poly_q", "", 2);
  c.poly_p = {pp[0], pp[1]};
  c.poly_q = {pq[0], pq[1]};
  if (c.d < 1 || c.d > 1000) bad("d", "out of range");
  auto e = get_ints(j, "epsilon", "", static_cast<std::size_t>(c.d));
  c.epsilon = Eigen::Map<const IntVector>(e.data(), static_cast<Eigen::Index>(e.size()));
  if (j.contains("options")) {
    const json& o = j.at("options");
    only_keys(o, {"aux_primes", "search", "checks"}, "options.");
    if (o.contains("aux_primes")) c.options.aux_primes = get_ints(o, "aux_primes", "options.", std::nullopt);
    if (o.contains("search")) {
      const json& s = o.at("search");
      only_keys(s, {"M", "p_max"}, "options.search.");
      if (s.contains("M")) c.options.M = get_int(s, "M", "options.search.");
      if (s.contains("p_max")) c.options.p_max = get_int(s, "p_max", "options.search.");
    }
    if (o.contains("checks")) {
      const json& k = o.at("checks");
      only_keys(k, {"brute_force_oracles", "assembly_character", "eigenvalue_direct", "exhaustive_prime_limit"},
                "options.checks.");
      auto& ch = c.options.checks;
      ch.brute_force_oracles = get_bool(k, "brute_force_oracles", "options.checks.", ch.brute_force_oracles);
      ch.assembly_character = get_bool(k, "assembly_character", "options.checks.", ch.assembly_character);
      ch.eigenvalue_direct = get_bool(k, "eigenvalue_direct", "options.checks.", ch.eigenvalue_direct);
      if (k.contains("exhaustive_prime_limit"))
        ch.exhaustive_prime_limit = get_int(k, "exhaustive_prime_limit", "options.checks.");
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigParse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ojson config_json(const RunConfig& c) {
  ojson j;
  j["p"] = c.p;
  j["q"] = c.q;
  j["d"] = c.d;
  j["poly_p"] = {c.poly_p.first, c.poly_p.second};
  j["poly_q"] = {c.poly_q.first, c.poly_q.second};
  j["epsilon"] = ints(c.epsilon);
  ojson o;
  o["aux_primes"] = c.options.aux_primes;
  o["search"] = {{"M", c.options.M ? ojson(*c.options.M) : ojson(nullptr)},
                 {"p_max", c.options.p_max ? ojson(*c.options.p_max) : ojson(nullptr)}};
  const auto& ch = c.options.checks;
  o["checks"] = {{"brute_force_oracles", ch.brute_force_oracles},
                 {"assembly_character", ch.assembly_character},
                 {"eigenvalue_direct", ch.eigenvalue_direct},
                 {"exhaustive_prime_limit", ch.exhaustive_prime_limit}};
  j["options"] = o;
  return j;
}

std::string fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ReportDocument::dump() const {
  ojson j;
  j["certificate"] = certificate;
  j["certificate_hash"] = certificate_hash;
  j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

ReportDocument ReportDocument::parse(const std::string& text) {
  ojson j = ojson::parse(text);
  ReportDocument r;
  r.certificate = j.at("certificate");
  r.certificate_hash = j.at("certificate_hash").get<std::string>();
  r.timing_ms = j.at("timing_ms");
  if (fnv1a64(r.certificate.dump()) != r.certificate_hash)
    throw Error(ErrorCode::ConfigParse, "certificate hash does not match its contents");
  return r;
}

ojson to_json(const RTable& rt) {
  ojson j;
  j["prime"] = rt.p;
  j["d"] = rt.d;
  j["zero_indexed"] = ints(rt.r);
  j["one_indexed"] = ints(rt.one_indexed_order());
  return j;
}

ojson to_json(const MuTable& mu) {
  ojson j;
  j["trivial"] = mu.trivial;
  j["kernel_N"] = mu.kernel_n;
  j["kernel_contains_U"] = mu.u_in_kernel;
  j["coset"] = ints(mu.coset);
  j["coset_offsets"] = ints(mu.offset);
  return j;
}

ojson to_json(const GaussSumCheck& g) {
  ojson j;
  j["prime"] = g.p;
  j["omega_sq"] = g.omega_sq;
  j["float_ok"] = g.float_ok;
  if (g.has_exact) {
    j["exact_9_omega_sq"] = g.exact_value;
    j["exact_ok"] = g.exact_ok;
  }
  j["max_delta"] = g.max_delta;
  j["delta_bound"] = delta_bound(g.p, g.d);
  j["delta_ok"] = g.delta_ok;
  return j;
}

ojson to_json(const GroupParams& G, const LatticeAssembly& L) {
  ojson j;
  j["side"] = std::string(to_string(L.side));
  j["ell"] = L.ell;
  j["aux_prime"] = L.aux_prime;
  ojson list = ojson::array();
  for (const LatticeSummand& S : L.summands) {
    ojson s;
    s["label"] = S.label;
    s["multiplicity"] = S.multiplicity;
    s["prime"] = S.prime;
    s["order"] = S.X.order;
    s["projective"] = S.projective;
    s["formula"] = std::string(to_string(S.formula));
    ojson gens = ojson::array();
    for (const Generator& g : S.X.generators) {
      gens.push_back({{"x", elem_json(g.n.x)},
                      {"y", elem_json(g.n.y)},
                      {"x_dlog", dlog_json(G.fp, g.n.x)},
                      {"y_dlog", dlog_json(G.fq, g.n.y)},
                      {"c_exponent", g.u}});
    }
    s["generators"] = gens;
    list.push_back(s);
  }
  j["summands"] = list;
  j["degree"] = L.degree;
  j["xi_degree"] = L.xi_degree;
  return j;
}

ojson mu_report(const GroupParams& G, const EpsilonVector& eps) {
  ojson j = ojson::array();
  for (Side s : {Side::P, Side::Q}) {
    ojson e;
    e["side"] = std::string(to_string(s));
    e["prime"] = side_prime(G, s);
    e["mu"] = to_json(mu_table(G, eps, s));
    j.push_back(e);
  }
  return j;
}

VerifyOutcome verify_config(const RunConfig& cfg) {
  VerifyOutcome out;
  const GroupParams G = make_group(cfg.p, cfg.q, cfg.d, cfg.poly_p, cfg.poly_q);
  const EpsilonVector eps = EpsilonVector::canonical(cfg.epsilon);
  const auto& checks = cfg.options.checks;

  std::vector<i64> aux = cfg.options.aux_primes;
  if (aux.empty())
    for (auto [pr, e] : G.order()) aux.push_back(pr);
  for (i64 a : aux)
    if (!is_prime(a)) throw Error(ErrorCode::BadAuxPrime, std::to_string(a) + " is not prime");

  const Verdict v = verdict(G, eps, checks.eigenvalue_direct ? 50'000'000 : 0);

  ojson c;
  c["config_hash"] = fnv1a64(config_json(cfg).dump());
  ojson params;
  params["p"] = G.p;
  params["q"] = G.q;
  params["d"] = G.d;
  params["poly_p"] = {v.poly_p.first, v.poly_p.second};
  params["poly_q"] = {v.poly_q.first, v.poly_q.second};
  params["group_order"] = to_string(value(G.order()));
  params["group_order_factored"] = to_string(G.order());
  c["params"] = params;

  ojson ej;
  ej["canonical"] = ints(eps.values);
  ojson labels = ojson::array();
  for (i64 i = 0; i < G.d; ++i) labels.push_back("(alpha^" + std::to_string(i) + ",1)");
  ej["labels"] = labels;
  ej["sum"] = v.eps_sum;
  ej["support"] = v.support;
  c["epsilon"] = ej;

  ojson sides = ojson::array();
  for (const SideReport& r : v.sides) {
    ojson s;
    s["side"] = std::string(to_string(r.side));
    s["prime"] = r.prime;
    const NElem n = side_generator(G, r.side);
    s["n"] = {{"x", elem_json(n.x)}, {"y", elem_json(n.y)}};
    s["r_table"] = to_json(r.rt);
    s["r_table_norm_route_agrees"] = r_table_by_norm(side_field(G, r.side), G.d).r == r.rt.r;
    if (r_table_by_norm(side_field(G, r.side), G.d).r != r.rt.r) out.failures.push_back("r-table routes disagree");
    s["epsilon_side_order"] = ints(r.eps_side);
    s["inequalities"] = ints(r.inequalities);
    s["inequalities_ok"] = r.inequalities_ok;
    s["mu"] = to_json(r.mu);

    ojson proper;
    if (checks.brute_force_oracles && r.prime <= checks.exhaustive_prime_limit) {
      bool brute = xi_is_proper(G, eps, r.side, ProperMethod::Brute);
      bool circ = xi_is_proper(G, eps, r.side, ProperMethod::Circulant);
      proper["checked"] = true;
      proper["bruteforce"] = brute;
      proper["circulant"] = circ;
      if (brute != circ) out.failures.push_back("xi properness oracles disagree on the " + std::string(to_string(r.side)) + "-side");
    } else {
      proper["checked"] = false;
      proper["reason"] = checks.brute_force_oracles ? "prime above exhaustive_prime_limit" : "disabled";
    }
    s["xi_proper"] = proper;

    GaussSumCheck g = gauss_sum_check(r.rt);
    s["gauss_sum"] = to_json(g);
    if (!g.ok()) out.failures.push_back("Gauss-sum identity fails for " + std::to_string(r.prime));

    ojson asm_list = ojson::array();
    ojson character;
    bool character_done = false;
    for (i64 a : aux) {
      if (a == r.prime) continue;
      try {
        LatticeAssembly L = build_assembly(G, eps, r.side, a);
        for (const auto& S : L.summands)
          if (!S.projective) out.failures.push_back("summand " + S.label + " is not projective for " + std::to_string(a));
        asm_list.push_back(to_json(G, L));
        if (!character_done) {
          character_done = true;
          if (checks.assembly_character && r.prime <= checks.exhaustive_prime_limit) {
            character["checked"] = true;
            try {
              character["ok"] = verify_assembly_character(G, eps, L);
            } catch (const Error& e) {
              character["ok"] = false;
              character["detail"] = e.what();
              out.failures.push_back(e.what());
            }
          } else {
            character["checked"] = false;
            character["reason"] = checks.assembly_character ? "prime above exhaustive_prime_limit" : "disabled";
          }
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NegativeMultiplicity) throw;
        asm_list.push_back({{"aux_prime", a}, {"error", e.what()}});
      }
    }
    s["assemblies"] = asm_list;
    if (!character_done) character = {{"checked", false}, {"reason", "no assembly built"}};
    s["assembly_character"] = character;
    sides.push_back(s);
  }
  c["sides"] = sides;

  ojson eig;
  eig["ok"] = v.eigen.ok;
  eig["eps_sum"] = v.eigen.eps_sum;
  ojson fam = ojson::array();
  for (const auto& f : v.eigen.families)
    fam.push_back({{"family", f.family}, {"degree", f.degree}, {"s", f.s}, {"direct", f.direct}});
  eig["families"] = fam;
  c["eigenvalue"] = eig;

  ojson census;
  ojson degs = ojson::array();
  for (auto [deg, m] : v.census.multiplicity) degs.push_back({{"degree", deg}, {"count", m}});
  census["degrees"] = degs;
  census["sum_of_squares"] = to_string(v.census.sum_squares);
  census["sum_matches_order"] = v.census.sum_matches_order;
  census["min_nonlinear_degree"] = v.census.min_nonlinear;
  c["degree_census"] = census;
  c["eichler_ok"] = v.eichler_ok;
  c["centralizer_ok"] = v.centralizer_ok;

  const i64 M = cfg.options.M.value_or(std::max<i64>(1, eps.max_abs()));
  ojson cor;
  cor["M"] = M;
  cor["threshold"] = guarantee_threshold(G.d, M);
  const bool above = static_cast<double>(G.p) >= guarantee_threshold(G.d, M) &&
                     static_cast<double>(G.q) >= guarantee_threshold(G.d, M);
  cor["guaranteed"] = above && gauss_sum_check(v.sides[0].rt).ok() && gauss_sum_check(v.sides[1].rt).ok();
  cor["eps_within_M"] = eps.max_abs() <= M;
  c["guarantee"] = cor;

  c["is_counterexample"] = v.is_counterexample;
  ojson reasons = ojson::array();
  for (const auto& r : v.reasons) reasons.push_back(r);
  for (const auto& f : out.failures) reasons.push_back("cross-check failed: " + f);
  c["reasons"] = reasons;
  c["scope"] = "certifies the hypotheses of the existence theorem for a unit of order pq; the unit itself is not constructed";

  out.report.certificate = c;
  out.report.certificate_hash = fnv1a64(c.dump());
  out.exit_code = v.is_counterexample && out.failures.empty() ? 0 : 1;
  return out;
}

}  // namespace zassenhaus
