#include "zassenhaus/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zassenhaus/error.hpp"

namespace zassenhaus::cli {

namespace {

Poly parse_poly(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ConfigParse, "--poly expects C1,C0, got " + s);
  try {
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigParse, "--poly expects integers C1,C0, got " + s);
  }
}

}  // namespace

VerifyOutcome cmd_verify(const std::string& config_path, const std::vector<i64>& aux_primes) {
  auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = load_config(config_path);
  if (!aux_primes.empty()) cfg.options.aux_primes = aux_primes;
  VerifyOutcome v = verify_config(cfg);
  auto t1 = std::chrono::steady_clock::now();
  v.report.timing_ms["verify"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return v;
}

std::string cmd_rtable(i64 p, i64 d, Poly poly, const std::string& csv_path) {
  const QuadField f = make_field(p, poly.first, poly.second);
  const RTable rt = r_table(f, d);
  std::ostringstream os;
  os << "(";
  for (i64 i = 1; i <= d; ++i) os << (i > 1 ? ", " : "") << rt.one_indexed(i);
  os << ")\n";
  os << "x      Nr(alpha+x)  dlog  class(1..d)\n";
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw Error(ErrorCode::ConfigParse, "cannot write " + csv_path);
    csv << "x,norm,dlog,residue,one_indexed_class\n";
  }
  for (i64 x = 0; x < p; ++x) {
    const FieldElement a = f.add(f.alpha(), f.scalar(x));
    const i64 k = f.dlog(a), res = mod(k, d), cls = res == 0 ? d : res;
    os << x << "\t" << f.norm(a) << "\t" << k << "\t" << cls << "\n";
    if (csv) csv << x << "," << f.norm(a) << "," << k << "," << res << "," << cls << "\n";
  }
  return os.str();
}

ojson cmd_mu(const std::string& config_path) {
  const RunConfig cfg = load_config(config_path);
  const GroupParams G = make_group(cfg.p, cfg.q, cfg.d, cfg.poly_p, cfg.poly_q);
  ojson j;
  j["epsilon"] = std::vector<i64>(cfg.epsilon.data(), cfg.epsilon.data() + cfg.epsilon.size());
  j["sides"] = mu_report(G, EpsilonVector::canonical(cfg.epsilon));
  return j;
}

SearchResult cmd_search(i64 d, i64 M, i64 p_max, const std::string& out_path, bool effective) {
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::ConfigParse, "cannot write " + out_path);
  SearchOptions opt;
  opt.effective_check = effective;
  opt.on_record = [&](const PairRecord& r) { out << r.line() << std::endl; };  // flushed per record
  return search_prime_pairs(d, M, p_max, opt);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifier for torsion-unit counterexample parameters"};
  app.require_subcommand(1);

  std::string config, out_path, csv;
  std::vector<i64> aux;
  i64 p = 0, d = 0, M = 0, p_max = 0;
  std::string poly;
  bool effective = false;

  auto* verify = app.add_subcommand("verify", "run the full certificate pipeline on a config");
  verify->add_option("--config", config, "config file")->required();
  verify->add_option("--aux-prime", aux, "auxiliary primes for the lattice assemblies");
  verify->add_option("--out", out_path, "also write the report here");

  auto* rtable = app.add_subcommand("rtable", "print the r-table of one field");
  rtable->add_option("-p", p, "prime")->required();
  rtable->add_option("-d", d, "d")->required();
  rtable->add_option("--poly", poly, "C1,C0 for X^2 - C1 X + C0")->required();
  rtable->add_option("--csv", csv, "write the norm table as CSV");

  auto* mu = app.add_subcommand("mu", "print the mu-tables of a config");
  mu->add_option("--config", config, "config file")->required();

  auto* search = app.add_subcommand("search", "enumerate prime pairs above the guarantee threshold");
  search->add_option("-d", d, "d")->required();
  search->add_option("-M", M, "bound on |eps_i|")->required();
  search->add_option("--max", p_max, "largest prime")->required();
  search->add_option("--out", out_path, "record file")->required();
  search->add_flag("--effective-check", effective, "check every bounded eps on each pair");

  auto* selftest = app.add_subcommand("selftest", "run the oracle-equivalence suites");

  std::vector<const char*> argv{"zassenhaus"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      VerifyOutcome v = cmd_verify(config, aux);
      const std::string text = v.report.dump();
      out << text;
      if (!out_path.empty()) std::ofstream(out_path) << text;
      for (const auto& r : v.report.certificate["reasons"]) err << "reason: " << r.get<std::string>() << "\n";
      return v.exit_code;
    }
    if (*rtable) {
      out << cmd_rtable(p, d, parse_poly(poly), csv);
      return 0;
    }
    if (*mu) {
      out << cmd_mu(config).dump(2) << "\n";
      return 0;
    }
    if (*search) {
      SearchResult r = cmd_search(d, M, p_max, out_path, effective);
      out << "threshold " << r.threshold << "\n";
      for (i64 q : r.below_threshold) out << "prime " << q << ": below-threshold, per-eps check required\n";
      bool all = true;
      for (const auto& pr : r.primes) {
        out << "prime " << pr.p << ": poly (" << pr.poly.first << "," << pr.poly.second << ") r = " << pr.rt.r.transpose()
            << " gauss " << (pr.gauss.ok() ? "ok" : "FAILED") << "\n";
      }
      for (const auto& rec : r.pairs) all = all && rec.guaranteed;
      out << r.pairs.size() << " pairs written to " << out_path << "\n";
      return all ? 0 : 1;
    }
    if (*selftest) return cmd_selftest(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace zassenhaus::cli
