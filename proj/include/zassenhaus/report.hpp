#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "zassenhaus/lattice.hpp"

namespace zassenhaus {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  i64 p = 0, q = 0, d = 0;
  Poly poly_p, poly_q;
  IntVector epsilon;
  struct Checks {
    bool brute_force_oracles = true;
    bool assembly_character = true;
    bool eigenvalue_direct = true;
    i64 exhaustive_prime_limit = 64;  // oracles whose cost grows like l^4 run only up to this prime
  };
  struct Options {
    std::vector<i64> aux_primes;  // empty: every prime dividing |G|
    std::optional<i64> M;
    std::optional<i64> p_max;
    Checks checks;
  } options;
};

// ConfigParse with the offending field (or line:column for malformed text).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
ojson config_json(const RunConfig& c);  // canonical form, used for hashing

std::string fnv1a64(const std::string& s);

struct ReportDocument {
  ojson certificate;  // deterministic section
  std::string certificate_hash;
  ojson timing_ms = ojson::object();

  std::string dump() const;
  static ReportDocument parse(const std::string& text);
};

struct VerifyOutcome {
  int exit_code = 2;
  ReportDocument report;
  std::vector<std::string> failures;  // cross-check failures beyond the verdict
};

// make_group -> r-tables -> inequalities -> mu -> eigenvalue -> assemblies -> character checks.
VerifyOutcome verify_config(const RunConfig& cfg);

ojson to_json(const RTable& rt);
ojson to_json(const MuTable& mu);
ojson to_json(const GaussSumCheck& g);
ojson to_json(const GroupParams& G, const LatticeAssembly& L);
ojson mu_report(const GroupParams& G, const EpsilonVector& eps);

}  // namespace zassenhaus
