#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zassenhaus/report.hpp"
#include "zassenhaus/search.hpp"

namespace zassenhaus::cli {

// Exit codes: 0 counterexample certified (or command succeeded), 1 checks failed, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

VerifyOutcome cmd_verify(const std::string& config_path, const std::vector<i64>& aux_primes = {});
std::string cmd_rtable(i64 p, i64 d, Poly poly, const std::string& csv_path = "");
ojson cmd_mu(const std::string& config_path);
SearchResult cmd_search(i64 d, i64 M, i64 p_max, const std::string& out_path, bool effective_check);
int cmd_selftest(std::ostream& out);

}  // namespace zassenhaus::cli
