#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "zassenhaus/core.hpp"

namespace zassenhaus {

struct PrimeRecord {
  i64 p = 0;
  Poly poly;
  RTable rt;
  GaussSumCheck gauss;
};

struct EffectiveCheck {
  bool exhaustive = false;
  i64 tested = 0;
  bool ok = false;
};

struct PairRecord {
  i64 p = 0, q = 0, d = 0, M = 0;
  bool threshold_ok = false;
  bool gauss_ok = false;
  std::optional<EffectiveCheck> effective;
  bool guaranteed = false;

  std::tuple<i64, i64, i64, i64> key() const { return {p, q, d, M}; }
  std::string line() const;  // "p q d M guaranteed_flag"
  friend bool operator==(const PairRecord& a, const PairRecord& b);
};

struct SearchOptions {
  bool effective_check = false;
  i64 samples = 50;
  i64 exhaustive_limit = 100'000;
  unsigned threads = 0;  // 0: hardware concurrency
  std::function<void(const PairRecord&)> on_record;
};

struct SearchResult {
  double threshold = 0;
  std::vector<i64> below_threshold;  // admissible, but the guarantee needs a per-eps check
  std::vector<PrimeRecord> primes;   // admissible primes at or above threshold
  std::vector<PairRecord> pairs;
};

// primes p <= p_max with d | p-1
std::vector<i64> admissible_primes(i64 d, i64 p_max);
PrimeRecord prime_record(i64 p, i64 d);
// every eps with |eps_i| <= M and sum 1 (or a seeded sample when the box is large) passes both systems
EffectiveCheck effective_check(const RTable& rp, const RTable& rq, i64 M, const SearchOptions& opt);

// Identical keys must carry identical payloads; throws CharacterMismatch otherwise.
void merge_record(std::map<std::tuple<i64, i64, i64, i64>, PairRecord>& into, const PairRecord& rec);

SearchResult search_prime_pairs(i64 d, i64 M, i64 p_max, const SearchOptions& opt = {});

}  // namespace zassenhaus
