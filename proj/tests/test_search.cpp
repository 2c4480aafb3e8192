#include <doctest.h>

#include <algorithm>
#include <random>

#include "zassenhaus/error.hpp"
#include "zassenhaus/search.hpp"

using namespace zassenhaus;

TEST_CASE("admissible primes") {
  CHECK(admissible_primes(3, 50) == std::vector<i64>{7, 13, 19, 31, 37, 43});
  for (i64 p : admissible_primes(5, 400)) {
    CHECK(is_prime(p));
    CHECK((p - 1) % 5 == 0);
  }
}

TEST_CASE("search golden d=3 M=1") {
  SearchResult r = search_prime_pairs(3, 1, 200);
  CHECK(r.threshold == doctest::Approx(162));
  CHECK(r.below_threshold.front() == 7);
  CHECK(std::find(r.below_threshold.begin(), r.below_threshold.end(), 19) != r.below_threshold.end());
  REQUIRE_FALSE(r.pairs.empty());
  CHECK(r.pairs.front().p == 163);
  CHECK(r.pairs.front().q == 181);
  for (const auto& pr : r.primes) {
    CHECK(pr.gauss.ok());
    CHECK(pr.p >= 162);
  }
  for (const auto& rec : r.pairs) {
    CHECK(rec.p < rec.q);
    CHECK(rec.guaranteed);
  }
  // pairs come out in lexicographic order
  CHECK(std::is_sorted(r.pairs.begin(), r.pairs.end(), [](auto& a, auto& b) { return a.key() < b.key(); }));
}

TEST_CASE("search below threshold is empty") {
  SearchResult r = search_prime_pairs(3, 1, 150);
  CHECK(r.pairs.empty());
  CHECK(r.primes.empty());
  CHECK_FALSE(r.below_threshold.empty());
}

TEST_CASE("search is deterministic across thread counts") {
  SearchOptions one;
  one.threads = 1;
  one.effective_check = true;
  SearchOptions many = one;
  many.threads = 4;
  SearchResult a = search_prime_pairs(3, 1, 260, one), b = search_prime_pairs(3, 1, 260, many);
  CHECK(a.pairs == b.pairs);
  std::vector<std::string> streamed;
  many.on_record = [&](const PairRecord& r) { streamed.push_back(r.line()); };
  SearchResult c = search_prime_pairs(3, 1, 260, many);
  REQUIRE(streamed.size() == c.pairs.size());
  for (std::size_t i = 0; i < streamed.size(); ++i) CHECK(streamed[i] == c.pairs[i].line());
}

TEST_CASE("effective check") {
  PrimeRecord a = prime_record(163, 3), b = prime_record(181, 3);
  SearchOptions opt;
  EffectiveCheck e = effective_check(a.rt, b.rt, 1, opt);
  CHECK(e.exhaustive);
  CHECK(e.ok);
  CHECK(e.tested > 0);
  opt.exhaustive_limit = 1;
  opt.samples = 20;
  EffectiveCheck s = effective_check(a.rt, b.rt, 3, opt);
  CHECK_FALSE(s.exhaustive);
  CHECK(s.ok);
}

TEST_CASE("merge by key") {
  std::map<std::tuple<i64, i64, i64, i64>, PairRecord> m;
  PairRecord r;
  r.p = 163;
  r.q = 181;
  r.d = 3;
  r.M = 1;
  r.threshold_ok = r.gauss_ok = r.guaranteed = true;
  merge_record(m, r);
  merge_record(m, r);
  CHECK(m.size() == 1);
  PairRecord other = r;
  other.guaranteed = false;
  CHECK_THROWS_AS(merge_record(m, other), Error);
  CHECK(r.line() == "163 181 3 1 1");
}

TEST_CASE("guaranteed pairs survive random eps") {
  SearchResult r = search_prime_pairs(3, 2, 700);
  REQUIRE_FALSE(r.pairs.empty());
  std::map<i64, RTable> tables;
  for (const auto& pr : r.primes) tables[pr.p] = pr.rt;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<i64> dist(-2, 2);
  for (const auto& rec : r.pairs) {
    if (!rec.guaranteed) continue;
    for (int k = 0; k < 50; ++k) {
      IntVector e(3);
      do {
        e << dist(rng), dist(rng), 0;
        e(2) = 1 - e(0) - e(1);
      } while (std::abs(e(2)) > 2);
      EpsilonVector eps = EpsilonVector::canonical(e);
      CHECK(inequality_values(tables[rec.p], eps, Side::P).minCoeff() >= 0);
      CHECK(inequality_values(tables[rec.q], eps, Side::Q).minCoeff() >= 0);
    }
  }
}
