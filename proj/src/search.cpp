#include "zassenhaus/search.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

#include "zassenhaus/error.hpp"

namespace zassenhaus {

std::string PairRecord::line() const {
  return std::to_string(p) + " " + std::to_string(q) + " " + std::to_string(d) + " " + std::to_string(M) + " " +
         (guaranteed ? "1" : "0");
}

bool operator==(const PairRecord& a, const PairRecord& b) {
  auto eff = [](const std::optional<EffectiveCheck>& e) {
    return e ? std::make_tuple(true, e->exhaustive, e->tested, e->ok) : std::make_tuple(false, false, i64(0), false);
  };
  return a.key() == b.key() && a.threshold_ok == b.threshold_ok && a.gauss_ok == b.gauss_ok &&
         eff(a.effective) == eff(b.effective) && a.guaranteed == b.guaranteed;
}

std::vector<i64> admissible_primes(i64 d, i64 p_max) {
  std::vector<i64> out;
  for (i64 p : primes_up_to(p_max))
    if (p % 2 == 1 && (p - 1) % d == 0) out.push_back(p);
  return out;
}

PrimeRecord prime_record(i64 p, i64 d) {
  PrimeRecord rec;
  rec.p = p;
  rec.poly = find_primitive_polynomial(p);
  rec.rt = r_table(make_field(p, rec.poly.first, rec.poly.second), d);
  rec.gauss = gauss_sum_check(rec.rt);
  return rec;
}

EffectiveCheck effective_check(const RTable& rp, const RTable& rq, i64 M, const SearchOptions& opt) {
  const i64 d = rp.d;
  EffectiveCheck ec;
  ec.ok = true;
  auto test = [&](const IntVector& e) {
    EpsilonVector eps = EpsilonVector::canonical(e);
    ++ec.tested;
    if (inequality_values(rp, eps, Side::P).minCoeff() < 0 || inequality_values(rq, eps, Side::Q).minCoeff() < 0)
      ec.ok = false;
  };
  double box = std::pow(static_cast<double>(2 * M + 1), static_cast<double>(d));
  if (box <= static_cast<double>(opt.exhaustive_limit)) {
    ec.exhaustive = true;
    IntVector e = IntVector::Constant(d, -M);
    while (true) {
      if (e.sum() == 1) test(e);
      i64 k = 0;
      while (k < d && e(k) == M) e(k++) = -M;
      if (k == d) break;
      ++e(k);
    }
    return ec;
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(rp.p) * 1000003u + static_cast<std::uint64_t>(rq.p));
  std::uniform_int_distribution<i64> dist(-M, M);
  while (ec.tested < opt.samples) {
    IntVector e(d);
    for (i64 i = 0; i + 1 < d; ++i) e(i) = dist(rng);
    e(d - 1) = 1 - e.head(d - 1).sum();
    if (std::abs(e(d - 1)) <= M) test(e);
  }
  return ec;
}

void merge_record(std::map<std::tuple<i64, i64, i64, i64>, PairRecord>& into, const PairRecord& rec) {
  auto [it, inserted] = into.emplace(rec.key(), rec);
  if (!inserted && !(it->second == rec))
    throw Error(ErrorCode::CharacterMismatch, "conflicting search records for pair " + rec.line());
}

SearchResult search_prime_pairs(i64 d, i64 M, i64 p_max, const SearchOptions& opt) {
  SearchResult res;
  res.threshold = guarantee_threshold(d, M);
  std::vector<i64> above;
  for (i64 p : admissible_primes(d, p_max)) {
    if (static_cast<double>(p) >= res.threshold)
      above.push_back(p);
    else
      res.below_threshold.push_back(p);
  }

  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  // per-prime fields and tables, in bounded batches
  for (std::size_t i = 0; i < above.size(); i += workers) {
    std::vector<std::future<PrimeRecord>> batch;
    for (std::size_t k = i; k < std::min(above.size(), i + workers); ++k)
      batch.push_back(std::async(std::launch::async, prime_record, above[k], d));
    for (auto& f : batch) res.primes.push_back(f.get());
  }

  std::map<std::tuple<i64, i64, i64, i64>, PairRecord> merged;
  for (std::size_t a = 0; a < res.primes.size(); ++a) {
    for (std::size_t b = a + 1; b < res.primes.size(); ++b) {
      const PrimeRecord& P = res.primes[a];
      const PrimeRecord& Q = res.primes[b];
      PairRecord rec;
      rec.p = P.p;
      rec.q = Q.p;
      rec.d = d;
      rec.M = M;
      rec.threshold_ok = true;
      rec.gauss_ok = P.gauss.ok() && Q.gauss.ok();
      if (opt.effective_check) rec.effective = effective_check(P.rt, Q.rt, M, opt);
      rec.guaranteed = rec.threshold_ok && rec.gauss_ok && (!rec.effective || rec.effective->ok);
      merge_record(merged, rec);
      if (opt.on_record) opt.on_record(rec);
    }
  }
  for (auto& [k, rec] : merged) res.pairs.push_back(rec);
  return res;
}

}  // namespace zassenhaus
