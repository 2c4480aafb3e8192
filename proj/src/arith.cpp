#include "zassenhaus/arith.hpp"

#include <algorithm>
#include <numeric>

#include "zassenhaus/error.hpp"

namespace zassenhaus {

std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DlogOfZero: return "DlogOfZero";
    case ErrorCode::BadD: return "BadD";
    case ErrorCode::EqualPrimes: return "EqualPrimes";
    case ErrorCode::MixedParams: return "MixedParams";
    case ErrorCode::NotOrderPQ: return "NotOrderPQ";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NonIntegralAugmentation: return "NonIntegralAugmentation";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::BadAuxPrime: return "BadAuxPrime";
    case ErrorCode::CharacterMismatch: return "CharacterMismatch";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotIntegral: return "NotIntegral";
  }
  return "Unknown";
}

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

i64 powmod(i64 base, i64 e, i64 m) {
  if (m == 1) return 0;
  i64 r = 1;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 m) {
  i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    i64 q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw Error(ErrorCode::DivisionByZero, std::to_string(a) + " has no inverse mod " + std::to_string(m));
  return mod(x, m);
}

i64 crt(i64 a, i64 m, i64 b, i64 n) {
  // x = a + m*k, m*k = b - a (mod n)
  i64 k = mulmod(mod(b - a, n), inv_mod(m, n), n);
  return mod(a + m * k, m * n);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % sp == 0) return n == sp;
  }
  i64 dd = n - 1;
  int s = 0;
  while ((dd & 1) == 0) {
    dd >>= 1;
    ++s;
  }
  // deterministic for all 64-bit n
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = powmod(a, dd, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n + 1), true);
  for (i64 i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

Factorization factorize(i64 n) {
  if (n < 1) throw Error(ErrorCode::Unsupported, "factorize needs n >= 1, got " + std::to_string(n));
  Factorization f;
  for (i64 pr = 2; pr * pr <= n; ++pr) {
    while (n % pr == 0) {
      ++f[pr];
      n /= pr;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

Factorization& operator*=(Factorization& a, const Factorization& b) {
  for (auto [pr, e] : b) a[pr] += e;
  return a;
}

Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }

Factorization divide(Factorization a, const Factorization& b) {
  for (auto [pr, e] : b) {
    auto it = a.find(pr);
    if (it == a.end() || it->second < e)
      throw Error(ErrorCode::Unsupported, "factorization does not divide");
    if ((it->second -= e) == 0) a.erase(it);
  }
  return a;
}

u128 value(const Factorization& f) {
  const u128 limit = u128(1) << 127;
  u128 v = 1;
  for (auto [pr, e] : f) {
    for (int i = 0; i < e; ++i) {
      if (v > limit / static_cast<u128>(pr)) throw Error(ErrorCode::Overflow, "factorization value exceeds 2^127");
      v *= static_cast<u128>(pr);
    }
  }
  return v;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(const Factorization& f) {
  if (f.empty()) return "1";
  std::string s;
  for (auto [pr, e] : f) {
    if (!s.empty()) s += " * ";
    s += std::to_string(pr);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace zassenhaus
