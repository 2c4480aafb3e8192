#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zassenhaus {

using i64 = std::int64_t;
using u128 = unsigned __int128;

// Non-negative residue of a mod m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 base, i64 e, i64 m);
i64 inv_mod(i64 a, i64 m);  // throws DivisionByZero if not invertible
i64 crt(i64 a, i64 m, i64 b, i64 n);  // coprime m, n; result in [0, m*n)

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 n);

// prime -> exponent
using Factorization = std::map<i64, int>;

Factorization factorize(i64 n);
Factorization& operator*=(Factorization& a, const Factorization& b);
Factorization operator*(Factorization a, const Factorization& b);
// Divides out b; throws Unsupported if b does not divide a.
Factorization divide(Factorization a, const Factorization& b);

u128 value(const Factorization& f);  // throws Overflow if above 2^127
std::string to_string(u128 v);
std::string to_string(const Factorization& f);  // "2^7 * 3^2 * 5"

}  // namespace zassenhaus
