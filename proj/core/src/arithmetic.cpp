#include "molecule/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "molecule/errors.hpp"

namespace molecule {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

void require_positive(std::uint64_t n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + ": n must be positive, got 0");
}

}  // namespace

std::uint64_t PrimeFactorization::value() const {
  std::uint64_t out = 1;
  for (const auto& [p, e] : pairs) {
    for (unsigned i = 0; i < e; ++i) out *= p;
  }
  return out;
}

bool PrimeFactorization::is_squarefree() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are sufficient for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  PrimeFactorization out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.pairs.push_back({p, e});
  }
  if (n > 1) out.pairs.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n).pairs) {
    const std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  require_positive(n, "euler_phi");
  std::uint64_t result = n;
  for (const auto& pp : factorize(n).pairs) result = result / pp.prime * (pp.prime - 1);
  return result;
}

BigCount euler_phi(std::uint64_t n) { return BigCount(euler_phi_u64(n)); }

int mobius(std::uint64_t n) {
  require_positive(n, "mobius");
  const auto f = factorize(n);
  if (!f.is_squarefree()) return 0;
  return f.pairs.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace molecule
