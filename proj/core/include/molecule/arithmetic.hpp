#pragma once

#include <cstdint>
#include <vector>

#include "molecule/big_count.hpp"

namespace molecule {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for n = 1.
struct PrimeFactorization {
  std::vector<PrimePower> pairs;

  std::uint64_t value() const;
  bool is_squarefree() const;
  bool is_prime_power() const { return pairs.size() == 1; }
};

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division up to sqrt(n). Throws DomainError for n = 0.
PrimeFactorization factorize(std::uint64_t n);

/// All divisors of n in increasing order. Throws DomainError for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler totient via the product formula over the prime factorization.
BigCount euler_phi(std::uint64_t n);

/// Same value as euler_phi, narrowed; phi(n) <= n always fits.
std::uint64_t euler_phi_u64(std::uint64_t n);

/// Moebius function mu(n) in {-1, 0, 1}.
int mobius(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace molecule
