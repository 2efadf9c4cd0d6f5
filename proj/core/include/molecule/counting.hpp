#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "molecule/big_count.hpp"

namespace molecule {

/// Ordered tuple (d1, ..., dk) of integers > 1 whose product is the target n.
/// The empty tuple is the unique factorization of 1.
struct OrderedFactorization {
  std::vector<std::uint64_t> parts;

  std::uint64_t product() const;
  friend bool operator==(const OrderedFactorization&, const OrderedFactorization&) = default;
  friend auto operator<=>(const OrderedFactorization&, const OrderedFactorization&) = default;
};

/// Upper bound on the number of tuples an enumerating operation may visit.
struct EnumerationBudget {
  std::uint64_t max_tuples = 10'000'000;
};

/// Number of ordered factorizations of n, without enumerating them.
BigCount ordered_factorization_count(std::uint64_t n);

/// Visits every ordered factorization of n in lexicographic order of parts.
/// Throws BudgetExceeded before visiting anything if the count is over budget.
void for_each_ordered_factorization(std::uint64_t n,
                                    const std::function<void(std::span<const std::uint64_t>)>& visit,
                                    EnumerationBudget budget = {});

std::vector<OrderedFactorization> ordered_factorizations(std::uint64_t n, EnumerationBudget budget = {});

/// M(n) as the sum over ordered factorizations of the product of totients of the parts.
BigCount molecule_count_direct(std::uint64_t n, EnumerationBudget budget = {});

/// M(n) = sum over divisors d > 1 of phi(d) M(n/d), memoized over the divisor lattice of n.
BigCount molecule_count_recursive(std::uint64_t n);

/// (p - 1)(2p - 1)^(k - 1). Throws NotPrimeError if p is not prime, DomainError if k = 0.
BigCount molecule_count_prime_power(std::uint64_t p, unsigned k);

/// Ordered Bell (Fubini) number N(m), from N(0) = 1 and N(m) = sum_k C(m,k) N(m-k).
BigCount ordered_bell(unsigned m);

/// N(m) (p1 - 1)...(pm - 1) for pairwise distinct primes.
BigCount molecule_count_squarefree(std::span<const std::uint64_t> primes);

/// M(n) / (N(m) n) as an exact rational, n the product of the given distinct primes.
/// M(n) is taken from the recursive method, so the result checks the closed form
/// rather than restating it.
Ratio asymptotic_ratio(std::span<const std::uint64_t> primes);

/// nu(n) = sum over d | n of mu(n/d) 2^(d-1): all period-n components of the Mandelbrot set.
BigCount total_component_count(std::uint64_t n);

}  // namespace molecule
