#include "molecule/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "molecule/arithmetic.hpp"
#include "molecule/errors.hpp"

namespace molecule {

namespace {

void require_positive(std::uint64_t n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + ": n must be positive, got 0");
}

// Memoized evaluation of f(r) = base(r) + sum_{d | r, d > 1} weight(d) f(r / d)
// for r ranging over the divisors of n.
class DivisorLattice {
 public:
  explicit DivisorLattice(std::uint64_t n) : divisors_(divisors(n)) {}

  const std::vector<std::uint64_t>& divisors_of_n() const { return divisors_; }

  template <typename Weight>
  BigCount solve(std::uint64_t n, Weight weight) {
    std::map<std::uint64_t, BigCount> memo;
    memo[1] = BigCount(1);
    // Ascending order guarantees every r/d is already in the memo.
    for (std::uint64_t r : divisors_) {
      if (r == 1) continue;
      BigCount total;
      for (std::uint64_t d : divisors_) {
        if (d > r) break;
        if (d == 1 || r % d != 0) continue;
        total += weight(d) * memo.at(r / d);
      }
      memo[r] = std::move(total);
    }
    return memo.at(n);
  }

 private:
  std::vector<std::uint64_t> divisors_;
};

void check_distinct_primes(std::span<const std::uint64_t> primes) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) {
      throw NotSquarefreeError("prime " + std::to_string(p) + " repeated: not squarefree");
    }
  }
}

}  // namespace

std::uint64_t OrderedFactorization::product() const {
  std::uint64_t out = 1;
  for (std::uint64_t d : parts) out *= d;
  return out;
}

BigCount ordered_factorization_count(std::uint64_t n) {
  require_positive(n, "ordered_factorization_count");
  DivisorLattice lattice(n);
  return lattice.solve(n, [](std::uint64_t) { return BigCount(1); });
}

void for_each_ordered_factorization(std::uint64_t n,
                                    const std::function<void(std::span<const std::uint64_t>)>& visit,
                                    EnumerationBudget budget) {
  require_positive(n, "ordered_factorizations");
  if (ordered_factorization_count(n) > BigCount(budget.max_tuples)) {
    throw BudgetExceeded("ordered factorizations of " + std::to_string(n) + " exceed the budget of " +
                         std::to_string(budget.max_tuples) + " tuples");
  }
  const std::vector<std::uint64_t> divs = divisors(n);
  std::vector<std::uint64_t> parts;

  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t rest) {
    if (rest == 1) {
      visit(parts);
      return;
    }
    for (std::uint64_t d : divs) {
      if (d > rest) break;
      if (d == 1 || rest % d != 0) continue;
      parts.push_back(d);
      recurse(rest / d);
      parts.pop_back();
    }
  };
  recurse(n);
}

std::vector<OrderedFactorization> ordered_factorizations(std::uint64_t n, EnumerationBudget budget) {
  std::vector<OrderedFactorization> out;
  for_each_ordered_factorization(
      n, [&](std::span<const std::uint64_t> parts) { out.push_back({{parts.begin(), parts.end()}}); },
      budget);
  return out;
}

BigCount molecule_count_direct(std::uint64_t n, EnumerationBudget budget) {
  require_positive(n, "molecule_count_direct");
  std::map<std::uint64_t, std::uint64_t> phi;
  for (std::uint64_t d : divisors(n)) phi[d] = euler_phi_u64(d);

  // Each term is at most n; flush the 128-bit accumulator long before it can wrap.
  __extension__ typedef unsigned __int128 u128;
  constexpr u128 kFlushAt = static_cast<u128>(1) << 100;
  BigCount total;
  u128 partial = 0;
  auto flush = [&] {
    const auto high = static_cast<std::uint64_t>(partial >> 64);
    const auto low = static_cast<std::uint64_t>(partial);
    total += BigCount(high) * BigCount(1ULL << 32) * BigCount(1ULL << 32) + BigCount(low);
    partial = 0;
  };
  for_each_ordered_factorization(
      n,
      [&](std::span<const std::uint64_t> parts) {
        u128 term = 1;
        for (std::uint64_t d : parts) term *= phi.at(d);
        partial += term;
        if (partial >= kFlushAt) flush();
      },
      budget);
  flush();
  return total;
}

BigCount molecule_count_recursive(std::uint64_t n) {
  require_positive(n, "molecule_count_recursive");
  DivisorLattice lattice(n);
  return lattice.solve(n, [](std::uint64_t d) { return euler_phi(d); });
}

BigCount molecule_count_prime_power(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("molecule_count_prime_power: exponent must be >= 1");
  return BigCount(p - 1) * BigCount(2 * p - 1).pow(k - 1);
}

BigCount ordered_bell(unsigned m) {
  std::vector<mpz_class> bell(m + 1);
  bell[0] = 1;
  mpz_class binom;
  for (unsigned j = 1; j <= m; ++j) {
    for (unsigned k = 1; k <= j; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), j, k);
      bell[j] += binom * bell[j - k];
    }
  }
  return BigCount::from_mpz(bell[m]);
}

BigCount molecule_count_squarefree(std::span<const std::uint64_t> primes) {
  check_distinct_primes(primes);
  BigCount out = ordered_bell(static_cast<unsigned>(primes.size()));
  for (std::uint64_t p : primes) out *= BigCount(p - 1);
  return out;
}

Ratio asymptotic_ratio(std::span<const std::uint64_t> primes) {
  check_distinct_primes(primes);
  std::uint64_t n = 1;
  for (std::uint64_t p : primes) {
    if (n > UINT64_MAX / p) throw OverflowError("product of primes exceeds 64 bits");
    n *= p;
  }
  const BigCount m_n = molecule_count_recursive(n);
  return Ratio(m_n, ordered_bell(static_cast<unsigned>(primes.size())) * BigCount(n));
}

BigCount total_component_count(std::uint64_t n) {
  require_positive(n, "total_component_count");
  mpz_class total = 0;
  mpz_class power;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, d - 1);
    if (mu > 0) {
      total += power;
    } else {
      total -= power;
    }
  }
  return BigCount::from_mpz(total);
}

}  // namespace molecule
