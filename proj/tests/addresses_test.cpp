#include "molecule/addresses.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "molecule/arithmetic.hpp"
#include "molecule/errors.hpp"

namespace molecule {
namespace {

SatelliteAddress addr(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> rotations) {
  SatelliteAddress a;
  for (auto [p, q] : rotations) a.rotations.emplace_back(p, q);
  return a;
}

TEST(RotationNumberTest, Invariants) {
  EXPECT_NO_THROW(RotationNumber(1, 2));
  EXPECT_NO_THROW(RotationNumber(5, 7));
  EXPECT_THROW(RotationNumber(0, 3), DomainError);
  EXPECT_THROW(RotationNumber(3, 3), DomainError);
  EXPECT_THROW(RotationNumber(2, 4), DomainError);
  EXPECT_THROW(RotationNumber(1, 1), DomainError);
  EXPECT_EQ(RotationNumber(1, 3).conjugate(), RotationNumber(2, 3));
}

TEST(EnumerateAddressesTest, Examples) {
  const auto one = enumerate_addresses(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(one[0].rotations.empty());

  EXPECT_EQ(enumerate_addresses(3), (std::vector<SatelliteAddress>{addr({{1, 3}}), addr({{2, 3}})}));

  const auto six = enumerate_addresses(6);
  const std::set<SatelliteAddress> expected{addr({{1, 6}}), addr({{5, 6}}), addr({{1, 2}, {1, 3}}),
                                            addr({{1, 2}, {2, 3}}), addr({{1, 3}, {1, 2}}), addr({{2, 3}, {1, 2}})};
  EXPECT_EQ(std::set<SatelliteAddress>(six.begin(), six.end()), expected);
  EXPECT_EQ(six.size(), 6U);
  // Canonical order compares (q1, p1, q2, p2, ...).
  EXPECT_EQ(six.front(), addr({{1, 2}, {1, 3}}));
  EXPECT_EQ(six.back(), addr({{5, 6}}));
  EXPECT_THROW(enumerate_addresses(0), DomainError);
}

TEST(AddressCountTest, Examples) {
  EXPECT_EQ(address_count(12), BigCount(22));
  EXPECT_EQ(address_count(2), BigCount(1));
  EXPECT_EQ(address_count(9), BigCount(10));
  EXPECT_EQ(enumerate_addresses(9).size(), 10U);
  EXPECT_THROW(address_count(0), DomainError);
}

TEST(AddressPeriodTest, Examples) {
  EXPECT_EQ(address_period(SatelliteAddress{}), 1U);
  EXPECT_EQ(address_period(addr({{1, 2}, {1, 3}})), 6U);
  EXPECT_EQ(address_period(addr({{2, 5}, {1, 2}, {1, 2}})), 20U);
}

TEST(AddressesPropertyTest, BijectionAndNoDuplicatesUpTo500) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto all = enumerate_addresses(n);
    ASSERT_EQ(BigCount(all.size()), molecule_count_direct(n)) << n;
    ASSERT_EQ(address_count(n), molecule_count_recursive(n)) << n;
    ASSERT_TRUE(std::is_sorted(all.begin(), all.end())) << n;
    ASSERT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end()) << n;
    for (const auto& a : all) ASSERT_EQ(a.period(), n);
  }
}

TEST(AddressesPropertyTest, ProjectionGivesFactorizationsWithTotientMultiplicity) {
  for (std::uint64_t n = 1; n <= 240; ++n) {
    std::map<std::vector<std::uint64_t>, std::uint64_t> multiplicity;
    for (const auto& a : enumerate_addresses(n)) {
      std::vector<std::uint64_t> denominators;
      for (const auto& r : a.rotations) denominators.push_back(r.denominator());
      ++multiplicity[denominators];
    }
    const auto factorizations = ordered_factorizations(n);
    ASSERT_EQ(multiplicity.size(), factorizations.size()) << n;
    for (const auto& f : factorizations) {
      std::uint64_t expected = 1;
      for (std::uint64_t d : f.parts) expected *= euler_phi_u64(d);
      ASSERT_EQ(multiplicity[f.parts], expected) << n;
    }
  }
}

TEST(AddressesPropertyTest, PrefixClosure) {
  std::map<std::uint64_t, std::set<SatelliteAddress>> by_period;
  auto addresses_of = [&](std::uint64_t n) -> const std::set<SatelliteAddress>& {
    auto it = by_period.find(n);
    if (it == by_period.end()) {
      const auto all = enumerate_addresses(n);
      it = by_period.emplace(n, std::set<SatelliteAddress>(all.begin(), all.end())).first;
    }
    return it->second;
  };
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (const auto& a : addresses_of(n)) {
      for (std::size_t len = 0; len < a.rotations.size(); ++len) {
        const SatelliteAddress prefix = a.prefix(len);
        ASSERT_TRUE(addresses_of(prefix.period()).contains(prefix)) << to_string(a);
      }
    }
  }
}

TEST(AddressJsonTest, Format) {
  EXPECT_EQ(to_json(addr({{1, 2}, {1, 3}})), "[[1,2],[1,3]]");
  EXPECT_EQ(to_json(SatelliteAddress{}), "[]");
  EXPECT_EQ(address_from_json("[[1,2],[1,3]]"), addr({{1, 2}, {1, 3}}));
  EXPECT_THROW(address_from_json("[[2,4]]"), DomainError);
  EXPECT_THROW(address_from_json("[1,2]"), DomainError);
  EXPECT_THROW(address_from_json("nope"), DomainError);
  for (const auto& a : enumerate_addresses(24)) EXPECT_EQ(address_from_json(to_json(a)), a);
}

}  // namespace
}  // namespace molecule
