#include "doctest.h"

#include <algorithm>
#include <map>

#include "plethora/io.hpp"
#include "plethora/partition.hpp"

using namespace plethora;

namespace {

// Euler's pentagonal recurrence.
std::vector<std::uint64_t> partition_counts(int top) {
  std::vector<std::int64_t> p(top + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= top; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  return {p.begin(), p.end()};
}

std::vector<Partition> all_up_to(std::uint64_t top) {
  std::vector<Partition> out;
  for (std::uint64_t n = 0; n <= top; ++n)
    for (auto& p : enumerate_partitions(n)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("construction normalizes and validates") {
  CHECK(Partition{2, 2, 1, 0} == Partition{2, 2, 1});
  CHECK(Partition{2, 2, 1, 0}.size() == 5);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition{3, 2, 1});
  CHECK(Composition{2, 1, 0, 0} == Composition{2, 1});
  CHECK_FALSE(Composition{2, 1} == Composition{1, 2});
}

TEST_CASE("conjugate") {
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(conjugate({4, 4, 2}) == Partition{3, 3, 2, 2});
  for (std::uint64_t n = 0; n <= 30; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const Partition c = conjugate(p);
      REQUIRE(c.size() == n);
      REQUIRE(conjugate(c) == p);
    }
}

TEST_CASE("add and union") {
  CHECK(add({2, 1}, {3}) == Partition{5, 1});
  CHECK(add({4, 2}, {}) == Partition{4, 2});
  CHECK(add(Partition::rectangle(1, 3), conjugate(Partition::rectangle(1, 3))) ==
        Partition{4, 1, 1});
  CHECK(disjoint_union({3, 1}, {2}) == Partition{3, 2, 1});
  CHECK(disjoint_union({2}, {2}) == Partition{2, 2});
  const auto small = all_up_to(10);
  for (const auto& a : small)
    for (const auto& b : small)
      REQUIRE(disjoint_union(a, b) == conjugate(add(conjugate(a), conjugate(b))));
}

TEST_CASE("dominance examples") {
  CHECK(dominates({2, 2}, {2, 1, 1}));
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK_FALSE(dominates({3, 3}, {4, 1, 1}));
  CHECK_FALSE(dominates({4, 1, 1}, {3, 3}));
  CHECK_THROWS_AS(dominates({2}, {1}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order refined by lex and translex") {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    const auto ps = enumerate_partitions(n);
    for (const auto& a : ps) {
      REQUIRE(dominates(a, a));
      for (const auto& b : ps) {
        if (a != b && dominates(a, b)) {
          REQUIRE_FALSE(dominates(b, a));
          REQUIRE(lex_compare(a, b) > 0);
          REQUIRE(translex_compare(a, b) < 0);
        }
        if (!dominates(a, b)) continue;
        for (const auto& c : ps)
          if (dominates(b, c)) REQUIRE(dominates(a, c));
      }
    }
  }
}

TEST_CASE("lex and translex") {
  CHECK(lex_compare({4, 1}, {3, 2}) > 0);
  CHECK(lex_compare({3, 2}, {3, 2}) == 0);
  CHECK(lex_compare({2, 2, 1}, Partition{2, 2, 1, 0}) == 0);
  CHECK(translex_compare({2, 2}, {3, 1}) > 0);
  CHECK(translex_compare({4}, {1, 1, 1, 1}) < 0);
  CHECK(translex_compare({3, 1}, {3, 1}) == 0);
  CHECK_THROWS_AS(lex_compare({2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(translex_compare({2}, {1}), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto ps = enumerate_partitions(n);
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
      REQUIRE(lex_compare(ps[i], ps[i + 1]) > 0);
  }
}

TEST_CASE("m twist") {
  CHECK(m_twist({3, 2}, 2) == Partition{3, 2});
  CHECK(m_twist({3, 2}, 3) == Partition{2, 2, 1});
  CHECK(m_twist(Partition::rectangle(1, 4), 1) == Partition{4});
  CHECK_THROWS_AS(m_twist({1}, 0), std::invalid_argument);
}

TEST_CASE("double bracket") {
  CHECK(double_bracket({3, 2}) == Partition{4, 4, 2});
  CHECK(double_bracket({4, 1}) == Partition{5, 3, 1, 1});
  CHECK(double_bracket({5}) == Partition{6, 1, 1, 1, 1});
  CHECK(double_bracket({1}) == Partition{2});
  CHECK_THROWS_AS(double_bracket({2, 2}), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (const auto& a : enumerate_partitions(n, true)) {
      const Partition d = double_bracket(a);
      REQUIRE(d.size() == 2 * n);
      for (std::size_t i = 0; i < a.length(); ++i) {
        REQUIRE(d[i] == a[i] + i + 1);
        REQUIRE(hook_length(d, i, i) == 2 * a[i]);
      }
    }
}

TEST_CASE("enumerate partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(5, true) ==
        std::vector<Partition>{{5}, {4, 1}, {3, 2}});
  const auto counts = partition_counts(30);
  for (std::uint64_t n = 0; n <= 30; ++n)
    REQUIRE(enumerate_partitions(n).size() == counts[n]);
  for (std::uint64_t n = 0; n <= 15; ++n) {
    std::size_t distinct = 0;
    for (const auto& p : enumerate_partitions(n)) distinct += has_distinct_parts(p);
    REQUIRE(enumerate_partitions(n, true).size() == distinct);
  }
}

TEST_CASE("partition literals") {
  CHECK(parse_partition("3^3,2,1") == Partition{3, 3, 3, 2, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition(" 1^5 ") == Partition::rectangle(1, 5));
  CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("0"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("a"), ParseError);
  CHECK_THROWS_AS(parse_partition("2^0"), ParseError);
  CHECK(format_partition({4, 4, 2}) == "4,4,2");
  CHECK(format_partition({5, 3, 1, 1}) == "5,3,1^2");
  CHECK(format_partition({6, 1, 1, 1, 1}) == "6,1^4");
  CHECK(format_partition({12, 3, 3, 3, 2, 1}) == "12,3^3,2,1");
  for (std::uint64_t n = 0; n <= 14; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      REQUIRE(parse_partition(format_partition(p)) == p);
      REQUIRE(partition_from_json(to_json(p)) == p);
    }
}
