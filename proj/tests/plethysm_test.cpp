#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "plethora/io.hpp"
#include "plethora/plethysm.hpp"
#include "plethora/tableaux.hpp"

using namespace plethora;

namespace {

using Terms = std::map<Partition, Integer, LexDescending>;

Terms terms(std::initializer_list<std::pair<Partition, long>> list) {
  Terms t;
  for (const auto& [p, c] : list) t.emplace(p, c);
  return t;
}

template <typename F>
void for_each_product(std::uint64_t top, F f) {
  for (std::uint64_t d = 1; d <= top; ++d)
    for (std::uint64_t n = 1; n <= d; ++n) {
      if (d % n) continue;
      for (const auto& nu : enumerate_partitions(n))
        for (const auto& mu : enumerate_partitions(d / n)) f(nu, mu);
    }
}

std::filesystem::path temp_file(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("schur monomials") {
  auto e = schur_monomials({1, 1}, 2);
  CHECK(e.terms() == terms({{{1, 1}, 1}}));
  e = schur_monomials({2}, 2);
  CHECK(e.terms() == terms({{{2}, 1}, {{1, 1}, 1}}));
  CHECK(schur_monomials({2, 1}, 3).coefficient(Composition{1, 1, 1}) == 2);
  CHECK(schur_monomials({1, 1, 1}, 2).terms().empty());
}

TEST_CASE("to_schur") {
  CHECK(to_schur(schur_monomials({3, 1}, 4)).terms() == terms({{{3, 1}, 1}}));
  const auto e2 = MonomialExpansion::from_polynomial(
      3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
  CHECK(to_schur(e2).terms() == terms({{{1, 1}, 1}}));
  CHECK(to_schur(plethysm_monomial({2}, {2}), true).terms() ==
        terms({{{4}, 1}, {{2, 2}, 1}}));
  CHECK_THROWS_AS(MonomialExpansion::from_polynomial(2, {{{1, 0}, 1}, {{0, 1}, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MonomialExpansion::from_polynomial(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}),
                  std::invalid_argument);
  MonomialExpansion negative(2, 2);
  negative.add({1, 1}, -1);
  CHECK_THROWS_AS(to_schur(negative, true), std::logic_error);
}

TEST_CASE("plethysm in the monomial basis") {
  for (std::uint64_t m = 1; m <= 6; ++m)
    for (const auto& mu : enumerate_partitions(m))
      REQUIRE(plethysm_monomial({1}, mu) == schur_monomials(mu, m));
  const auto f = plethysm_monomial({1, 1}, {2});
  CHECK(f.coefficient(Composition{3, 1}) == 1);
  CHECK(f.coefficient(Composition{2, 2}) == 1);
  CHECK(f.coefficient(Composition{4}) == 0);
  CHECK(f.coefficient(Composition{1, 3}) == 1);
  CHECK(plethysm_monomial({2}, {1, 1}).coefficient(Composition{1, 1, 1, 1}) == 3);
}

TEST_CASE("monomial coefficients count plethystic tableaux") {
  for_each_product(6, [](const Partition& nu, const Partition& mu) {
    const std::uint64_t d = nu.size() * mu.size();
    std::map<Partition, Integer> counts;
    for (const auto& t : enumerate_plethystic(mu, nu, static_cast<Part>(d)))
      ++counts[tableau_weight(t).sorted()];
    const auto f = plethysm_monomial(nu, mu);
    for (const auto& alpha : enumerate_partitions(d)) {
      // Tableaux of weight α in d letters: every rearrangement is counted,
      // so divide by the orbit size.
      auto it = counts.find(alpha);
      Integer brute = it == counts.end() ? Integer(0) : it->second;
      Integer orbit = 1;
      std::vector<Part> padded = alpha.vec();
      padded.resize(d, 0);
      Integer fact;
      mpz_fac_ui(orbit.get_mpz_t(), d);
      for (std::size_t i = 0; i < padded.size();) {
        std::size_t j = i;
        while (j < padded.size() && padded[j] == padded[i]) ++j;
        mpz_fac_ui(fact.get_mpz_t(), j - i);
        orbit /= fact;
        i = j;
      }
      REQUIRE(f.coefficient(Composition(alpha.vec())) * orbit == brute);
    }
  });
}

TEST_CASE("plethysm expansions") {
  CHECK(plethysm(Partition::rectangle(1, 5), {2}).terms() ==
        terms({{{4, 4, 2}, 1}, {{5, 3, 1, 1}, 1}, {{6, 1, 1, 1, 1}, 1}}));
  CHECK(plethysm(Partition::rectangle(1, 5), {1, 1}).terms() ==
        terms({{{3, 3, 2, 2}, 1}, {{4, 2, 2, 1, 1}, 1}, {{5, 1, 1, 1, 1, 1}, 1}}));
  CHECK(plethysm({2, 1, 1}, {1, 1}) == plethysm({1, 1}, {2, 1, 1}));
  CHECK(plethysm({1, 1}, {2}).terms() == terms({{{3, 1}, 1}}));
  CHECK(plethysm({2}, {1, 1}).terms() == terms({{{2, 2}, 1}, {{1, 1, 1, 1}, 1}}));
  CHECK_THROWS_AS(plethysm({}, {2}), std::invalid_argument);
}

TEST_CASE("coefficients") {
  CHECK(coefficient(Partition::rectangle(1, 5), {2}, {5, 3, 1, 1}) == 1);
  CHECK(coefficient(Partition::rectangle(1, 5), {2}, {5, 5}) == 0);
  CHECK(coefficient({3, 2}, {2, 1}, {10, 3, 2}) == 1);
  CHECK_THROWS_AS(coefficient({2}, {2}, {3}), std::invalid_argument);
}

TEST_CASE("specialization at all ones") {
  for_each_product(8, [](const Partition& nu, const Partition& mu) {
    const std::uint64_t n = nu.size() * mu.size();
    const auto f = plethysm_monomial(nu, mu);
    Integer lhs = 0;
    for (const auto& [alpha, c] : f.terms()) {
      Integer orbit;
      mpz_fac_ui(orbit.get_mpz_t(), n);
      std::vector<Part> padded = alpha.vec();
      padded.resize(n, 0);
      for (std::size_t i = 0; i < padded.size();) {
        std::size_t j = i;
        while (j < padded.size() && padded[j] == padded[i]) ++j;
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), j - i);
        orbit /= fact;
        i = j;
      }
      lhs += c * orbit;
    }
    Integer rhs = 0;
    const auto g = plethysm(nu, mu);
    for (const auto& [alpha, c] : g.terms())
      rhs += c * static_cast<unsigned long>(
                     enumerate_ssyt(alpha, static_cast<Part>(n)).size());
    REQUIRE(lhs == rhs);
  });
}

TEST_CASE("omega twist") {
  const auto col = Partition::rectangle(1, 5);
  CHECK(omega_twist(col, {2}, {4, 4, 2}) ==
        OmegaImage{col, {1, 1}, {3, 3, 2, 2}});
  CHECK(omega_twist({2}, {3}, {4, 2}) ==
        OmegaImage{{1, 1}, {1, 1, 1}, {2, 2, 1, 1}});
  const auto once = omega_twist({3, 1}, {2}, {5, 3});
  CHECK(omega_twist(once.nu, once.mu, once.alpha) ==
        OmegaImage{{3, 1}, {2}, {5, 3}});
  CHECK_THROWS_AS(omega_twist({2}, {2}, {3}), std::invalid_argument);

  for_each_product(10, [](const Partition& nu, const Partition& mu) {
    for (const auto& alpha : enumerate_partitions(nu.size() * mu.size())) {
      const auto img = omega_twist(nu, mu, alpha);
      REQUIRE(coefficient(nu, mu, alpha) ==
              coefficient(img.nu, img.mu, img.alpha));
    }
  });
}

TEST_CASE("identity and positivity") {
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      REQUIRE(plethysm(l, {1}).terms() == terms({{l, 1}}));
      REQUIRE(plethysm({1}, l).terms() == terms({{l, 1}}));
    }
  for_each_product(12, [](const Partition& nu, const Partition& mu) {
    const auto f = plethysm(nu, mu);
    for (const auto& [alpha, c] : f.terms()) REQUIRE(c > 0);
  });
}

TEST_CASE("associativity") {
  for (std::uint64_t r = 1; r <= 3; ++r)
    for (const auto& rho : enumerate_partitions(r))
      REQUIRE(plethysm(rho, {3, 1}) ==
              default_engine().compose(plethysm(rho, {1, 1}), {2}));
}

TEST_CASE("power-sum route agrees") {
  CHECK(plethysm_powersum({1, 1}, {2}).terms() == terms({{{3, 1}, 1}}));
  CHECK(plethysm_powersum({2}, {1, 1}).terms() ==
        terms({{{2, 2}, 1}, {{1, 1, 1, 1}, 1}}));
  CHECK(character({2, 1}, {1, 1, 1}) == 2);
  CHECK(character({2, 1}, {3}) == -1);
  CHECK(centralizer_size({2, 1, 1}) == 4);
  CHECK_THROWS_AS(plethysm_powersum({3, 3}, {3, 3}), std::domain_error);
  for_each_product(10, [](const Partition& nu, const Partition& mu) {
    REQUIRE(plethysm(nu, mu) == plethysm_powersum(nu, mu));
  });
}

TEST_CASE("cache file") {
  const auto path = temp_file("plethora_cache_test.txt");
  {
    PlethysmEngine engine(path);
    engine.plethysm({2, 1}, {2});
    engine.plethysm({2, 1}, {2});
    CHECK(engine.computed_products() == 1);
  }
  {
    std::ofstream dup(path, std::ios::app);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    dup << line << '\n';
  }
  {
    PlethysmEngine engine(path);
    CHECK(engine.cached_products() == 1);
    CHECK(*engine.plethysm({2, 1}, {2}) == plethysm({2, 1}, {2}));
    CHECK(engine.computed_products() == 0);
  }
  {
    std::ofstream bad(path, std::ios::app);
    bad << "2,1|2|{\"degree\":6,\"terms\":[{\"partition\":[6],\"coefficient\":\"1\"}]}\n";
  }
  CHECK_THROWS_AS(PlethysmEngine{path}, ParseError);
  std::filesystem::remove(path);
}
