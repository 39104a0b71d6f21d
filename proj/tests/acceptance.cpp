// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "plethora/cli.hpp"
#include "plethora/factorization.hpp"
#include "plethora/io.hpp"
#include "plethora/max_terms.hpp"
#include "plethora/plethysm.hpp"
#include "plethora/tableaux.hpp"

using namespace plethora;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<std::string()> check;  // empty string on success
};

template <typename F>
std::string for_each_product(std::uint64_t top, F f) {
  for (std::uint64_t d = 1; d <= top; ++d)
    for (const auto& k : products_of_degree(d)) {
      std::string why = f(k);
      if (!why.empty()) return why;
    }
  return {};
}

std::string name(const ProductKey& k) {
  return "(" + format_partition(k.nu) + ") o (" + format_partition(k.mu) + ")";
}

std::string worked_example() {
  std::ostringstream out, err;
  if (cli::run({"plethysm", "1^5", "2"}, out, err) != 0) return err.str();
  if (out.str() != "6,1^4: 1\n5,3,1^2: 1\n4,4,2: 1\n")
    return "unexpected output:\n" + out.str();
  std::ostringstream out2;
  if (cli::run({"plethysm", "1^5", "1^2"}, out2, err) != 0) return err.str();
  if (out2.str() != "5,1^5: 1\n4,2,2,1^2: 1\n3,3,2,2: 1\n")
    return "unexpected conjugate output:\n" + out2.str();
  return {};
}

std::string square_sweep() {
  PlethysmEngine engine;
  const auto r = verify_square_formula(engine, 7);
  if (r.passed()) return {};
  return "fails at n = " + std::to_string(r.failures.front());
}

std::string extreme_terms() {
  PlethysmEngine engine;
  return for_each_product(12, [&](const ProductKey& k) -> std::string {
    const auto f = engine.plethysm(k.nu, k.mu);
    const auto lex = leading_term(*f, Order::lex);
    const auto tlex = leading_term(*f, Order::translex);
    if (lex.first != max_lex(k.nu, k.mu) || lex.second != 1 ||
        tlex.first != max_translex(k.nu, k.mu) || tlex.second != 1)
      return "mismatch at " + name(k);
    return {};
  });
}

std::string dominance_cross_check() {
  PlethysmEngine engine;
  return for_each_product(10, [&](const ProductKey& k) -> std::string {
    const auto f = engine.plethysm(k.nu, k.mu);
    std::map<Partition, Integer, LexDescending> top;
    for (const auto& [a, c] : f->terms()) {
      bool dominated = false;
      for (const auto& [b, d] : f->terms())
        if (a != b && dominates(b, a)) dominated = true;
      if (!dominated) top.emplace(a, c);
    }
    if (maximal_pleth_weights(k.mu, k.nu) != top) return "mismatch at " + name(k);
    return {};
  });
}

std::string classification() {
  PlethysmEngine engine;
  const auto r = verify_theorem_B(engine, 12);
  if (!r.passed()) return "violation at " + name(r.violations.front());
  return {};
}

std::string coincidences() {
  PlethysmEngine engine;
  const auto sweep = verify_theorem_A(engine, 12);
  if (!sweep.unexpected.empty())
    return "unexpected class containing " + name(sweep.unexpected.front().front());
  if (!sweep.missing.empty())
    return "missing class containing " + name(sweep.missing.front().front());
  std::size_t exceptional4 = 0, exceptional8 = 0;
  for (const auto& r : sweep.degrees)
    for (const auto& c : r.classes) {
      const bool reflexive_only =
          c.size() == 2 &&
          std::all_of(c.begin(), c.end(), [](const ProductKey& k) {
            return k.nu.size() == 1 || k.mu.size() == 1;
          });
      if (reflexive_only) continue;
      if (r.degree == 4) ++exceptional4;
      else if (r.degree == 8) ++exceptional8;
      else return "exceptional class at degree " + std::to_string(r.degree);
    }
  if (exceptional4 != 2 || exceptional8 != 2) return "wrong exceptional count";
  return {};
}

std::string discriminator() {
  const ProductKey a{{3, 3, 3, 2, 1}, {1, 1}}, b{{2, 1}, {4, 1, 1, 1, 1}};
  if (max_lex(a.nu, a.mu) != Partition{12, 3, 3, 3, 2, 1} ||
      max_lex(b.nu, b.mu) != Partition{12, 3, 3, 3, 2, 1})
    return "lex maxima differ from (12,3^3,2,1)";
  const Partition t = conjugate({15, 3, 3, 2, 1});
  if (max_translex(a.nu, a.mu) != t || max_translex(b.nu, b.mu) != t)
    return "transpose-lex maxima differ from (15,3^2,2,1)^T";
  const auto split = distinguish_by_dominance(a, b);
  if (!split.only_first.contains({11, 4, 4, 3, 2}) ||
      !split.only_second.contains({11, 4, 3, 3, 3}))
    return "dominance-maximal terms do not separate the pair";
  if (distinguished_collisions(24, 1).empty())
    return "no distinguished signature collision found at degree 24";
  return {};
}

std::string symmetry_properties() {
  PlethysmEngine engine;
  std::string why = for_each_product(10, [&](const ProductKey& k) -> std::string {
    const auto f = engine.plethysm(k.nu, k.mu);
    for (const auto& alpha : enumerate_partitions(k.nu.size() * k.mu.size())) {
      const auto img = omega_twist(k.nu, k.mu, alpha);
      if (f->coefficient(alpha) != engine.coefficient(img.nu, img.mu, img.alpha))
        return "omega rule fails at " + name(k) + " " + format_partition(alpha);
    }
    return {};
  });
  if (!why.empty()) return why;
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      SchurExpansion single(n);
      single.add(l, 1);
      if (*engine.plethysm(l, {1}) != single || *engine.plethysm({1}, l) != single)
        return "identity fails at " + format_partition(l);
    }
  for (std::uint64_t r = 1; r <= 3; ++r)
    for (const auto& rho : enumerate_partitions(r))
      if (*engine.plethysm(rho, {3, 1}) !=
          engine.compose(*engine.plethysm(rho, {1, 1}), {2}))
        return "associativity fails at " + format_partition(rho);
  return {};
}

std::string two_algorithms() {
  PlethysmEngine engine;
  return for_each_product(10, [&](const ProductKey& k) -> std::string {
    if (*engine.plethysm(k.nu, k.mu) != plethysm_powersum(k.nu, k.mu))
      return "disagreement at " + name(k);
    return {};
  });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example s_(1^5) o s_(2) and its conjugate", 5, worked_example},
      {2, "square formula, n <= 7", 60, square_sweep},
      {3, "lex and transpose-lex maxima with multiplicity 1, mn <= 12", 900,
       extreme_terms},
      {4, "dominance-maximal terms from plethystic tableaux, mn <= 10", 900,
       dominance_cross_check},
      {5, "homogeneous and indecomposable products, mn <= 12", 900,
       classification},
      {6, "equal products, mn <= 12", 1800, coincidences},
      {7, "(3^3,2,1) o (1^2) against (2,1) o (4,1^4)", 600, discriminator},
      {8, "omega rule, identities, associativity", 900, symmetry_properties},
      {9, "substitution and power-sum routes agree, mn <= 10", 600,
       two_algorithms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.check();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start).count();
    if (why.empty() && s > c.limit_s)
      why = "took " + std::to_string(s) + " s, limit " +
            std::to_string(c.limit_s) + " s";
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (why.empty() ? "PASS" : "FAIL") << " criterion "
         << c.id << ": " << c.title << " (" << s << " s)";
    if (!why.empty()) line << " -- " << why;
    std::cout << line.str() << std::endl;
    failures += !why.empty();
  }
  return failures ? 1 : 0;
}
