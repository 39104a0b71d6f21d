#include "plethora/factorization.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "plethora/io.hpp"
#include "plethora/max_terms.hpp"
#include "plethora/tableaux.hpp"

namespace plethora {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

bool trivial(const ProductKey& k) {
  return k.nu.size() == 1 || k.mu.size() == 1;
}

bool expected_homogeneous(const ProductKey& k) {
  const Partition pair{1, 1};
  return trivial(k) ||
         (k.nu == pair && (k.mu == pair || k.mu == Partition{2}));
}

void sort_classes(std::vector<std::vector<ProductKey>>& classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
}

std::vector<std::vector<ProductKey>> collisions(
    const std::vector<ProductKey>& keys) {
  std::map<std::pair<Partition, Partition>, std::vector<ProductKey>> groups;
  for (const auto& k : keys) groups[signature(k)].push_back(k);
  std::vector<std::vector<ProductKey>> out;
  for (auto& [sig, members] : groups)
    if (members.size() > 1) out.push_back(std::move(members));
  sort_classes(out);
  return out;
}

}  // namespace

std::vector<ProductKey> products_of_degree(std::uint64_t degree) {
  std::vector<ProductKey> out;
  for (std::uint64_t n = 1; n <= degree; ++n) {
    if (degree % n != 0) continue;
    for (const auto& nu : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(degree / n))
        out.push_back({nu, mu});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Partition, Partition> signature(const ProductKey& key) {
  return {max_lex(key.nu, key.mu), max_translex(key.nu, key.mu)};
}

bool is_homogeneous(PlethysmEngine& engine, const Partition& nu,
                    const Partition& mu) {
  return engine.plethysm(nu, mu)->size() == 1;
}

bool is_indecomposable(PlethysmEngine& engine, const Partition& nu,
                       const Partition& mu) {
  auto f = engine.plethysm(nu, mu);
  return f->size() == 1 && f->terms().begin()->second == 1;
}

ClassificationReport verify_theorem_B(PlethysmEngine& engine,
                                      std::uint64_t max_degree) {
  if (max_degree < 4)
    throw std::invalid_argument("verify_theorem_B: max degree must be ≥ 4");
  const auto start = Clock::now();
  ClassificationReport report;
  report.max_degree = max_degree;
  for (std::uint64_t d = 1; d <= max_degree; ++d)
    for (const auto& key : products_of_degree(d)) {
      auto f = engine.plethysm(key.nu, key.mu);
      ClassificationRow row{key, f->size(), f->size() == 1,
                            f->size() == 1 && f->terms().begin()->second == 1};
      const bool expected = expected_homogeneous(key);
      if (row.homogeneous != expected || row.indecomposable != expected)
        report.violations.push_back(key);
      report.rows.push_back(std::move(row));
    }
  report.elapsed_ms = ms_since(start);
  return report;
}

bool products_equal(PlethysmEngine& engine, const ProductKey& a,
                    const ProductKey& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("products_equal: degrees differ");
  if (a == b) return true;
  if (signature(a) != signature(b)) return false;
  return *engine.plethysm(a.nu, a.mu) == *engine.plethysm(b.nu, b.mu);
}

std::vector<std::vector<ProductKey>> predicted_classes(std::uint64_t degree) {
  const auto keys = products_of_degree(degree);
  std::map<ProductKey, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = i;
  std::vector<std::size_t> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](const ProductKey& a, const ProductKey& b) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) return;
    parent[find(ia->second)] = find(ib->second);
  };

  const Partition one{1}, two{2}, pair{1, 1}, hook{2, 1, 1};
  for (const auto& k : keys)
    if (k.mu == one) unite(k, {one, k.nu});
  unite({hook, one}, {pair, pair});
  unite({Partition{3, 1}, one}, {pair, two});
  unite({hook, two}, {pair, Partition{3, 1}});
  unite({hook, pair}, {pair, hook});

  std::map<std::size_t, std::vector<ProductKey>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i)
    groups[find(i)].push_back(keys[i]);
  std::vector<std::vector<ProductKey>> out;
  for (auto& [root, members] : groups)
    if (members.size() > 1) out.push_back(std::move(members));
  sort_classes(out);
  return out;
}

CoincidenceSweep verify_theorem_A(PlethysmEngine& engine,
                                  std::uint64_t max_degree) {
  if (max_degree < 4)
    throw std::invalid_argument("verify_theorem_A: max degree must be ≥ 4");
  CoincidenceSweep sweep;
  for (std::uint64_t d = 1; d <= max_degree; ++d) {
    const auto start = Clock::now();
    CoincidenceReport report;
    report.degree = d;
    for (const auto& group : collisions(products_of_degree(d))) {
      std::map<std::string, std::vector<ProductKey>> by_expansion;
      for (const auto& k : group)
        by_expansion[to_json(*engine.plethysm(k.nu, k.mu)).dump()].push_back(k);
      for (auto& [text, members] : by_expansion)
        if (members.size() > 1) report.classes.push_back(std::move(members));
    }
    sort_classes(report.classes);
    report.elapsed_ms = ms_since(start);

    const auto predicted = predicted_classes(d);
    for (const auto& c : report.classes)
      if (!std::binary_search(predicted.begin(), predicted.end(), c))
        sweep.unexpected.push_back(c);
    for (const auto& c : predicted)
      if (!std::binary_search(report.classes.begin(), report.classes.end(), c))
        sweep.missing.push_back(c);
    sweep.degrees.push_back(std::move(report));
  }
  return sweep;
}

SquareFormulaReport verify_square_formula(PlethysmEngine& engine,
                                          std::uint64_t max_n) {
  if (max_n < 1)
    throw std::invalid_argument("verify_square_formula: max n must be ≥ 1");
  SquareFormulaReport report;
  report.max_n = max_n;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const Partition column = Partition::rectangle(1, n);
    SchurExpansion expected(2 * n), expected_conjugate(2 * n);
    for (const auto& alpha : enumerate_partitions(n, true)) {
      const Partition shape = double_bracket(alpha);
      expected.add(shape, 1);
      expected_conjugate.add(conjugate(shape), 1);
    }
    if (*engine.plethysm(column, Partition{2}) != expected ||
        *engine.plethysm(column, Partition{1, 1}) != expected_conjugate)
      report.failures.push_back(n);
  }
  return report;
}

std::vector<std::vector<ProductKey>> signature_collisions(
    std::uint64_t degree) {
  return collisions(products_of_degree(degree));
}

DominanceSplit distinguish_by_dominance(const ProductKey& a,
                                        const ProductKey& b) {
  const auto wa = maximal_pleth_weights(a.mu, a.nu);
  const auto wb = maximal_pleth_weights(b.mu, b.nu);
  DominanceSplit split;
  for (const auto& [alpha, c] : wa)
    if (!wb.contains(alpha) || wb.at(alpha) != c) split.only_first[alpha] = c;
  for (const auto& [alpha, c] : wb)
    if (!wa.contains(alpha) || wa.at(alpha) != c) split.only_second[alpha] = c;
  return split;
}

std::vector<std::pair<ProductKey, ProductKey>> distinguished_collisions(
    std::uint64_t degree, std::size_t limit) {
  std::vector<std::pair<ProductKey, ProductKey>> out;
  for (const auto& group : signature_collisions(degree)) {
    std::vector<ProductKey> keys;
    std::copy_if(group.begin(), group.end(), std::back_inserter(keys),
                 [](const ProductKey& k) { return !trivial(k); });
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = i + 1; j < keys.size(); ++j) {
        if (out.size() >= limit) return out;
        if (distinguish_by_dominance(keys[i], keys[j]).distinguished())
          out.emplace_back(keys[i], keys[j]);
      }
  }
  return out;
}

}  // namespace plethora
