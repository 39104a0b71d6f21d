#include "plethora/symmetric.hpp"

#include "plethora/io.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace plethora {

Integer SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchurExpansion::add(const Partition& lambda, const Integer& c) {
  if (lambda.size() != degree_)
    throw std::invalid_argument("SchurExpansion: term of wrong degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MonomialExpansion::add(const Partition& exponent, const Integer& c) {
  if (exponent.size() != degree_)
    throw std::invalid_argument("MonomialExpansion: term of wrong degree");
  if (exponent.length() > num_vars_)
    throw std::invalid_argument("MonomialExpansion: too many variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MonomialExpansion::coefficient(const Composition& alpha) const {
  Partition key = alpha.sorted();
  if (key.length() > num_vars_) return 0;
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

MonomialExpansion MonomialExpansion::from_polynomial(
    std::size_t num_vars,
    const std::map<std::vector<Part>, Integer>& polynomial) {
  std::map<std::vector<Part>, Integer> padded;
  std::uint64_t degree = 0;
  bool first = true;
  for (const auto& [exponent, c] : polynomial) {
    if (c == 0) continue;
    std::vector<Part> e = exponent;
    while (e.size() > num_vars && e.back() == 0) e.pop_back();
    if (e.size() > num_vars)
      throw std::invalid_argument("monomial uses more than num_vars variables");
    e.resize(num_vars, 0);
    Composition comp(e);
    if (first) {
      degree = comp.size();
      first = false;
    } else if (comp.size() != degree) {
      throw std::invalid_argument("polynomial is not homogeneous");
    }
    padded[e] += c;
  }

  MonomialExpansion out(degree, num_vars);
  std::map<Partition, std::pair<Integer, Integer>> orbit;  // coeff, count
  for (const auto& [e, c] : padded) {
    if (c == 0) continue;
    Partition key = Partition::from_unsorted(e);
    auto [it, inserted] = orbit.try_emplace(key, c, 1);
    if (!inserted) {
      if (it->second.first != c)
        throw std::invalid_argument("polynomial is not symmetric");
      it->second.second += 1;
    }
  }
  for (const auto& [key, info] : orbit) {
    // Orbit size of the exponent vector under permutation of num_vars slots.
    std::vector<Part> e(key.begin(), key.end());
    e.resize(num_vars, 0);
    Integer orbit_size;
    mpz_fac_ui(orbit_size.get_mpz_t(), num_vars);
    for (std::size_t i = 0; i < e.size();) {
      std::size_t j = i;
      while (j < e.size() && e[j] == e[i]) ++j;
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), j - i);
      orbit_size /= f;
      i = j;
    }
    if (info.second != orbit_size)
      throw std::invalid_argument("polynomial is not symmetric");
    out.add(key, info.first);
  }
  return out;
}

namespace mbasis {
namespace {

struct DegreeTable {
  std::vector<Partition> parts;
  std::unordered_map<Partition, std::size_t, PartitionHash> index;
};

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

const DegreeTable& degree_table(std::uint64_t d) {
  static std::map<std::uint64_t, std::unique_ptr<DegreeTable>> tables;
  std::lock_guard lock(table_mutex());
  auto& slot = tables[d];
  if (!slot) {
    slot = std::make_unique<DegreeTable>();
    slot->parts = enumerate_partitions(d);
    for (std::size_t i = 0; i < slot->parts.size(); ++i)
      slot->index.emplace(slot->parts[i], i);
  }
  return *slot;
}

struct Triple {
  std::uint32_t left, right, out;
  std::uint64_t mult;
};

// Structure constants m_β m_γ = Σ c m_α, found by splitting every exponent
// vector α into β + γ with |β| = a.
void split_vectors(const Partition& alpha, std::size_t pos, std::uint64_t need,
                   std::uint64_t capacity, std::vector<Part>& beta,
                   std::map<std::pair<std::uint32_t, std::uint32_t>,
                            std::uint64_t>& acc,
                   const DegreeTable& left, const DegreeTable& right) {
  if (pos == alpha.length()) {
    if (need != 0) return;
    std::vector<Part> rest(alpha.length());
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = alpha[i] - beta[i];
    auto i = left.index.at(Partition::from_unsorted(beta));
    auto j = right.index.at(Partition::from_unsorted(std::move(rest)));
    ++acc[{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}];
    return;
  }
  const std::uint64_t after = capacity - alpha[pos];
  const Part hi = static_cast<Part>(std::min<std::uint64_t>(alpha[pos], need));
  const Part lo = need > after ? static_cast<Part>(need - after) : 0;
  for (Part b = lo; b <= hi; ++b) {
    beta[pos] = b;
    split_vectors(alpha, pos + 1, need - b, after, beta, acc, left, right);
  }
  beta[pos] = 0;
}

const std::vector<Triple>& product_table(std::uint64_t a, std::uint64_t b) {
  static std::mutex m;
  static std::map<std::pair<std::uint64_t, std::uint64_t>,
                  std::unique_ptr<std::vector<Triple>>>
      tables;
  {
    std::lock_guard lock(m);
    auto it = tables.find({a, b});
    if (it != tables.end()) return *it->second;
  }
  const DegreeTable& left = degree_table(a);
  const DegreeTable& right = degree_table(b);
  const DegreeTable& full = degree_table(a + b);
  auto table = std::make_unique<std::vector<Triple>>();
  for (std::size_t k = 0; k < full.parts.size(); ++k) {
    const Partition& alpha = full.parts[k];
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> acc;
    std::vector<Part> beta(alpha.length(), 0);
    split_vectors(alpha, 0, a, alpha.size(), beta, acc, left, right);
    for (const auto& [ij, mult] : acc)
      table->push_back({ij.first, ij.second, static_cast<std::uint32_t>(k),
                        mult});
  }
  std::lock_guard lock(m);
  auto [it, inserted] = tables.try_emplace({a, b}, std::move(table));
  return *it->second;
}

void require_same_degree(const Vec& a, const Vec& b) {
  if (a.degree != b.degree)
    throw std::invalid_argument("mbasis: degree mismatch");
}

}  // namespace

const std::vector<Partition>& partitions_of(std::uint64_t d) {
  return degree_table(d).parts;
}

std::size_t index_of(const Partition& lambda) {
  return degree_table(lambda.size()).index.at(lambda);
}

Vec Vec::zero(std::uint64_t degree) {
  Vec v;
  v.degree = degree;
  v.coeffs.assign(partitions_of(degree).size(), Integer(0));
  return v;
}

Vec& Vec::set_all(long v) {
  for (auto& c : coeffs) c = v;
  return *this;
}

bool Vec::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Integer& c) { return c == 0; });
}

Vec& operator+=(Vec& a, const Vec& b) {
  require_same_degree(a, b);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  require_same_degree(a, b);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
  return a;
}

Vec operator*(const Vec& a, const Vec& b) {
  Vec out = Vec::zero(a.degree + b.degree);
  if (a.is_zero() || b.is_zero()) return out;
  Integer term;
  for (const Triple& t : product_table(a.degree, b.degree)) {
    const Integer& x = a.coeffs[t.left];
    if (x == 0) continue;
    const Integer& y = b.coeffs[t.right];
    if (y == 0) continue;
    mpz_mul(term.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (t.mult == 1)
      out.coeffs[t.out] += term;
    else
      mpz_addmul_ui(out.coeffs[t.out].get_mpz_t(), term.get_mpz_t(), t.mult);
  }
  return out;
}

Vec& operator*=(Vec& a, const Integer& c) {
  for (auto& x : a.coeffs) x *= c;
  return a;
}

Vec& divexact(Vec& a, const Integer& c) {
  for (auto& x : a.coeffs)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return a;
}

Vec power_substitute(const Vec& f, unsigned k) {
  Vec out = Vec::zero(f.degree * k);
  const auto& src = partitions_of(f.degree);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    std::vector<Part> scaled(src[i].begin(), src[i].end());
    for (auto& p : scaled) p *= k;
    out.coeffs[index_of(Partition(std::move(scaled)))] += f.coeffs[i];
  }
  return out;
}

Vec schur(const Partition& lambda) {
  static std::mutex m;
  static std::map<Partition, Vec> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  Vec v = Vec::zero(lambda.size());
  const auto& parts = partitions_of(lambda.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (dominates(lambda, parts[i]))
      v.coeffs[i] = kostka(lambda, Composition(parts[i].vec()));
  }
  std::lock_guard lock(m);
  return cache.try_emplace(lambda, std::move(v)).first->second;
}

}  // namespace mbasis

namespace {

// Removes a horizontal strip of `size` cells from λ (the cells holding the
// largest letter) and recurses on the remaining weight.
void remove_strips(const Partition& lambda, std::size_t row, Part size,
                   std::vector<Part>& kappa,
                   std::vector<Partition>& out) {
  if (row == lambda.length()) {
    if (size == 0) out.emplace_back(kappa);
    return;
  }
  const Part lo = lambda[row + 1];
  const Part hi = lambda[row];
  for (Part k = hi; k + 1 > lo; --k) {
    const Part removed = hi - k;
    if (removed > size) break;
    kappa[row] = k;
    remove_strips(lambda, row + 1, size - removed, kappa, out);
    if (k == 0) break;
  }
}

Integer kostka_rec(const Partition& lambda, std::span<const Part> alpha,
                   std::map<std::vector<Part>, Integer>& memo,
                   std::mutex& m) {
  if (alpha.empty()) return lambda.empty() ? 1 : 0;
  if (lambda.length() > alpha.size()) return 0;

  std::vector<Part> key(lambda.begin(), lambda.end());
  key.push_back(0);
  key.insert(key.end(), alpha.begin(), alpha.end());
  {
    std::lock_guard lock(m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::vector<Partition> smaller;
  std::vector<Part> kappa(lambda.length());
  remove_strips(lambda, 0, alpha.back(), kappa, smaller);
  Integer total = 0;
  for (const Partition& k : smaller)
    total += kostka_rec(k, alpha.first(alpha.size() - 1), memo, m);

  std::lock_guard lock(m);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer kostka(const Partition& lambda, const Composition& alpha) {
  if (lambda.size() != alpha.size())
    throw std::invalid_argument("kostka: shape and weight sizes differ");
  static std::mutex m;
  static std::map<std::vector<Part>, Integer> memo;
  std::vector<Part> weight = alpha.vec();
  while (!weight.empty() && weight.back() == 0) weight.pop_back();
  return kostka_rec(lambda, weight, memo, m);
}

MonomialExpansion schur_monomials(const Partition& lambda,
                                  std::size_t num_vars) {
  MonomialExpansion out(lambda.size(), num_vars);
  if (lambda.length() > num_vars) return out;
  const mbasis::Vec v = mbasis::schur(lambda);
  const auto& parts = mbasis::partitions_of(lambda.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].length() <= num_vars) out.add(parts[i], v.coeffs[i]);
  return out;
}

SchurExpansion to_schur(const MonomialExpansion& f, bool schur_positive) {
  const auto& parts = mbasis::partitions_of(f.degree());
  mbasis::Vec rest = mbasis::Vec::zero(f.degree());
  for (const auto& [exponent, c] : f.terms())
    rest.coeffs[mbasis::index_of(exponent)] = c;

  SchurExpansion out(f.degree());
  // Kostka is unitriangular in dominance, hence in lex order: the lex-greatest
  // surviving exponent is always the next Schur term.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].length() > f.num_vars()) continue;
    const Integer c = rest.coeffs[i];
    if (c == 0) continue;
    if (schur_positive && c < 0)
      throw std::logic_error("to_schur: negative coefficient for s_(" +
                             format_partition(parts[i]) +
                             ") in a Schur-positive input");
    out.add(parts[i], c);
    const mbasis::Vec s = mbasis::schur(parts[i]);
    for (std::size_t j = i; j < parts.size(); ++j)
      if (s.coeffs[j] != 0) rest.coeffs[j] -= c * s.coeffs[j];
  }
  return out;
}

}  // namespace plethora
