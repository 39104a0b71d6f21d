#include "plethora/plethysm.hpp"

#include <bit>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "plethora/io.hpp"

namespace plethora {
namespace {

void require_nonempty(const Partition& nu, const Partition& mu) {
  if (nu.empty() || mu.empty())
    throw std::invalid_argument("plethysm: both partitions must be nonempty");
}

// g_0, ..., g_top where g is h (complete) or e (elementary) of the alphabet of
// monomials of s_μ. Newton: k g_k = Σ_{i=1}^k (±1)^{i-1} p_i g_{k-i}.
std::vector<mbasis::Vec> alphabet_functions(const Partition& mu,
                                            std::size_t top,
                                            bool elementary) {
  const mbasis::Vec s = mbasis::schur(mu);
  std::vector<mbasis::Vec> power(top + 1);
  for (std::size_t k = 1; k <= top; ++k)
    power[k] = mbasis::power_substitute(s, static_cast<unsigned>(k));

  std::vector<mbasis::Vec> g(top + 1);
  g[0] = mbasis::Vec::one();
  for (std::size_t k = 1; k <= top; ++k) {
    mbasis::Vec acc = mbasis::Vec::zero(k * mu.size());
    for (std::size_t i = 1; i <= k; ++i) {
      mbasis::Vec term = power[i] * g[k - i];
      if (elementary && i % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    mbasis::divexact(acc, Integer(static_cast<unsigned long>(k)));
    g[k] = std::move(acc);
  }
  return g;
}

}  // namespace

MonomialExpansion plethysm_monomial(const Partition& nu, const Partition& mu) {
  require_nonempty(nu, mu);
  const std::uint64_t m = mu.size();
  const std::uint64_t degree = nu.size() * m;

  // Jacobi-Trudi in h for short ν, dual form in e for tall ν.
  const bool dual = nu.length() > nu.width();
  const Partition shape = dual ? conjugate(nu) : nu;
  const std::size_t r = shape.length();
  if (r > 20) throw std::domain_error("plethysm_monomial: shape too large");
  const std::vector<mbasis::Vec> g =
      alphabet_functions(mu, shape.width() + r - 1, dual);

  // Laplace expansion along rows: minor[S] is the determinant of the first
  // |S| rows restricted to the column set S.
  std::vector<std::optional<mbasis::Vec>> minor(std::size_t{1} << r);
  minor[0] = mbasis::Vec::one();
  for (std::size_t t = 1; t <= r; ++t) {
    std::int64_t row_shift = 0;
    for (std::size_t i = 0; i < t; ++i)
      row_shift += static_cast<std::int64_t>(shape[i]) - static_cast<std::int64_t>(i);
    for (std::uint32_t set = 1; set < (1u << r); ++set) {
      if (static_cast<std::size_t>(std::popcount(set)) != t) continue;
      std::int64_t col_sum = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (set >> j & 1u) col_sum += static_cast<std::int64_t>(j);
      const std::int64_t deg = row_shift + col_sum;
      if (deg < 0) continue;
      mbasis::Vec acc = mbasis::Vec::zero(static_cast<std::uint64_t>(deg) * m);
      bool any = false;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (!(set >> j & 1u)) continue;
        const std::int64_t k = static_cast<std::int64_t>(shape[t - 1]) -
                               static_cast<std::int64_t>(t - 1) +
                               static_cast<std::int64_t>(j);
        const auto& rest = minor[set & ~(1u << j)];
        if (k >= 0 && rest) {
          mbasis::Vec term = g[static_cast<std::size_t>(k)] * *rest;
          if ((t - 1 + pos) % 2 == 0)
            acc += term;
          else
            acc -= term;
          any = true;
        }
        ++pos;
      }
      if (any && !acc.is_zero()) minor[set] = std::move(acc);
    }
  }

  MonomialExpansion out(degree, degree);
  const auto& full = minor[(std::size_t{1} << r) - 1];
  if (!full) return out;
  const auto& parts = mbasis::partitions_of(degree);
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.add(parts[i], full->coeffs[i]);
  return out;
}

OmegaImage omega_twist(const Partition& nu, const Partition& mu,
                       const Partition& alpha) {
  if (alpha.size() != nu.size() * mu.size())
    throw std::invalid_argument("omega_twist: |α| must equal |ν||μ|");
  return {mu.size() % 2 == 0 ? nu : conjugate(nu), conjugate(mu),
          conjugate(alpha)};
}

PlethysmEngine::PlethysmEngine(std::filesystem::path cache_file)
    : file_(std::move(cache_file)) {
  if (std::filesystem::exists(*file_)) load(*file_);
}

void PlethysmEngine::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto a = line.find('|');
    const auto b = a == std::string::npos ? a : line.find('|', a + 1);
    if (b == std::string::npos)
      throw ParseError("cache line " + std::to_string(lineno) +
                       ": expected nu|mu|json");
    Key key{parse_partition(line.substr(0, a)),
            parse_partition(line.substr(a + 1, b - a - 1))};
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line.substr(b + 1));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("cache line " + std::to_string(lineno) + ": " +
                       e.what());
    }
    auto f = std::make_shared<const SchurExpansion>(
        schur_expansion_from_json(j));
    auto [it, inserted] = cache_.try_emplace(key, f);
    if (!inserted && !(*it->second == *f))
      throw ParseError("cache line " + std::to_string(lineno) +
                       ": conflicting duplicate record");
  }
}

void PlethysmEngine::append(const Key& key, const SchurExpansion& f) {
  std::ofstream out(*file_, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot append to cache file " + file_->string());
  out << format_partition(key.first) << '|' << format_partition(key.second)
      << '|' << to_json(f).dump() << '\n';
}

std::shared_ptr<const SchurExpansion> PlethysmEngine::plethysm(
    const Partition& nu, const Partition& mu) {
  require_nonempty(nu, mu);
  Key key{nu, mu};
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto f = std::make_shared<const SchurExpansion>(
      to_schur(plethysm_monomial(nu, mu), /*schur_positive=*/true));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(std::move(key), f);
  if (inserted) {
    ++computed_;
    if (file_) append(it->first, *f);
  }
  return it->second;
}

Integer PlethysmEngine::coefficient(const Partition& nu, const Partition& mu,
                                    const Partition& alpha) {
  if (alpha.size() != nu.size() * mu.size())
    throw std::invalid_argument("coefficient: |α| must equal |ν||μ|");
  return plethysm(nu, mu)->coefficient(alpha);
}

SchurExpansion PlethysmEngine::compose(const SchurExpansion& f,
                                       const Partition& mu) {
  SchurExpansion out(f.degree() * mu.size());
  for (const auto& [lambda, c] : f.terms()) {
    auto g = plethysm(lambda, mu);
    for (const auto& [alpha, d] : g->terms()) out.add(alpha, c * d);
  }
  return out;
}

std::size_t PlethysmEngine::cached_products() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

std::size_t PlethysmEngine::computed_products() const {
  std::lock_guard lock(mutex_);
  return computed_;
}

PlethysmEngine& default_engine() {
  static PlethysmEngine engine;
  return engine;
}

SchurExpansion plethysm(const Partition& nu, const Partition& mu) {
  return *default_engine().plethysm(nu, mu);
}

Integer coefficient(const Partition& nu, const Partition& mu,
                    const Partition& alpha) {
  return default_engine().coefficient(nu, mu, alpha);
}

}  // namespace plethora
