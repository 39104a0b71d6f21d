// Power-sum route to s_ν ∘ s_μ, kept independent of the monomial-basis
// machinery: it shares only the Partition type with the substitution route.

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "plethora/io.hpp"
#include "plethora/plethysm.hpp"

namespace plethora {
namespace {

using PowerSumExpansion = std::map<Partition, Rational>;

Partition from_beta_set(std::vector<std::int64_t> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const std::size_t l = beta.size();
  std::vector<Part> parts(l);
  for (std::size_t i = 0; i < l; ++i)
    parts[i] = static_cast<Part>(beta[i] - static_cast<std::int64_t>(l - 1 - i));
  return Partition(std::move(parts));
}

Integer character_rec(const Partition& lambda, std::span<const Part> rho,
                      std::map<std::pair<Partition, std::vector<Part>>,
                               Integer>& memo,
                      std::mutex& m) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  std::pair<Partition, std::vector<Part>> key{
      lambda, std::vector<Part>(rho.begin(), rho.end())};
  {
    std::lock_guard lock(m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  // Removing a rim hook of length k moves one bead of the beta set down by k
  // into an empty position; the sign counts the beads jumped over.
  const std::int64_t k = rho.front();
  const std::size_t l = lambda.length();
  std::vector<std::int64_t> beta(l);
  for (std::size_t i = 0; i < l; ++i)
    beta[i] = static_cast<std::int64_t>(lambda[i]) + static_cast<std::int64_t>(l - 1 - i);

  Integer total = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const std::int64_t target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::size_t jumped = 0;
    for (std::int64_t b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<std::int64_t> next = beta;
    next[i] = target;
    Integer value = character_rec(from_beta_set(std::move(next)),
                                  rho.subspan(1), memo, m);
    if (jumped % 2 == 0)
      total += value;
    else
      total -= value;
  }

  std::lock_guard lock(m);
  memo.emplace(std::move(key), total);
  return total;
}

PowerSumExpansion multiply(const PowerSumExpansion& a,
                           const PowerSumExpansion& b) {
  PowerSumExpansion out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      Rational c = cx * cy;
      auto& slot = out[disjoint_union(x, y)];
      slot += c;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Σ_σ χ^μ(σ)/z_σ p_{kσ}, that is p_k ∘ s_μ.
PowerSumExpansion scaled_schur(const Partition& mu, Part k) {
  PowerSumExpansion out;
  for (const Partition& sigma : enumerate_partitions(mu.size())) {
    Integer chi = character(mu, sigma);
    if (chi == 0) continue;
    std::vector<Part> scaled(sigma.begin(), sigma.end());
    for (Part& p : scaled) p *= k;
    Rational c(chi, centralizer_size(sigma));
    c.canonicalize();
    out[Partition(std::move(scaled))] += c;
  }
  return out;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("character: sizes differ");
  static std::mutex m;
  static std::map<std::pair<Partition, std::vector<Part>>, Integer> memo;
  return character_rec(lambda, rho.parts(), memo, m);
}

Integer centralizer_size(const Partition& rho) {
  Integer z = 1;
  const auto parts = rho.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), parts[i], j - i);
    z *= f * pw;
    i = j;
  }
  return z;
}

SchurExpansion plethysm_powersum(const Partition& nu, const Partition& mu,
                                 std::uint64_t bound) {
  if (nu.empty() || mu.empty())
    throw std::invalid_argument("plethysm_powersum: empty partition");
  const std::uint64_t degree = nu.size() * mu.size();
  if (degree > bound)
    throw std::domain_error("plethysm_powersum: degree " +
                            std::to_string(degree) + " exceeds oracle bound " +
                            std::to_string(bound));

  std::map<Part, PowerSumExpansion> inner;  // p_k ∘ s_μ
  std::map<Partition, PowerSumExpansion> products;
  products[Partition()] = {{Partition(), Rational(1)}};
  auto product_for = [&](const Partition& rho) -> const PowerSumExpansion& {
    // Π_r (p_{ρ_r} ∘ s_μ), built one part at a time from shorter prefixes.
    std::vector<Part> prefix;
    const PowerSumExpansion* current = &products.at(Partition());
    for (Part r : rho) {
      prefix.push_back(r);
      Partition key(prefix);
      auto it = products.find(key);
      if (it == products.end()) {
        auto [in, fresh] = inner.try_emplace(r);
        if (fresh) in->second = scaled_schur(mu, r);
        it = products.emplace(key, multiply(*current, in->second)).first;
      }
      current = &it->second;
    }
    return *current;
  };

  PowerSumExpansion total;
  for (const Partition& rho : enumerate_partitions(nu.size())) {
    Integer chi = character(nu, rho);
    if (chi == 0) continue;
    Rational c(chi, centralizer_size(rho));
    c.canonicalize();
    for (const auto& [tau, d] : product_for(rho)) total[tau] += c * d;
  }

  // p_τ = Σ_λ χ^λ(τ) s_λ
  SchurExpansion out(degree);
  for (const Partition& lambda : enumerate_partitions(degree)) {
    Rational c = 0;
    for (const auto& [tau, d] : total)
      if (d != 0) c += d * Rational(character(lambda, tau));
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error("plethysm_powersum: non-integral coefficient " +
                             c.get_str() + " at " + format_partition(lambda));
    out.add(lambda, c.get_num());
  }
  return out;
}

}  // namespace plethora
