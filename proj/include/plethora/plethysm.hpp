#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "plethora/partition.hpp"
#include "plethora/symmetric.hpp"

namespace plethora {

/// Largest degree the power-sum oracle accepts by default.
inline constexpr std::uint64_t kPowerSumOracleBound = 16;

/// s_ν evaluated at the alphabet of monomials of s_μ, in |ν||μ| variables.
/// The coefficient of x^α counts plethystic semistandard tableaux of shape
/// μ^ν and weight α.
///
/// The alphabet's complete (or elementary) symmetric functions come from its
/// power sums p_k[s_μ] = s_μ(x^k) by Newton's identities, and s_ν is then the
/// Jacobi-Trudi determinant in them (the dual form when ν is taller than
/// wide). Everything stays in the monomial basis with exact integers.
MonomialExpansion plethysm_monomial(const Partition& nu, const Partition& mu);

/// Independent route: both Schur functions over power sums with character
/// values from the Murnaghan-Nakayama rule, p_k ∘ p_l = p_{kl}, and back.
/// Throws std::domain_error when |ν||μ| exceeds `bound`, std::logic_error on
/// a non-integral result.
SchurExpansion plethysm_powersum(const Partition& nu, const Partition& mu,
                                 std::uint64_t bound = kPowerSumOracleBound);

/// Irreducible character χ^λ at cycle type ρ (Murnaghan-Nakayama).
Integer character(const Partition& lambda, const Partition& rho);

/// z_ρ = Π i^{m_i} m_i!
Integer centralizer_size(const Partition& rho);

struct OmegaImage {
  Partition nu, mu, alpha;
  friend bool operator==(const OmegaImage&, const OmegaImage&) = default;
};

/// Image of (ν, μ, α) under the ω involution: (ν, μ^T, α^T) for |μ| even,
/// (ν^T, μ^T, α^T) for |μ| odd. The plethysm coefficient is unchanged.
OmegaImage omega_twist(const Partition& nu, const Partition& mu,
                       const Partition& alpha);

/// Memoizing front end for s_ν ∘ s_μ in the Schur basis, optionally backed
/// by an append-only cache file with one `ν|μ|JSON` record per line.
///
/// Safe for concurrent use: two threads asking for the same key may both
/// compute it, and the first insertion wins.
class PlethysmEngine {
 public:
  PlethysmEngine() = default;
  /// Loads existing records from `cache_file` (if present) and appends every
  /// new expansion to it.
  explicit PlethysmEngine(std::filesystem::path cache_file);

  PlethysmEngine(const PlethysmEngine&) = delete;
  PlethysmEngine& operator=(const PlethysmEngine&) = delete;

  /// Requires |ν|, |μ| ≥ 1.
  std::shared_ptr<const SchurExpansion> plethysm(const Partition& nu,
                                                 const Partition& mu);

  /// p(ν, μ, α). Throws std::invalid_argument unless |α| = |ν||μ|.
  Integer coefficient(const Partition& nu, const Partition& mu,
                      const Partition& alpha);

  /// Σ_λ c_λ (s_λ ∘ s_μ) for f = Σ_λ c_λ s_λ.
  SchurExpansion compose(const SchurExpansion& f, const Partition& mu);

  std::size_t cached_products() const;
  /// Number of expansions actually computed (cache misses) so far.
  std::size_t computed_products() const;

 private:
  using Key = std::pair<Partition, Partition>;

  void load(const std::filesystem::path& path);
  void append(const Key& key, const SchurExpansion& f);

  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const SchurExpansion>> cache_;
  std::optional<std::filesystem::path> file_;
  std::size_t computed_ = 0;
};

/// Process-wide engine without a file store.
PlethysmEngine& default_engine();

SchurExpansion plethysm(const Partition& nu, const Partition& mu);
Integer coefficient(const Partition& nu, const Partition& mu,
                    const Partition& alpha);

}  // namespace plethora
