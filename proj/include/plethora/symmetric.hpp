#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "plethora/partition.hpp"

namespace plethora {

using Integer = mpz_class;
using Rational = mpq_class;

/// Σ c_α s_α in a single degree. Zero terms are never stored and every key
/// is a partition of the degree.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, Integer, LexDescending>;

  SchurExpansion() = default;
  explicit SchurExpansion(std::uint64_t degree) : degree_(degree) {}

  std::uint64_t degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Zero for absent partitions.
  Integer coefficient(const Partition& lambda) const;

  /// Adds c to the coefficient of s_λ, dropping the term if it cancels.
  void add(const Partition& lambda, const Integer& c);

  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::uint64_t degree_ = 0;
  Terms terms_;
};

/// Monomial expansion of a homogeneous symmetric polynomial in `num_vars`
/// variables, stored once per sorted exponent vector.
class MonomialExpansion {
 public:
  using Terms = std::map<Partition, Integer, LexDescending>;

  MonomialExpansion() = default;
  MonomialExpansion(std::uint64_t degree, std::size_t num_vars)
      : degree_(degree), num_vars_(num_vars) {}

  /// Builds from an explicit polynomial keyed by exponent vectors of length
  /// at most num_vars. Throws std::invalid_argument if it is not symmetric
  /// or not homogeneous.
  static MonomialExpansion from_polynomial(
      std::size_t num_vars,
      const std::map<std::vector<Part>, Integer>& polynomial);

  std::uint64_t degree() const noexcept { return degree_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Coefficient of x^α for any exponent vector; zero if α needs more than
  /// num_vars variables.
  Integer coefficient(const Composition& alpha) const;

  void add(const Partition& exponent, const Integer& c);

  friend bool operator==(const MonomialExpansion&,
                         const MonomialExpansion&) = default;

 private:
  std::uint64_t degree_ = 0;
  std::size_t num_vars_ = 0;
  Terms terms_;
};

/// Number of semistandard tableaux of shape λ and weight α.
Integer kostka(const Partition& lambda, const Composition& alpha);

/// s_λ(x_1, ..., x_N) in the monomial basis. Empty when ℓ(λ) > N.
MonomialExpansion schur_monomials(const Partition& lambda,
                                  std::size_t num_vars);

/// Inverse-Kostka elimination. With `schur_positive` set, a negative
/// coefficient throws std::logic_error.
SchurExpansion to_schur(const MonomialExpansion& f,
                        bool schur_positive = false);

/// Dense symmetric-function arithmetic in the monomial basis m_λ, indexed
/// by the partitions of a degree in decreasing lexicographic order.
namespace mbasis {

/// Partitions of d in decreasing lexicographic order, cached.
const std::vector<Partition>& partitions_of(std::uint64_t d);
std::size_t index_of(const Partition& lambda);

struct Vec {
  std::uint64_t degree = 0;
  std::vector<Integer> coeffs;  // aligned with partitions_of(degree)

  static Vec zero(std::uint64_t degree);
  static Vec one() { return zero(0).set_all(1); }
  Vec& set_all(long v);
  bool is_zero() const;
};

Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
Vec operator*(const Vec& a, const Vec& b);
Vec& operator*=(Vec& a, const Integer& c);
/// Exact division; the caller guarantees divisibility.
Vec& divexact(Vec& a, const Integer& c);

/// f(x_1^k, x_2^k, ...), i.e. p_k ∘ f.
Vec power_substitute(const Vec& f, unsigned k);

/// Kostka row of λ: s_λ = Σ K_{λα} m_α.
Vec schur(const Partition& lambda);

}  // namespace mbasis

}  // namespace plethora
