#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plethora/partition.hpp"
#include "plethora/plethysm.hpp"

namespace plethora {

/// The product s_ν ∘ s_μ, named by its two partitions.
struct ProductKey {
  Partition nu, mu;

  std::uint64_t degree() const { return nu.size() * mu.size(); }
  friend bool operator==(const ProductKey&, const ProductKey&) = default;
  friend std::strong_ordering operator<=>(const ProductKey&,
                                          const ProductKey&) = default;
};

/// Every (ν, μ) with |ν||μ| = degree and |ν|, |μ| ≥ 1, sorted.
std::vector<ProductKey> products_of_degree(std::uint64_t degree);

/// (max_lex, max_translex) of the product.
std::pair<Partition, Partition> signature(const ProductKey& key);

bool is_homogeneous(PlethysmEngine& engine, const Partition& nu,
                    const Partition& mu);
bool is_indecomposable(PlethysmEngine& engine, const Partition& nu,
                       const Partition& mu);

struct ClassificationRow {
  ProductKey key;
  std::size_t terms = 0;
  bool homogeneous = false;
  bool indecomposable = false;
};

struct ClassificationReport {
  std::uint64_t max_degree = 0;
  std::vector<ClassificationRow> rows;
  /// Products whose homogeneity or indecomposability differs from the
  /// expected classification.
  std::vector<ProductKey> violations;
  double elapsed_ms = 0;
  bool passed() const { return violations.empty(); }
};

/// Classifies every product of degree at most max_degree. Homogeneity (and
/// indecomposability) is expected exactly for ((1^2),(1^2)), ((1^2),(2)) and
/// products with |ν| = 1 or |μ| = 1. Requires max_degree ≥ 4.
ClassificationReport verify_theorem_B(PlethysmEngine& engine,
                                      std::uint64_t max_degree);

/// Compares signatures first and full expansions only when they agree.
/// Throws std::invalid_argument when the degrees differ.
bool products_equal(PlethysmEngine& engine, const ProductKey& a,
                    const ProductKey& b);

struct CoincidenceReport {
  std::uint64_t degree = 0;
  /// Classes of products with identical expansions; singletons omitted.
  std::vector<std::vector<ProductKey>> classes;
  double elapsed_ms = 0;
};

struct CoincidenceSweep {
  std::vector<CoincidenceReport> degrees;
  /// Found classes that are not predicted, and predicted ones not found.
  std::vector<std::vector<ProductKey>> unexpected, missing;
  bool passed() const { return unexpected.empty() && missing.empty(); }
};

/// The nontrivial equality classes among products of one degree that the
/// exceptional identities predict: s_ν∘s_(1) = s_(1)∘s_ν together with
///   s_(2,1^2)∘s_(1) = s_(1^2)∘s_(1^2),   s_(3,1)∘s_(1) = s_(1^2)∘s_(2),
///   s_(2,1^2)∘s_(2) = s_(1^2)∘s_(3,1),   s_(2,1^2)∘s_(1^2) = s_(1^2)∘s_(2,1^2).
std::vector<std::vector<ProductKey>> predicted_classes(std::uint64_t degree);

/// Groups the products of every degree up to max_degree by expansion and
/// compares the nontrivial classes with predicted_classes. Only products
/// sharing a signature are ever expanded. Requires max_degree ≥ 4.
CoincidenceSweep verify_theorem_A(PlethysmEngine& engine,
                                  std::uint64_t max_degree);

struct SquareFormulaReport {
  std::uint64_t max_n = 0;
  /// Values of n at which either identity fails.
  std::vector<std::uint64_t> failures;
  bool passed() const { return failures.empty(); }
};

/// s_(1^n)∘s_(2) = Σ s_{2[α]} over α ⊢ n with distinct parts, and
/// s_(1^n)∘s_(1^2) = Σ s_{2[α]^T}, for 1 ≤ n ≤ max_n.
SquareFormulaReport verify_square_formula(PlethysmEngine& engine,
                                          std::uint64_t max_n);

/// Groups of products of one degree sharing a signature (size ≥ 2 only).
std::vector<std::vector<ProductKey>> signature_collisions(
    std::uint64_t degree);

struct DominanceSplit {
  std::map<Partition, Integer, LexDescending> only_first, only_second;
  bool distinguished() const {
    return !only_first.empty() || !only_second.empty();
  }
};

/// Dominance-maximal constituents present in one product and not the
/// other; a nonempty side proves the products differ.
DominanceSplit distinguish_by_dominance(const ProductKey& a,
                                        const ProductKey& b);

/// Up to `limit` pairs of products of the given degree with equal
/// signatures but different dominance-maximal constituents, never expanding
/// a product in full. Products with |ν| = 1 or |μ| = 1 are skipped.
std::vector<std::pair<ProductKey, ProductKey>> distinguished_collisions(
    std::uint64_t degree, std::size_t limit);

}  // namespace plethora
