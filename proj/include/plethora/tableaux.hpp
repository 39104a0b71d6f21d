#pragma once

#include <compare>
#include <map>
#include <vector>

#include "plethora/partition.hpp"
#include "plethora/symmetric.hpp"

namespace plethora {

/// Filling of a Young diagram by positive integers, weakly increasing along
/// rows and strictly increasing down columns.
class SemistandardTableau {
 public:
  SemistandardTableau() = default;
  /// Throws std::invalid_argument unless the rows form a semistandard
  /// filling of a partition shape.
  explicit SemistandardTableau(std::vector<std::vector<Part>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<Part>>& rows() const noexcept { return rows_; }
  Part at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  /// Entries of a column, top to bottom (strictly increasing).
  std::vector<Part> column(std::size_t col) const;

  friend bool operator==(const SemistandardTableau&,
                         const SemistandardTableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<Part>> rows_;
};

Composition tableau_weight(const SemistandardTableau& t);

/// Total order ≺ on tableaux of one shape: in the leftmost column where the
/// entries differ, the tableau holding the greatest entry of the symmetric
/// difference is the greater. Throws std::invalid_argument on a shape
/// mismatch.
std::strong_ordering tableau_compare(const SemistandardTableau& s,
                                     const SemistandardTableau& t);

/// All semistandard tableaux of shape λ with entries at most `max_entry`,
/// sorted by tableau_compare.
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& lambda,
                                                Part max_entry);

/// Map from the cells of [ν] to semistandard μ-tableaux, weakly increasing
/// along rows and strictly increasing down columns under ≺.
class PlethysticTableau {
 public:
  /// Throws std::invalid_argument on a shape mismatch or a violation of the
  /// ≺ conditions.
  PlethysticTableau(Partition inner_shape,
                    std::vector<std::vector<SemistandardTableau>> rows);

  const Partition& outer_shape() const noexcept { return outer_; }
  const Partition& inner_shape() const noexcept { return inner_; }
  const std::vector<std::vector<SemistandardTableau>>& rows() const noexcept {
    return rows_;
  }

  friend bool operator==(const PlethysticTableau&,
                         const PlethysticTableau&) = default;

 private:
  Partition outer_, inner_;
  std::vector<std::vector<SemistandardTableau>> rows_;
};

/// Total number of occurrences of each entry across all inner tableaux.
Composition tableau_weight(const PlethysticTableau& t);

/// All plethystic semistandard tableaux of shape μ^ν with inner entries at
/// most `max_entry`. Ordered lexicographically by the row-reading sequence of
/// inner tableaux, each compared by ≺.
std::vector<PlethysticTableau> enumerate_plethystic(const Partition& mu,
                                                    const Partition& nu,
                                                    Part max_entry);

/// |PStd(μ^ν, α)|, counted without listing the tableaux.
Integer count_plethystic(const Partition& mu, const Partition& nu,
                         const Composition& alpha);

/// Dominance-maximal weights of plethystic semistandard tableaux of shape
/// μ^ν, each with the number of tableaux of that weight. These are exactly
/// the dominance-maximal constituents of s_ν ∘ s_μ with their
/// multiplicities.
///
/// Candidates are visited in decreasing lexicographic order, which extends
/// dominance, so a feasible candidate is maximal precisely when no weight
/// found earlier dominates it. Whole subtrees of candidates are cut as soon
/// as their greatest completion is dominated by a found weight, and the
/// search only ever counts tableaux of one weight at a time.
std::map<Partition, Integer, LexDescending> maximal_pleth_weights(
    const Partition& mu, const Partition& nu);

}  // namespace plethora
