#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace plethora {

using Part = std::uint32_t;

/// Weakly decreasing sequence of positive integers. Always stored with
/// trailing zeros trimmed, so equality is structural.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing.
  /// Trailing zeros are dropped.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts)
      : Partition(std::vector<Part>(parts)) {}

  /// Sorts an arbitrary sequence of nonnegative parts into a partition.
  static Partition from_unsorted(std::vector<Part> parts);

  /// The rectangle (value^count).
  static Partition rectangle(Part value, std::size_t count);

  std::span<const Part> parts() const noexcept { return parts_; }
  const std::vector<Part>& vec() const noexcept { return parts_; }

  std::size_t length() const noexcept { return parts_.size(); }
  Part width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Zero beyond the length.
  Part operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Plain sequence comparison. Between partitions of one size this is the
  // lexicographic order; it is only used as a container key otherwise.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

/// Finite sequence of nonnegative integers (tableau weights). Trailing zeros
/// are kept but ignored by equality.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<Part> parts);
  Composition(std::initializer_list<Part> parts)
      : Composition(std::vector<Part>(parts)) {}

  std::span<const Part> parts() const noexcept { return parts_; }
  const std::vector<Part>& vec() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  Part operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Sorted into a partition.
  Partition sorted() const { return Partition::from_unsorted(parts_); }

  friend bool operator==(const Composition& a, const Composition& b);

 private:
  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Orders partitions so that the lexicographically greatest comes first.
struct LexDescending {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    return b < a;
  }
};

Partition conjugate(const Partition& lambda);

/// (λ1+μ1, λ2+μ2, ...)
Partition add(const Partition& lambda, const Partition& mu);

/// Multiset union of parts, λ ⊔ μ.
Partition disjoint_union(const Partition& lambda, const Partition& mu);

/// Dominance order. Throws std::invalid_argument on a size mismatch.
bool dominates(const Partition& lambda, const Partition& mu);

/// Lexicographic order; the first differing part decides.
std::strong_ordering lex_compare(const Partition& lambda, const Partition& mu);

/// Lexicographic order on conjugates.
std::strong_ordering translex_compare(const Partition& lambda,
                                      const Partition& mu);

/// ν when m is even, ν^T when m is odd. Rejects m = 0.
Partition m_twist(const Partition& nu, std::uint64_t m);

/// Hook length of the cell (row, col), both 0-based.
std::uint64_t hook_length(const Partition& lambda, std::size_t row,
                          std::size_t col);

/// 2[α] for α with distinct parts: rows α_i + i, diagonal hooks 2α_i.
Partition double_bracket(const Partition& alpha);

bool has_distinct_parts(const Partition& lambda);

/// All partitions of n (optionally with distinct parts) in decreasing
/// lexicographic order.
std::vector<Partition> enumerate_partitions(std::uint64_t n,
                                            bool distinct_only = false);

}  // namespace plethora
