#include "plethora/partition.hpp"

#include <algorithm>
#include <string>

namespace plethora {
namespace {

std::uint64_t checked_sum(std::span<const Part> parts) {
  std::uint64_t total = 0;
  for (Part p : parts) {
    if (__builtin_add_overflow(total, std::uint64_t{p}, &total))
      throw std::overflow_error("partition size overflows 64 bits");
  }
  return total;
}

void require_same_size(const Partition& a, const Partition& b,
                       const char* what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(what) +
                                ": partitions of different sizes (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
}

void extend_partitions(std::uint64_t remaining, Part max_part, bool distinct,
                       std::vector<Part>& prefix,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  Part top = static_cast<Part>(std::min<std::uint64_t>(remaining, max_part));
  for (Part p = top; p >= 1; --p) {
    prefix.push_back(p);
    extend_partitions(remaining - p, distinct ? p - 1 : p, distinct, prefix,
                      out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = checked_sum(parts_);
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(Part value, std::size_t count) {
  if (value == 0) return Partition();
  return Partition(std::vector<Part>(count, value));
}

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
  size_ = checked_sum(parts_);
}

bool operator==(const Composition& a, const Composition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Part x : p) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Partition conjugate(const Partition& lambda) {
  std::vector<Part> cols(lambda.width(), 0);
  for (Part row : lambda)
    for (Part c = 0; c < row; ++c) ++cols[c];
  return Partition(std::move(cols));
}

Partition add(const Partition& lambda, const Partition& mu) {
  const std::size_t n = std::max(lambda.length(), mu.length());
  std::vector<Part> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_add_overflow(lambda[i], mu[i], &out[i]))
      throw std::overflow_error("partition part overflow in add");
  }
  return Partition(std::move(out));
}

Partition disjoint_union(const Partition& lambda, const Partition& mu) {
  std::vector<Part> out(lambda.begin(), lambda.end());
  out.insert(out.end(), mu.begin(), mu.end());
  return Partition::from_unsorted(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu, "dominates");
  std::uint64_t a = 0, b = 0;
  const std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Partition& lambda,
                                 const Partition& mu) {
  require_same_size(lambda, mu, "lex_compare");
  return lambda <=> mu;
}

std::strong_ordering translex_compare(const Partition& lambda,
                                      const Partition& mu) {
  require_same_size(lambda, mu, "translex_compare");
  return conjugate(lambda) <=> conjugate(mu);
}

Partition m_twist(const Partition& nu, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("m_twist: m must be positive");
  return m % 2 == 0 ? nu : conjugate(nu);
}

std::uint64_t hook_length(const Partition& lambda, std::size_t row,
                          std::size_t col) {
  if (row >= lambda.length() || col >= lambda[row])
    throw std::out_of_range("hook_length: cell outside the diagram");
  const Partition t = conjugate(lambda);
  return std::uint64_t{lambda[row]} - col + t[col] - row - 1;
}

bool has_distinct_parts(const Partition& lambda) {
  return std::adjacent_find(lambda.begin(), lambda.end()) == lambda.end();
}

Partition double_bracket(const Partition& alpha) {
  if (!has_distinct_parts(alpha))
    throw std::invalid_argument("double_bracket: parts must be distinct");
  const std::size_t l = alpha.length();
  // Rows 1..l are α_i + i; column i (i ≤ l) must have length α_i + i - 1
  // for the diagonal hook to be 2α_i, which fixes every row below l.
  std::vector<Part> rows;
  std::vector<std::uint64_t> cols(l);
  for (std::size_t i = 0; i < l; ++i) {
    rows.push_back(alpha[i] + static_cast<Part>(i + 1));
    cols[i] = std::uint64_t{alpha[i]} + i;
  }
  for (std::uint64_t r = l + 1;; ++r) {
    Part len = 0;
    for (std::size_t i = 0; i < l; ++i)
      if (cols[i] >= r) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  Partition result(std::move(rows));

  bool ok = result.size() == 2 * alpha.size();
  for (std::size_t i = 0; ok && i < l; ++i)
    ok = result[i] == alpha[i] + i + 1 &&
         hook_length(result, i, i) == 2 * std::uint64_t{alpha[i]};
  if (!ok)
    throw std::logic_error("double_bracket: constructed shape fails the "
                           "diagonal hook condition");
  return result;
}

std::vector<Partition> enumerate_partitions(std::uint64_t n,
                                            bool distinct_only) {
  std::vector<Partition> out;
  std::vector<Part> prefix;
  const Part cap = static_cast<Part>(std::min<std::uint64_t>(n, UINT32_MAX));
  extend_partitions(n, cap, distinct_only, prefix, out);
  return out;
}

}  // namespace plethora
