#include "plethora/max_terms.hpp"

#include <stdexcept>

#include "plethora/io.hpp"

namespace plethora {

Partition max_lex(const Partition& nu, const Partition& mu) {
  if (nu.empty() || mu.empty())
    throw std::invalid_argument("max_lex: both partitions must be nonempty");
  const std::int64_t n = static_cast<std::int64_t>(nu.size());
  const std::size_t l = mu.length();
  std::vector<std::int64_t> rows;
  for (std::size_t i = 0; i + 1 < l; ++i) rows.push_back(n * mu[i]);
  rows.push_back(n * mu[l - 1] - n + nu[0]);
  for (std::size_t i = 1; i < nu.length(); ++i) rows.push_back(nu[i]);

  std::vector<Part> parts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0 || (i > 0 && rows[i] > rows[i - 1]))
      throw std::logic_error("max_lex: formula produced a non-partition");
    parts.push_back(static_cast<Part>(rows[i]));
  }
  Partition out(std::move(parts));
  if (out.size() != nu.size() * mu.size())
    throw std::logic_error("max_lex: formula produced the wrong size " +
                           format_partition(out));
  return out;
}

Partition max_translex(const Partition& nu, const Partition& mu) {
  return conjugate(max_lex(m_twist(nu, mu.size()), conjugate(mu)));
}

std::pair<Partition, Integer> leading_term(const SchurExpansion& f,
                                           Order order) {
  if (f.empty()) throw std::invalid_argument("leading_term: empty expansion");
  auto best = f.terms().begin();
  for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
    const auto cmp = order == Order::lex ? lex_compare(it->first, best->first)
                                         : translex_compare(it->first, best->first);
    if (cmp > 0) best = it;
  }
  return {best->first, best->second};
}

}  // namespace plethora
