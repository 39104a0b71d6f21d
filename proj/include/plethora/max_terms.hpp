#pragma once

#include <utility>

#include "plethora/partition.hpp"
#include "plethora/symmetric.hpp"

namespace plethora {

/// Lexicographically greatest constituent of s_ν ∘ s_μ:
/// (nμ_1, ..., nμ_{ℓ-1}, nμ_ℓ - n + ν_1, ν_2, ..., ν_{ℓ(ν)}) with n = |ν|.
/// Requires |ν|, |μ| ≥ 1. The result is always checked to be a partition of
/// |ν||μ|; std::logic_error otherwise.
Partition max_lex(const Partition& nu, const Partition& mu);

/// Greatest constituent in the transpose-lexicographic order, computed as
/// the conjugate of max_lex(ν^M, μ^T).
Partition max_translex(const Partition& nu, const Partition& mu);

enum class Order { lex, translex };

/// Greatest term of a nonempty expansion under the given order, with its
/// coefficient. Throws std::invalid_argument on an empty expansion.
std::pair<Partition, Integer> leading_term(const SchurExpansion& f,
                                           Order order);

}  // namespace plethora
