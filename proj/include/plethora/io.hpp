#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "plethora/partition.hpp"
#include "plethora/symmetric.hpp"

namespace plethora {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Partition literal: comma-separated positive integers with optional
/// exponents, e.g. "3^3,2,1". The empty string is the empty partition.
/// Parts must be weakly decreasing.
Partition parse_partition(std::string_view text);

/// Exponent-compressed literal. A run is written `p^k` when it has at least
/// three parts, or when it is a run of 1s of length at least two; so
/// (4,4,2) prints as "4,4,2" and (5,3,1,1) as "5,3,1^2".
std::string format_partition(const Partition& lambda);

nlohmann::json to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);

/// {"degree": d, "terms": [{"partition": [...], "coefficient": "c"}, ...]}
/// with terms in decreasing lexicographic order and decimal-string
/// coefficients.
nlohmann::json to_json(const SchurExpansion& f);
SchurExpansion schur_expansion_from_json(const nlohmann::json& j);

}  // namespace plethora
