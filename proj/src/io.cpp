#include "plethora/io.hpp"

#include <charconv>
#include <limits>

namespace plethora {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_positive(std::string_view s, std::string_view literal) {
  s = trim(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      value == 0)
    throw ParseError("invalid partition literal '" + std::string(literal) +
                     "': expected a positive integer, got '" +
                     std::string(s) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<Part> parts;
  if (body.empty()) return Partition();
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view token = body.substr(start, comma - start);
    std::size_t caret = token.find('^');
    std::uint64_t value = 0, count = 1;
    if (caret == std::string_view::npos) {
      value = parse_positive(token, text);
    } else {
      value = parse_positive(token.substr(0, caret), text);
      count = parse_positive(token.substr(caret + 1), text);
    }
    if (value > std::numeric_limits<Part>::max() || count > (1u << 24))
      throw ParseError("invalid partition literal '" + std::string(text) +
                       "': value out of range");
    parts.insert(parts.end(), count, static_cast<Part>(value));
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid partition literal '" + std::string(text) +
                     "': parts must be weakly decreasing");
  }
}

std::string format_partition(const Partition& lambda) {
  std::string out;
  const auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::size_t run = j - i;
    const bool compress = run >= 3 || (parts[i] == 1 && run >= 2);
    const std::string p = std::to_string(parts[i]);
    if (compress) {
      if (!out.empty()) out += ',';
      out += p + '^' + std::to_string(run);
    } else {
      for (std::size_t k = 0; k < run; ++k) {
        if (!out.empty()) out += ',';
        out += p;
      }
    }
    i = j;
  }
  return out;
}

nlohmann::json to_json(const Partition& lambda) {
  return nlohmann::json(lambda.vec());
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("partition JSON must be an array");
  std::vector<Part> parts;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() == 0)
      throw ParseError("partition JSON parts must be positive integers");
    parts.push_back(x.get<Part>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const SchurExpansion& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"partition", to_json(lambda)},
                     {"coefficient", c.get_str()}});
  return {{"degree", f.degree()}, {"terms", std::move(terms)}};
}

SchurExpansion schur_expansion_from_json(const nlohmann::json& j) {
  try {
    SchurExpansion f(j.at("degree").get<std::uint64_t>());
    for (const auto& t : j.at("terms")) {
      Integer c;
      if (c.set_str(t.at("coefficient").get<std::string>(), 10) != 0)
        throw ParseError("bad coefficient");
      f.add(partition_from_json(t.at("partition")), c);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed expansion JSON: ") + e.what());
  }
}

}  // namespace plethora
