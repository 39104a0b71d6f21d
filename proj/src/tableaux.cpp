#include "plethora/tableaux.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <unordered_map>

namespace plethora {
namespace {

bool is_partition_shape(const std::vector<std::size_t>& lengths) {
  for (std::size_t i = 1; i < lengths.size(); ++i)
    if (lengths[i - 1] < lengths[i]) return false;
  return std::all_of(lengths.begin(), lengths.end(),
                     [](std::size_t l) { return l > 0; });
}

void fill_cells(const Partition& lambda, Part max_entry, std::size_t row,
                std::size_t col, std::vector<std::vector<Part>>& rows,
                std::vector<SemistandardTableau>& out) {
  if (row == lambda.length()) {
    out.emplace_back(rows);
    return;
  }
  if (col == lambda[row]) {
    fill_cells(lambda, max_entry, row + 1, 0, rows, out);
    return;
  }
  Part lo = 1;
  if (col > 0) lo = std::max(lo, rows[row][col - 1]);
  if (row > 0) lo = std::max<Part>(lo, rows[row - 1][col] + 1);
  for (Part v = lo; v <= max_entry; ++v) {
    rows[row][col] = v;
    fill_cells(lambda, max_entry, row, col + 1, rows, out);
  }
}

// Every κ ⊆ ν, with the horizontal-strip transitions κ → κ'.
struct SubshapeGraph {
  std::vector<Partition> shapes;
  std::vector<std::vector<std::pair<std::size_t, Part>>> strips;  // (to, size)
  std::size_t full = 0;
};

void collect_subshapes(const Partition& nu, std::size_t row, Part cap,
                       std::vector<Part>& parts,
                       std::vector<Partition>& out) {
  if (row == nu.length()) {
    out.emplace_back(parts);
    return;
  }
  const Part hi = std::min(cap, nu[row]);
  for (Part p = 0; p <= hi; ++p) {
    parts[row] = p;
    collect_subshapes(nu, row + 1, p, parts, out);
  }
  parts[row] = 0;
}

void collect_strips(const Partition& nu, const Partition& from,
                    std::size_t row, std::vector<Part>& parts, Part added,
                    const std::unordered_map<Partition, std::size_t,
                                             PartitionHash>& index,
                    std::vector<std::pair<std::size_t, Part>>& out) {
  if (row == nu.length()) {
    out.emplace_back(index.at(Partition(parts)), added);
    return;
  }
  // κ'_i ranges over [κ_i, min(ν_i, κ_{i-1})].
  const Part hi = row == 0 ? nu[0] : std::min(nu[row], from[row - 1]);
  for (Part p = from[row]; p <= hi; ++p) {
    parts[row] = p;
    collect_strips(nu, from, row + 1, parts, added + (p - from[row]), index,
                   out);
  }
  parts[row] = from[row];
}

SubshapeGraph subshape_graph(const Partition& nu) {
  SubshapeGraph g;
  std::vector<Part> parts(nu.length(), 0);
  collect_subshapes(nu, 0, nu.width(), parts, g.shapes);
  std::unordered_map<Partition, std::size_t, PartitionHash> index;
  for (std::size_t i = 0; i < g.shapes.size(); ++i) index[g.shapes[i]] = i;
  g.full = index.at(nu);
  g.strips.resize(g.shapes.size());
  for (std::size_t i = 0; i < g.shapes.size(); ++i) {
    std::vector<Part> work(nu.length());
    for (std::size_t r = 0; r < nu.length(); ++r) work[r] = g.shapes[i][r];
    collect_strips(nu, g.shapes[i], 0, work, 0, index, g.strips[i]);
  }
  return g;
}

}  // namespace

SemistandardTableau::SemistandardTableau(std::vector<std::vector<Part>> rows)
    : rows_(std::move(rows)) {
  std::vector<std::size_t> lengths;
  for (const auto& r : rows_) lengths.push_back(r.size());
  if (!is_partition_shape(lengths))
    throw std::invalid_argument("tableau rows do not form a partition shape");
  std::vector<Part> shape;
  for (std::size_t l : lengths) shape.push_back(static_cast<Part>(l));
  shape_ = Partition(std::move(shape));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const Part v = rows_[r][c];
      if (v == 0) throw std::invalid_argument("tableau entries must be positive");
      if (c > 0 && rows_[r][c - 1] > v)
        throw std::invalid_argument("tableau rows must weakly increase");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau columns must strictly increase");
    }
}

std::vector<Part> SemistandardTableau::column(std::size_t col) const {
  std::vector<Part> out;
  for (const auto& r : rows_) {
    if (col >= r.size()) break;
    out.push_back(r[col]);
  }
  return out;
}

Composition tableau_weight(const SemistandardTableau& t) {
  std::vector<Part> w;
  for (const auto& r : t.rows())
    for (Part v : r) {
      if (w.size() < v) w.resize(v, 0);
      ++w[v - 1];
    }
  return Composition(std::move(w));
}

std::strong_ordering tableau_compare(const SemistandardTableau& s,
                                     const SemistandardTableau& t) {
  if (s.shape() != t.shape())
    throw std::invalid_argument("tableau_compare: shapes differ");
  for (std::size_t c = 0; c < s.shape().width(); ++c) {
    const auto a = s.column(c);
    const auto b = t.column(c);
    if (a == b) continue;
    std::vector<Part> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    const Part top = *std::max_element(diff.begin(), diff.end());
    const bool in_t = std::binary_search(b.begin(), b.end(), top);
    return in_t ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& lambda,
                                                Part max_entry) {
  std::vector<SemistandardTableau> out;
  std::vector<std::vector<Part>> rows;
  for (Part len : lambda) rows.emplace_back(len, 0);
  fill_cells(lambda, max_entry, 0, 0, rows, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return tableau_compare(a, b) < 0;
  });
  return out;
}

PlethysticTableau::PlethysticTableau(
    Partition inner_shape, std::vector<std::vector<SemistandardTableau>> rows)
    : inner_(std::move(inner_shape)), rows_(std::move(rows)) {
  std::vector<std::size_t> lengths;
  for (const auto& r : rows_) lengths.push_back(r.size());
  if (!is_partition_shape(lengths))
    throw std::invalid_argument("outer rows do not form a partition shape");
  std::vector<Part> shape;
  for (std::size_t l : lengths) shape.push_back(static_cast<Part>(l));
  outer_ = Partition(std::move(shape));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const auto& cell = rows_[r][c];
      if (cell.shape() != inner_)
        throw std::invalid_argument("inner tableau has the wrong shape");
      if (c > 0 && tableau_compare(rows_[r][c - 1], cell) > 0)
        throw std::invalid_argument("outer rows must weakly increase under ≺");
      if (r > 0 && tableau_compare(rows_[r - 1][c], cell) >= 0)
        throw std::invalid_argument(
            "outer columns must strictly increase under ≺");
    }
}

Composition tableau_weight(const PlethysticTableau& t) {
  std::vector<Part> w;
  for (const auto& r : t.rows())
    for (const auto& cell : r) {
      const Composition c = tableau_weight(cell);
      if (w.size() < c.length()) w.resize(c.length(), 0);
      for (std::size_t i = 0; i < c.length(); ++i) w[i] += c[i];
    }
  return Composition(std::move(w));
}

std::vector<PlethysticTableau> enumerate_plethystic(const Partition& mu,
                                                    const Partition& nu,
                                                    Part max_entry) {
  const auto alphabet = enumerate_ssyt(mu, max_entry);
  std::vector<PlethysticTableau> out;
  std::vector<std::vector<std::size_t>> idx;
  for (Part len : nu) idx.emplace_back(len, 0);

  // Indices into the ≺-sorted alphabet: rows weakly, columns strictly
  // increasing.
  auto rec = [&](auto& self, std::size_t row, std::size_t col) -> void {
    if (row == nu.length()) {
      std::vector<std::vector<SemistandardTableau>> rows;
      for (const auto& r : idx) {
        rows.emplace_back();
        for (std::size_t i : r) rows.back().push_back(alphabet[i]);
      }
      out.emplace_back(mu, std::move(rows));
      return;
    }
    if (col == nu[row]) return self(self, row + 1, 0);
    std::size_t lo = 0;
    if (col > 0) lo = std::max(lo, idx[row][col - 1]);
    if (row > 0) lo = std::max(lo, idx[row - 1][col] + 1);
    for (std::size_t i = lo; i < alphabet.size(); ++i) {
      idx[row][col] = i;
      self(self, row, col + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Integer count_plethystic(const Partition& mu, const Partition& nu,
                         const Composition& alpha) {
  if (alpha.size() != mu.size() * nu.size()) return 0;
  std::vector<Part> target = alpha.vec();
  while (!target.empty() && target.back() == 0) target.pop_back();
  const std::size_t l = target.size();

  // Mixed-radix code of a partial weight w ≤ α.
  std::vector<std::uint64_t> stride(l + 1, 1);
  for (std::size_t i = 0; i < l; ++i) {
    if (__builtin_mul_overflow(stride[i], std::uint64_t{target[i]} + 1,
                               &stride[i + 1]))
      throw std::domain_error("count_plethystic: weight too long");
  }

  struct Letter {
    std::vector<Part> weight;
  };
  std::vector<Letter> letters;
  for (const auto& t : enumerate_ssyt(mu, static_cast<Part>(l))) {
    const Composition w = tableau_weight(t);
    bool fits = true;
    for (std::size_t i = 0; i < w.length(); ++i)
      if (w[i] > target[i]) fits = false;
    if (!fits) continue;
    std::vector<Part> wv(l, 0);
    for (std::size_t i = 0; i < w.length(); ++i) wv[i] = w[i];
    letters.push_back({std::move(wv)});
  }
  if (mu.empty()) letters.push_back({std::vector<Part>(l, 0)});

  const SubshapeGraph graph = subshape_graph(nu);
  const std::uint64_t shapes = graph.shapes.size();
  if (stride[l] > UINT64_MAX / shapes)
    throw std::domain_error("count_plethystic: state space too large");

  // Process letters in ≺ order; each letter fills a horizontal strip.
  std::unordered_map<std::uint64_t, Integer> states{{0, Integer(1)}};
  std::vector<Part> w(l);
  for (const Letter& letter : letters) {
    std::unordered_map<std::uint64_t, Integer> next = states;
    for (const auto& [key, count] : states) {
      const std::uint64_t code = key / shapes;
      const std::size_t shape = key % shapes;
      for (std::size_t i = 0; i < l; ++i)
        w[i] = static_cast<Part>(code / stride[i] % (std::uint64_t{target[i]} + 1));
      for (const auto& [to, size] : graph.strips[shape]) {
        if (size == 0) continue;
        std::uint64_t added = 0;
        bool ok = true;
        for (std::size_t i = 0; i < l && ok; ++i) {
          const std::uint64_t v =
              std::uint64_t{w[i]} + std::uint64_t{size} * letter.weight[i];
          if (v > target[i]) ok = false;
          added += std::uint64_t{size} * letter.weight[i] * stride[i];
        }
        if (!ok) continue;
        next[(code + added) * shapes + to] += count;
      }
    }
    states = std::move(next);
  }
  std::uint64_t final_code = 0;
  for (std::size_t i = 0; i < l; ++i) final_code += target[i] * stride[i];
  auto it = states.find(final_code * shapes + graph.full);
  return it == states.end() ? Integer(0) : it->second;
}

std::map<Partition, Integer, LexDescending> maximal_pleth_weights(
    const Partition& mu, const Partition& nu) {
  const std::uint64_t n = nu.size();
  const std::uint64_t degree = mu.size() * n;
  std::map<Partition, Integer, LexDescending> found;

  // No inner tableau has more than μ_1 + ... + μ_k entries below k + 1.
  auto prefix_cap = [&](std::size_t k) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < k && i < mu.length(); ++i) s += mu[i];
    return n * s;
  };
  auto dominated = [&](const Partition& alpha) {
    return std::any_of(found.begin(), found.end(), [&](const auto& kv) {
      return dominates(kv.first, alpha);
    });
  };

  std::vector<Part> prefix;
  auto search = [&](auto& self, std::uint64_t sum, Part last) -> void {
    if (sum == degree) {
      Partition alpha(prefix);
      if (dominated(alpha)) return;
      Integer c = count_plethystic(mu, nu, Composition(prefix));
      if (c > 0) found.emplace(std::move(alpha), std::move(c));
      return;
    }
    const Part top = static_cast<Part>(std::min<std::uint64_t>(last, degree - sum));
    for (Part p = top; p >= 1; --p) {
      if (sum + p > prefix_cap(prefix.size() + 1)) continue;
      prefix.push_back(p);
      // The greedy completion (p, p, ..., rest) dominates every completion
      // of this prefix and of every prefix ending in a smaller part.
      std::vector<Part> greedy = prefix;
      std::uint64_t rest = degree - sum - p;
      while (rest > 0) {
        const Part q = static_cast<Part>(std::min<std::uint64_t>(p, rest));
        greedy.push_back(q);
        rest -= q;
      }
      if (dominated(Partition(std::move(greedy)))) {
        prefix.pop_back();
        break;
      }
      self(self, sum + p, p);
      prefix.pop_back();
    }
  };
  if (degree == 0) {
    Integer c = count_plethystic(mu, nu, Composition());
    if (c > 0) found.emplace(Partition(), std::move(c));
    return found;
  }
  search(search, 0, static_cast<Part>(degree));

  for (const auto& [a, ca] : found)
    for (const auto& [b, cb] : found)
      if (a != b && dominates(a, b))
        throw std::logic_error("maximal_pleth_weights: comparable maxima");
  return found;
}

}  // namespace plethora
