#pragma once

// Exhaustive search for cocharacters whose grading of a representation has
// the three Hodge properties:
//   H1  dim V^n = dim V^{-n}
//   H2  the nonzero levels are exactly {2i - l : 0 <= i <= l} for some l >= 0
//   H3  dim V^{l-2} >= 2 and dim V^l >= 3
//
// Cocharacters of the simply connected group are coroot-lattice points. Up to
// conjugacy each is dominant, and a dominant lambda is described by its values
// d = C a >= 0 on the simple roots. For dominant lambda the extreme pairings
// with the weights of V occur at dominant weights of V and of its dual, so the
// bound |<lambda, chi>| <= B is a handful of linear inequalities in d with
// nonnegative coefficients, which prunes the enumeration to a box-like region.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "liehodge/character.hpp"
#include "liehodge/errors.hpp"
#include "liehodge/lattice.hpp"

namespace liehodge {

/// Level n -> dim V^n(lambda); only nonzero levels are stored.
struct Grading {
  std::map<std::int64_t, std::int64_t> levels;

  std::int64_t dim_at(std::int64_t n) const {
    auto it = levels.find(n);
    return it == levels.end() ? 0 : it->second;
  }
  std::int64_t dimension() const {
    std::int64_t s = 0;
    for (const auto& [n, d] : levels) s += d;
    return s;
  }
  /// Dimensions in increasing level order.
  std::vector<std::int64_t> dims() const {
    std::vector<std::int64_t> out;
    for (const auto& [n, d] : levels) out.push_back(d);
    return out;
  }
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// Length l and Hodge numbers h^i = dim V^{2i-l}, 0 <= i <= l.
struct HodgeRow {
  std::int64_t ell = 0;
  std::vector<std::int64_t> h;

  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto x : h) s += x;
    return s;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
    return s + ")";
  }
  // Canonical order: by length, then lexicographically on h.
  friend auto operator<=>(const HodgeRow&, const HodgeRow&) = default;
  friend bool operator==(const HodgeRow&, const HodgeRow&) = default;
};

/// A row of a search table together with its dominant witnesses.
struct RowWitnesses {
  HodgeRow row;
  std::vector<Coweight> witnesses;  // sorted, no duplicates

  std::size_t witness_count() const noexcept { return witnesses.size(); }
  friend bool operator==(const RowWitnesses&, const RowWitnesses&) = default;
};

enum class Parity { odd, even };

inline std::string_view to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

inline Parity parse_parity(std::string_view s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  throw UsageError("parity must be 'odd' or 'even', got '" + std::string(s) + "'");
}

struct SearchResult {
  std::vector<RowWitnesses> rows;  // sorted by HodgeRow
  std::int64_t bound = 0;
  std::optional<Parity> parity;
  std::uint64_t candidates = 0;  // dominant coroot-lattice points examined

  const RowWitnesses* find(const HodgeRow& row) const {
    for (const auto& r : rows)
      if (r.row == row) return &r;
    return nullptr;
  }
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Histogram of <lambda, chi> over the weights of c, with multiplicity.
inline Grading grading(const Character& c, const Coweight& lambda) {
  c.root_system().check_rank(lambda);
  Grading g;
  for (const auto& [w, m] : c.multiplicities()) g.levels[pairing(lambda, w)] += m;
  return g;
}

namespace detail {

// dim_at(n) must return dim V^n; max_level is the largest nonzero level and
// level_count the number of nonzero levels.
template <class DimAt>
std::optional<HodgeRow> hodge_row_from(DimAt&& dim_at, std::int64_t min_level, std::int64_t max_level,
                                       std::size_t level_count) {
  const std::int64_t ell = max_level;
  if (ell < 0 || min_level != -ell) return std::nullopt;
  // H2: exactly l+1 nonzero levels, all of the form 2i - l.
  if (level_count != static_cast<std::size_t>(ell) + 1) return std::nullopt;
  HodgeRow row{ell, std::vector<std::int64_t>(static_cast<std::size_t>(ell) + 1)};
  for (std::int64_t i = 0; i <= ell; ++i) {
    const auto d = dim_at(2 * i - ell);
    if (d == 0) return std::nullopt;
    row.h[static_cast<std::size_t>(i)] = d;
  }
  // H1
  for (std::int64_t i = 0; i <= ell; ++i)
    if (row.h[static_cast<std::size_t>(i)] != row.h[static_cast<std::size_t>(ell - i)]) return std::nullopt;
  // H3
  if (dim_at(ell - 2) < 2 || dim_at(ell) < 3) return std::nullopt;
  return row;
}

}  // namespace detail

/// The HodgeRow of g if it satisfies H1, H2 and H3 verbatim.
inline std::optional<HodgeRow> check_hodge_properties(const Grading& g) {
  if (g.levels.empty()) return std::nullopt;
  for (const auto& [n, d] : g.levels)
    if (d != g.dim_at(-n)) return std::nullopt;
  return detail::hodge_row_from([&](std::int64_t n) { return g.dim_at(n); }, g.levels.begin()->first,
                                g.levels.rbegin()->first, g.levels.size());
}

/// Dominant coroot-lattice points lambda with max_chi |<lambda, chi>| <= bound
/// over the weights chi of a representation, visited in lexicographic order of
/// their values on the simple roots.
class CocharacterSpace {
 public:
  CocharacterSpace(const Character& rep, std::int64_t bound) : rs_(&rep.root_system()), bound_(bound) {
    if (rep.support_size() == 0) throw UsageError("cocharacter enumeration needs a nonempty representation");
    if (bound < 1) throw UsageError("search bound must be positive, got " + std::to_string(bound));
    if (!rep.is_weyl_invariant()) throw UsageError("cocharacter enumeration needs a Weyl-invariant character");
    const std::size_t r = rs_->rank();
    limit_ = bound * rs_->fundamental_group_order();
    std::set<Weight> extremes;
    for (const auto& [w, m] : rep.multiplicities()) {
      if (is_dominant(w)) extremes.insert(w);
      if (is_dominant(-w)) extremes.insert(-w);
    }
    for (const auto& nu : extremes) {
      if (nu.is_zero()) continue;
      auto coeff = scaled_root_coordinates(*rs_, nu);
      if (std::find(constraints_.begin(), constraints_.end(), coeff) == constraints_.end())
        constraints_.push_back(std::move(coeff));
    }
    for (std::size_t i = 0; i < r; ++i) {
      const bool bounded =
          std::any_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c[i] > 0; });
      if (!bounded)
        throw DomainError("representation has a positive-dimensional kernel: direction " + std::to_string(i + 1) +
                          " is unbounded, so infinitely many cocharacters satisfy the bound");
    }
  }

  const RootSystem& root_system() const noexcept { return *rs_; }
  std::int64_t bound() const noexcept { return bound_; }

  /// Visits every point whose first simple-root value is congruent to `chunk`
  /// modulo `chunks`; the chunks partition the space.
  template <class Visitor>
  void for_each(Visitor&& visit, std::size_t chunk = 0, std::size_t chunks = 1) const {
    if (chunks == 0 || chunk >= chunks) throw UsageError("invalid chunk " + std::to_string(chunk));
    std::vector<std::int64_t> partial(constraints_.size(), 0);
    Weight d(rs_->rank());
    recurse(0, d, partial, visit, chunk, chunks);
  }

 private:
  template <class Visitor>
  void recurse(std::size_t i, Weight& d, std::vector<std::int64_t>& partial, Visitor& visit, std::size_t chunk,
               std::size_t chunks) const {
    const std::size_t r = rs_->rank();
    if (i == r) {
      if (auto lambda = coweight_from_dynkin(*rs_, d)) visit(*lambda);
      return;
    }
    const std::vector<std::int64_t> base = partial;
    for (std::int64_t v = 0;; ++v) {
      bool fits = true;
      for (std::size_t c = 0; c < constraints_.size(); ++c) {
        partial[c] = base[c] + v * constraints_[c][i];
        if (partial[c] > limit_) fits = false;
      }
      if (!fits) break;
      if (i == 0 && static_cast<std::size_t>(v) % chunks != chunk) continue;
      d[i] = v;
      recurse(i + 1, d, partial, visit, chunk, chunks);
    }
    d[i] = 0;
    partial = base;
  }

  const RootSystem* rs_;
  std::int64_t bound_;
  std::int64_t limit_ = 0;
  std::vector<std::vector<std::int64_t>> constraints_;
};

inline std::vector<Coweight> enumerate_dominant_cocharacters(const Character& rep, std::int64_t bound) {
  std::vector<Coweight> out;
  CocharacterSpace(rep, bound).for_each([&](const Coweight& c) { out.push_back(c); });
  return out;
}

struct SearchOptions {
  std::optional<std::int64_t> bound;  // default dim V - 1
  std::optional<Parity> parity;
  unsigned threads = 1;
  unsigned chunks = 0;  // 0: one chunk per thread
};

namespace detail {

struct ChunkHits {
  std::vector<std::pair<HodgeRow, Coweight>> hits;
  std::uint64_t candidates = 0;
};

inline ChunkHits search_chunk(const CocharacterSpace& space, const Character& rep, std::optional<Parity> parity,
                              std::size_t chunk, std::size_t chunks) {
  const std::size_t r = space.root_system().rank();
  std::vector<std::int64_t> flat;  // rank labels per distinct weight
  std::vector<std::int64_t> mult;
  for (const auto& [w, m] : rep.multiplicities()) {
    flat.insert(flat.end(), w.values().begin(), w.values().end());
    mult.push_back(m);
  }
  const std::int64_t offset = space.bound();
  std::vector<std::int64_t> hist(static_cast<std::size_t>(2 * offset + 1), 0);
  std::vector<std::int64_t> levels(mult.size());
  ChunkHits out;
  space.for_each(
      [&](const Coweight& lambda) {
        ++out.candidates;
        std::int64_t lo = offset, hi = -offset;
        std::size_t distinct = 0;
        for (std::size_t k = 0; k < mult.size(); ++k) {
          std::int64_t p = 0;
          const std::int64_t* w = flat.data() + k * r;
          for (std::size_t i = 0; i < r; ++i) p += lambda[i] * w[i];
          levels[k] = p;
          auto& slot = hist[static_cast<std::size_t>(p + offset)];
          if (slot == 0) ++distinct;
          slot += mult[k];
          lo = std::min(lo, p);
          hi = std::max(hi, p);
        }
        auto dim_at = [&](std::int64_t n) -> std::int64_t {
          return (n < -offset || n > offset) ? 0 : hist[static_cast<std::size_t>(n + offset)];
        };
        auto row = hodge_row_from(dim_at, lo, hi, distinct);
        for (auto p : levels) hist[static_cast<std::size_t>(p + offset)] = 0;
        if (!row) return;
        if (parity && ((row->ell % 2 == 1) != (*parity == Parity::odd))) return;
        out.hits.emplace_back(std::move(*row), lambda);
      },
      chunk, chunks);
  return out;
}

}  // namespace detail

/// All Hodge rows realised by dominant cocharacters within the bound, with
/// their witnesses. The result does not depend on threads or chunking.
inline SearchResult search_hodge_rows(const Character& rep, const SearchOptions& opts = {}) {
  const std::int64_t bound = opts.bound.value_or(rep.dimension() - 1);
  const CocharacterSpace space(rep, bound);
  const unsigned threads = std::max(1u, opts.threads);
  const std::size_t chunks = opts.chunks ? opts.chunks : threads;

  std::vector<detail::ChunkHits> per_chunk(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        per_chunk[c] = detail::search_chunk(space, rep, opts.parity, c, chunks);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (spawn <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::map<HodgeRow, std::set<Coweight>> merged;
  SearchResult result;
  result.bound = bound;
  result.parity = opts.parity;
  for (auto& chunk : per_chunk) {
    result.candidates += chunk.candidates;
    for (auto& [row, lambda] : chunk.hits) merged[row].insert(lambda);
  }
  for (auto& [row, ws] : merged) result.rows.push_back({row, std::vector<Coweight>(ws.begin(), ws.end())});
  return result;
}

/// Witness of a row, described in the simple-coroot basis and, where it
/// applies, as a multiple of the highest coroot or of a fundamental coweight.
struct NamedCocharacter {
  Coweight coweight;
  Weight simple_root_values;  // C a
  std::string coroot_expansion;
  std::string identification;
};

inline std::string coroot_expansion(const Coweight& c) {
  std::string s;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += c[i] > 0 ? " + " : " - ";
    else if (c[i] < 0) s += "-";
    const auto a = c[i] < 0 ? -c[i] : c[i];
    if (a != 1) s += std::to_string(a) + "*";
    s += "a" + std::to_string(i + 1) + "^";
  }
  return s.empty() ? "0" : s;
}

inline NamedCocharacter describe_cocharacter(const RootSystem& rs, const Coweight& lambda) {
  NamedCocharacter n{lambda, dynkin_labels(rs, lambda), coroot_expansion(lambda), {}};
  std::vector<std::string> names;
  const Coweight& theta = rs.highest_coroot();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (theta[i] == 0 || lambda[i] % theta[i] != 0) continue;
    const auto k = lambda[i] / theta[i];
    if (k > 0 && k * theta == lambda) names.push_back((k == 1 ? std::string() : std::to_string(k) + "*") + "theta^");
    break;
  }
  std::size_t nonzero = 0, at = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (n.simple_root_values[i] != 0) ++nonzero, at = i;
  if (nonzero == 1) {
    const auto k = n.simple_root_values[at];
    names.push_back((k == 1 ? std::string() : std::to_string(k) + "*") + "w" + std::to_string(at + 1) + "^");
  }
  for (std::size_t i = 0; i < names.size(); ++i) n.identification += (i ? " = " : "") + names[i];
  return n;
}

inline std::vector<NamedCocharacter> identify_named_cocharacter(const RootSystem& rs, const SearchResult& result,
                                                                 const HodgeRow& row) {
  const auto* found = result.find(row);
  if (!found) throw DomainError("row " + row.to_string() + " does not occur in the search result");
  std::vector<NamedCocharacter> out;
  for (const auto& w : found->witnesses) out.push_back(describe_cocharacter(rs, w));
  return out;
}

}  // namespace liehodge
