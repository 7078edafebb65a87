#pragma once

// Arithmetic consequences of the cocharacter tables: genus bounds, the
// (d, g) feasibility table, Euler-characteristic exclusion of ample divisors,
// Hodge-number lower bounds and the numeric ledger of an E6-surface.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liehodge/errors.hpp"
#include "liehodge/hodge_search.hpp"
#include "liehodge/lattice.hpp"

namespace liehodge {

enum class ExceptionalGroup { E6, E7 };

inline std::string_view to_string(ExceptionalGroup g) { return g == ExceptionalGroup::E6 ? "E6" : "E7"; }

inline ExceptionalGroup parse_group(std::string_view s) {
  if (s == "e6" || s == "E6") return ExceptionalGroup::E6;
  if (s == "e7" || s == "E7") return ExceptionalGroup::E7;
  throw UsageError("group must be e6 or e7, got '" + std::string(s) + "'");
}

inline RootType root_type(ExceptionalGroup g) { return g == ExceptionalGroup::E6 ? RootType::E6 : RootType::E7; }

/// Node carrying the minuscule representation used for the group: w1 (27)
/// for E6, w7 (56) for E7.
inline std::size_t minuscule_node(ExceptionalGroup g) { return g == ExceptionalGroup::E6 ? 1 : 7; }

/// 27 or 56.
inline std::int64_t minuscule_dimension(ExceptionalGroup g) { return g == ExceptionalGroup::E6 ? 27 : 56; }

/// A(g, i) = (i+1) A(g-1, i) + (g-i) A(g-1, i-1), A(1, 0) = 1.
inline BigInt eulerian_number(std::int64_t g, std::int64_t i) {
  if (g < 1) throw UsageError("eulerian_number needs g >= 1, got " + std::to_string(g));
  if (i < 0 || i >= g) throw UsageError("eulerian_number index " + std::to_string(i) + " outside [0, " +
                                        std::to_string(g - 1) + "]");
  std::vector<BigInt> row{1};
  for (std::int64_t n = 2; n <= g; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n), 0);
    for (std::int64_t k = 0; k < n; ++k) {
      if (k < n - 1) next[k] += (k + 1) * row[k];
      if (k > 0) next[k] += (n - k) * row[k - 1];
    }
    row.swap(next);
  }
  return row[static_cast<std::size_t>(i)];
}

inline BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// For a smooth ample divisor D in a g-dimensional abelian variety,
/// (-1)^{g-1-i} chi(D, Omega^i) = n A(g, i), so |chi_top(D)| = n g!. Returns
/// true when |e| is not a multiple of g!, i.e. no ample divisor has Euler
/// characteristic e.
inline bool divisor_euler_exclusion(const BigInt& e, std::int64_t g) {
  if (g < 1) throw UsageError("divisor_euler_exclusion needs g >= 1");
  const BigInt a = e < 0 ? BigInt(-e) : e;
  return a % factorial(g) != 0;
}

namespace detail {

inline std::vector<std::int64_t> hodge_bound_shape(std::int64_t d, std::int64_t outer) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(d) + 1, 1);
  for (std::int64_t p = 0; p <= d; ++p) {
    if (p == 0 || p == d) out[p] = outer;
    else if (p == 1 || p == d - 1) out[p] = 2;
  }
  return out;
}

}  // namespace detail

/// Lower bounds for (-1)^{d-p} chi(X, Omega^p), p = 0..d, for a smooth
/// d-dimensional subvariety with ample normal bundle of a g-dimensional
/// abelian variety, d <= g - 2.
inline std::vector<std::int64_t> hodge_lower_bounds(std::int64_t d, std::int64_t g) {
  if (d < 1) throw UsageError("dimension must be positive");
  if (d > g - 2) throw DomainError("Hodge lower bounds need codimension >= 2 (d <= g - 2); got d=" + std::to_string(d) +
                                   ", g=" + std::to_string(g));
  return detail::hodge_bound_shape(d, g - d + 1);
}

/// Same bounds for a subspace V of 1-forms with m(V) = d, dim V > d + 1.
inline std::vector<std::int64_t> subspace_hodge_bounds(std::int64_t d, std::int64_t dim_v) {
  if (d < 1) throw UsageError("dimension must be positive");
  if (dim_v <= d + 1)
    throw DomainError("subspace bounds need dim V > d + 1; got d=" + std::to_string(d) + ", dim V=" +
                      std::to_string(dim_v));
  return detail::hodge_bound_shape(d, dim_v - d + 1);
}

/// The dimension of X equals the length of its Hodge decomposition.
inline std::int64_t dimension_from_level(const HodgeRow& row) { return row.ell; }

/// Rows that may occur for the group: E7 admits only odd length since its
/// 56-dimensional representation is symplectic.
inline bool admissible_length(ExceptionalGroup group, std::int64_t ell) {
  return group == ExceptionalGroup::E6 || ell % 2 == 1;
}

/// g_max(d) = d - 1 + max h^0 over rows of length d, from
/// h^d = h^0 >= g - d + 1.
inline std::map<std::int64_t, std::int64_t> g_max_table(ExceptionalGroup group, const SearchResult& result) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& r : result.rows) {
    const auto d = dimension_from_level(r.row);
    if (!admissible_length(group, d) || d < 1) continue;
    const auto g = d - 1 + r.row.h.front();
    auto [it, inserted] = out.try_emplace(d, g);
    if (!inserted) it->second = std::max(it->second, g);
  }
  return out;
}

struct FeasibilityEntry {
  ExceptionalGroup group = ExceptionalGroup::E6;
  std::int64_t d = 0;
  std::int64_t g_min = 0;
  std::int64_t g_max = 0;  // inclusive
  HodgeRow hodge_row;
  std::int64_t euler = 0;  // (-1)^d dim V

  friend bool operator==(const FeasibilityEntry&, const FeasibilityEntry&) = default;
};

/// For each admissible row of length d, the genera g with d <= g - 2,
/// h^0 >= g - d + 1 and, with filter_half, d < g/2. Entries with empty ranges
/// are dropped; order is by d then row.
inline std::vector<FeasibilityEntry> feasibility_table(ExceptionalGroup group, const SearchResult& result,
                                                       bool filter_half) {
  std::vector<FeasibilityEntry> out;
  const std::int64_t dim_v = minuscule_dimension(group);
  for (const auto& r : result.rows) {
    const auto d = dimension_from_level(r.row);
    if (!admissible_length(group, d) || d < 1) continue;
    std::int64_t lo = d + 2;
    if (filter_half) lo = std::max(lo, 2 * d + 1);
    const std::int64_t hi = d - 1 + r.row.h.front();
    if (lo > hi) continue;
    out.push_back({group, d, lo, hi, r.row, d % 2 == 0 ? dim_v : -dim_v});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.d < b.d; });
  return out;
}

/// deg Y >= 1 + codim Y for a nondegenerate irreducible variety.
inline bool satisfies_minimal_degree_bound(std::int64_t degree, std::int64_t codim) { return degree >= 1 + codim; }

struct SurfaceLedger {
  std::int64_t chi_o = 0;
  std::int64_t c2 = 0;
  std::int64_t c1_sq = 0;
  std::int64_t chi_omega1 = 0;
  std::int64_t chi_omega2 = 0;
  std::int64_t c2_n = 0;
  std::int64_t deg_d_min = 0;
  std::vector<std::int64_t> deg_pi_candidates;
  std::vector<std::int64_t> deg_gamma_candidates;
  std::vector<std::int64_t> deg_y_candidates;

  friend bool operator==(const SurfaceLedger&, const SurfaceLedger&) = default;
};

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

/// Numeric ledger of a smooth surface X in an abelian variety from chi(O_X),
/// c2(X) and a lower bound on the degree of the difference morphism.
///   c1^2 = 12 chi(O) - c2                 (Noether)
///   chi(Omega^1) = (c1^2 - 5 c2) / 6      (Riemann-Roch)
///   c2(N) = c1^2 - c2
///   deg pi divides c2(N) and is >= deg_d_min
///   deg gamma divides some deg pi and divides c1^2
///   deg Y = c2(N) / deg pi
inline SurfaceLedger surface_ledger(std::int64_t chi_o, std::int64_t c2, std::int64_t deg_d_min) {
  SurfaceLedger s;
  s.chi_o = chi_o;
  s.c2 = c2;
  s.deg_d_min = deg_d_min;
  s.c1_sq = 12 * chi_o - c2;
  if (s.c1_sq < 0)
    throw InconsistentInputError("Noether's formula 12 chi(O) = c1^2 + c2 gives c1^2 = " + std::to_string(s.c1_sq) +
                                 " < 0");
  const std::int64_t hrr = s.c1_sq - 5 * c2;
  if (hrr % 6 != 0)
    throw InconsistentInputError("chi(Omega^1) = (c1^2 - 5 c2)/6 is not integral: " + std::to_string(hrr) + "/6");
  s.chi_omega1 = hrr / 6;
  s.chi_omega2 = chi_o;
  s.c2_n = s.c1_sq - c2;
  if (s.c2_n <= 0)
    throw InconsistentInputError("c2(N) = c1^2 - c2 = " + std::to_string(s.c2_n) + " must be positive");
  if (deg_d_min < 1) throw UsageError("degree lower bound must be positive");
  for (auto k : divisors(s.c2_n))
    if (k >= deg_d_min) s.deg_pi_candidates.push_back(k);
  std::set<std::int64_t> gamma;
  for (auto p : s.deg_pi_candidates)
    for (auto k : divisors(p))
      if (s.c1_sq % k == 0) gamma.insert(k);
  s.deg_gamma_candidates.assign(gamma.begin(), gamma.end());
  for (auto p : s.deg_pi_candidates) s.deg_y_candidates.push_back(s.c2_n / p);
  std::sort(s.deg_y_candidates.begin(), s.deg_y_candidates.end());
  return s;
}

/// 45 binom(i+1, 2) - 45 i + 6.
inline std::int64_t fano_hilbert_polynomial(std::int64_t i) {
  if (i < 0) throw UsageError("Hilbert polynomial argument must be nonnegative");
  return 45 * (i + 1) * i / 2 - 45 * i + 6;
}

}  // namespace liehodge
