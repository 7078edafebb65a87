#pragma once

// Report builders behind the command-line subcommands. Each returns a
// ReportDocument; rendering and exit codes are the caller's business.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liehodge/character.hpp"
#include "liehodge/constraints.hpp"
#include "liehodge/errors.hpp"
#include "liehodge/hodge_search.hpp"
#include "liehodge/lattice.hpp"
#include "liehodge/report.hpp"

namespace liehodge {

struct CommandOptions {
  std::optional<std::int64_t> bound;
  std::optional<Parity> parity;
  unsigned threads = 1;
  bool verify = false;
};

enum class SquareKind { full, sym, alt };

inline SquareKind parse_square_kind(std::string_view s) {
  if (s == "full") return SquareKind::full;
  if (s == "sym") return SquareKind::sym;
  if (s == "alt") return SquareKind::alt;
  throw UsageError("which must be full, sym or alt, got '" + std::string(s) + "'");
}

inline std::string_view to_string(SquareKind k) {
  switch (k) {
    case SquareKind::full: return "full";
    case SquareKind::sym: return "sym";
    case SquareKind::alt: return "alt";
  }
  return "?";
}

namespace detail {

inline void check(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("verification failed: " + what);
}

inline std::vector<std::int64_t> as_list(const LatticeVector<WeightTag>& w) { return {w.values().begin(), w.values().end()}; }
inline std::vector<std::int64_t> as_list(const LatticeVector<CoweightTag>& w) {
  return {w.values().begin(), w.values().end()};
}

/// Odd length only for E7 unless asked otherwise.
inline SearchOptions search_options(ExceptionalGroup group, const CommandOptions& opts) {
  SearchOptions s;
  s.bound = opts.bound;
  s.parity = opts.parity;
  if (!s.parity && group == ExceptionalGroup::E7) s.parity = Parity::odd;
  s.threads = opts.threads;
  return s;
}

inline SearchResult run_search(ExceptionalGroup group, const CommandOptions& opts) {
  const RootSystem& rs = root_system(root_type(group));
  const Character v = minuscule_character(rs, minuscule_node(group));
  SearchResult result = search_hodge_rows(v, search_options(group, opts));
  if (opts.verify) {
    for (const auto& r : result.rows) {
      check(r.row.sum() == v.dimension(), "row " + r.row.to_string() + " sums to dim V");
      check(!r.witnesses.empty(), "row " + r.row.to_string() + " has a witness");
      for (const auto& w : r.witnesses) {
        check(is_dominant(rs, w), "witness " + w.to_string() + " is dominant");
        const Grading g = grading(v, w);
        check(g.dimension() == v.dimension(), "grading dimension");
        check(check_hodge_properties(g) == std::optional<HodgeRow>(r.row), "witness regrades to its row");
      }
    }
  }
  return result;
}

inline void add_search_params(ReportDocument& doc, ExceptionalGroup group, const SearchResult& r) {
  doc.params.emplace_back("group", std::string(to_string(group)));
  doc.params.emplace_back("bound", r.bound);
  doc.params.emplace_back("parity", r.parity ? std::string(to_string(*r.parity)) : std::string("any"));
}

inline const RowWitnesses& reference_row(ExceptionalGroup group, const SearchResult& result) {
  if (group == ExceptionalGroup::E6) {
    const auto* r = result.find(HodgeRow{2, {6, 15, 6}});
    if (!r) throw InvariantViolation("E6 search lacks the (6,15,6) row");
    return *r;
  }
  if (result.rows.empty()) throw InvariantViolation("search returned no rows");
  return result.rows.front();
}

}  // namespace detail

inline ReportDocument cmd_tables(ExceptionalGroup group, const CommandOptions& opts) {
  const RootSystem& rs = root_system(root_type(group));
  const SearchResult result = detail::run_search(group, opts);
  ReportDocument doc{"tables", {}, {}};
  detail::add_search_params(doc, group, result);

  ReportBlock rows{"Hodge rows of dominant cocharacters",
                   std::string(to_string(group)) + " minuscule cocharacter table",
                   {"ell", "h", "sum", "witnesses", "witness_coroot_coords", "identification"},
                   {}};
  for (const auto& r : result.rows) {
    const auto named = describe_cocharacter(rs, r.witnesses.front());
    rows.rows.push_back({r.row.ell, r.row.h, r.row.sum(), static_cast<std::int64_t>(r.witness_count()),
                         detail::as_list(r.witnesses.front()), named.identification});
  }
  doc.blocks.push_back(std::move(rows));
  doc.blocks.push_back({"Search summary",
                        "enumeration of dominant coroot-lattice points",
                        {"dim_v", "bound", "candidates", "rows"},
                        {{minuscule_dimension(group), result.bound, static_cast<std::int64_t>(result.candidates),
                          static_cast<std::int64_t>(result.rows.size())}}});
  return doc;
}

inline ReportDocument cmd_adjoint_grading(ExceptionalGroup group, const CommandOptions& opts) {
  const RootSystem& rs = root_system(root_type(group));
  const SearchResult result = detail::run_search(group, opts);
  const RowWitnesses& ref = detail::reference_row(group, result);
  if (group == ExceptionalGroup::E6 && ref.witness_count() != 1)
    throw InvariantViolation("the (6,15,6) row must have a unique dominant witness");
  const Coweight& lambda = ref.witnesses.front();
  const Character adj = adjoint_character(rs);
  const Grading g = grading(adj, lambda);
  if (opts.verify) {
    detail::check(g.dimension() == adj.dimension(), "adjoint grading sums to the dimension");
    detail::check(adj.dimension() == weyl_dimension(rs, rs.highest_root()), "adjoint dimension");
  }

  ReportDocument doc{"adjoint-grading", {}, {}};
  detail::add_search_params(doc, group, result);
  const auto named = describe_cocharacter(rs, lambda);
  doc.blocks.push_back({"Cocharacter",
                        "witness of the row " + ref.row.to_string(),
                        {"row", "coroot_coords", "simple_root_values", "identification"},
                        {{ref.row.h, detail::as_list(lambda), detail::as_list(named.simple_root_values),
                          named.identification}}});
  ReportBlock levels{"Grading of the adjoint representation", "adjoint grading under the witness",
                     {"level", "dim"}, {}};
  for (const auto& [n, d] : g.levels) levels.rows.push_back({n, d});
  doc.blocks.push_back(std::move(levels));
  const auto hodge = check_hodge_properties(g);
  doc.blocks.push_back({"Totals",
                        "dimension check",
                        {"dims", "length", "total"},
                        {{g.dims(), hodge ? hodge->ell : g.levels.rbegin()->first, g.dimension()}}});
  return doc;
}

inline ReportDocument cmd_tensor_square(ExceptionalGroup group, SquareKind kind, const CommandOptions& opts) {
  const RootSystem& rs = root_system(root_type(group));
  const Character v = minuscule_character(rs, minuscule_node(group));
  Character square(rs);
  switch (kind) {
    case SquareKind::full:
      square = tensor_character(v, freudenthal_character(rs, dual_highest_weight(rs, rs.fundamental_weight(minuscule_node(group)))));
      break;
    case SquareKind::sym: square = sym2_character(v); break;
    case SquareKind::alt: square = alt2_character(v); break;
  }
  const Decomposition dec = decompose(square);
  if (opts.verify) {
    detail::check(dec.dimension() == square.dimension(), "summand dimensions add up");
    detail::check(dec.expand() == square, "decomposition expands back to the character");
    if (kind != SquareKind::full)
      detail::check(sym2_character(v).dimension() + alt2_character(v).dimension() == v.dimension() * v.dimension(),
                    "Sym^2 + Alt^2 = V (x) V");
  }

  ReportDocument doc{"tensor-square", {}, {}};
  doc.params.emplace_back("group", std::string(to_string(group)));
  doc.params.emplace_back("which", std::string(to_string(kind)));
  const std::string what = kind == SquareKind::full ? "V (x) V^dual" : kind == SquareKind::sym ? "Sym^2 V" : "Alt^2 V";

  ReportBlock summands{"Irreducible summands of " + what, "decomposition into irreducibles",
                       {"highest_weight", "labels", "multiplicity", "dimension"}, {}};
  // Largest first.
  for (auto it = dec.summands.rbegin(); it != dec.summands.rend(); ++it)
    summands.rows.push_back({fundamental_expansion(it->first), detail::as_list(it->first), it->second,
                             weyl_dimension(rs, it->first)});
  doc.blocks.push_back(std::move(summands));

  ReportBlock ledgers{"Orbit-basis characters of the summands", "characters in the Weyl-orbit basis",
                      {"summand", "orbit", "coefficient", "orbit_size"}, {}};
  for (auto it = dec.summands.rbegin(); it != dec.summands.rend(); ++it) {
    const OrbitCharacter oc = orbit_character(freudenthal_character(rs, it->first));
    if (opts.verify) detail::check(oc.expand() == freudenthal_character(rs, it->first), "orbit round trip");
    for (auto jt = oc.coeffs.begin(); jt != oc.coeffs.end(); ++jt)
      ledgers.rows.push_back({fundamental_expansion(it->first), fundamental_expansion(jt->first), jt->second,
                              static_cast<std::int64_t>(weyl_orbit(rs, jt->first).size())});
  }
  doc.blocks.push_back(std::move(ledgers));

  if (group == ExceptionalGroup::E6 && kind == SquareKind::full) {
    const CcLedger cc = cc_multiplicity_ledger(rs);
    ReportBlock b{"Orbit ledger of the tensor square", "orbit coefficients summed over summands",
                  {"orbit", "without_unit", "with_unit"}, {}};
    for (const auto& [w, k] : cc.with_unit.coeffs) b.rows.push_back({fundamental_expansion(w), cc.without_unit.coefficient(w), k});
    doc.blocks.push_back(std::move(b));
  }
  doc.blocks.push_back({"Totals",
                        "dimension check",
                        {"dim_v", "dim_square", "summands"},
                        {{v.dimension(), square.dimension(), static_cast<std::int64_t>(dec.distinct_summands())}}});
  return doc;
}

inline ReportDocument cmd_constraints(ExceptionalGroup group, bool half, const CommandOptions& opts) {
  const SearchResult result = detail::run_search(group, opts);
  const auto gmax = g_max_table(group, result);
  const auto feasible = feasibility_table(group, result, half);
  if (opts.verify)
    for (const auto& e : feasible)
      for (std::int64_t g = e.g_min; g <= e.g_max; ++g) {
        detail::check(e.hodge_row.h.front() >= g - e.d + 1, "h^0 >= g - d + 1");
        detail::check(!half || 2 * e.d < g, "d < g/2");
        detail::check(e.hodge_row.ell == e.d, "row length equals d");
      }

  ReportDocument doc{"constraints", {}, {}};
  detail::add_search_params(doc, group, result);
  doc.params.emplace_back("half", static_cast<std::int64_t>(half));

  ReportBlock gm{"Upper bound g_max by dimension d", "g_max(d) = d - 1 + max h^0", {"d", "g_max", "max_h0"}, {}};
  for (const auto& [d, g] : gmax) gm.rows.push_back({d, g, g - d + 1});
  doc.blocks.push_back(std::move(gm));

  ReportBlock fb{"Feasible (d, g)", half ? "cases with d < g/2" : "cases with d <= g - 2",
                 {"group", "dim_v", "d", "g_min", "g_max", "euler", "h"}, {}};
  for (const auto& e : feasible)
    fb.rows.push_back({std::string(to_string(group)), minuscule_dimension(group), e.d, e.g_min, e.g_max, e.euler,
                       e.hodge_row.h});
  doc.blocks.push_back(std::move(fb));

  std::int64_t top = 4;
  for (const auto& [d, g] : gmax) top = std::max(top, g);
  ReportBlock div{"Ample divisors with |chi_top| = dim V", "chi_top of an ample divisor is a multiple of g!",
                  {"g", "excluded"}, {}};
  for (std::int64_t g = 2; g <= top; ++g)
    div.rows.push_back({g, static_cast<std::int64_t>(divisor_euler_exclusion(minuscule_dimension(group), g))});
  doc.blocks.push_back(std::move(div));
  return doc;
}

struct SurfaceInputs {
  std::int64_t chi_o = 6;
  std::int64_t c2 = 27;
  std::int64_t deg_d_min = 6;
};

inline ReportDocument cmd_surface_ledger(const SurfaceInputs& in, const CommandOptions& opts) {
  const SurfaceLedger s = surface_ledger(in.chi_o, in.c2, in.deg_d_min);
  if (opts.verify) {
    detail::check(12 * s.chi_o == s.c1_sq + s.c2, "Noether's formula");
    detail::check(s.c2_n == s.c1_sq - s.c2, "c2(N) = c1^2 - c2");
    for (auto p : s.deg_pi_candidates) detail::check(s.c2_n % p == 0, "deg pi divides c2(N)");
    for (auto k : s.deg_gamma_candidates) detail::check(s.c1_sq % k == 0, "deg gamma divides c1^2");
  }

  ReportDocument doc{"surface-ledger", {}, {}};
  doc.params.emplace_back("chi_o", in.chi_o);
  doc.params.emplace_back("c2", in.c2);
  doc.params.emplace_back("deg_d_min", in.deg_d_min);
  doc.blocks.push_back({"Numeric ledger",
                        "Noether, Riemann-Roch and divisibility of deg pi, deg gamma, deg Y",
                        {"quantity", "value"},
                        {{"chi(O)", s.chi_o},
                         {"chi(Omega^1)", s.chi_omega1},
                         {"chi(Omega^2)", s.chi_omega2},
                         {"c2", s.c2},
                         {"c1^2", s.c1_sq},
                         {"c2(N)", s.c2_n},
                         {"deg pi", s.deg_pi_candidates},
                         {"deg gamma", s.deg_gamma_candidates},
                         {"deg Y", s.deg_y_candidates}}});
  ReportBlock hilbert{"Hilbert polynomial of the Fano surface", "45 binom(i+1,2) - 45 i + 6", {"i", "value"}, {}};
  for (std::int64_t i = 0; i <= 4; ++i) hilbert.rows.push_back({i, fano_hilbert_polynomial(i)});
  doc.blocks.push_back(std::move(hilbert));
  ReportBlock minimal{"Minimal-degree bound deg Y >= 1 + codim Y", "annotation only", {"deg_y", "max_codim"}, {}};
  for (auto y : s.deg_y_candidates) minimal.rows.push_back({y, y - 1});
  doc.blocks.push_back(std::move(minimal));
  return doc;
}

}  // namespace liehodge
