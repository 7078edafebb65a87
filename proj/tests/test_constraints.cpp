#include <gtest/gtest.h>

#include <random>

#include "liehodge/character.hpp"
#include "liehodge/constraints.hpp"
#include "oracles.hpp"

using namespace liehodge;

namespace {

const SearchResult& e6_result() {
  static const SearchResult r = search_hodge_rows(minuscule_character(root_system("E6"), 1), {.bound = 26});
  return r;
}

SearchResult synthetic(std::vector<HodgeRow> rows) {
  SearchResult r;
  for (auto& row : rows) r.rows.push_back({std::move(row), {}});
  std::sort(r.rows.begin(), r.rows.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  return r;
}

}  // namespace

TEST(Eulerian, MatchesPermutationCount) {
  for (int g = 1; g <= 8; ++g)
    for (int i = 0; i < g; ++i) EXPECT_EQ(eulerian_number(g, i), oracle::eulerian_by_permutations(g, i)) << g << ' ' << i;
}

TEST(Eulerian, RowSumsAreFactorials) {
  for (int g = 1; g <= 12; ++g) {
    BigInt s = 0;
    for (int i = 0; i < g; ++i) s += eulerian_number(g, i);
    EXPECT_EQ(s, factorial(g)) << g;
  }
}

TEST(Eulerian, SymmetricAndLarge) {
  for (int g = 1; g <= 25; ++g)
    for (int i = 0; i < g; ++i) EXPECT_EQ(eulerian_number(g, i), eulerian_number(g, g - 1 - i));
  EXPECT_EQ(eulerian_number(4, 1), 11);
  EXPECT_GT(eulerian_number(30, 15), BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(Eulerian, OutOfRange) {
  EXPECT_THROW(eulerian_number(0, 0), UsageError);
  EXPECT_THROW(eulerian_number(4, 4), UsageError);
  EXPECT_THROW(eulerian_number(4, -1), UsageError);
}

TEST(DivisorExclusion, MinusculeDimensions) {
  for (int g = 4; g <= 20; ++g) {
    EXPECT_TRUE(divisor_euler_exclusion(27, g)) << g;
    EXPECT_TRUE(divisor_euler_exclusion(-27, g)) << g;
    EXPECT_TRUE(divisor_euler_exclusion(56, g)) << g;
  }
  EXPECT_FALSE(divisor_euler_exclusion(24, 4));
  EXPECT_FALSE(divisor_euler_exclusion(-48, 4));
  EXPECT_FALSE(divisor_euler_exclusion(6, 3));
  EXPECT_FALSE(divisor_euler_exclusion(56, 2));
  EXPECT_TRUE(divisor_euler_exclusion(27, 2));
}

TEST(HodgeBounds, Shapes) {
  EXPECT_EQ(hodge_lower_bounds(2, 7), (std::vector<std::int64_t>{6, 2, 6}));
  EXPECT_EQ(hodge_lower_bounds(1, 3), (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(hodge_lower_bounds(4, 6), (std::vector<std::int64_t>{3, 2, 1, 2, 3}));
  EXPECT_EQ(hodge_lower_bounds(3, 9), (std::vector<std::int64_t>{7, 2, 2, 7}));
  EXPECT_THROW(hodge_lower_bounds(5, 6), DomainError);
  EXPECT_THROW(subspace_hodge_bounds(3, 4), DomainError);
}

TEST(HodgeBounds, SubspaceVersionAgreesWithGenus) {
  for (std::int64_t g = 3; g <= 22; ++g)
    for (std::int64_t d = 1; d <= g - 2; ++d) EXPECT_EQ(hodge_lower_bounds(d, g), subspace_hodge_bounds(d, g));
}

TEST(HodgeBounds, E6RowsRespectTheirGenusRange) {
  for (const auto& e : feasibility_table(ExceptionalGroup::E6, e6_result(), false))
    for (std::int64_t g = e.g_min; g <= e.g_max; ++g) {
      const auto lb = hodge_lower_bounds(e.d, g);
      EXPECT_GE(e.hodge_row.h.front(), lb.front());
      EXPECT_GE(e.hodge_row.h.back(), lb.back());
    }
}

TEST(GMax, E6FromSearch) {
  EXPECT_EQ(g_max_table(ExceptionalGroup::E6, e6_result()),
            (std::map<std::int64_t, std::int64_t>{{2, 7}, {4, 6}, {6, 8}}));
}

TEST(GMax, TakesLargestOuterNumberAndSkipsEvenForE7) {
  const auto r = synthetic({{3, {7, 21, 21, 7}}, {3, {4, 24, 24, 4}}, {2, {10, 36, 10}}});
  EXPECT_EQ(g_max_table(ExceptionalGroup::E7, r), (std::map<std::int64_t, std::int64_t>{{3, 9}}));
  EXPECT_EQ(g_max_table(ExceptionalGroup::E6, r), (std::map<std::int64_t, std::int64_t>{{2, 11}, {3, 9}}));
}

TEST(Feasibility, E6HalfFilter) {
  const auto t = feasibility_table(ExceptionalGroup::E6, e6_result(), true);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].d, 2);
  EXPECT_EQ(t[0].g_min, 5);
  EXPECT_EQ(t[0].g_max, 7);
  EXPECT_EQ(t[0].euler, 27);
}

TEST(Feasibility, WithoutFilter) {
  const auto t = feasibility_table(ExceptionalGroup::E6, e6_result(), false);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(std::make_pair(t[0].g_min, t[0].g_max), std::make_pair(std::int64_t{4}, std::int64_t{7}));
  EXPECT_EQ(std::make_pair(t[1].g_min, t[1].g_max), std::make_pair(std::int64_t{6}, std::int64_t{6}));
  EXPECT_EQ(std::make_pair(t[2].g_min, t[2].g_max), std::make_pair(std::int64_t{8}, std::int64_t{8}));
}

TEST(Feasibility, E7SyntheticRows) {
  const auto r = synthetic({{3, {7, 21, 21, 7}}, {5, {6, 7, 15, 15, 7, 6}}});
  const auto t = feasibility_table(ExceptionalGroup::E7, r, true);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].d, 3);
  EXPECT_EQ(t[0].g_min, 7);
  EXPECT_EQ(t[0].g_max, 9);
  EXPECT_EQ(t[0].euler, -56);
}

TEST(Degree, MinimalDegreeBound) {
  EXPECT_TRUE(satisfies_minimal_degree_bound(3, 2));
  EXPECT_FALSE(satisfies_minimal_degree_bound(2, 2));
}

TEST(SurfaceLedger, FanoSurfaceInputs) {
  const auto s = surface_ledger(6, 27, 6);
  EXPECT_EQ(s.c1_sq, 45);
  EXPECT_EQ(s.chi_omega1, -15);
  EXPECT_EQ(s.chi_omega2, 6);
  EXPECT_EQ(s.c2_n, 18);
  EXPECT_EQ(s.deg_pi_candidates, (std::vector<std::int64_t>{6, 9, 18}));
  EXPECT_EQ(s.deg_gamma_candidates, (std::vector<std::int64_t>{1, 3, 9}));
  EXPECT_EQ(s.deg_y_candidates, (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(SurfaceLedger, NoetherViolation) {
  EXPECT_THROW(surface_ledger(6, 80, 6), InconsistentInputError);
  try {
    surface_ledger(6, 80, 6);
  } catch (const InconsistentInputError& e) {
    EXPECT_NE(std::string(e.what()).find("Noether"), std::string::npos);
  }
}

TEST(SurfaceLedger, NonPositiveNormalClass) { EXPECT_THROW(surface_ledger(6, 36, 1), InconsistentInputError); }

TEST(SurfaceLedger, RandomInputsSatisfyTheFormulas) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::int64_t> chi(1, 20), c2(-30, 120), dmin(1, 10);
  int accepted = 0;
  for (int k = 0; k < 500; ++k) {
    const auto a = chi(rng), b = c2(rng), m = dmin(rng);
    SurfaceLedger s;
    try {
      s = surface_ledger(a, b, m);
    } catch (const InconsistentInputError&) {
      EXPECT_TRUE(12 * a - b < 0 || 12 * a - 2 * b <= 0);
      continue;
    }
    ++accepted;
    EXPECT_EQ(s.c1_sq + s.c2, 12 * s.chi_o);
    EXPECT_EQ(6 * s.chi_omega1, s.c1_sq - 5 * s.c2);
    // Noether and Riemann-Roch give chi(O) - chi(Omega^1) + chi(Omega^2) = c2.
    EXPECT_EQ(s.chi_o - s.chi_omega1 + s.chi_omega2, s.c2);
    for (auto p : s.deg_pi_candidates) {
      EXPECT_EQ(s.c2_n % p, 0);
      EXPECT_GE(p, m);
    }
    for (auto g : s.deg_gamma_candidates) {
      EXPECT_EQ(s.c1_sq % g, 0);
      EXPECT_TRUE(std::any_of(s.deg_pi_candidates.begin(), s.deg_pi_candidates.end(), [&](auto p) { return p % g == 0; }));
    }
    std::vector<std::int64_t> y;
    for (auto p : s.deg_pi_candidates) y.push_back(s.c2_n / p);
    std::sort(y.begin(), y.end());
    EXPECT_EQ(s.deg_y_candidates, y);
  }
  EXPECT_GT(accepted, 100);
}

TEST(Hilbert, FanoValues) {
  EXPECT_EQ(fano_hilbert_polynomial(0), 6);
  EXPECT_EQ(fano_hilbert_polynomial(1), 6);
  EXPECT_EQ(fano_hilbert_polynomial(2), 51);
  EXPECT_EQ(fano_hilbert_polynomial(3), 141);
  EXPECT_EQ(fano_hilbert_polynomial(4), 276);
  EXPECT_THROW(fano_hilbert_polynomial(-1), UsageError);
}

TEST(Groups, Parsing) {
  EXPECT_EQ(parse_group("e6"), ExceptionalGroup::E6);
  EXPECT_EQ(parse_group("E7"), ExceptionalGroup::E7);
  EXPECT_THROW(parse_group("e8"), UsageError);
  EXPECT_EQ(minuscule_dimension(ExceptionalGroup::E7), 56);
}
