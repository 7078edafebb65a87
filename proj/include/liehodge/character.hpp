#pragma once

// Characters of finite-dimensional representations: Weyl dimension,
// Freudenthal multiplicities, tensor/Sym^2/Alt^2 constructions, peeling into
// irreducibles and the Weyl-orbit basis of the representation ring.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liehodge/errors.hpp"
#include "liehodge/lattice.hpp"

namespace liehodge {

/// Weight -> multiplicity. Genuine characters have positive multiplicities
/// and are Weyl invariant; virtual ones (differences) may go negative while a
/// computation is in flight. Zero entries are never stored.
class Character {
 public:
  using Map = std::map<Weight, std::int64_t>;

  explicit Character(const RootSystem& rs) : rs_(&rs) {}
  Character(const RootSystem& rs, Map mults) : rs_(&rs) {
    for (auto& [w, m] : mults) add(w, m);
  }

  static Character trivial(const RootSystem& rs) {
    Character c(rs);
    c.add(Weight(rs.rank()), 1);
    return c;
  }

  const RootSystem& root_system() const noexcept { return *rs_; }
  const Map& multiplicities() const noexcept { return mults_; }

  std::int64_t multiplicity(const Weight& w) const {
    auto it = mults_.find(w);
    return it == mults_.end() ? 0 : it->second;
  }

  std::int64_t dimension() const {
    std::int64_t d = 0;
    for (const auto& [w, m] : mults_) d += m;
    return d;
  }

  /// Number of distinct weights.
  std::size_t support_size() const noexcept { return mults_.size(); }

  void add(const Weight& w, std::int64_t m) {
    rs_->check_rank(w);
    if (m == 0) return;
    auto [it, inserted] = mults_.try_emplace(w, m);
    if (!inserted && (it->second += m) == 0) mults_.erase(it);
  }

  /// this += k * other
  void add_scaled(const Character& other, std::int64_t k) {
    require_same_system(other);
    for (const auto& [w, m] : other.mults_) add(w, k * m);
  }

  bool is_genuine() const {
    return std::all_of(mults_.begin(), mults_.end(), [](const auto& e) { return e.second > 0; });
  }

  bool is_weyl_invariant() const {
    for (const auto& [w, m] : mults_)
      for (std::size_t j = 1; j <= rs_->rank(); ++j)
        if (multiplicity(simple_reflection(*rs_, j, w)) != m) return false;
    return true;
  }

  void require_same_system(const Character& other) const {
    if (rs_->type() != other.rs_->type())
      throw UsageError("characters of different root systems: " + std::string(rs_->name()) + " and " +
                       std::string(other.rs_->name()));
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.rs_->type() == b.rs_->type() && a.mults_ == b.mults_;
  }

 private:
  const RootSystem* rs_;
  Map mults_;
};

/// Integer combination of Weyl-orbit sums [mu], keyed by dominant weights.
struct OrbitCharacter {
  const RootSystem* rs = nullptr;
  std::map<Weight, std::int64_t> coeffs;

  std::int64_t coefficient(const Weight& w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? 0 : it->second;
  }

  Character expand() const {
    Character c(*rs);
    for (const auto& [w, k] : coeffs)
      for (const auto& x : weyl_orbit(*rs, w)) c.add(x, k);
    return c;
  }

  friend bool operator==(const OrbitCharacter& a, const OrbitCharacter& b) { return a.coeffs == b.coeffs; }
};

/// Highest weight -> multiplicity of the irreducible summand.
struct Decomposition {
  const RootSystem* rs = nullptr;
  std::map<Weight, std::int64_t> summands;

  std::int64_t multiplicity(const Weight& w) const {
    auto it = summands.find(w);
    return it == summands.end() ? 0 : it->second;
  }
  std::size_t distinct_summands() const noexcept { return summands.size(); }

  std::int64_t dimension() const;
  Character expand() const;
};

/// prod_{alpha>0} (lambda+rho, alpha) / (rho, alpha).
inline BigInt weyl_dimension_big(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  if (!is_dominant(lambda)) throw UsageError("weyl_dimension needs a dominant weight, got " + lambda.to_string());
  const Weight shifted = lambda + rs.weyl_vector();
  BigInt num = 1, den = 1;
  for (const auto& alpha : rs.positive_coroots()) {
    num *= pairing(alpha, shifted);
    den *= pairing(alpha, rs.weyl_vector());
  }
  if (num % den != 0) throw InvariantViolation("Weyl dimension formula gave a non-integer");
  return num / den;
}

inline std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  return static_cast<std::int64_t>(weyl_dimension_big(rs, lambda));
}

namespace detail {

inline bool in_positive_root_cone(const RootSystem& rs, const Weight& diff) {
  for (auto x : scaled_root_coordinates(rs, diff))
    if (x < 0) return false;
  return true;
}

inline std::int64_t shifted_norm(const RootSystem& rs, const Weight& mu) {
  const Weight s = mu + rs.weyl_vector();
  return scaled_inner_product(rs, s, s);
}

}  // namespace detail

/// Multiplicities of the dominant weights of V_lambda (Freudenthal).
///
/// The dominant weights of V_lambda are exactly the dominant mu below lambda
/// in the dominance order; they are reached from lambda by subtracting
/// positive roots through dominant weights only. They are processed by
/// decreasing (mu+rho, mu+rho), so every multiplicity the recursion reads is
/// already known.
inline std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  if (!is_dominant(lambda)) throw UsageError("highest weight must be dominant, got " + lambda.to_string());

  std::set<Weight> dominant{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier)
      for (const auto& alpha : rs.positive_roots()) {
        Weight nu = mu - alpha;
        if (!is_dominant(nu) || !detail::in_positive_root_cone(rs, lambda - nu)) continue;
        if (dominant.insert(nu).second) next.push_back(nu);
      }
    frontier.swap(next);
  }

  std::vector<std::pair<std::int64_t, Weight>> order;
  for (const auto& mu : dominant) order.emplace_back(detail::shifted_norm(rs, mu), mu);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second > b.second;
  });

  const std::int64_t det = rs.fundamental_group_order();
  const std::int64_t top = detail::shifted_norm(rs, lambda);
  std::map<Weight, std::int64_t> mult;
  mult[lambda] = 1;
  for (const auto& [norm, mu] : order) {
    if (mu == lambda) continue;
    std::int64_t sum = 0;
    const auto roots = rs.positive_roots();
    const auto coroots = rs.positive_coroots();
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = mu;
      for (;;) {
        nu += roots[r];
        const Weight rep = dominant_representative(rs, nu);
        if (!dominant.contains(rep)) break;
        auto it = mult.find(rep);
        if (it == mult.end()) throw InvariantViolation("Freudenthal order visited " + rep.to_string() + " too late");
        sum += it->second * root_pairing(coroots[r], nu);
      }
    }
    const std::int64_t num = 2 * det * sum;
    const std::int64_t den = top - norm;
    if (den <= 0 || num % den != 0)
      throw InvariantViolation("Freudenthal recursion is not integral at " + mu.to_string());
    mult[mu] = num / den;
  }
  return mult;
}

/// Full character of the irreducible V_lambda.
inline Character freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  Character c(rs);
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) {
    if (m == 0) continue;
    for (const auto& w : weyl_orbit(rs, mu)) c.add(w, m);
  }
  return c;
}

inline std::int64_t Decomposition::dimension() const {
  std::int64_t d = 0;
  for (const auto& [w, m] : summands) d += m * weyl_dimension(*rs, w);
  return d;
}

inline Character Decomposition::expand() const {
  Character c(*rs);
  for (const auto& [w, m] : summands) c.add_scaled(freudenthal_character(*rs, w), m);
  return c;
}

/// Character of the minuscule V_{w_node}: multiplicity one on a single orbit.
inline Character minuscule_character(const RootSystem& rs, std::size_t node) {
  const Weight top = rs.fundamental_weight(node);
  const auto orbit = weyl_orbit(rs, top);
  const auto dim = weyl_dimension(rs, top);
  if (static_cast<std::int64_t>(orbit.size()) != dim)
    throw DomainError("node " + std::to_string(node) + " of " + std::string(rs.name()) +
                      " is not minuscule (orbit size " + std::to_string(orbit.size()) + ", dimension " +
                      std::to_string(dim) + ")");
  Character c(rs);
  for (const auto& w : orbit) c.add(w, 1);
  return c;
}

/// Roots with multiplicity one and the zero weight with multiplicity rank.
inline Character adjoint_character(const RootSystem& rs) {
  Character c(rs);
  for (const auto& alpha : rs.positive_roots()) {
    c.add(alpha, 1);
    c.add(-alpha, 1);
  }
  c.add(Weight(rs.rank()), static_cast<std::int64_t>(rs.rank()));
  return c;
}

/// -w0(lambda), the highest weight of the dual representation.
inline Weight dual_highest_weight(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(lambda)) throw UsageError("dual_highest_weight needs a dominant weight");
  return dominant_representative(rs, -lambda);
}

inline Character tensor_character(const Character& a, const Character& b) {
  a.require_same_system(b);
  Character out(a.root_system());
  for (const auto& [u, m] : a.multiplicities())
    for (const auto& [v, n] : b.multiplicities()) out.add(u + v, m * n);
  return out;
}

namespace detail {

// Unordered pairs {i, j} of weight instances, with (sym) or without (alt)
// i == j. Instances of the same weight mu pair up in m(m+-1)/2 ways at 2mu;
// instances of distinct weights in m*n ways at their sum.
inline Character square_character(const Character& c, bool symmetric) {
  Character out(c.root_system());
  const auto& mults = c.multiplicities();
  for (auto it = mults.begin(); it != mults.end(); ++it) {
    const auto& [u, m] = *it;
    out.add(u + u, symmetric ? m * (m + 1) / 2 : m * (m - 1) / 2);
    for (auto jt = std::next(it); jt != mults.end(); ++jt) out.add(u + jt->first, m * jt->second);
  }
  return out;
}

}  // namespace detail

inline Character sym2_character(const Character& c) { return detail::square_character(c, true); }
inline Character alt2_character(const Character& c) { return detail::square_character(c, false); }

/// Greedy peeling: the remaining weight of largest (mu+rho, mu+rho) (ties to
/// the lexicographically largest labels) is a highest weight; subtract its
/// irreducible character with the current multiplicity and repeat.
inline Decomposition decompose(const Character& c) {
  const RootSystem& rs = c.root_system();
  Decomposition dec{&rs, {}};
  Character rem = c;
  while (rem.support_size() > 0) {
    const Weight* best = nullptr;
    std::int64_t best_norm = 0;
    for (const auto& [w, m] : rem.multiplicities()) {
      const auto n = detail::shifted_norm(rs, w);
      if (!best || n > best_norm || (n == best_norm && w > *best)) {
        best = &w;
        best_norm = n;
      }
    }
    const Weight top = *best;
    const std::int64_t m = rem.multiplicity(top);
    if (!is_dominant(top) || m < 0)
      throw NotACharacterError("not a true character: extremal weight " + top.to_string() + " has multiplicity " +
                               std::to_string(m));
    rem.add_scaled(freudenthal_character(rs, top), -m);
    if (!rem.is_genuine())
      throw NotACharacterError("not a true character: negative multiplicity after removing V" + top.to_string());
    dec.summands[top] += m;
  }
  return dec;
}

/// Expansion in the orbit-sum basis. Orbits are disjoint, so the coefficient
/// of [mu] is the multiplicity of the dominant weight mu.
inline OrbitCharacter orbit_character(const Character& c) {
  OrbitCharacter oc{&c.root_system(), {}};
  for (const auto& [w, m] : c.multiplicities())
    if (is_dominant(w)) oc.coeffs[w] = m;
  if (!(oc.expand() == c)) throw DomainError("character is not Weyl invariant");
  return oc;
}

struct CcLedger {
  OrbitCharacter without_unit;  // sum over the non-trivial summands only
  OrbitCharacter with_unit;     // the full tensor square, unit included
  Decomposition summands;
};

/// Orbit-basis ledger of V (x) V^vee for the 27-dimensional representation of
/// E6: the orbit characters of the nontrivial summands added up, and the same
/// total with the unit summand included.
inline CcLedger cc_multiplicity_ledger(const RootSystem& rs) {
  if (rs.type() != RootType::E6)
    throw DomainError("the tensor-square ledger is defined for E6 only, got " + std::string(rs.name()));
  const Character v = minuscule_character(rs, 1);
  const Character dual = freudenthal_character(rs, dual_highest_weight(rs, rs.fundamental_weight(1)));
  const Decomposition dec = decompose(tensor_character(v, dual));
  CcLedger out{{&rs, {}}, {&rs, {}}, dec};
  const Weight zero(rs.rank());
  for (const auto& [hw, m] : dec.summands) {
    const auto oc = orbit_character(freudenthal_character(rs, hw));
    for (const auto& [w, k] : oc.coeffs) {
      out.with_unit.coeffs[w] += m * k;
      if (hw != zero) out.without_unit.coeffs[w] += m * k;
    }
  }
  return out;
}

enum class FormType { none, orthogonal, symplectic };

inline std::string_view to_string(FormType t) {
  switch (t) {
    case FormType::none: return "none";
    case FormType::orthogonal: return "orthogonal";
    case FormType::symplectic: return "symplectic";
  }
  return "?";
}

/// Type of the invariant bilinear form on V_lambda: none unless V_lambda is
/// self-dual, otherwise determined by whether the trivial representation
/// sits in Alt^2 or in Sym^2.
inline FormType invariant_form_type(const RootSystem& rs, const Weight& lambda) {
  if (dual_highest_weight(rs, lambda) != lambda) return FormType::none;
  const Character v = freudenthal_character(rs, lambda);
  const Weight zero(rs.rank());
  const bool in_alt = decompose(alt2_character(v)).multiplicity(zero) > 0;
  const bool in_sym = decompose(sym2_character(v)).multiplicity(zero) > 0;
  if (in_alt == in_sym) throw InvariantViolation("self-dual irreducible with ambiguous invariant form");
  return in_alt ? FormType::symplectic : FormType::orthogonal;
}

}  // namespace liehodge
