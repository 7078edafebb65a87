#pragma once

// Root systems and Weyl-group machinery for the simply-laced types used by
// the library. Weights are stored as Dynkin labels (pairings with the simple
// coroots), coweights in the simple-coroot basis, so pairing a coweight with a
// weight is an integer dot product and dominance is a sign check.
//
// Node numbering follows Bourbaki throughout:
//   A_n : 1 - 2 - ... - n
//   D4  : 1 - 2 - 3, with 4 attached to 2
//   E6  : 1 - 3 - 4 - 5 - 6, with 2 attached to 4
//   E7  : 1 - 3 - 4 - 5 - 6 - 7, with 2 attached to 4
// Public functions take 1-based node numbers; storage is 0-based.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "liehodge/errors.hpp"

namespace liehodge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxRank = 7;

/// Fixed-capacity integer vector of length `rank`. The tag keeps weights and
/// coweights from being mixed up at compile time.
template <class Tag>
class LatticeVector {
 public:
  using value_type = std::int64_t;

  LatticeVector() = default;

  explicit LatticeVector(std::size_t rank) : rank_(checked_rank(rank)) {}

  LatticeVector(std::initializer_list<value_type> values)
      : rank_(checked_rank(values.size())) {
    std::copy(values.begin(), values.end(), data_.begin());
  }

  static LatticeVector from_span(std::span<const value_type> values) {
    LatticeVector v(values.size());
    std::copy(values.begin(), values.end(), v.data_.begin());
    return v;
  }

  static LatticeVector unit(std::size_t rank, std::size_t index) {
    LatticeVector v(rank);
    v.data_.at(index) = 1;
    return v;
  }

  std::size_t rank() const noexcept { return rank_; }
  std::span<const value_type> values() const noexcept { return {data_.data(), rank_}; }

  value_type operator[](std::size_t i) const noexcept { return data_[i]; }
  value_type& operator[](std::size_t i) noexcept { return data_[i]; }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.begin() + rank_, [](value_type x) { return x == 0; });
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    require_same_rank(o);
    for (std::size_t i = 0; i < rank_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  LatticeVector& operator*=(value_type k) noexcept {
    for (std::size_t i = 0; i < rank_; ++i) data_[i] *= k;
    return *this;
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(value_type k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  // Entries past `rank` are always zero, so this is lexicographic on labels.
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.rank_; ++i) os << (i ? "," : "") << v.data_[i];
    return os << ')';
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) s += ',';
      s += std::to_string(data_[i]);
    }
    return s + ')';
  }

  void require_same_rank(const LatticeVector& o) const {
    if (o.rank_ != rank_) throw UsageError("rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

 private:
  static std::uint8_t checked_rank(std::size_t rank) {
    if (rank == 0 || rank > kMaxRank) throw UsageError("rank must lie in [1, 7], got " + std::to_string(rank));
    return static_cast<std::uint8_t>(rank);
  }

  std::array<value_type, kMaxRank> data_{};
  std::uint8_t rank_ = 0;
};

struct WeightTag {};
struct CoweightTag {};

/// Dynkin labels m_i = <alpha_i^vee, mu>.
using Weight = LatticeVector<WeightTag>;
/// Coordinates in the simple-coroot basis; the coroot lattice is the
/// cocharacter lattice of the simply connected group.
using Coweight = LatticeVector<CoweightTag>;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class RootType { A1, A2, A3, D4, E6, E7 };

inline std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A2: return "A2";
    case RootType::A3: return "A3";
    case RootType::D4: return "D4";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
  }
  return "?";
}

/// Case-insensitive; anything outside {A1, A2, A3, D4, E6, E7} is a
/// configuration error.
inline RootType parse_root_type(std::string_view label) {
  std::string up(label);
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (RootType t : {RootType::A1, RootType::A2, RootType::A3, RootType::D4, RootType::E6, RootType::E7})
    if (up == to_string(t)) return t;
  throw ConfigurationError("unsupported root system '" + std::string(label) + "' (supported: A1 A2 A3 D4 E6 E7)");
}

/// Bourbaki-convention Cartan matrix.
inline IntMatrix cartan_matrix(RootType type) {
  std::size_t rank = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based node pairs
  switch (type) {
    case RootType::A1: rank = 1; break;
    case RootType::A2: rank = 2; edges = {{1, 2}}; break;
    case RootType::A3: rank = 3; edges = {{1, 2}, {2, 3}}; break;
    case RootType::D4: rank = 4; edges = {{1, 2}, {2, 3}, {2, 4}}; break;
    case RootType::E6: rank = 6; edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}; break;
    case RootType::E7: rank = 7; edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}; break;
  }
  IntMatrix c(rank, std::vector<std::int64_t>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) c[a - 1][b - 1] = c[b - 1][a - 1] = -1;
  return c;
}

inline IntMatrix cartan_matrix(std::string_view label) { return cartan_matrix(parse_root_type(label)); }

/// Immutable Cartan and root data of a simply-laced simple type. Obtain the
/// shared instance through root_system(); the instance is never mutated after
/// construction, so it may be read concurrently.
class RootSystem {
 public:
  explicit RootSystem(RootType type) : type_(type), cartan_(cartan_matrix(type)), rank_(cartan_.size()) {
    invert_cartan();
    generate_positive_roots();
  }

  RootType type() const noexcept { return type_; }
  std::string_view name() const noexcept { return to_string(type_); }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }

  /// det C, the order of the fundamental group.
  std::int64_t fundamental_group_order() const noexcept { return det_; }
  /// det(C) * C^{-1}; integral and symmetric with positive entries.
  const IntMatrix& scaled_inverse() const noexcept { return adj_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const noexcept { return inverse_; }

  /// Positive roots in Dynkin labels, sorted by height then labels.
  std::span<const Weight> positive_roots() const noexcept { return roots_; }
  /// The same roots in simple-root coordinates. Since the type is simply
  /// laced these are also the coroot-basis coordinates of the coroots.
  std::span<const Coweight> positive_coroots() const noexcept { return coroots_; }

  Weight weyl_vector() const {
    Weight rho(rank_);
    for (std::size_t i = 0; i < rank_; ++i) rho[i] = 1;
    return rho;
  }

  /// Simple root alpha_j in Dynkin labels (column j of C), j 1-based.
  Weight simple_root(std::size_t node) const {
    check_node(node);
    Weight a(rank_);
    for (std::size_t k = 0; k < rank_; ++k) a[k] = cartan_[k][node - 1];
    return a;
  }

  Weight fundamental_weight(std::size_t node) const {
    check_node(node);
    return Weight::unit(rank_, node - 1);
  }

  const Weight& highest_root() const noexcept { return roots_.back(); }
  const Coweight& highest_coroot() const noexcept { return coroots_.back(); }

  /// |W| from the classification; used only for divisibility checks.
  std::uint64_t weyl_group_order() const noexcept {
    switch (type_) {
      case RootType::A1: return 2;
      case RootType::A2: return 6;
      case RootType::A3: return 24;
      case RootType::D4: return 192;
      case RootType::E6: return 51840;
      case RootType::E7: return 2903040;
    }
    return 0;
  }

  void check_node(std::size_t node) const {
    if (node < 1 || node > rank_)
      throw UsageError("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank_) + " for " +
                       std::string(name()));
  }

  template <class Tag>
  void check_rank(const LatticeVector<Tag>& v) const {
    if (v.rank() != rank_)
      throw UsageError("vector of rank " + std::to_string(v.rank()) + " used with " + std::string(name()));
  }

 private:
  void invert_cartan() {
    const std::size_t n = rank_;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
      a[i][n + i] = 1;
    }
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (a[piv][col] == 0) ++piv;  // C is positive definite, a pivot exists
      if (piv != col) {
        std::swap(a[piv], a[col]);
        det = -det;
      }
      det *= a[col][col];
      const Rational p = a[col][col];
      for (auto& x : a[col]) x /= p;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        const Rational f = a[r][col];
        for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
      }
    }
    det_ = static_cast<std::int64_t>(boost::multiprecision::numerator(det));
    inverse_.assign(n, std::vector<Rational>(n));
    adj_.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        inverse_[i][j] = a[i][n + j];
        const Rational scaled = inverse_[i][j] * det_;
        adj_[i][j] = static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
      }
  }

  // Closure of the simple roots under simple reflections, keeping the roots
  // of positive height. Every positive root is reached because each
  // non-simple positive root reflects to one of smaller height.
  void generate_positive_roots() {
    std::set<std::pair<Coweight, Weight>> seen;  // (simple-root coords, labels)
    std::deque<std::pair<Coweight, Weight>> queue;
    for (std::size_t j = 1; j <= rank_; ++j) {
      auto entry = std::make_pair(Coweight::unit(rank_, j - 1), simple_root(j));
      if (seen.insert(entry).second) queue.push_back(entry);
    }
    while (!queue.empty()) {
      auto [coords, labels] = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < rank_; ++j) {
        const std::int64_t m = labels[j];
        if (m == 0) continue;
        Coweight c = coords;
        c[j] -= m;
        if (std::any_of(c.values().begin(), c.values().end(), [](auto x) { return x < 0; }) || c.is_zero()) continue;
        Weight l = labels;
        for (std::size_t k = 0; k < rank_; ++k) l[k] -= m * cartan_[k][j];
        auto next = std::make_pair(c, l);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    std::vector<std::pair<Coweight, Weight>> all(seen.begin(), seen.end());
    auto height = [](const Coweight& c) {
      std::int64_t h = 0;
      for (auto x : c.values()) h += x;
      return h;
    };
    std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
      const auto hx = height(x.first), hy = height(y.first);
      return hx != hy ? hx < hy : x.second < y.second;
    });
    for (auto& [c, l] : all) {
      coroots_.push_back(c);
      roots_.push_back(l);
    }
  }

  RootType type_;
  IntMatrix cartan_;
  std::size_t rank_;
  std::int64_t det_ = 1;
  IntMatrix adj_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Weight> roots_;
  std::vector<Coweight> coroots_;
};

/// Shared immutable instance per type.
inline const RootSystem& root_system(RootType type) {
  static const RootSystem a1(RootType::A1), a2(RootType::A2), a3(RootType::A3), d4(RootType::D4),
      e6(RootType::E6), e7(RootType::E7);
  switch (type) {
    case RootType::A1: return a1;
    case RootType::A2: return a2;
    case RootType::A3: return a3;
    case RootType::D4: return d4;
    case RootType::E6: return e6;
    case RootType::E7: return e7;
  }
  throw ConfigurationError("unsupported root type");
}

inline const RootSystem& root_system(std::string_view label) { return root_system(parse_root_type(label)); }

inline std::span<const Weight> positive_roots(const RootSystem& rs) { return rs.positive_roots(); }

inline bool is_dominant(const Weight& w) noexcept {
  return std::all_of(w.values().begin(), w.values().end(), [](auto x) { return x >= 0; });
}

/// s_j(w) = w - m_j alpha_j, i.e. result_k = m_k - m_j C[k][j].
inline Weight simple_reflection(const RootSystem& rs, std::size_t node, const Weight& w) {
  rs.check_node(node);
  rs.check_rank(w);
  const std::size_t j = node - 1;
  const std::int64_t m = w[j];
  Weight out = w;
  if (m != 0)
    for (std::size_t k = 0; k < rs.rank(); ++k) out[k] -= m * rs.cartan()[k][j];
  return out;
}

/// C * a: the values of the coweight on the simple roots.
inline Weight dynkin_labels(const RootSystem& rs, const Coweight& c) {
  rs.check_rank(c);
  Weight d(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) d[i] += rs.cartan()[i][j] * c[j];
  return d;
}

/// The coweight whose values on the simple roots are `labels`, if it lies in
/// the coroot lattice.
inline std::optional<Coweight> coweight_from_dynkin(const RootSystem& rs, const Weight& labels) {
  rs.check_rank(labels);
  const auto& adj = rs.scaled_inverse();
  const std::int64_t det = rs.fundamental_group_order();
  Coweight c(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rs.rank(); ++j) s += adj[i][j] * labels[j];
    if (s % det != 0) return std::nullopt;
    c[i] = s / det;
  }
  return c;
}

inline bool is_dominant(const RootSystem& rs, const Coweight& c) { return is_dominant(dynkin_labels(rs, c)); }

/// s_j on a coweight: lambda - <lambda, alpha_j> alpha_j^vee.
inline Coweight simple_reflection(const RootSystem& rs, std::size_t node, const Coweight& c) {
  rs.check_node(node);
  rs.check_rank(c);
  const std::size_t j = node - 1;
  std::int64_t value = 0;
  for (std::size_t k = 0; k < rs.rank(); ++k) value += rs.cartan()[j][k] * c[k];
  Coweight out = c;
  out[j] -= value;
  return out;
}

/// <lambda, mu> = sum_i coords_i * labels_i.
inline std::int64_t pairing(const Coweight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank())
    throw UsageError("pairing rank mismatch: " + std::to_string(lambda.rank()) + " vs " + std::to_string(mu.rank()));
  std::int64_t s = 0;
  for (std::size_t i = 0; i < mu.rank(); ++i) s += lambda[i] * mu[i];
  return s;
}

/// det(C) * (mu, nu). Integral; the invariant form is normalised so that
/// every root has (alpha, alpha) = 2.
inline std::int64_t scaled_inner_product(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  rs.check_rank(mu);
  rs.check_rank(nu);
  const auto& adj = rs.scaled_inverse();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) s += mu[i] * adj[i][j] * nu[j];
  return s;
}

/// (mu, nu) = m^T C^{-1} n.
inline Rational inner_product(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  return Rational(scaled_inner_product(rs, mu, nu), rs.fundamental_group_order());
}

inline Weight dominant_representative(const RootSystem& rs, Weight w) {
  rs.check_rank(w);
  for (;;) {
    std::size_t j = 0;
    while (j < rs.rank() && w[j] >= 0) ++j;
    if (j == rs.rank()) return w;
    w = simple_reflection(rs, j + 1, w);
  }
}

/// Full Weyl orbit by breadth-first closure under the simple reflections.
inline std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  rs.check_rank(w);
  std::set<Weight> orbit{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier)
      for (std::size_t j = 1; j <= rs.rank(); ++j) {
        if (x[j - 1] == 0) continue;
        Weight y = simple_reflection(rs, j, x);
        if (orbit.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return orbit;
}

/// (alpha, mu) for a positive root given by its simple-root coordinates.
inline std::int64_t root_pairing(const Coweight& root_coords, const Weight& mu) { return pairing(root_coords, mu); }

/// det(C) times the simple-root coordinates of w.
inline std::vector<std::int64_t> scaled_root_coordinates(const RootSystem& rs, const Weight& w) {
  const auto& adj = rs.scaled_inverse();
  std::vector<std::int64_t> out(rs.rank(), 0);
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) out[i] += adj[i][j] * w[j];
  return out;
}

/// "w1+2w3" style name in the fundamental-weight basis; "0" for zero.
inline std::string fundamental_expansion(const Weight& w, std::string_view symbol = "w") {
  std::string s;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    const auto m = w[i];
    if (m == 0) continue;
    if (!s.empty()) s += m > 0 ? "+" : "-";
    else if (m < 0) s += "-";
    const auto a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a);
    s += std::string(symbol) + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace liehodge
