#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oddu/factor.hpp"

namespace oddu {

inline constexpr std::size_t kDefaultOrbitCap = 100000;
inline constexpr std::size_t kDefaultFrontierCap = 2000000;

/// Elements of the E-orbit of `base`, in BFS discovery order. Element k is
/// ^{a} elements[parent[k]] with a = generators[via[k]].
struct ClassOrbit {
  UMatrix base;
  std::vector<Atom> generators;
  std::vector<UMatrix> elements;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::unordered_map<UMatrix, std::size_t, UMatrixHash> index;
  bool closed_under_inverse = false;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const UMatrix& m) const { return index.count(m) != 0; }
  std::optional<std::size_t> find(const UMatrix& m) const;
  /// tau with elements[k] = ^tau base.
  EWord conjugator(std::size_t k) const;
};

/// `threads` > 1 splits each BFS layer; the result does not depend on it.
ClassOrbit orbit_bfs(const FormSetup& s, const UMatrix& base,
                     std::size_t cap = kDefaultOrbitCap, unsigned threads = 1);
/// Same, with an explicit generating set.
ClassOrbit orbit_bfs(const FormSetup& s, const UMatrix& base, std::vector<Atom> generators,
                     std::size_t cap, unsigned threads = 1);

struct ProductSearchResult {
  UMatrix target;
  int m_max = 0;
  std::optional<int> found_m;
  /// Verified factors, one per element of X = C u C^{-1}.
  std::vector<ConjFactor> witness;
  /// |X^k| for k = 1.. as far as the search built them.
  std::vector<std::size_t> level_sizes;
};

/// Least m <= m_max with target in X^m, X = C u C^{-1}. Builds the layers
/// X^1..X^ceil(m_max/2) and meets in the middle.
ProductSearchResult min_product_length(const FormSetup& s, const ClassOrbit& orbit,
                                       const UMatrix& target, int m_max,
                                       std::size_t cap = kDefaultFrontierCap,
                                       unsigned threads = 1);

struct Thm2Report {
  int n = 3;
  std::size_t orbit_size = 0;
  bool inverse_closed = false;
  bool in_C = true;
  bool in_CC = true;
  std::optional<int> min_m;
  std::size_t factor_short_length = 0;
  bool factor_short_verified = false;
  bool witness_verified = false;
  std::vector<std::size_t> level_sizes;

  bool ok() const {
    return inverse_closed && !in_C && !in_CC && min_m && (*min_m == 3 || *min_m == 4) &&
           witness_verified && factor_short_verified &&
           std::size_t(*min_m) <= factor_short_length;
  }
};

/// Symplectic GF(2) at rank n: C = E-orbit of T_1(0,1), target T_12(1).
Thm2Report check_thm2(int n = 3, std::size_t cap = kDefaultOrbitCap,
                      std::size_t frontier_cap = kDefaultFrontierCap, unsigned threads = 1);

struct Thm3Report {
  std::string x;
  int x_order = 0;
  bool beta_member = false;
  bool det_beta_is_x = false;
  /// (a): x^{e_1+..+e_m} == 1 with m <= 3 only for m = 2, e_1 = -e_2.
  bool stage_a = false;
  std::size_t stage_a_sequences = 0;
  /// (b): solutions of k^2 = 1 in K.
  std::vector<std::string> stage_b_roots;
  bool stage_b = false;
  /// (c): tuples (u1,u-2,v1,v-2) with u1 u-2 = v1 v-2 + 1, u1^2 = v1^2, u-2^2 = v-2^2.
  std::size_t stage_c_tuples = 0;
  std::size_t stage_c_solutions = 0;
  bool stage_c = false;

  bool ok() const { return beta_member && det_beta_is_x && stage_a && stage_b && stage_c; }
};

/// Proctor GF(8), n = 3, beta = diag(.., x at 0, ..) T_1(0,1).
Thm3Report check_thm3_staged();

struct Thm4Report {
  // GF(2), mu = 0, delta = K x 0: orbit search.
  std::size_t kx0_orbit_size = 0;
  bool kx0_in_orbit = true;
  std::optional<int> kx0_min_m;
  bool kx0_witness_verified = false;
  // Proctor GF(4), alpha = diag with t at position 0: determinant obstruction.
  std::string gf4_det;
  bool gf4_det_obstruction = false;
  std::size_t gf4_length = 0;
  bool gf4_verified = false;

  bool ok() const {
    return !kx0_in_orbit && kx0_min_m == 2 && kx0_witness_verified &&
           gf4_det_obstruction && gf4_length == 2 && gf4_verified;
  }
};

Thm4Report check_thm4_lower(int n = 3, std::size_t cap = kDefaultOrbitCap,
                            std::size_t frontier_cap = kDefaultFrontierCap,
                            unsigned threads = 1);

struct ProbeRow {
  Atom target;
  std::optional<int> min_m;
  std::vector<std::size_t> level_sizes;
};

struct ProbeReport {
  std::size_t orbit_size = 0;
  int m_max = 0;
  std::vector<ProbeRow> rows;
};

/// Tabulates the least m per target. m_max = 0 gives an empty table.
ProbeReport probe_open_questions(const FormSetup& s, const UMatrix& sigma,
                                 const std::vector<Atom>& targets, int m_max,
                                 std::size_t cap = kDefaultOrbitCap,
                                 std::size_t frontier_cap = kDefaultFrontierCap,
                                 unsigned threads = 1);

}  // namespace oddu
