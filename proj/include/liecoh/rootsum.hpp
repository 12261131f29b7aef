#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chevalley.hpp"
#include "rootsystem.hpp"

namespace liecoh {

// Solver for the lattice equations that constrain the weight gamma = alpha +
// beta of a degree-two cohomology class at p = 2:
//
//   PLAIN_2SIGMA     alpha + beta = 2 sigma
//   PLAIN_BETA1      alpha + beta = beta1 + 2 sigma
//   PLAIN_GENERAL    alpha + beta = i beta1 + 2^m beta2 + 2 sigma
//   TORSION_GENERAL  all three shapes with explicit 2 t_g omega_g terms
//
// with alpha simple, beta positive, alpha != beta, beta1, beta2 simple,
// i in {0,1} and m capped. sigma is searched in the root lattice; when 2 does
// not divide the index of connection this loses nothing, and the torsion
// variant restores full generality (sigma in X(T)) through the generator
// multiples t_g.

enum class RootSumVariant { PLAIN_2SIGMA, PLAIN_BETA1, PLAIN_GENERAL, TORSION_GENERAL };

struct RootSumQuery {
  RootSumVariant variant = RootSumVariant::TORSION_GENERAL;
  // Higher powers of 2 on beta2 are absorbed into sigma; the reduction test
  // below confirms the cap loses no solutions.
  int max_m = 2;
  // Reject weights that cannot support a nonzero cohomology class for parity
  // reasons (see weight_supports_cocycle); disable to see the raw lattice.
  bool apply_obstruction_filter = true;
};

struct RootSumSolution {
  Root alpha, beta;
  std::optional<Root> beta1, beta2;
  int i = 0;                 // coefficient of beta1
  int m = 0;                 // beta2 enters as 2^m beta2 (when present)
  std::vector<long long> t;  // multiple per quotient generator (torsion variant)
  IVec sigma_simple;         // sigma in integer simple coordinates
  Weight sigma;              // the same weight in fundamental coordinates
};

// gamma is in the kernel of d1 of the p = 2 symmetric complex exactly when
// every decomposition gamma = a + b into positive roots has an even structure
// constant; simple roots have no decompositions and qualify vacuously.
inline bool is_kernel_root(const RootSystem& rs, const Root& gamma) {
  const auto& tbl = chevalley_table(rs);
  int g = rs.index_of(gamma);
  int nr = static_cast<int>(rs.positive_roots.size());
  for (int ia = 0; ia < nr; ia++) {
    IVec b(rs.rank);
    bool ok = true;
    for (int k = 0; k < rs.rank; k++) {
      b[k] = gamma.simple[k] - rs.positive_roots[ia].simple[k];
      if (b[k] < 0) ok = false;
    }
    if (!ok) continue;
    auto it = rs.root_index.find(b);
    if (it == rs.root_index.end() || it->second <= ia) continue;
    if (tbl.get(ia, it->second) % 2 != 0) return false;
  }
  (void)g;
  return true;
}

// Necessary conditions for a weight gamma outside 2X(T) to carry a nonzero
// class in H^2(U_1,k): some unordered decomposition gamma = a + b into
// distinct positive roots must have a d1-kernel factor, and when the
// decomposition is unique both factors must be in the kernel and, if gamma is
// itself a root, its lone structure constant must be even (otherwise the
// coboundary of phi_gamma spans the weight space). Weights in 2X(T) are
// admitted on bare decomposability since the parity arguments do not apply.
inline bool weight_supports_cocycle(const RootSystem& rs, const IVec& gamma) {
  std::vector<std::pair<int, int>> pairs;
  int nr = static_cast<int>(rs.positive_roots.size());
  for (int ia = 0; ia < nr; ia++) {
    IVec b(rs.rank);
    bool ok = true;
    for (int k = 0; k < rs.rank; k++) {
      b[k] = gamma[k] - rs.positive_roots[ia].simple[k];
      if (b[k] < 0) ok = false;
    }
    if (!ok) continue;
    auto it = rs.root_index.find(b);
    if (it == rs.root_index.end() || it->second <= ia) continue;
    pairs.push_back({ia, it->second});
  }

  Weight fw = to_fundamental(rs, gamma);
  bool in_2x = true;
  for (auto c : fw.fund)
    if (c % 2 != 0) in_2x = false;
  if (in_2x) {
    if (!pairs.empty()) return true;
    IVec half(rs.rank);
    for (int k = 0; k < rs.rank; k++) {
      if (gamma[k] % 2 != 0) return false;
      half[k] = gamma[k] / 2;
    }
    return rs.root_index.count(half) != 0;  // the square phi_c^2
  }

  if (pairs.empty()) return false;
  bool some_kernel_factor = false;
  for (auto [ia, ib] : pairs)
    if (is_kernel_root(rs, rs.positive_roots[ia]) || is_kernel_root(rs, rs.positive_roots[ib]))
      some_kernel_factor = true;
  if (!some_kernel_factor) return false;
  if (pairs.size() == 1) {
    auto [ia, ib] = pairs[0];
    if (!is_kernel_root(rs, rs.positive_roots[ia]) || !is_kernel_root(rs, rs.positive_roots[ib]))
      return false;
    auto it = rs.root_index.find(gamma);
    if (it != rs.root_index.end() && chevalley_table(rs).get(ia, ib) % 2 != 0) return false;
  }
  return true;
}

namespace rootsum_detail {

// One right-hand-side shape: optional beta1 with coefficient i, optional
// beta2 with coefficient 2^m.
struct Shape {
  int i = 0;
  std::optional<int> beta1, beta2;  // simple-root indices
  int m = 0;
};

inline std::vector<Shape> shapes_for(const RootSystem& rs, const RootSumQuery& q) {
  std::vector<Shape> out;
  auto general = [&]() {
    for (int i = 0; i <= 1; i++) {
      std::vector<std::optional<int>> b1s;
      if (i == 1)
        for (int s = 0; s < rs.rank; s++) b1s.push_back(s);
      else
        b1s.push_back(std::nullopt);
      for (auto b1 : b1s)
        for (int b2 = 0; b2 < rs.rank; b2++)
          for (int m = 0; m <= q.max_m; m++) out.push_back({i, b1, b2, m});
    }
  };
  switch (q.variant) {
    case RootSumVariant::PLAIN_2SIGMA:
      out.push_back({});
      break;
    case RootSumVariant::PLAIN_BETA1:
      for (int s = 0; s < rs.rank; s++) out.push_back({1, s, std::nullopt, 0});
      break;
    case RootSumVariant::PLAIN_GENERAL:
      general();
      break;
    case RootSumVariant::TORSION_GENERAL:
      out.push_back({});
      for (int s = 0; s < rs.rank; s++) out.push_back({1, s, std::nullopt, 0});
      general();
      break;
  }
  return out;
}

}  // namespace rootsum_detail

inline std::vector<RootSumSolution> solve(const RootSystem& rs, const RootSumQuery& q) {
  auto shapes = rootsum_detail::shapes_for(rs, q);
  size_t ng =
      q.variant == RootSumVariant::TORSION_GENERAL ? rs.quotient_generators.size() : 0;

  // All t multi-indices, all-zero first, then lexicographic.
  std::vector<std::vector<long long>> tvecs;
  {
    std::vector<long long> t(ng, 0);
    for (;;) {
      tvecs.push_back(t);
      size_t g = ng;
      while (g > 0 && ++t[g - 1] == rs.quotient_generators[g - 1].order) t[--g] = 0;
      if (g == 0) break;
    }
    if (ng == 0) tvecs = {{}};
  }

  std::vector<RootSumSolution> out;
  int nr = static_cast<int>(rs.positive_roots.size());
  for (int ai = 0; ai < rs.rank; ai++) {
    const Root& alpha = rs.positive_roots[ai];  // simples are the first rank entries
    for (int bi = 0; bi < nr; bi++) {
      if (bi == ai) continue;
      const Root& beta = rs.positive_roots[bi];
      IVec gamma(rs.rank);
      for (int k = 0; k < rs.rank; k++) gamma[k] = alpha.simple[k] + beta.simple[k];
      if (q.apply_obstruction_filter && !weight_supports_cocycle(rs, gamma)) continue;
      for (const auto& t : tvecs) {
        for (const auto& sh : shapes) {
          // residual = gamma - i beta1 - 2^m beta2 - sum 2 t_g omega_g = 2 sigma
          std::vector<Rat> r(rs.rank);
          for (int k = 0; k < rs.rank; k++) r[k] = Rat(gamma[k]);
          if (sh.beta1) r[*sh.beta1] -= Rat(sh.i);
          if (sh.beta2) r[*sh.beta2] -= Rat(1LL << sh.m);
          for (size_t g = 0; g < t.size(); g++)
            for (int k = 0; k < rs.rank; k++)
              r[k] -= Rat(2 * t[g]) * rs.quotient_generators[g].simple[k];
          bool even = true;
          for (const auto& x : r)
            if (!x.is_integer() || x.num % 2 != 0) { even = false; break; }
          if (!even) continue;
          RootSumSolution sol;
          sol.alpha = alpha;
          sol.beta = beta;
          if (sh.beta1) sol.beta1 = rs.simple_roots[*sh.beta1];
          if (sh.beta2) sol.beta2 = rs.simple_roots[*sh.beta2];
          sol.i = sh.i;
          sol.m = sh.beta2 ? sh.m : 0;
          sol.t = t;
          sol.sigma_simple.resize(rs.rank);
          for (int k = 0; k < rs.rank; k++) sol.sigma_simple[k] = r[k].num / 2;
          sol.sigma = to_fundamental(rs, sol.sigma_simple);
          out.push_back(std::move(sol));
        }
      }
    }
  }
  return out;
}

// Union of the weights alpha + beta admitted by the complete (torsion)
// enumeration; a cheap necessary-condition pre-filter for the support of
// H^2(U_1,k) outside 2X(T).
inline std::set<Weight> candidate_weights(const RootSystem& rs) {
  RootSumQuery q;
  q.variant = RootSumVariant::TORSION_GENERAL;
  std::set<Weight> out;
  for (const auto& sol : solve(rs, q)) {
    IVec gamma(rs.rank);
    for (int k = 0; k < rs.rank; k++) gamma[k] = sol.alpha.simple[k] + sol.beta.simple[k];
    out.insert(to_fundamental(rs, gamma));
  }
  return out;
}

}  // namespace liecoh
