#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "rootsystem.hpp"

namespace liecoh {

// Signed integral Chevalley structure constants N_{a,b} with
// [x_a, x_b] = N_{a,b} x_{a+b}, for a, b, a+b in Phi+.
struct StructureConstantTable {
  int nroots = 0;
  std::vector<std::vector<long long>> n;  // n[i][j], 0 when root(i)+root(j) is not a root

  long long get(int i, int j) const { return n[i][j]; }
};

namespace detail {

// Membership of an arbitrary integer vector in Phi = Phi+ u -Phi+.
inline bool is_root_vec(const RootSystem& rs, const IVec& v) {
  bool nonneg = true, nonpos = true;
  for (auto x : v) {
    if (x > 0) nonpos = false;
    if (x < 0) nonneg = false;
  }
  if (nonneg && !nonpos) return rs.root_index.count(v) != 0;
  if (nonpos && !nonneg) {
    IVec neg(v.size());
    for (size_t i = 0; i < v.size(); i++) neg[i] = -v[i];
    return rs.root_index.count(neg) != 0;
  }
  return false;
}

// p(a,b) = max{k : b - k*a in Phi}; the down-string length of b through a.
inline long long string_down(const RootSystem& rs, const IVec& a, const IVec& b) {
  long long p = 0;
  IVec v = b;
  for (;;) {
    for (size_t i = 0; i < v.size(); i++) v[i] -= a[i];
    if (!is_root_vec(rs, v)) break;
    p++;
  }
  return p;
}

inline StructureConstantTable build_structure_constants(const RootSystem& rs) {
  int nr = static_cast<int>(rs.positive_roots.size());
  StructureConstantTable tbl;
  tbl.nroots = nr;
  tbl.n.assign(nr, std::vector<long long>(nr, 0));

  auto lookup = [&](const IVec& x, const IVec& y) -> long long {
    // N_{x,y} for positive x, y already processed (sum of smaller height).
    return tbl.n[rs.root_index.at(x)][rs.root_index.at(y)];
  };

  // Positive roots are sorted by height, so iterating in index order processes
  // every sum gamma after all roots of smaller height.
  for (int g = 0; g < nr; g++) {
    const IVec& gamma = rs.positive_roots[g].simple;
    // Special pairs (a,b), a < b in the canonical order, a + b = gamma.
    std::vector<std::pair<int, int>> pairs;
    for (int ia = 0; ia < nr; ia++) {
      const IVec& a = rs.positive_roots[ia].simple;
      IVec b(rs.rank);
      bool ok = true;
      for (int i = 0; i < rs.rank; i++) {
        b[i] = gamma[i] - a[i];
        if (b[i] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = rs.root_index.find(b);
      if (it == rs.root_index.end() || it->second <= ia) continue;
      pairs.push_back({ia, it->second});
    }
    if (pairs.empty()) continue;
    // Extraspecial pair: minimal first component; positive sign convention.
    auto [ea, eb] = pairs[0];
    {
      long long p = string_down(rs, rs.positive_roots[ea].simple, rs.positive_roots[eb].simple);
      tbl.n[ea][eb] = p + 1;
      tbl.n[eb][ea] = -(p + 1);
    }
    const IVec& a1 = rs.positive_roots[ea].simple;
    const IVec& b1 = rs.positive_roots[eb].simple;
    Rat n_extra(tbl.n[ea][eb]);
    for (size_t k = 1; k < pairs.size(); k++) {
      auto [ia, ib] = pairs[k];
      const IVec& a = rs.positive_roots[ia].simple;
      const IVec& b = rs.positive_roots[ib].simple;
      // u = a - a1 = b1 - b, v = b1 - a = b - a1; at least one is a root.
      IVec u(rs.rank), v(rs.rank);
      for (int i = 0; i < rs.rank; i++) {
        u[i] = a[i] - a1[i];
        v[i] = b1[i] - a[i];
      }
      Rat acc(0);
      if (is_root_vec(rs, u)) {
        // u is positive here: a > a1 in the canonical order and u is a root.
        Rat c(rs.norm2(u), rs.norm2(a) * rs.norm2(b1));
        acc += c * Rat(lookup(a1, u)) * Rat(lookup(b, u));
      }
      if (is_root_vec(rs, v)) {
        Rat c(rs.norm2(v), rs.norm2(b1) * rs.norm2(b));
        acc += c * Rat(lookup(v, a)) * Rat(lookup(a1, v));
      }
      Rat val = -Rat(rs.norm2(gamma)) / n_extra * acc;
      if (!val.is_integer()) throw std::logic_error("structure constant recursion not integral");
      long long expect = string_down(rs, a, b) + 1;
      long long got = val.num < 0 ? -val.num : val.num;
      if (got != expect) throw std::logic_error("structure constant magnitude law violated");
      tbl.n[ia][ib] = val.num;
      tbl.n[ib][ia] = -val.num;
    }
  }
  return tbl;
}

}  // namespace detail

inline const StructureConstantTable& chevalley_table(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<StructureConstantTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kind_letter(rs.kind), rs.rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<StructureConstantTable>(detail::build_structure_constants(rs)))
             .first;
  return *it->second;
}

// [x_a, x_b]: returns (a+b, N_{a,b}) when a+b is a positive root, otherwise
// (absent, 0).
inline std::pair<std::optional<Root>, long long> bracket(const RootSystem& rs, const Root& a,
                                                         const Root& b) {
  int ia = rs.index_of(a), ib = rs.index_of(b);
  IVec sum(rs.rank);
  for (int i = 0; i < rs.rank; i++) sum[i] = a.simple[i] + b.simple[i];
  auto it = rs.root_index.find(sum);
  if (it == rs.root_index.end()) return {std::nullopt, 0};
  return {Root{sum}, chevalley_table(rs).get(ia, ib)};
}

inline long long structure_constant_mod(const RootSystem& rs, const Root& a, const Root& b,
                                        long long p) {
  long long n = bracket(rs, a, b).second % p;
  return n < 0 ? n + p : n;
}

// Action of X_{-gamma}^n / n! on the basis vector x_target of u (adjoint
// action of the negative simple root vector, transported to Phi+ indexing):
// the coefficient is the iterated bracket divided by n!, which is integral in
// the Kostant form.
inline std::pair<std::optional<Root>, long long> divided_power_action(const RootSystem& rs,
                                                                      const Root& gamma, long long n,
                                                                      const Root& target) {
  if (n < 0) throw std::invalid_argument("divided_power_action: n must be >= 0");
  rs.index_of(gamma);
  rs.index_of(target);
  if (n == 0) return {target, 1};
  long long num = 1;
  IVec cur = target.simple;
  for (long long k = 0; k < n; k++) {
    IVec next(rs.rank);
    for (int i = 0; i < rs.rank; i++) next[i] = cur[i] + gamma.simple[i];
    if (!rs.root_index.count(next)) return {std::nullopt, 0};
    num *= chevalley_table(rs).get(rs.root_index.at(gamma.simple), rs.root_index.at(cur));
    cur = next;
  }
  long long fact = 1;
  for (long long k = 2; k <= n; k++) fact *= k;
  if (num % fact != 0) throw std::logic_error("divided power coefficient not integral");
  return {Root{cur}, num / fact};
}

// Dual action on the functionals phi_beta (dual basis of the negative root
// vectors): x_{-gamma} . phi_beta = N_{gamma, beta-gamma} phi_{beta-gamma},
// zero when beta - gamma is not a positive root. This is the action that
// commutes with the cochain differential.
inline long long coadjoint_coeff(const RootSystem& rs, const Root& gamma, const Root& beta) {
  IVec delta(rs.rank);
  for (int i = 0; i < rs.rank; i++) delta[i] = beta.simple[i] - gamma.simple[i];
  if (!rs.root_index.count(delta)) return 0;
  return chevalley_table(rs).get(rs.index_of(gamma), rs.root_index.at(delta));
}

// (X_{-gamma}^n / n!) . phi_beta = c phi_{beta - n gamma}; integral by the
// Kostant form, asserted.
inline std::pair<std::optional<Root>, long long> divided_coadjoint(const RootSystem& rs,
                                                                   const Root& gamma, long long n,
                                                                   const Root& beta) {
  if (n == 0) return {beta, 1};
  long long num = 1;
  IVec cur = beta.simple;
  for (long long k = 0; k < n; k++) {
    long long c = coadjoint_coeff(rs, gamma, Root{cur});
    if (c == 0) return {std::nullopt, 0};
    num *= c;
    for (int i = 0; i < rs.rank; i++) cur[i] -= gamma.simple[i];
  }
  long long fact = 1;
  for (long long k = 2; k <= n; k++) fact *= k;
  if (num % fact != 0) throw std::logic_error("divided coadjoint coefficient not integral");
  return {Root{cur}, num / fact};
}

}  // namespace liecoh
