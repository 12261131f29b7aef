#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace liecoh {

using IVec = std::vector<long long>;

enum class Kind { A, B, C, D, E, F, G };

inline char kind_letter(Kind k) { return "ABCDEFG"[static_cast<int>(k)]; }

inline Kind kind_from_letter(char c) {
  const char* s = "ABCDEFG";
  for (int i = 0; i < 7; i++)
    if (s[i] == c || s[i] + 32 == c) return static_cast<Kind>(i);
  throw std::invalid_argument(std::string("unknown root system type '") + c + "'");
}

// Positive root in integer simple-root coordinates.
struct Root {
  IVec simple;
  long long height() const { return std::accumulate(simple.begin(), simple.end(), 0LL); }
  friend bool operator==(const Root& a, const Root& b) { return a.simple == b.simple; }
  friend bool operator<(const Root& a, const Root& b) { return a.simple < b.simple; }
};

// Weight in fundamental coordinates (the only basis where X(T) is integral).
struct Weight {
  IVec fund;
  friend bool operator==(const Weight& a, const Weight& b) { return a.fund == b.fund; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a.fund == b.fund); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.fund < b.fund; }
  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < fund.size(); i++) r.fund[i] += o.fund[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < fund.size(); i++) r.fund[i] -= o.fund[i];
    return r;
  }
  Weight operator*(long long c) const {
    Weight r = *this;
    for (auto& x : r.fund) x *= c;
    return r;
  }
};

// Composition of simple reflections s_{alpha_i}, applied right-to-left.
// Indices are 0-based into the simple roots.
struct WeylWord {
  std::vector<int> reflections;
};

struct QuotientGenerator {
  Weight w;                      // fundamental coordinates (some omega_i)
  std::vector<Rat> simple;       // the same weight in rational simple coordinates
  long long order = 1;           // order of its class in X(T)/Z-Phi
};

struct RootSystem {
  Kind kind;
  int rank;
  std::vector<std::vector<long long>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<long long> dlen;                 // d_i = (alpha_i, alpha_i)/2, normalized so short roots have d=1
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;            // sorted by (height, lex simple coords)
  std::map<IVec, int> root_index;              // simple coords -> index into positive_roots
  Weight rho;                                  // all-ones in fundamental coordinates
  int coxeter_number = 0;
  long long index_of_connection = 1;
  std::vector<QuotientGenerator> quotient_generators;
  std::vector<std::vector<Rat>> cartan_t_inv;  // inverse of transpose Cartan, for fund -> simple

  std::string name() const { return std::string(1, kind_letter(kind)) + std::to_string(rank); }

  bool is_positive_root(const IVec& coords) const { return root_index.count(coords) != 0; }

  const Root& root(int idx) const { return positive_roots[idx]; }

  int index_of(const Root& r) const {
    auto it = root_index.find(r.simple);
    if (it == root_index.end()) throw std::invalid_argument("not a positive root of " + name());
    return it->second;
  }

  // <lambda, alpha_i^vee> for lambda given in simple coordinates.
  long long pairing_simple(const IVec& simple, int i) const {
    long long s = 0;
    for (int j = 0; j < rank; j++) s += simple[j] * cartan[j][i];
    return s;
  }

  // Invariant bilinear form (alpha, beta) on root-lattice elements, normalized
  // so that short roots have squared length 2.
  long long form(const IVec& a, const IVec& b) const {
    long long s = 0;
    for (int i = 0; i < rank; i++)
      for (int j = 0; j < rank; j++) s += a[i] * b[j] * dlen[j] * cartan[i][j];
    return s;
  }

  long long norm2(const IVec& a) const { return form(a, a); }
};

inline std::vector<std::vector<long long>> cartan_matrix(Kind kind, int rank) {
  std::vector<std::vector<long long>> c(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; i++) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };  // 0-based
  switch (kind) {
    case Kind::A:
      for (int i = 0; i + 1 < rank; i++) edge(i, i + 1);
      break;
    case Kind::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 1 < rank; i++) edge(i, i + 1);
      c[rank - 2][rank - 1] = -2;
      break;
    case Kind::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 1 < rank; i++) edge(i, i + 1);
      c[rank - 1][rank - 2] = -2;
      break;
    case Kind::D:
      for (int i = 0; i + 2 < rank; i++) edge(i, i + 1);
      edge(rank - 3, rank - 1);
      break;
    case Kind::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5);
      if (rank >= 7) edge(5, 6);
      if (rank >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case Kind::F:
      // alpha_1, alpha_2 short; double bond between alpha_2 and alpha_3.
      edge(0, 1); edge(1, 2); edge(2, 3);
      c[2][1] = -2;
      break;
    case Kind::G:
      // alpha_1 short; highest root 3*alpha_1 + 2*alpha_2.
      edge(0, 1);
      c[1][0] = -3;
      break;
  }
  return c;
}

inline std::vector<long long> length_data(Kind kind, int rank) {
  std::vector<long long> d(rank, 1);
  switch (kind) {
    case Kind::B:
      for (int i = 0; i + 1 < rank; i++) d[i] = 2;
      break;
    case Kind::C:
      d[rank - 1] = 2;
      break;
    case Kind::F:
      d[2] = 2; d[3] = 2;
      break;
    case Kind::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

inline void validate_kind_rank(Kind kind, int rank) {
  bool ok = false;
  switch (kind) {
    case Kind::A: ok = rank >= 1; break;
    case Kind::B: ok = rank >= 2; break;
    case Kind::C: ok = rank >= 2; break;
    case Kind::D: ok = rank >= 4; break;
    case Kind::E: ok = rank >= 6 && rank <= 8; break;
    case Kind::F: ok = rank == 4; break;
    case Kind::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid root system " + std::string(1, kind_letter(kind)) +
                                std::to_string(rank));
}

inline Weight to_fundamental(const RootSystem& rs, const IVec& simple) {
  Weight w;
  w.fund.assign(rs.rank, 0);
  for (int j = 0; j < rs.rank; j++)
    for (int i = 0; i < rs.rank; i++) w.fund[j] += simple[i] * rs.cartan[i][j];
  return w;
}

inline Weight to_fundamental(const RootSystem& rs, const Root& r) { return to_fundamental(rs, r.simple); }

// Rational simple-root coordinates of a weight (denominators divide the index
// of connection).
inline std::vector<Rat> simple_coords(const RootSystem& rs, const Weight& w) {
  std::vector<Rat> x(rs.rank, Rat(0));
  for (int i = 0; i < rs.rank; i++)
    for (int j = 0; j < rs.rank; j++) x[i] += rs.cartan_t_inv[i][j] * Rat(w.fund[j]);
  return x;
}

namespace detail {

// Invert the transpose Cartan matrix with exact rational Gauss-Jordan.
inline std::vector<std::vector<Rat>> invert_cartan_t(const std::vector<std::vector<long long>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) a[i][j] = Rat(c[j][i]);  // transpose
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) throw std::logic_error("Cartan matrix singular");
    std::swap(a[col], a[piv]);
    Rat inv = Rat(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; r++) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; j++) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) inv[i][j] = a[i][n + j];
  return inv;
}

inline long long det_integer(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) a[i][j] = Rat(m[i][j]);
  Rat det(1);
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) { std::swap(a[col], a[piv]); det = -det; }
    det *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (int r = col + 1; r < n; r++) {
      Rat f = a[r][col] * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; j++) a[r][j] -= f * a[col][j];
    }
  }
  assert(det.is_integer());
  return det.num;
}

}  // namespace detail

inline RootSystem build_root_system(Kind kind, int rank) {
  validate_kind_rank(kind, rank);
  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  rs.cartan = cartan_matrix(kind, rank);
  rs.dlen = length_data(kind, rank);
  rs.cartan_t_inv = detail::invert_cartan_t(rs.cartan);

  // Symmetrizability sanity: d_j C[i][j] = d_i C[j][i].
  for (int i = 0; i < rank; i++)
    for (int j = 0; j < rank; j++) assert(rs.dlen[j] * rs.cartan[i][j] == rs.dlen[i] * rs.cartan[j][i]);

  for (int i = 0; i < rank; i++) {
    Root r;
    r.simple.assign(rank, 0);
    r.simple[i] = 1;
    rs.simple_roots.push_back(r);
  }

  // Closure by root strings, level by level in height. For beta of height h
  // and simple alpha_i, beta + alpha_i is a root iff
  // q = p - <beta, alpha_i^vee> >= 1 where p = max{k : beta - k alpha_i in Phi}.
  std::map<IVec, bool> found;
  std::vector<IVec> level;
  for (const auto& r : rs.simple_roots) {
    found[r.simple] = true;
    level.push_back(r.simple);
  }
  while (!level.empty()) {
    std::vector<IVec> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank; i++) {
        bool is_alpha_i = true;
        for (int j = 0; j < rank; j++)
          if (beta[j] != (j == i ? 1 : 0)) { is_alpha_i = false; break; }
        if (is_alpha_i) continue;  // 2*alpha is never a root
        long long p = 0;
        IVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !found.count(down)) break;
          p++;
        }
        long long q = p - rs.pairing_simple(beta, i);
        if (q >= 1) {
          IVec up = beta;
          up[i] += 1;
          if (!found.count(up)) {
            found[up] = true;
            next.push_back(up);
          }
        }
      }
    }
    level = std::move(next);
  }

  for (const auto& [coords, _] : found) rs.positive_roots.push_back(Root{coords});
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
    long long ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.simple < b.simple;
  });
  for (int i = 0; i < static_cast<int>(rs.positive_roots.size()); i++)
    rs.root_index[rs.positive_roots[i].simple] = i;

  rs.rho.fund.assign(rank, 1);
  rs.coxeter_number = static_cast<int>(rs.positive_roots.back().height()) + 1;
  rs.index_of_connection = detail::det_integer(rs.cartan);

  auto add_gen = [&](int omega_index_1based, long long order) {
    QuotientGenerator g;
    g.w.fund.assign(rank, 0);
    g.w.fund[omega_index_1based - 1] = 1;
    g.simple = simple_coords(rs, g.w);
    g.order = order;
    rs.quotient_generators.push_back(g);
  };
  switch (kind) {
    case Kind::A: add_gen(1, rank + 1); break;
    case Kind::B: add_gen(rank, 2); break;
    case Kind::C: add_gen(1, 2); break;
    case Kind::D:
      if (rank % 2 == 1) {
        add_gen(rank, 4);
      } else {
        add_gen(1, 2);
        add_gen(rank, 2);
      }
      break;
    case Kind::E:
      if (rank == 6) add_gen(1, 3);
      if (rank == 7) add_gen(7, 2);
      break;
    case Kind::F:
    case Kind::G:
      break;
  }
  return rs;
}

inline Weight weyl_action(const RootSystem& rs, const WeylWord& w, Weight mu) {
  // Right-to-left: the last listed reflection acts first.
  for (auto it = w.reflections.rbegin(); it != w.reflections.rend(); ++it) {
    int i = *it;
    if (i < 0 || i >= rs.rank) throw std::invalid_argument("reflection index out of range");
    long long mi = mu.fund[i];
    for (int j = 0; j < rs.rank; j++) mu.fund[j] -= mi * rs.cartan[i][j];
  }
  return mu;
}

inline Weight dot_action(const RootSystem& rs, const WeylWord& w, const Weight& lambda) {
  Weight mu = lambda + rs.rho;
  mu = weyl_action(rs, w, mu);
  return mu - rs.rho;
}

struct QuotientDecomposition {
  std::vector<long long> t;  // coefficient per quotient generator, 0 <= t_g < order
  Root sigma;                // integer simple coordinates, sigma in Z-Phi
};

// Decompose target = sum_g t_g * g + sigma with sigma in the root lattice.
// The decomposition is unique because the generators present a transversal of
// X(T)/Z-Phi.
inline std::optional<QuotientDecomposition> lattice_quotient_solve(const RootSystem& rs,
                                                                   const Weight& target) {
  size_t ng = rs.quotient_generators.size();
  std::vector<long long> t(ng, 0);
  for (;;) {
    Weight residual = target;
    for (size_t g = 0; g < ng; g++) residual = residual - rs.quotient_generators[g].w * t[g];
    auto sc = simple_coords(rs, residual);
    bool integral = true;
    for (const auto& r : sc)
      if (!r.is_integer()) { integral = false; break; }
    if (integral) {
      QuotientDecomposition q;
      q.t = t;
      q.sigma.simple.resize(rs.rank);
      for (int i = 0; i < rs.rank; i++) q.sigma.simple[i] = sc[i].num;
      return q;
    }
    // advance multi-index
    size_t g = 0;
    while (g < ng && ++t[g] == rs.quotient_generators[g].order) t[g++] = 0;
    if (g == ng) return std::nullopt;
  }
}

}  // namespace liecoh
