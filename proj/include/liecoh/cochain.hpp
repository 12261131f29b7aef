#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "gfp.hpp"
#include "rootsystem.hpp"

namespace liecoh {

enum class Variant { Symmetric, Exterior };

// Degree-n monomial in the functionals phi_alpha: sorted positive-root indices
// (multiset for the symmetric variant, strictly increasing for the exterior).
struct Monomial {
  std::vector<int> roots;
  int degree() const { return static_cast<int>(roots.size()); }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.roots == b.roots; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.roots < b.roots; }
};

// GF(p) linear combination of monomials of one degree.
struct Cochain {
  long long p = 2;
  int degree = 0;
  std::map<Monomial, long long> terms;  // coefficients in {1..p-1}

  void add(const Monomial& m, long long c) {
    c %= p;
    if (c < 0) c += p;
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(m, 0);
    it->second = (it->second + c) % p;
    if (it->second == 0) terms.erase(it);
  }
};

struct GradedComponent {
  int degree = 0;
  Variant variant = Variant::Symmetric;
  std::map<Weight, std::vector<Monomial>> classes;          // ordered basis per weight
  std::map<std::vector<int>, std::pair<Weight, int>> index;  // monomial -> (weight, position)

  size_t total_size() const {
    size_t s = 0;
    for (const auto& [w, v] : classes) s += v.size();
    return s;
  }
};

inline Weight monomial_weight(const RootSystem& rs, const std::vector<int>& roots) {
  Weight w;
  w.fund.assign(rs.rank, 0);
  for (int r : roots) {
    Weight rw = to_fundamental(rs, rs.positive_roots[r]);
    w = w + rw;
  }
  return w;
}

inline GradedComponent build_graded_component(const RootSystem& rs, int n, Variant variant) {
  if (n < 0 || n > 3) throw std::invalid_argument("graded component degree must be in 0..3");
  GradedComponent gc;
  gc.degree = n;
  gc.variant = variant;
  int nr = static_cast<int>(rs.positive_roots.size());
  std::vector<int> cur;
  // Lexicographic enumeration keeps every weight class sorted.
  auto emit = [&]() {
    Weight w = monomial_weight(rs, cur);
    auto& cls = gc.classes[w];
    gc.index[cur] = {w, static_cast<int>(cls.size())};
    cls.push_back(Monomial{cur});
  };
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int r = start; r < nr; r++) {
      cur.push_back(r);
      rec(variant == Variant::Symmetric ? r : r + 1, remaining - 1);
      cur.pop_back();
    }
  };
  rec(0, n);
  return gc;
}

namespace cochain_detail {

struct D1Term {
  int a, b;         // a < b, root indices with root(a)+root(b) = gamma
  long long coeff;  // reduced mod p
};

// d1 phi_gamma = -sum N_{a,b} phi_a phi_b over unordered decompositions; the
// global sign is irrelevant to cohomology and dropped in the symmetric p=2
// complex, kept in the exterior variant for odd-p sign coherence.
inline std::vector<std::vector<D1Term>> d1_table(const RootSystem& rs, long long p, Variant variant) {
  const auto& tbl = chevalley_table(rs);
  int nr = static_cast<int>(rs.positive_roots.size());
  std::vector<std::vector<D1Term>> d1(nr);
  for (int g = 0; g < nr; g++) {
    const IVec& gamma = rs.positive_roots[g].simple;
    for (int a = 0; a < nr; a++) {
      const IVec& ra = rs.positive_roots[a].simple;
      IVec rb(rs.rank);
      bool ok = true;
      for (int i = 0; i < rs.rank; i++) {
        rb[i] = gamma[i] - ra[i];
        if (rb[i] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = rs.root_index.find(rb);
      if (it == rs.root_index.end() || it->second <= a) continue;
      long long c = -tbl.get(a, it->second);
      if (variant == Variant::Symmetric) c = -c;  // sign immaterial at p=2
      c %= p;
      if (c < 0) c += p;
      if (c) d1[g].push_back({a, it->second, c});
    }
  }
  return d1;
}

// Sorting sign for wedge normalization; returns 0 on repeated index.
inline int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); i++)
    for (size_t j = i; j > 0 && v[j] < v[j - 1]; j--) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < v.size(); i++)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

// Image of one basis monomial under d_n (Leibniz from the degree-1 table).
inline Cochain apply_d(const RootSystem& rs, const std::vector<std::vector<D1Term>>& d1,
                       const Monomial& m, long long p, Variant variant) {
  Cochain out;
  out.p = p;
  out.degree = m.degree() + 1;
  for (size_t i = 0; i < m.roots.size(); i++) {
    if (variant == Variant::Symmetric && i > 0 && m.roots[i] == m.roots[i - 1])
      continue;  // handle repeated factors once, with multiplicity
    long long mult = 1;
    if (variant == Variant::Symmetric) {
      mult = std::count(m.roots.begin(), m.roots.end(), m.roots[i]);
      mult %= p;
      if (mult == 0) continue;
    }
    long long leibniz = 1;
    if (variant == Variant::Exterior && (i % 2 == 1)) leibniz = p - 1;
    for (const auto& t : d1[m.roots[i]]) {
      std::vector<int> roots;
      roots.reserve(m.roots.size() + 1);
      for (size_t j = 0; j < m.roots.size(); j++)
        if (j != i) roots.push_back(m.roots[j]);
      roots.push_back(t.a);
      roots.push_back(t.b);
      long long c = t.coeff * mult % p * leibniz % p;
      if (variant == Variant::Exterior) {
        int s = sort_sign(roots);
        if (s == 0) continue;
        if (s < 0) c = (p - c) % p;
      } else {
        std::sort(roots.begin(), roots.end());
      }
      out.add(Monomial{roots}, c);
    }
  }
  return out;
}

}  // namespace cochain_detail

// Matrix of d_n on the weight class, rows indexed by the degree-(n+1) basis of
// the same weight, columns by the degree-n basis. Cached components avoid
// rebuilding S^3 per weight.
inline GfpMatrix differential_block_indexed(const RootSystem& rs, const GradedComponent& comp_n,
                                            const GradedComponent& comp_n1, const Weight& weight,
                                            long long p) {
  if (comp_n.variant != comp_n1.variant) throw std::invalid_argument("variant mismatch");
  Variant variant = comp_n.variant;
  if (variant == Variant::Symmetric && p != 2)
    throw std::invalid_argument("symmetric restricted complex is p=2 only");
  using CacheKey = std::tuple<char, int, long long, Variant>;
  static thread_local std::map<CacheKey, std::vector<std::vector<cochain_detail::D1Term>>> cache;
  CacheKey key{kind_letter(rs.kind), rs.rank, p, variant};
  auto cit2 = cache.find(key);
  if (cit2 == cache.end()) cit2 = cache.emplace(key, cochain_detail::d1_table(rs, p, variant)).first;
  const auto& d1 = cit2->second;
  auto cit = comp_n.classes.find(weight);
  auto rit = comp_n1.classes.find(weight);
  int ncols = cit == comp_n.classes.end() ? 0 : static_cast<int>(cit->second.size());
  int nrows = rit == comp_n1.classes.end() ? 0 : static_cast<int>(rit->second.size());
  GfpMatrix m(p, nrows, ncols);
  if (ncols == 0 || comp_n.degree == 0) return m;
  for (int c = 0; c < ncols; c++) {
    Cochain img = cochain_detail::apply_d(rs, d1, cit->second[c], p, variant);
    for (const auto& [mono, coeff] : img.terms) {
      auto it = comp_n1.index.find(mono.roots);
      if (it == comp_n1.index.end()) throw std::logic_error("differential left the component");
      if (!(it->second.first == weight)) throw std::logic_error("differential changed weight");
      m.set(it->second.second, c, coeff);
    }
  }
  return m;
}

// Convenience wrapper; builds the two needed components itself.
inline GfpMatrix differential_block(const RootSystem& rs, const Weight& weight, int n, long long p,
                                    Variant variant) {
  GradedComponent cn = build_graded_component(rs, n, variant);
  GradedComponent cn1 = build_graded_component(rs, n + 1, variant);
  return differential_block_indexed(rs, cn, cn1, weight, p);
}

// ---------------------------------------------------------------------------
// Coefficient complexes  Lambda^*(u*) (x) N  for the uniserial modules N.

struct CoeffModule {
  std::string name;
  std::vector<Weight> factors;  // composition factor weights, head (index 0) to socle
  struct Edge {
    int gamma;       // simple-root index: x_{-alpha_gamma}
    int from, to;    // factor indices; action moves strictly toward the socle
    long long coeff;
  };
  std::vector<Edge> edges;
};

inline void validate_coeff_module(const RootSystem& rs, const CoeffModule& mod) {
  for (const auto& e : mod.edges) {
    if (e.gamma < 0 || e.gamma >= rs.rank || e.from < 0 || e.to < 0 ||
        e.from >= static_cast<int>(mod.factors.size()) || e.to >= static_cast<int>(mod.factors.size()) ||
        e.to <= e.from)
      throw std::invalid_argument("coeff module: malformed action edge");
    IVec g(rs.rank, 0);
    g[e.gamma] = 1;
    Weight diff = mod.factors[e.from] - mod.factors[e.to];
    if (diff != to_fundamental(rs, g))
      throw std::invalid_argument("coeff module: edge weight mismatch");
  }
}

// Basis element of Lambda^d(u*) (x) N: exterior monomial plus factor index.
struct CoeffBasisElem {
  std::vector<int> roots;
  int factor = 0;
  friend bool operator<(const CoeffBasisElem& a, const CoeffBasisElem& b) {
    if (a.roots != b.roots) return a.roots < b.roots;
    return a.factor < b.factor;
  }
  friend bool operator==(const CoeffBasisElem& a, const CoeffBasisElem& b) {
    return a.roots == b.roots && a.factor == b.factor;
  }
};

struct CoeffComplex {
  long long p = 2;
  CoeffModule module;
  // Full u-action: action[g][j][i] is the coefficient of m_j in x_{-gamma_g} m_i,
  // indexed by positive-root index g. The simple edges generate the rest.
  std::vector<std::vector<std::vector<long long>>> action;
  // degree -> weight -> ordered basis
  std::array<std::map<Weight, std::vector<CoeffBasisElem>>, 3> classes;
  std::array<std::map<std::pair<std::vector<int>, int>, std::pair<Weight, int>>, 3> index;
};

// Extend the simple-root edges to matrices for every negative positive-root
// vector via x_{-a-b} = [x_{-a}, x_{-b}] / N_{-a,-b}; exact divisibility is a
// consistency check on the module data.
inline std::vector<std::vector<std::vector<long long>>> coeff_full_action(const RootSystem& rs,
                                                                          const CoeffModule& mod) {
  const auto& tbl = chevalley_table(rs);
  int nf = static_cast<int>(mod.factors.size());
  int nr = static_cast<int>(rs.positive_roots.size());
  auto zero = std::vector<std::vector<long long>>(nf, std::vector<long long>(nf, 0));
  std::vector<std::vector<std::vector<long long>>> act(nr, zero);
  for (const auto& e : mod.edges) {
    IVec g(rs.rank, 0);
    g[e.gamma] = 1;
    act[rs.root_index.at(g)][e.to][e.from] += e.coeff;
  }
  auto mul = [&](const auto& x, const auto& y) {
    auto r = zero;
    for (int i = 0; i < nf; i++)
      for (int k = 0; k < nf; k++)
        if (x[i][k])
          for (int j = 0; j < nf; j++) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  // positive_roots is height-sorted, so lower-height actions are ready in time
  for (int g = 0; g < nr; g++) {
    const IVec& gamma = rs.positive_roots[g].simple;
    if (rs.positive_roots[g].height() == 1) continue;
    int ia = -1, ib = -1;
    for (int a = 0; a < nr && ia < 0; a++) {
      IVec rb(rs.rank);
      bool ok = true;
      for (int i = 0; i < rs.rank; i++) {
        rb[i] = gamma[i] - rs.positive_roots[a].simple[i];
        if (rb[i] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = rs.root_index.find(rb);
      if (it != rs.root_index.end()) { ia = a; ib = it->second; }
    }
    if (ia < 0) throw std::logic_error("root with no two-part decomposition");
    long long nconst = tbl.get(ia, ib);
    auto comm = mul(act[ia], act[ib]);
    auto ba = mul(act[ib], act[ia]);
    for (int i = 0; i < nf; i++)
      for (int j = 0; j < nf; j++) {
        long long v = comm[i][j] - ba[i][j];
        if (v % nconst != 0) throw std::logic_error("coeff module action not integral");
        act[g][i][j] = -v / nconst;
      }
  }
  return act;
}

inline CoeffComplex build_coeff_complex(const RootSystem& rs, const CoeffModule& mod, long long p) {
  if (p != 2) throw std::invalid_argument("coefficient complexes are used at p=2 only");
  validate_coeff_module(rs, mod);
  CoeffComplex cc;
  cc.p = p;
  cc.module = mod;
  cc.action = coeff_full_action(rs, mod);
  int nf = static_cast<int>(mod.factors.size());
  for (int deg = 0; deg <= 2; deg++) {
    GradedComponent ext = build_graded_component(rs, deg, Variant::Exterior);
    for (const auto& [w, monos] : ext.classes)
      for (const auto& m : monos)
        for (int f = 0; f < nf; f++) {
          Weight tw = w + mod.factors[f];
          auto& cls = cc.classes[deg][tw];
          cc.index[deg][{m.roots, f}] = {tw, static_cast<int>(cls.size())};
          cls.push_back(CoeffBasisElem{m.roots, f});
        }
  }
  return cc;
}

// The four uniserial B-modules used for the H^1(B_1)-twist computations in
// types B, C, F4, G2. Factor weights are listed head to socle; each action
// edge is a negative simple root vector mapping one factor onto the next.
inline CoeffModule coeff_module_for(const RootSystem& rs) {
  CoeffModule mod;
  auto fund_of_simple_span = [&](int lo, int hi) {  // alpha_lo + ... + alpha_hi, 0-based inclusive
    IVec v(rs.rank, 0);
    for (int i = lo; i <= hi; i++) v[i] = 1;
    return to_fundamental(rs, v);
  };
  Weight zero;
  zero.fund.assign(rs.rank, 0);
  int n = rs.rank;
  switch (rs.kind) {
    case Kind::B:
      // factors (alpha_n, k), edge x_{-alpha_n}
      mod.name = "N_B" + std::to_string(n);
      mod.factors = {fund_of_simple_span(n - 1, n - 1), zero};
      mod.edges = {{n - 1, 0, 1, 1}};
      break;
    case Kind::C:
      // factors e_i - e_n = alpha_i + ... + alpha_{n-1} for i = 1..n-1, then k;
      // edges x_{-alpha_i}: m_i -> m_{i+1}
      mod.name = "N_C" + std::to_string(n);
      for (int i = 0; i < n - 1; i++) mod.factors.push_back(fund_of_simple_span(i, n - 2));
      mod.factors.push_back(zero);
      for (int i = 0; i < n - 1; i++) mod.edges.push_back({i, i, i + 1, 1});
      break;
    case Kind::F:
      // factors (alpha_3 + alpha_4, alpha_3, k), edges x_{-alpha_4}, x_{-alpha_3}
      mod.name = "N_F4";
      mod.factors = {fund_of_simple_span(2, 3), fund_of_simple_span(2, 2), zero};
      mod.edges = {{3, 0, 1, 1}, {2, 1, 2, 1}};
      break;
    case Kind::G:
      // factors (alpha_2, k), edge x_{-alpha_2}
      mod.name = "N_G2";
      mod.factors = {fund_of_simple_span(1, 1), zero};
      mod.edges = {{1, 0, 1, 1}};
      break;
    default:
      throw std::invalid_argument("no coefficient module for type " + rs.name());
  }
  return mod;
}

// d'_deg block at a weight: rows indexed by degree deg+1, columns by degree deg.
// d'(m (x) psi) = sum_edges c * m_to (x) (phi_gamma ^ psi) + m (x) d(psi).
inline GfpMatrix coeff_differential_block(const RootSystem& rs, const CoeffComplex& cc, int deg,
                                          const Weight& weight) {
  if (deg < 0 || deg > 1) throw std::invalid_argument("coeff differential degree must be 0 or 1");
  auto d1 = cochain_detail::d1_table(rs, cc.p, Variant::Exterior);
  auto cit = cc.classes[deg].find(weight);
  auto rit = cc.classes[deg + 1].find(weight);
  int ncols = cit == cc.classes[deg].end() ? 0 : static_cast<int>(cit->second.size());
  int nrows = rit == cc.classes[deg + 1].end() ? 0 : static_cast<int>(rit->second.size());
  GfpMatrix m(cc.p, nrows, ncols);
  if (ncols == 0) return m;
  long long p = cc.p;
  auto add_entry = [&](std::vector<int> roots, int factor, long long c, int col) {
    int s = cochain_detail::sort_sign(roots);
    if (s == 0 || c % p == 0) return;
    long long cv = c % p;
    if (cv < 0) cv += p;
    if (s < 0) cv = (p - cv) % p;
    auto it = cc.index[deg + 1].find({roots, factor});
    if (it == cc.index[deg + 1].end()) throw std::logic_error("coeff differential left the component");
    m.at(it->second.second, col) =
        static_cast<uint8_t>((m.get(it->second.second, col) + cv) % p);
  };
  for (int col = 0; col < ncols; col++) {
    const auto& elem = cit->second[col];
    // module part, over the full u-action
    for (size_t g = 0; g < cc.action.size(); g++)
      for (size_t to = 0; to < cc.module.factors.size(); to++) {
        long long c = cc.action[g][to][elem.factor];
        if (c % p == 0) continue;
        std::vector<int> roots;
        roots.push_back(static_cast<int>(g));
        for (int r : elem.roots) roots.push_back(r);
        add_entry(roots, static_cast<int>(to), c, col);
      }
    // cochain part
    if (deg >= 1) {
      Monomial mono{elem.roots};
      Cochain img = cochain_detail::apply_d(rs, d1, mono, p, Variant::Exterior);
      for (const auto& [m2, c2] : img.terms) add_entry(m2.roots, elem.factor, c2, col);
    }
  }
  return m;
}

}  // namespace liecoh
