#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cochain.hpp"

namespace liecoh {

// Weight-decomposed cohomology of one of the complexes. Representatives are
// cocycles, reduced mod the coboundary space, pairwise independent.
struct CohomologyResult {
  Kind kind = Kind::A;
  int rank = 0;
  long long p = 2;
  int degree = 0;
  std::string group;  // "U1", "u", "B1", or a coefficient-module name
  Weight lambda;      // B1 results only; zero otherwise

  struct Entry {
    int dim = 0;
    std::vector<Cochain> reps;
  };
  std::map<Weight, Entry> weights;

  int total_dim() const {
    int s = 0;
    for (const auto& [w, e] : weights) s += e.dim;
    return s;
  }
};

namespace cohdetail {

// Columns of the incoming differential block, as row vectors in the degree-n
// basis; these span the coboundary space at the weight.
inline std::vector<std::vector<uint8_t>> columns_of(const GfpMatrix& m) {
  std::vector<std::vector<uint8_t>> cols;
  for (int c = 0; c < m.cols; c++) {
    std::vector<uint8_t> v(m.rows);
    bool nz = false;
    for (int r = 0; r < m.rows; r++) {
      v[r] = m.get(r, c);
      nz = nz || v[r];
    }
    if (nz) cols.push_back(std::move(v));
  }
  return cols;
}

inline Cochain to_cochain(const std::vector<uint8_t>& v, const std::vector<Monomial>& basis,
                          long long p, int degree) {
  Cochain c;
  c.p = p;
  c.degree = degree;
  for (size_t i = 0; i < v.size(); i++)
    if (v[i]) c.add(basis[i], v[i]);
  return c;
}

}  // namespace cohdetail

inline CohomologyResult cohomology_of_complex(const RootSystem& rs, int n, long long p,
                                              Variant variant, const std::string& group) {
  if (n < 1 || n > 2) throw std::invalid_argument("cohomology degree must be 1 or 2");
  CohomologyResult res;
  res.kind = rs.kind;
  res.rank = rs.rank;
  res.p = p;
  res.degree = n;
  res.group = group;
  res.lambda.fund.assign(rs.rank, 0);
  GradedComponent cprev = build_graded_component(rs, n - 1, variant);
  GradedComponent cn = build_graded_component(rs, n, variant);
  GradedComponent cnext = build_graded_component(rs, n + 1, variant);
  for (const auto& [w, basis] : cn.classes) {
    GfpMatrix dn = differential_block_indexed(rs, cn, cnext, w, p);
    auto cocycles = kernel_basis(dn);
    if (cocycles.empty()) continue;
    GfpMatrix dprev = differential_block_indexed(rs, cprev, cn, w, p);
    auto cobound = cohdetail::columns_of(dprev);
    auto reps = quotient_reps(cocycles, cobound, p);
    if (reps.empty()) continue;
    CohomologyResult::Entry e;
    e.dim = static_cast<int>(reps.size());
    for (const auto& v : reps) e.reps.push_back(cohdetail::to_cochain(v, basis, p, n));
    res.weights.emplace(w, std::move(e));
  }
  return res;
}

// H^n(U_1, k) at p = 2 via the restricted symmetric-power complex.
inline CohomologyResult h_n_u1(const RootSystem& rs, int n, long long p = 2) {
  if (p != 2) throw std::invalid_argument("h_n_u1 is p=2 only");
  return cohomology_of_complex(rs, n, p, Variant::Symmetric, "U1");
}

// Ordinary Lie algebra cohomology H^n(u, k), any prime p.
inline CohomologyResult h_n_u_ordinary(const RootSystem& rs, int n, long long p) {
  return cohomology_of_complex(rs, n, p, Variant::Exterior, "u");
}

// H^1(u, N) for a uniserial coefficient module, p = 2.
inline CohomologyResult h1_u_with_coeffs(const RootSystem& rs, const CoeffModule& mod,
                                         long long p = 2) {
  CoeffComplex cc = build_coeff_complex(rs, mod, p);
  CohomologyResult res;
  res.kind = rs.kind;
  res.rank = rs.rank;
  res.p = p;
  res.degree = 1;
  res.group = mod.name;
  res.lambda.fund.assign(rs.rank, 0);
  for (const auto& [w, basis] : cc.classes[1]) {
    GfpMatrix d1 = coeff_differential_block(rs, cc, 1, w);
    auto cocycles = kernel_basis(d1);
    if (cocycles.empty()) continue;
    GfpMatrix d0 = coeff_differential_block(rs, cc, 0, w);
    auto cobound = cohdetail::columns_of(d0);
    auto reps = quotient_reps(cocycles, cobound, p);
    if (reps.empty()) continue;
    CohomologyResult::Entry e;
    e.dim = static_cast<int>(reps.size());
    // representatives kept as plain vectors over the (root, factor) basis;
    // only weights and dimensions are consumed downstream
    res.weights.emplace(w, std::move(e));
  }
  return res;
}

// H^2(B_1, lambda) weight spaces: the sub-T-module of H^2(U_1,k) on weights
// congruent to -lambda mod pX(T). Keys are the untwisted nu with
// -lambda + p nu the underlying H^2(U_1,k) weight.
inline CohomologyResult h2_b1(const RootSystem& rs, const Weight& lambda, long long p = 2) {
  CohomologyResult base = h_n_u1(rs, 2, p);
  CohomologyResult res;
  res.kind = rs.kind;
  res.rank = rs.rank;
  res.p = p;
  res.degree = 2;
  res.group = "B1";
  res.lambda = lambda;
  for (auto& [mu, e] : base.weights) {
    bool ok = true;
    Weight nu;
    nu.fund.assign(rs.rank, 0);
    for (int i = 0; i < rs.rank; i++) {
      long long s = mu.fund[i] + lambda.fund[i];
      if (((s % p) + p) % p != 0) { ok = false; break; }
      nu.fund[i] = s / p;  // exact since mu = -lambda + p nu
    }
    if (ok) res.weights.emplace(nu, std::move(e));
  }
  return res;
}

// The length-two Weyl word normalizer: for admissible w = s_i s_j the unique
// nu with w.0 + 2 nu restricted (all fundamental coordinates in {0,1}).
// Admissible pairs: non-connected vertices, plus the type-C pair (n-1, n).
inline Weight nu_w(const RootSystem& rs, const WeylWord& w) {
  if (w.reflections.size() != 2) throw std::invalid_argument("nu_w wants a length-2 word");
  int i = w.reflections[0], j = w.reflections[1];
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= rs.rank || i == j) throw std::invalid_argument("nu_w: bad reflection indices");
  bool connected = rs.cartan[i][j] != 0;
  bool c_exception = rs.kind == Kind::C && i == rs.rank - 2 && j == rs.rank - 1;
  if (connected && !c_exception) throw std::invalid_argument("nu_w: inadmissible pair");
  Weight zero;
  zero.fund.assign(rs.rank, 0);
  Weight w0 = dot_action(rs, w, zero);
  Weight nu;
  nu.fund.assign(rs.rank, 0);
  for (int c = 0; c < rs.rank; c++) {
    long long lift = ((w0.fund[c] % 2) + 2) % 2;  // the X_1 lift in {0,1}
    nu.fund[c] = (lift - w0.fund[c]) / 2;
    if (w0.fund[c] + 2 * nu.fund[c] != lift) throw std::logic_error("nu_w parity lift failed");
  }
  return nu;
}

struct LinkageReport {
  Weight source, target;
  Root gamma;
  long long n = 0;
  bool nonzero = false;
};

namespace cohdetail {

inline Weight cochain_weight(const RootSystem& rs, const Cochain& c) {
  if (c.terms.empty()) throw std::invalid_argument("empty cochain has no weight");
  Weight w = monomial_weight(rs, c.terms.begin()->first.roots);
  for (const auto& [m, coeff] : c.terms)
    if (!(monomial_weight(rs, m.roots) == w))
      throw std::invalid_argument("cochain is not weight-homogeneous");
  return w;
}

inline std::vector<uint8_t> to_vector(const Cochain& c, const GradedComponent& comp,
                                      const Weight& w) {
  auto it = comp.classes.find(w);
  if (it == comp.classes.end()) throw std::invalid_argument("weight not in component");
  std::vector<uint8_t> v(it->second.size(), 0);
  for (const auto& [m, coeff] : c.terms) {
    auto jt = comp.index.find(m.roots);
    if (jt == comp.index.end() || !(jt->second.first == w))
      throw std::invalid_argument("monomial outside the weight class");
    v[jt->second.second] = static_cast<uint8_t>(coeff);
  }
  return v;
}

inline int span_rank(std::vector<std::vector<uint8_t>> rows, long long p, int ncols) {
  return static_cast<int>(gfdetail::rref_dispatch(rows, p, ncols).size());
}

}  // namespace cohdetail

// Divided-power action of the negative simple root vector on an H^2(U_1,k)
// class, compared against a target class modulo coboundaries. The action on a
// product follows the comultiplication: E^(n)(uv) = sum_k E^(k)u E^(n-k)v.
inline LinkageReport link_classes(const RootSystem& rs, const Cochain& c_src, const Cochain& c_dst,
                                  long long p = 2) {
  if (c_src.degree != 2 || c_dst.degree != 2)
    throw std::invalid_argument("link_classes wants degree-2 cochains");
  LinkageReport rep;
  rep.source = cohdetail::cochain_weight(rs, c_src);
  rep.target = cohdetail::cochain_weight(rs, c_dst);
  // source - target = n gamma for a simple gamma, n in {1, 2}; the divided
  // powers of the negative root vectors lower weights
  Weight diff = rep.source - rep.target;
  std::optional<Root> gamma;
  long long n = 0;
  for (const auto& s : rs.simple_roots) {
    Weight sw = to_fundamental(rs, s.simple);
    for (long long k = 1; k <= 2; k++)
      if (diff == sw * k) { gamma = s; n = k; }
  }
  if (!gamma) throw std::invalid_argument("weight difference is not n*gamma, n in {1,2}");
  rep.gamma = *gamma;
  rep.n = n;

  GradedComponent c1 = build_graded_component(rs, 1, Variant::Symmetric);
  GradedComponent c2 = build_graded_component(rs, 2, Variant::Symmetric);
  GradedComponent c3 = build_graded_component(rs, 3, Variant::Symmetric);
  // cocycle preconditions
  for (const Cochain* c : {&c_src, &c_dst}) {
    Weight w = cohdetail::cochain_weight(rs, *c);
    auto blk = differential_block_indexed(rs, c2, c3, w, p);
    auto v = cohdetail::to_vector(*c, c2, w);
    for (int r = 0; r < blk.rows; r++) {
      long long s = 0;
      for (int cc = 0; cc < blk.cols; cc++) s += blk.get(r, cc) * v[cc];
      if (s % p) throw std::invalid_argument("link_classes input is not a cocycle");
    }
  }

  // image of c_src under E^(n)
  Cochain img;
  img.p = p;
  img.degree = 2;
  for (const auto& [m, coeff] : c_src.terms) {
    Root a = rs.positive_roots[m.roots[0]];
    Root b = rs.positive_roots[m.roots[1]];
    for (long long k = 0; k <= n; k++) {
      auto [da, ca] = divided_coadjoint(rs, *gamma, k, a);
      if (!da) continue;
      auto [db, cb] = divided_coadjoint(rs, *gamma, n - k, b);
      if (!db) continue;
      std::vector<int> roots = {rs.index_of(*da), rs.index_of(*db)};
      std::sort(roots.begin(), roots.end());
      img.add(Monomial{roots}, coeff * ca % p * cb % p);
    }
  }

  auto vdst = cohdetail::to_vector(c_dst, c2, rep.target);
  std::vector<uint8_t> vimg(vdst.size(), 0);
  if (!img.terms.empty()) vimg = cohdetail::to_vector(img, c2, rep.target);
  // the action commutes with d, so the image must again be a cocycle
  {
    auto blk = differential_block_indexed(rs, c2, c3, rep.target, p);
    for (int r = 0; r < blk.rows; r++) {
      long long s = 0;
      for (int cc = 0; cc < blk.cols; cc++) s += blk.get(r, cc) * vimg[cc];
      if (s % p) throw std::logic_error("divided-power image is not a cocycle");
    }
  }
  auto cobound = cohdetail::columns_of(differential_block_indexed(rs, c1, c2, rep.target, p));
  int ncols = static_cast<int>(vdst.size());
  int base = cohdetail::span_rank(cobound, p, ncols);
  auto with_img = cobound;
  with_img.push_back(vimg);
  int rimg = cohdetail::span_rank(with_img, p, ncols);
  auto with_dst = cobound;
  with_dst.push_back(vdst);
  int rdst = cohdetail::span_rank(with_dst, p, ncols);
  auto with_both = with_dst;
  with_both.push_back(vimg);
  int rboth = cohdetail::span_rank(with_both, p, ncols);
  // nonzero multiple of [c_dst]: [img] != 0 and img in span(cobound, dst)
  rep.nonzero = (rimg > base) && (rboth == rdst);
  return rep;
}

}  // namespace liecoh
