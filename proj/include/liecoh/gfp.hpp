#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace liecoh {

// Dense matrix over GF(p), entries stored reduced in {0..p-1}. The p=2 rank
// and reduction paths pack 64 columns per machine word.
struct GfpMatrix {
  long long p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;  // row-major

  GfpMatrix() = default;
  GfpMatrix(long long p_, int r, int c) : p(p_), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t get(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  void set(int r, int c, long long v) {
    long long m = v % p;
    if (m < 0) m += p;
    at(r, c) = static_cast<uint8_t>(m);
  }
};

namespace gfdetail {

inline long long inv_mod(long long x, long long p) {
  // p is a small prime; Fermat by repeated multiplication.
  long long r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// In-place RREF of byte rows mod p; returns pivot column list. Deterministic:
// first nonzero pivot in row-major order.
inline std::vector<int> rref_rows(std::vector<std::vector<uint8_t>>& rows, long long p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); c++) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); i++)
      if (rows[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    long long inv = inv_mod(rows[r][c], p);
    for (int j = c; j < ncols; j++) rows[r][j] = static_cast<uint8_t>(rows[r][j] * inv % p);
    for (int i = 0; i < static_cast<int>(rows.size()); i++) {
      if (i == r || rows[i][c] == 0) continue;
      long long f = rows[i][c];
      for (int j = c; j < ncols; j++)
        rows[i][j] = static_cast<uint8_t>(((rows[i][j] + (p - f) * rows[r][j]) % p));
    }
    pivots.push_back(c);
    r++;
  }
  rows.resize(pivots.size());
  return pivots;
}

struct PackedRows {
  int cols = 0;
  int words = 0;
  std::vector<std::vector<uint64_t>> rows;

  static PackedRows from_bytes(const std::vector<std::vector<uint8_t>>& byte_rows, int ncols) {
    PackedRows p;
    p.cols = ncols;
    p.words = (ncols + 63) / 64;
    for (const auto& br : byte_rows) {
      std::vector<uint64_t> w(p.words, 0);
      for (int c = 0; c < ncols; c++)
        if (br[c] & 1) w[c >> 6] |= (uint64_t{1} << (c & 63));
      p.rows.push_back(std::move(w));
    }
    return p;
  }

  std::vector<std::vector<uint8_t>> to_bytes() const {
    std::vector<std::vector<uint8_t>> out;
    for (const auto& w : rows) {
      std::vector<uint8_t> br(cols, 0);
      for (int c = 0; c < cols; c++) br[c] = (w[c >> 6] >> (c & 63)) & 1;
      out.push_back(std::move(br));
    }
    return out;
  }
};

inline std::vector<int> rref_packed(PackedRows& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < static_cast<int>(m.rows.size()); c++) {
    int word = c >> 6;
    uint64_t bit = uint64_t{1} << (c & 63);
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.rows.size()); i++)
      if (m.rows[i][word] & bit) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m.rows[r], m.rows[piv]);
    for (int i = 0; i < static_cast<int>(m.rows.size()); i++) {
      if (i == r || !(m.rows[i][word] & bit)) continue;
      for (int wj = word; wj < m.words; wj++) m.rows[i][wj] ^= m.rows[r][wj];
    }
    pivots.push_back(c);
    r++;
  }
  m.rows.resize(pivots.size());
  return pivots;
}

inline std::vector<std::vector<uint8_t>> matrix_rows(const GfpMatrix& m) {
  std::vector<std::vector<uint8_t>> rows(m.rows, std::vector<uint8_t>(m.cols));
  for (int r = 0; r < m.rows; r++)
    for (int c = 0; c < m.cols; c++) rows[r][c] = m.get(r, c);
  return rows;
}

// RREF dispatch; fills `rows` with the reduced nonzero rows.
inline std::vector<int> rref_dispatch(std::vector<std::vector<uint8_t>>& rows, long long p, int ncols,
                                      bool force_generic = false) {
  if (p == 2 && !force_generic) {
    PackedRows pm = PackedRows::from_bytes(rows, ncols);
    auto pivots = rref_packed(pm);
    rows = pm.to_bytes();
    return pivots;
  }
  return rref_rows(rows, p);
}

inline int rank_impl(const GfpMatrix& m, bool force_generic) {
  auto rows = matrix_rows(m);
  return static_cast<int>(rref_dispatch(rows, m.p, m.cols, force_generic).size());
}

}  // namespace gfdetail

inline int rank(const GfpMatrix& m) { return gfdetail::rank_impl(m, false); }

// Generic (unpacked) elimination path, kept callable for the packed-vs-generic
// equivalence tests.
inline int rank_generic(const GfpMatrix& m) { return gfdetail::rank_impl(m, true); }

// Basis of the right null space {v : m v = 0}.
inline std::vector<std::vector<uint8_t>> kernel_basis(const GfpMatrix& m) {
  auto rows = gfdetail::matrix_rows(m);
  auto pivots = gfdetail::rref_dispatch(rows, m.p, m.cols);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (size_t i = 0; i < pivots.size(); i++) pivot_of_col[pivots[i]] = static_cast<int>(i);
  std::vector<std::vector<uint8_t>> basis;
  for (int c = 0; c < m.cols; c++) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<uint8_t> v(m.cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); i++) {
      long long coef = rows[i][c];
      if (coef) v[pivots[i]] = static_cast<uint8_t>((m.p - coef) % m.p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduced-echelon representatives of span(cocycles)/span(coboundaries).
// Coboundary rows are reduced first; cocycles extend the echelon; finally the
// representative rows are back-substituted against the full echelon so the
// output is deterministic and independent of input order quirks.
inline std::vector<std::vector<uint8_t>> quotient_reps(
    const std::vector<std::vector<uint8_t>>& cocycles,
    const std::vector<std::vector<uint8_t>>& coboundaries, long long p) {
  int ncols = 0;
  if (!cocycles.empty()) ncols = static_cast<int>(cocycles[0].size());
  else if (!coboundaries.empty()) ncols = static_cast<int>(coboundaries[0].size());
  if (ncols == 0) return {};

  // Containment precondition: span(coboundaries) must lie inside span(cocycles);
  // a violation signals d.d != 0 upstream.
  {
    auto zrows = cocycles;
    auto zpiv = gfdetail::rref_dispatch(zrows, p, ncols);
    std::vector<int> pivot_of_col(ncols, -1);
    for (size_t i = 0; i < zpiv.size(); i++) pivot_of_col[zpiv[i]] = static_cast<int>(i);
    for (const auto& b : coboundaries) {
      std::vector<uint8_t> v = b;
      for (int c = 0; c < ncols; c++) {
        if (v[c] == 0 || pivot_of_col[c] < 0) continue;
        long long f = v[c];
        const auto& row = zrows[pivot_of_col[c]];
        for (int j = c; j < ncols; j++) v[j] = static_cast<uint8_t>((v[j] + (p - f) * row[j]) % p);
      }
      for (auto x : v)
        if (x) throw std::invalid_argument("quotient_reps: coboundary not in cocycle span");
    }
  }

  // Echelon of the coboundary space.
  auto ech = coboundaries;
  gfdetail::rref_dispatch(ech, p, ncols);
  std::vector<int> pivot_col;  // pivot column of each echelon row
  std::vector<bool> is_rep;
  for (const auto& r : ech) {
    int c = 0;
    while (c < ncols && r[c] == 0) c++;
    pivot_col.push_back(c);
    is_rep.push_back(false);
  }

  auto reduce = [&](std::vector<uint8_t>& v) {
    for (size_t i = 0; i < ech.size(); i++) {
      int c = pivot_col[i];
      if (v[c] == 0) continue;
      long long f = v[c];
      for (int j = 0; j < ncols; j++) v[j] = static_cast<uint8_t>((v[j] + (p - f) * ech[i][j]) % p);
    }
  };

  for (const auto& z : cocycles) {
    std::vector<uint8_t> v = z;
    reduce(v);
    int c = 0;
    while (c < ncols && v[c] == 0) c++;
    if (c == ncols) continue;
    long long inv = gfdetail::inv_mod(v[c], p);
    for (int j = 0; j < ncols; j++) v[j] = static_cast<uint8_t>(v[j] * inv % p);
    // Keep echelon ordered by pivot column.
    size_t pos = 0;
    while (pos < ech.size() && pivot_col[pos] < c) pos++;
    ech.insert(ech.begin() + pos, v);
    pivot_col.insert(pivot_col.begin() + pos, c);
    is_rep.insert(is_rep.begin() + pos, true);
  }

  // Back-substitute so every row has zeros in all other pivot columns.
  for (size_t i = ech.size(); i-- > 0;) {
    for (size_t j = 0; j < ech.size(); j++) {
      if (i == j) continue;
      long long f = ech[i][pivot_col[j]];
      if (f == 0) continue;
      for (int cc = 0; cc < ncols; cc++)
        ech[i][cc] = static_cast<uint8_t>((ech[i][cc] + (p - f) * ech[j][cc]) % p);
    }
  }

  std::vector<std::vector<uint8_t>> reps;
  for (size_t i = 0; i < ech.size(); i++)
    if (is_rep[i]) reps.push_back(ech[i]);
  return reps;
}

}  // namespace liecoh
