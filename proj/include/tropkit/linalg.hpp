#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <variant>

#include "tropkit/rational.hpp"

namespace tropkit {

using Mat = std::vector<Vec>;    // rational matrix, row major
using IMat = std::vector<IVec>;  // integer matrix, row major

inline Mat to_mat(const IMat& a) {
  Mat r;
  r.reserve(a.size());
  for (const auto& row : a) r.push_back(to_vec(row));
  return r;
}

inline size_t ncols(const Mat& a) { return a.empty() ? 0 : a[0].size(); }
inline size_t ncols(const IMat& a) { return a.empty() ? 0 : a[0].size(); }

inline IMat identity_imat(size_t n) {
  IMat r(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

inline Vec mat_apply(const IMat& a, const Vec& x) {
  Vec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

inline IVec mat_apply(const IMat& a, const IVec& x) {
  IVec r(a.size(), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

inline IMat transpose(const IMat& a) {
  IMat r(ncols(a), IVec(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

// In-place reduced row echelon form. Returns pivot column per produced row.
inline std::vector<size_t> rref(Mat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = ncols(a);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    Rat inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);  // drop zero rows
  return pivots;
}

inline size_t rank(Mat a) { return rref(a).size(); }

inline size_t rank(const IMat& a) { return rank(to_mat(a)); }

// Basis of {x : a x = 0}; cols must be passed when a may have no rows.
inline Mat kernel(Mat a, size_t cols) {
  if (!a.empty() && ncols(a) != cols) throw std::invalid_argument("kernel: column mismatch");
  std::vector<size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Mat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][c];
    basis.push_back(v);
  }
  return basis;
}

inline Mat kernel(const Mat& a) {
  if (a.empty()) throw std::invalid_argument("kernel: pass the column count for empty matrices");
  return kernel(a, ncols(a));
}

// One solution of a x = b, if any.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  size_t cols = ncols(a);
  Mat aug = a;
  for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  std::vector<size_t> pivots = rref(aug);
  Vec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;  // row (0..0|1)
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

inline Rat det(Mat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (ncols(a) != n) throw std::invalid_argument("det: matrix not square");
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t sel = n;
    for (size_t i = c; i < n; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[c], a[sel]);
      d = -d;
    }
    d *= a[c][c];
    Rat inv = a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

inline Int det(const IMat& a) {
  Rat d = det(to_mat(a));
  return d.get_num();
}

inline Int content(const IVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

// Unique integer vector with coprime entries on the ray R+ * v.
inline IVec primitive(const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive: zero vector");
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(den);
    w[i] = s.get_num();
  }
  Int g = content(w);
  for (auto& x : w) x /= g;
  return w;
}

inline IVec primitive(const IVec& v) { return primitive(to_vec(v)); }

struct SmithResult {
  IMat u, d, v;  // u*a*v = d, u and v unimodular, d diagonal with d_i | d_{i+1}
};

inline SmithResult finalize_snf(SmithResult res);

// Smith normal form by pivoting on the smallest nonzero entry.
inline SmithResult smith_normal_form(const IMat& a) {
  size_t m = a.size(), n = ncols(a);
  SmithResult res{identity_imat(m), a, identity_imat(n)};
  IMat& d = res.d;
  auto row_sub = [&](size_t i, size_t k, const Int& q) {  // row_i -= q*row_k
    for (size_t j = 0; j < n; ++j) d[i][j] -= q * d[k][j];
    for (size_t j = 0; j < m; ++j) res.u[i][j] -= q * res.u[k][j];
  };
  auto col_sub = [&](size_t j, size_t k, const Int& q) {  // col_j -= q*col_k
    for (size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][k];
    for (size_t i = 0; i < n; ++i) res.v[i][j] -= q * res.v[i][k];
  };
  auto row_swap = [&](size_t i, size_t k) {
    std::swap(d[i], d[k]);
    std::swap(res.u[i], res.u[k]);
  };
  auto col_swap = [&](size_t j, size_t k) {
    for (size_t i = 0; i < m; ++i) std::swap(d[i][j], d[i][k]);
    for (size_t i = 0; i < n; ++i) std::swap(res.v[i][j], res.v[i][k]);
  };

  for (size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest nonzero |entry| in the trailing block
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (pi == m || ::cmp(abs(d[i][j]), abs(d[pi][pj])) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) return finalize_snf(res);
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);

      bool clean = true;
      for (size_t i = t + 1; i < m; ++i)
        if (d[i][t] != 0) {
          Int q = d[i][t] / d[t][t];  // truncated division keeps remainders small
          row_sub(i, t, q);
          if (d[i][t] != 0) clean = false;
        }
      for (size_t j = t + 1; j < n; ++j)
        if (d[t][j] != 0) {
          Int q = d[t][j] / d[t][t];
          col_sub(j, t, q);
          if (d[t][j] != 0) clean = false;
        }
      if (!clean) continue;

      // pivot must divide the rest of the block
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n && divides; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_sub(t, i, Int(-1));  // pull row i into the pivot row
            divides = false;
          }
      if (divides) break;
    }
  }
  return finalize_snf(res);
}

inline SmithResult finalize_snf(SmithResult res) {
  size_t m = res.d.size(), n = ncols(res.d);
  for (size_t t = 0; t < std::min(m, n); ++t)
    if (res.d[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) res.d[t][j] = -res.d[t][j];
      for (size_t j = 0; j < m; ++j) res.u[t][j] = -res.u[t][j];
    }
  return res;
}

// Canonical (row-style Hermite) basis of the lattice spanned by the rows:
// echelon shape, positive pivots, entries above a pivot reduced mod the pivot.
inline IMat hnf(IMat a) {
  size_t m = a.size();
  if (m == 0) return a;
  size_t n = ncols(a);
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      size_t sel = m;
      for (size_t i = r; i < m; ++i)
        if (a[i][c] != 0 && (sel == m || ::cmp(abs(a[i][c]), abs(a[sel][c])) < 0)) sel = i;
      if (sel == m) break;  // column clear
      if (sel != r) std::swap(a[sel], a[r]);
      bool clear = true;
      for (size_t i = r + 1; i < m; ++i)
        if (a[i][c] != 0) {
          Int q = a[i][c] / a[r][c];
          for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
          if (a[i][c] != 0) clear = false;
        }
      if (clear) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (size_t j = 0; j < n; ++j) a[r][j] = -a[r][j];
    for (size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

// Sublattice of Z^ambient_rank given by an explicit basis (rows, Q-independent).
struct IntegerLattice {
  size_t ambient_rank = 0;
  IMat basis;  // full row rank
  bool saturated_flag = false;

  size_t rank() const { return basis.size(); }
};

inline IntegerLattice make_lattice(size_t ambient_rank, IMat basis) {
  for (const auto& row : basis)
    if (row.size() != ambient_rank) throw std::invalid_argument("make_lattice: bad row length");
  if (rank(basis) != basis.size()) throw std::invalid_argument("make_lattice: basis not independent");
  return IntegerLattice{ambient_rank, hnf(std::move(basis)), false};
}

// Is v in the lattice spanned by rows of basis (integrally)?
inline bool lattice_contains(const IMat& basis, const IVec& v) {
  Mat bt(v.size(), Vec(basis.size(), Rat(0)));  // transpose, solve x*basis = v
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) bt[j][i] = Rat(basis[i][j]);
  auto x = solve(bt, to_vec(v));
  if (!x) return false;
  for (const auto& c : *x)
    if (c.get_den() != 1) return false;
  return true;
}

// Exact inverse of a unimodular integer matrix.
inline IMat inverse_unimodular(const IMat& v) {
  size_t n = v.size();
  Mat aug(n, Vec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(v[i][j]);
    aug[i][n + i] = 1;
  }
  rref(aug);
  IMat inv(n, IVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      assert(aug[i][n + j].get_den() == 1);
      inv[i][j] = aug[i][n + j].get_num();
    }
  return inv;
}

// Z^n intersected with the Q-span of L; idempotent. With basis = U^-1 D V^-1
// from the SNF, the saturation is spanned by the first rank rows of V^-1.
inline IntegerLattice saturate(const IntegerLattice& lat) {
  size_t r = lat.rank();
  if (r == 0) return IntegerLattice{lat.ambient_rank, {}, true};
  SmithResult snf = smith_normal_form(lat.basis);
  IMat vinv = inverse_unimodular(snf.v);
  IMat sat(vinv.begin(), vinv.begin() + r);
  return IntegerLattice{lat.ambient_rank, hnf(std::move(sat)), true};
}

// Saturated lattice spanned by a set of rational directions.
inline IntegerLattice saturated_span(size_t ambient, const Mat& directions) {
  Mat m = directions;
  std::vector<size_t> piv = rref(m);
  IMat basis;
  for (const auto& row : m) basis.push_back(primitive(row));
  if (basis.empty()) return IntegerLattice{ambient, {}, true};
  return saturate(make_lattice(ambient, basis));
}

struct LatticeIndexResult {
  bool contained = false;
  bool finite = false;
  Int index = 0;     // |ambient/sub| when finite
  IVec witness;      // a basis vector of sub outside ambient, when !contained
};

// [ambient : sub]; infinity when rank drops, witness when sub is not inside ambient.
inline LatticeIndexResult lattice_index(const IntegerLattice& sub, const IntegerLattice& ambient) {
  LatticeIndexResult res;
  if (sub.ambient_rank != ambient.ambient_rank)
    throw std::invalid_argument("lattice_index: ambient rank mismatch");
  Mat coords;  // each sub basis vector expressed in ambient basis
  for (const auto& s : sub.basis) {
    Mat bt(sub.ambient_rank, Vec(ambient.basis.size(), Rat(0)));
    for (size_t i = 0; i < ambient.basis.size(); ++i)
      for (size_t j = 0; j < sub.ambient_rank; ++j) bt[j][i] = Rat(ambient.basis[i][j]);
    auto x = solve(bt, to_vec(s));
    bool ok = x.has_value();
    if (ok)
      for (const auto& c : *x)
        if (c.get_den() != 1) ok = false;
    if (!ok) {
      res.witness = s;
      return res;
    }
    coords.push_back(*x);
  }
  res.contained = true;
  if (sub.rank() < ambient.rank()) return res;  // infinite index
  res.finite = true;
  Rat d = det(coords);
  res.index = abs(d.get_num());
  return res;
}

// Returns w in N_sigma with N_sigma = N_nu + Z*w, i.e. a representative of a
// generator of the rank-1 quotient N_sigma / N_nu. Requires rank(sigma) =
// rank(nu) + 1 and nu saturated (as it is for lattices of polyhedral spans).
inline IVec quotient_generator(const IntegerLattice& nu, const IntegerLattice& sigma) {
  if (sigma.rank() != nu.rank() + 1)
    throw std::invalid_argument("quotient_generator: rank mismatch");
  size_t r = nu.rank();
  if (r == 0) return sigma.basis[0];
  // nu's basis in sigma coordinates: an r x (r+1) integer matrix A with
  // saturated row span, so A = U^-1 (I_r | 0) V^-1 and the last row of V^-1
  // descends to a generator of Z^{r+1} / rowspan(A).
  IMat a;
  for (const auto& v : nu.basis) {
    Mat bt(sigma.ambient_rank, Vec(sigma.basis.size(), Rat(0)));
    for (size_t i = 0; i < sigma.basis.size(); ++i)
      for (size_t j = 0; j < sigma.ambient_rank; ++j) bt[j][i] = Rat(sigma.basis[i][j]);
    auto x = solve(bt, to_vec(v));
    if (!x) throw std::invalid_argument("quotient_generator: nu not inside sigma");
    IVec row(x->size());
    for (size_t i = 0; i < x->size(); ++i) {
      if ((*x)[i].get_den() != 1) throw std::invalid_argument("quotient_generator: nu not a sublattice");
      row[i] = (*x)[i].get_num();
    }
    a.push_back(std::move(row));
  }
  SmithResult snf = smith_normal_form(a);
  IMat vinv = inverse_unimodular(snf.v);
  IVec w(sigma.ambient_rank, Int(0));
  for (size_t i = 0; i < sigma.basis.size(); ++i)
    for (size_t k = 0; k < sigma.ambient_rank; ++k) w[k] += vinv[r][i] * sigma.basis[i][k];
  return w;
}

}  // namespace tropkit
