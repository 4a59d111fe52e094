#pragma once

#include <map>
#include <set>

#include "tropkit/linalg.hpp"

namespace tropkit {

// {w : <u,w> >= c}. Gamma-rational with Gamma = Q: integer normal u, rational c.
struct HalfSpace {
  IVec u;
  Rat c;
};

inline int cmp(const HalfSpace& a, const HalfSpace& b) {
  int r = cmp(a.u, b.u);
  if (r != 0) return r;
  return cmp(a.c, b.c);
}

inline bool operator==(const HalfSpace& a, const HalfSpace& b) { return cmp(a, b) == 0; }

struct HalfSpaceLess {
  bool operator()(const HalfSpace& a, const HalfSpace& b) const { return cmp(a, b) < 0; }
};

struct DDResult {
  IMat rays;       // primitive extreme rays, modulo lineality
  IMat lineality;  // primitive basis of the lineality space
};

namespace detail {

// Generators of the cone {y in R^d : row*y >= 0 for every row}.
// Double description: split off the lineality, run the incremental step on the
// pointed quotient with the rank-based adjacency test.
inline DDResult dd_cone(size_t d, const Mat& rows) {
  DDResult out;
  if (d == 0) return out;
  Mat lin = kernel(Mat(rows), d);
  for (const auto& l : lin) out.lineality.push_back(primitive(l));
  size_t k = lin.size();
  size_t q = d - k;
  if (q == 0) return out;

  // complement of the lineality spanned by standard basis vectors
  std::vector<size_t> comp;
  {
    Mat acc = lin;
    size_t r = rank(acc);
    for (size_t j = 0; j < d && comp.size() < q; ++j) {
      Vec e(d, Rat(0));
      e[j] = 1;
      acc.push_back(e);
      size_t r2 = rank(acc);
      if (r2 > r) {
        comp.push_back(j);
        r = r2;
      } else {
        acc.pop_back();
      }
    }
  }

  // constraints in quotient coordinates: b[i][j] = rows[i][comp[j]]
  Mat b;
  b.reserve(rows.size());
  for (const auto& row : rows) {
    Vec br(q);
    for (size_t j = 0; j < q; ++j) br[j] = row[comp[j]];
    b.push_back(std::move(br));
  }

  // initial simplicial cone from q independent constraints
  std::vector<size_t> base;
  {
    Mat acc;
    for (size_t i = 0; i < b.size() && base.size() < q; ++i) {
      acc.push_back(b[i]);
      if (rank(acc) == acc.size())
        base.push_back(i);
      else
        acc.pop_back();
    }
  }
  if (base.size() < q) throw std::logic_error("dd_cone: quotient cone not pointed");

  Mat b0inv;
  {
    Mat aug(q, Vec(2 * q, Rat(0)));
    for (size_t i = 0; i < q; ++i) {
      for (size_t j = 0; j < q; ++j) aug[i][j] = b[base[i]][j];
      aug[i][q + i] = 1;
    }
    rref(aug);
    b0inv.assign(q, Vec(q));
    for (size_t i = 0; i < q; ++i)
      for (size_t j = 0; j < q; ++j) b0inv[i][j] = aug[i][q + j];
  }

  std::vector<IVec> rays;
  for (size_t j = 0; j < q; ++j) {
    Vec col(q);
    for (size_t i = 0; i < q; ++i) col[i] = b0inv[i][j];
    rays.push_back(primitive(col));
  }

  std::vector<size_t> processed = base;
  std::set<size_t> in_base(base.begin(), base.end());

  auto tight_rows = [&](const IVec& r1, const IVec& r2) {
    Mat t;
    for (size_t i : processed) {
      if (dot(b[i], to_vec(r1)) == 0 && dot(b[i], to_vec(r2)) == 0) t.push_back(b[i]);
    }
    return t;
  };

  for (size_t i = 0; i < b.size(); ++i) {
    if (in_base.count(i)) continue;
    std::vector<Rat> val(rays.size());
    bool has_neg = false;
    for (size_t j = 0; j < rays.size(); ++j) {
      val[j] = dot(b[i], to_vec(rays[j]));
      if (val[j] < 0) has_neg = true;
    }
    if (!has_neg) {
      processed.push_back(i);
      continue;
    }
    std::vector<IVec> next;
    std::set<IVec, IVecLess> seen;
    auto push = [&](IVec r) {
      if (seen.insert(r).second) next.push_back(std::move(r));
    };
    for (size_t j = 0; j < rays.size(); ++j)
      if (val[j] >= 0) push(rays[j]);
    for (size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (size_t m = 0; m < rays.size(); ++m) {
        if (val[m] >= 0) continue;
        // adjacency: common tight constraints have rank q-2
        Mat t = tight_rows(rays[p], rays[m]);
        if (rank(std::move(t)) != q - 2) continue;
        Vec combo(q);
        for (size_t j = 0; j < q; ++j) combo[j] = val[p] * Rat(rays[m][j]) - val[m] * Rat(rays[p][j]);
        push(primitive(combo));
      }
    }
    rays = std::move(next);
    processed.push_back(i);
  }

  for (const auto& r : rays) {
    IVec y(d, Int(0));
    for (size_t j = 0; j < q; ++j) y[comp[j]] = r[j];
    out.rays.push_back(primitive(y));
  }
  std::sort(out.rays.begin(), out.rays.end(), IVecLess{});
  return out;
}

}  // namespace detail

// A Gamma-rational polyhedron, kept in canonical form:
//  - eqs: the affine hull, reduced integer echelon rows (<g,w> = h)
//  - ineqs: irredundant facet inequalities, normals reduced modulo the
//    equations, primitive, sorted
//  - generators: P = conv(vertices) + cone(rays) + span(lineality)
// The empty polyhedron is a sentinel. Two polyhedra are equal as point sets
// iff their canonical forms coincide.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron empty(size_t n) {
    Polyhedron p;
    p.n_ = n;
    p.empty_ = true;
    return p;
  }

  static Polyhedron full_space(size_t n) { return from_halfspaces(n, {}); }

  static Polyhedron from_halfspaces(size_t n, const std::vector<HalfSpace>& ineqs,
                                    const std::vector<HalfSpace>& eqs = {}) {
    Mat rows;
    for (const auto& h : eqs) {
      check_dim(n, h);
      if (is_zero(h.u)) {
        if (h.c != 0) return empty(n);
        continue;
      }
      Vec r = to_vec(h.u);
      r.push_back(-h.c);
      rows.push_back(r);
      rows.push_back(vec_scale(Rat(-1), r));
    }
    for (const auto& h : ineqs) {
      check_dim(n, h);
      if (is_zero(h.u)) {
        if (h.c > 0) return empty(n);
        continue;
      }
      Vec r = to_vec(h.u);
      r.push_back(-h.c);
      rows.push_back(std::move(r));
    }
    {
      Vec t(n + 1, Rat(0));
      t[n] = 1;
      rows.push_back(std::move(t));
    }
    DDResult dd = detail::dd_cone(n + 1, rows);
    Mat verts;
    IMat prays;
    for (const auto& r : dd.rays) {
      if (r[n] > 0) {
        Vec v(n);
        for (size_t j = 0; j < n; ++j) v[j] = Rat(r[j]) / Rat(r[n]);
        verts.push_back(std::move(v));
      } else {
        IVec ray(r.begin(), r.begin() + n);
        if (!is_zero(ray)) prays.push_back(primitive(ray));
      }
    }
    if (verts.empty()) return empty(n);
    IMat lin;
    for (const auto& l : dd.lineality) {
      IVec v(l.begin(), l.begin() + n);
      lin.push_back(primitive(v));  // t-component is forced to 0 by t >= 0
    }
    return from_generators(n, verts, prays, lin);
  }

  static Polyhedron from_generators(size_t n, const Mat& vertices, const IMat& rays,
                                    const IMat& lineality) {
    if (vertices.empty()) return empty(n);
    Polyhedron p;
    p.n_ = n;
    p.empty_ = false;
    p.canonicalize_h_form(vertices, rays, lineality);
    p.recompute_generators();
    return p;
  }

  size_t ambient_dim() const { return n_; }
  bool is_empty() const { return empty_; }
  int dim() const { return empty_ ? -1 : int(n_) - int(eqs_.size()); }

  const std::vector<HalfSpace>& ineqs() const { return ineqs_; }
  const std::vector<HalfSpace>& eqs() const { return eqs_; }
  const Mat& vertices() const { return vertices_; }
  const IMat& rays() const { return rays_; }
  const IMat& lineality() const { return lineality_; }

  bool is_pointed() const { return !empty_ && lineality_.empty(); }
  bool is_bounded() const { return !empty_ && rays_.empty() && lineality_.empty(); }

  // canonical forms have zero offsets exactly for cones (apex at 0)
  bool is_cone() const {
    if (empty_) return false;
    for (const auto& h : eqs_)
      if (h.c != 0) return false;
    for (const auto& h : ineqs_)
      if (h.c != 0) return false;
    return true;
  }

  bool contains(const Vec& x) const {
    if (empty_) return false;
    for (const auto& h : eqs_)
      if (dot(h.u, x) != h.c) return false;
    for (const auto& h : ineqs_)
      if (dot(h.u, x) < h.c) return false;
    return true;
  }

  // relint = equations + strict facet inequalities
  bool relint_contains(const Vec& x) const {
    if (empty_) return false;
    for (const auto& h : eqs_)
      if (dot(h.u, x) != h.c) return false;
    for (const auto& h : ineqs_)
      if (dot(h.u, x) <= h.c) return false;
    return true;
  }

  bool contains(const Polyhedron& q) const {
    if (q.empty_) return true;
    if (empty_) return false;
    for (const auto& v : q.vertices_)
      if (!contains(v)) return false;
    for (const auto& r : q.rays_) {
      for (const auto& h : eqs_)
        if (dot(h.u, to_vec(r)) != 0) return false;
      for (const auto& h : ineqs_)
        if (dot(h.u, to_vec(r)) < 0) return false;
    }
    for (const auto& l : q.lineality_) {
      for (const auto& h : eqs_)
        if (dot(h.u, to_vec(l)) != 0) return false;
      for (const auto& h : ineqs_)
        if (dot(h.u, to_vec(l)) != 0) return false;
    }
    return true;
  }

  Vec relint_point() const {
    if (empty_) throw std::invalid_argument("relint_point: empty polyhedron");
    Vec p(n_, Rat(0));
    for (const auto& v : vertices_) p = vec_add(p, v);
    p = vec_scale(Rat(1) / Rat(Int(vertices_.size())), p);
    for (const auto& r : rays_) p = vec_add(p, to_vec(r));
    return p;
  }

  Polyhedron intersect(const Polyhedron& q) const {
    if (n_ != q.n_) throw std::invalid_argument("intersect: ambient dimension mismatch");
    if (empty_ || q.empty_) return empty(n_);
    std::vector<HalfSpace> in = ineqs_, eq = eqs_;
    in.insert(in.end(), q.ineqs_.begin(), q.ineqs_.end());
    eq.insert(eq.end(), q.eqs_.begin(), q.eqs_.end());
    return from_halfspaces(n_, in, eq);
  }

  Polyhedron intersect_halfspace(const HalfSpace& h) const {
    if (empty_) return *this;
    std::vector<HalfSpace> in = ineqs_;
    in.push_back(h);
    return from_halfspaces(n_, in, eqs_);
  }

  Polyhedron intersect_hyperplane(const HalfSpace& h) const {
    if (empty_) return *this;
    std::vector<HalfSpace> eq = eqs_;
    eq.push_back(h);
    return from_halfspaces(n_, ineqs_, eq);
  }

  // rec(P): zero every offset of the canonical H-form
  Polyhedron recession_cone() const {
    if (empty_) throw std::invalid_argument("recession_cone: empty polyhedron");
    std::vector<HalfSpace> in, eq;
    for (const auto& h : ineqs_) in.push_back({h.u, Rat(0)});
    for (const auto& h : eqs_) eq.push_back({h.u, Rat(0)});
    return from_halfspaces(n_, in, eq);
  }

  // cone of directions w' with w + [0,eps)w' inside P; empty if w outside
  Polyhedron local_cone(const Vec& w) const {
    if (empty_ || !contains(w)) return empty(n_);
    std::vector<HalfSpace> in, eq;
    for (const auto& h : ineqs_)
      if (dot(h.u, w) == h.c) in.push_back({h.u, Rat(0)});
    for (const auto& h : eqs_) eq.push_back({h.u, Rat(0)});
    return from_halfspaces(n_, in, eq);
  }

  Polyhedron translate(const Vec& t) const {
    if (empty_) return *this;
    std::vector<HalfSpace> in, eq;
    for (const auto& h : ineqs_) in.push_back({h.u, h.c + dot(h.u, t)});
    for (const auto& h : eqs_) eq.push_back({h.u, h.c + dot(h.u, t)});
    return from_halfspaces(n_, in, eq);
  }

  // c(P) in R^{n+1}: closure of the cone generated by P x {1}; slice at 1 is P,
  // slice at 0 is rec(P)
  Polyhedron cone_over() const {
    if (empty_) throw std::invalid_argument("cone_over: empty polyhedron");
    std::vector<HalfSpace> in, eq;
    for (const auto& h : ineqs_) {
      IVec u = h.u;
      Int den = h.c.get_den();
      for (auto& x : u) x *= den;
      u.push_back(-h.c.get_num());
      in.push_back({std::move(u), Rat(0)});
    }
    for (const auto& h : eqs_) {
      IVec u = h.u;
      Int den = h.c.get_den();
      for (auto& x : u) x *= den;
      u.push_back(-h.c.get_num());
      eq.push_back({std::move(u), Rat(0)});
    }
    IVec s(n_ + 1, Int(0));
    s[n_] = 1;
    in.push_back({std::move(s), Rat(0)});
    return from_halfspaces(n_ + 1, in, eq);
  }

  // {w : (w, s) in P} in one dimension less
  Polyhedron slice_last(const Rat& s) const {
    if (n_ == 0) throw std::invalid_argument("slice_last: no coordinate to fix");
    if (empty_) return empty(n_ - 1);
    std::vector<HalfSpace> in, eq;
    for (const auto& h : ineqs_) {
      IVec u(h.u.begin(), h.u.end() - 1);
      in.push_back({std::move(u), h.c - Rat(h.u[n_ - 1]) * s});
    }
    for (const auto& h : eqs_) {
      IVec u(h.u.begin(), h.u.end() - 1);
      eq.push_back({std::move(u), h.c - Rat(h.u[n_ - 1]) * s});
    }
    return from_halfspaces(n_ - 1, in, eq);
  }

  // image under the integer linear map given by a (rows map to coordinates)
  Polyhedron image(const IMat& a) const {
    size_t m = a.size();
    if (!empty_ && !a.empty() && ncols(a) != n_) throw std::invalid_argument("image: shape mismatch");
    if (empty_) return empty(m);
    Mat verts;
    for (const auto& v : vertices_) verts.push_back(mat_apply(a, v));
    IMat rays, lin;
    for (const auto& r : rays_) {
      IVec ir = mat_apply(a, r);
      if (!is_zero(ir)) rays.push_back(primitive(ir));
    }
    for (const auto& l : lineality_) {
      IVec il = mat_apply(a, l);
      if (!is_zero(il)) lin.push_back(primitive(il));
    }
    return from_generators(m, verts, rays, lin);
  }

  // {x : a x in P}
  Polyhedron preimage(const IMat& a, size_t source_dim) const {
    if (!a.empty() && (a.size() != n_ || ncols(a) != source_dim))
      throw std::invalid_argument("preimage: shape mismatch");
    if (empty_) return empty(source_dim);
    IMat at = transpose(a);
    std::vector<HalfSpace> in, eq;
    for (const auto& h : ineqs_) in.push_back({mat_apply(at, h.u), h.c});
    for (const auto& h : eqs_) eq.push_back({mat_apply(at, h.u), h.c});
    return from_halfspaces(source_dim, in, eq);
  }

  std::vector<Polyhedron> facets() const {
    if (empty_) throw std::invalid_argument("facets: empty polyhedron");
    std::vector<Polyhedron> out;
    for (const auto& h : ineqs_) out.push_back(intersect_hyperplane({h.u, h.c}));
    return out;
  }

  // every closed face including P itself
  std::vector<Polyhedron> faces() const {
    if (empty_) throw std::invalid_argument("faces: empty polyhedron");
    std::map<Polyhedron, bool> seen;  // value: expanded?
    seen.emplace(*this, false);
    while (true) {
      auto it = std::find_if(seen.begin(), seen.end(), [](const auto& kv) { return !kv.second; });
      if (it == seen.end()) break;
      it->second = true;
      for (auto& f : it->first.facets()) seen.emplace(std::move(f), false);
    }
    std::vector<Polyhedron> out;
    for (const auto& kv : seen) out.push_back(kv.first);
    return out;
  }

  // saturated lattice of the linear space parallel to aff(P)
  IntegerLattice span_lattice() const {
    if (empty_) throw std::invalid_argument("span_lattice: empty polyhedron");
    Mat dirs;
    for (size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(vec_sub(vertices_[i], vertices_[0]));
    for (const auto& r : rays_) dirs.push_back(to_vec(r));
    for (const auto& l : lineality_) dirs.push_back(to_vec(l));
    return saturated_span(n_, dirs);
  }

  friend int cmp(const Polyhedron& a, const Polyhedron& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    if (a.empty_ != b.empty_) return a.empty_ ? -1 : 1;
    if (a.empty_) return 0;
    if (a.eqs_.size() != b.eqs_.size()) return a.eqs_.size() < b.eqs_.size() ? -1 : 1;
    if (a.ineqs_.size() != b.ineqs_.size()) return a.ineqs_.size() < b.ineqs_.size() ? -1 : 1;
    for (size_t i = 0; i < a.eqs_.size(); ++i) {
      int c = cmp(a.eqs_[i], b.eqs_[i]);
      if (c != 0) return c;
    }
    for (size_t i = 0; i < a.ineqs_.size(); ++i) {
      int c = cmp(a.ineqs_[i], b.ineqs_[i]);
      if (c != 0) return c;
    }
    return 0;
  }

  bool operator==(const Polyhedron& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Polyhedron& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Polyhedron& o) const { return cmp(*this, o) < 0; }

 private:
  static void check_dim(size_t n, const HalfSpace& h) {
    if (h.u.size() != n) throw std::invalid_argument("halfspace dimension mismatch");
  }

  // Canonical H-form from generators: the valid inequalities (u, d) with
  // u*v + d >= 0, u*r >= 0, u*l = 0 form a cone in R^{n+1}; its lineality
  // carries the affine hull, its extreme rays the facets.
  void canonicalize_h_form(const Mat& vertices, const IMat& rays, const IMat& lineality) {
    Mat rows;
    for (const auto& v : vertices) {
      Vec r = v;
      r.push_back(1);
      rows.push_back(std::move(r));
    }
    for (const auto& r : rays) {
      Vec x = to_vec(r);
      x.push_back(0);
      rows.push_back(std::move(x));
    }
    for (const auto& l : lineality) {
      Vec x = to_vec(l);
      x.push_back(0);
      rows.push_back(x);
      rows.push_back(vec_scale(Rat(-1), x));
    }
    DDResult dd = detail::dd_cone(n_ + 1, rows);

    // equations from the lineality of the valid cone, in reduced echelon form
    Mat eqrows;
    for (const auto& e : dd.lineality) {
      Vec row(n_ + 1);
      for (size_t j = 0; j < n_; ++j) row[j] = Rat(e[j]);
      row[n_] = -Rat(e[n_]);  // (e, f) valid means <e,w> = -f on P
      eqrows.push_back(std::move(row));
    }
    rref(eqrows);
    eqs_.clear();
    for (const auto& row : eqrows) {
      Vec normal(row.begin(), row.end() - 1);
      if (is_zero(normal)) continue;
      IVec u = primitive(normal);
      // keep the orientation rref produced (leading coefficient positive)
      Rat scale = Rat(u[lead_index(u)]) / row[lead_index(u)];
      eqs_.push_back({u, row[n_] * scale});
    }
    std::sort(eqs_.begin(), eqs_.end(), HalfSpaceLess{});

    // facets: extreme rays (u, d) with u != 0, reduced modulo the equations
    std::set<HalfSpace, HalfSpaceLess> facets;
    for (const auto& r : dd.rays) {
      Vec u(n_);
      for (size_t j = 0; j < n_; ++j) u[j] = Rat(r[j]);
      Rat c = -Rat(r[n_]);
      for (size_t i = 0; i < eqrows.size(); ++i) {
        size_t p = pivot_of(eqrows[i]);
        if (u[p] == 0) continue;
        Rat f = u[p] / eqrows[i][p];
        for (size_t j = 0; j < n_; ++j) u[j] -= f * eqrows[i][j];
        c -= f * eqrows[i][n_];
      }
      if (is_zero(u)) continue;
      IVec iu = primitive(u);
      Rat scale = Rat(iu[lead_index(iu)]) / u[lead_index(iu)];
      facets.insert({iu, c * scale});
    }
    ineqs_.assign(facets.begin(), facets.end());
  }

  static size_t lead_index(const IVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    throw std::logic_error("lead_index: zero vector");
  }

  static size_t pivot_of(const Vec& row) {
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) return i;
    throw std::logic_error("pivot_of: zero row");
  }

  // V-form from the canonical H-form via the homogenization {(x,t): t >= 0}
  void recompute_generators() {
    Mat rows;
    for (const auto& h : ineqs_) {
      Vec r = to_vec(h.u);
      r.push_back(-h.c);
      rows.push_back(std::move(r));
    }
    for (const auto& h : eqs_) {
      Vec r = to_vec(h.u);
      r.push_back(-h.c);
      rows.push_back(r);
      rows.push_back(vec_scale(Rat(-1), r));
    }
    {
      Vec t(n_ + 1, Rat(0));
      t[n_] = 1;
      rows.push_back(std::move(t));
    }
    DDResult dd = detail::dd_cone(n_ + 1, rows);
    vertices_.clear();
    rays_.clear();
    lineality_.clear();
    for (const auto& r : dd.rays) {
      if (r[n_] > 0) {
        Vec v(n_);
        for (size_t j = 0; j < n_; ++j) v[j] = Rat(r[j]) / Rat(r[n_]);
        vertices_.push_back(std::move(v));
      } else {
        IVec ray(r.begin(), r.begin() + n_);
        if (!is_zero(ray)) rays_.push_back(primitive(ray));
      }
    }
    for (const auto& l : dd.lineality) {
      IVec v(l.begin(), l.begin() + n_);
      lineality_.push_back(primitive(v));
    }
    if (vertices_.empty()) throw std::logic_error("recompute_generators: lost feasibility");
    std::sort(vertices_.begin(), vertices_.end(), VecLess{});
    std::sort(rays_.begin(), rays_.end(), IVecLess{});
  }

  size_t n_ = 0;
  bool empty_ = true;
  std::vector<HalfSpace> eqs_;
  std::vector<HalfSpace> ineqs_;
  Mat vertices_;
  IMat rays_;
  IMat lineality_;
};

struct PolyhedronLess {
  bool operator()(const Polyhedron& a, const Polyhedron& b) const { return cmp(a, b) < 0; }
};

}  // namespace tropkit
