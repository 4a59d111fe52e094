#pragma once

#include "tropkit/polyhedron.hpp"

namespace tropkit {

// -1: inside {<u,w> <= c}, +1: inside {>= c}, 0: inside the hyperplane, 2: crosses
inline int side_of_hyperplane(const Polyhedron& p, const IVec& u, const Rat& c) {
  if (p.is_empty()) return 0;
  bool pos = false, neg = false;
  for (const auto& v : p.vertices()) {
    Rat d = dot(u, v) - c;
    if (d > 0) pos = true;
    if (d < 0) neg = true;
  }
  for (const auto& r : p.rays()) {
    Int d = dot(u, r);
    if (d > 0) pos = true;
    if (d < 0) neg = true;
  }
  for (const auto& l : p.lineality()) {
    if (dot(u, l) != 0) {
      pos = true;
      neg = true;
    }
  }
  if (pos && neg) return 2;
  if (pos) return 1;
  if (neg) return -1;
  return 0;
}

// Pieces of c after slicing along every hyperplane <u,w> = h.c; only pieces of
// full dimension (relative to c) are kept. Pieces crossing no hyperplane are
// passed through untouched.
inline std::vector<Polyhedron> arrangement_pieces(const Polyhedron& c,
                                                  const std::vector<HalfSpace>& hyperplanes) {
  std::vector<Polyhedron> pieces{c};
  for (const auto& h : hyperplanes) {
    std::vector<Polyhedron> next;
    for (const auto& p : pieces) {
      if (side_of_hyperplane(p, h.u, h.c) != 2) {
        next.push_back(p);
        continue;
      }
      IVec neg(h.u.size());
      for (size_t i = 0; i < h.u.size(); ++i) neg[i] = -h.u[i];
      Polyhedron above = p.intersect_halfspace({h.u, h.c});
      Polyhedron below = p.intersect_halfspace({std::move(neg), -h.c});
      if (!above.is_empty() && above.dim() == p.dim()) next.push_back(std::move(above));
      if (!below.is_empty() && below.dim() == p.dim()) next.push_back(std::move(below));
    }
    pieces = std::move(next);
  }
  return pieces;
}

// All defining hyperplanes (affine hulls and facet hyperplanes) of the cells.
inline std::vector<HalfSpace> cell_hyperplanes(const std::vector<Polyhedron>& cells) {
  std::set<HalfSpace, HalfSpaceLess> hs;
  for (const auto& c : cells) {
    if (c.is_empty()) continue;
    for (const auto& e : c.eqs()) hs.insert(e);
    for (const auto& f : c.ineqs()) hs.insert(f);
  }
  return {hs.begin(), hs.end()};
}

// Exact covering test: is c contained in the union of the given cells?
inline bool support_contains(const std::vector<Polyhedron>& cells, const Polyhedron& c) {
  if (c.is_empty()) return true;
  for (const auto& p : arrangement_pieces(c, cell_hyperplanes(cells))) {
    Vec z = p.relint_point();
    bool inside = false;
    for (const auto& cell : cells)
      if (cell.contains(z)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

inline bool supports_equal(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b) {
  for (const auto& c : a)
    if (!support_contains(b, c)) return false;
  for (const auto& c : b)
    if (!support_contains(a, c)) return false;
  return true;
}

// cells sorted by (dimension, canonical form); deduplicated; face relation explicit
class PolyhedralComplex {
 public:
  PolyhedralComplex() = default;

  // face-closes and deduplicates, does not check the intersection axiom
  static PolyhedralComplex from_cells(size_t n, const std::vector<Polyhedron>& cells) {
    PolyhedralComplex c;
    c.n_ = n;
    std::set<Polyhedron> all;
    for (const auto& cell : cells) {
      if (cell.is_empty()) continue;
      if (cell.ambient_dim() != n) throw std::invalid_argument("complex: ambient dimension mismatch");
      for (auto& f : cell.faces()) all.insert(std::move(f));
    }
    c.cells_.assign(all.begin(), all.end());
    std::sort(c.cells_.begin(), c.cells_.end(), [](const Polyhedron& a, const Polyhedron& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return cmp(a, b) < 0;
    });
    return c;
  }

  size_t ambient_dim() const { return n_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  int dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim());
    return d;
  }

  bool is_pointed() const {
    for (const auto& c : cells_)
      if (!c.is_pointed()) return false;
    return true;
  }

  bool is_pure(int d) const {
    for (size_t i : maximal_cell_indices())
      if (cells_[i].dim() != d) return false;
    return true;
  }

  std::vector<size_t> maximal_cell_indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < cells_.size(); ++i) {
      bool maximal = true;
      for (size_t j = 0; j < cells_.size() && maximal; ++j)
        if (j != i && cells_[j].contains(cells_[i]) && cells_[j] != cells_[i]) maximal = false;
      if (maximal) out.push_back(i);
    }
    return out;
  }

  std::vector<Polyhedron> maximal_cells() const {
    std::vector<Polyhedron> out;
    for (size_t i : maximal_cell_indices()) out.push_back(cells_[i]);
    return out;
  }

  // pairs (i, j) with cells_[i] a proper closed face of cells_[j]
  std::vector<std::pair<size_t, size_t>> face_relation() const {
    std::vector<std::pair<size_t, size_t>> rel;
    for (size_t i = 0; i < cells_.size(); ++i)
      for (size_t j = 0; j < cells_.size(); ++j)
        if (i != j && cells_[j].contains(cells_[i])) rel.emplace_back(i, j);
    return rel;
  }

  std::optional<size_t> find(const Polyhedron& p) const {
    for (size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i] == p) return i;
    return std::nullopt;
  }

  bool supports_point(const Vec& x) const {
    for (const auto& c : cells_)
      if (c.contains(x)) return true;
    return false;
  }

  // complete = the support is the whole ambient space
  bool is_complete() const {
    return support_contains(cells_, Polyhedron::full_space(n_));
  }

 private:
  size_t n_ = 0;
  std::vector<Polyhedron> cells_;
};

struct ComplexValidation {
  bool ok = false;
  PolyhedralComplex complex;              // set when ok
  Polyhedron cell_a, cell_b, overlap;     // witness when !ok
};

// App-style axioms: close under faces, then every pairwise intersection must
// be empty or a common closed face.
inline ComplexValidation validate_complex(size_t n, const std::vector<Polyhedron>& cells) {
  ComplexValidation res;
  PolyhedralComplex closure = PolyhedralComplex::from_cells(n, cells);
  const auto& cs = closure.cells();
  std::map<Polyhedron, std::set<Polyhedron>> face_sets;
  for (const auto& c : cs) {
    auto fs = c.faces();
    face_sets.emplace(c, std::set<Polyhedron>(fs.begin(), fs.end()));
  }
  // top-dimensional pairs first so a witness names the offending input cells
  for (size_t a = cs.size(); a-- > 0;)
    for (size_t b = a; b-- > 0;) {
      Polyhedron inter = cs[a].intersect(cs[b]);
      if (inter.is_empty()) continue;
      if (!face_sets[cs[a]].count(inter) || !face_sets[cs[b]].count(inter)) {
        res.cell_a = cs[b];
        res.cell_b = cs[a];
        res.overlap = inter;
        return res;
      }
    }
  res.ok = true;
  res.complex = std::move(closure);
  return res;
}

// |D| = |C| and every cell of D lies in a cell of C
inline bool is_subdivision(const PolyhedralComplex& d, const PolyhedralComplex& c) {
  if (!supports_equal(d.cells(), c.cells())) return false;
  for (const auto& cd : d.cells()) {
    bool inside = false;
    for (const auto& cc : c.cells())
      if (cc.contains(cd)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

// All pairwise intersections; a subdivision of both inputs.
inline PolyhedralComplex common_refinement(const PolyhedralComplex& c1, const PolyhedralComplex& c2) {
  if (c1.ambient_dim() != c2.ambient_dim())
    throw std::invalid_argument("common_refinement: ambient dimension mismatch");
  if (!supports_equal(c1.cells(), c2.cells()))
    throw std::invalid_argument("common_refinement: supports differ");
  std::vector<Polyhedron> cells;
  for (const auto& a : c1.cells())
    for (const auto& b : c2.cells()) {
      Polyhedron i = a.intersect(b);
      if (!i.is_empty()) cells.push_back(std::move(i));
    }
  return PolyhedralComplex::from_cells(c1.ambient_dim(), cells);
}

// fan of local cones of the cells containing w
inline PolyhedralComplex local_cone(const PolyhedralComplex& c, const Vec& w) {
  std::vector<Polyhedron> cones;
  for (const auto& cell : c.cells()) {
    Polyhedron lc = cell.local_cone(w);
    if (!lc.is_empty()) cones.push_back(std::move(lc));
  }
  return PolyhedralComplex::from_cells(c.ambient_dim(), cones);
}

}  // namespace tropkit
