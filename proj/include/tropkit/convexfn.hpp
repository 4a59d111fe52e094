#pragma once

#include "tropkit/complex.hpp"

namespace tropkit {

// Convex piecewise-affine function with nonempty polyhedral epigraph, stored as
// that epigraph in R^{n+1} (last coordinate is the value axis). Pieces, domain
// and the coherent complex are all derived views.
class ProperPolyhedralFunction {
 public:
  static ProperPolyhedralFunction from_epigraph(Polyhedron epi) {
    if (epi.is_empty()) throw std::invalid_argument("proper polyhedral function: empty epigraph");
    size_t n = epi.ambient_dim() - 1;
    IVec up(n + 1, Int(0));
    up[n] = 1;
    Polyhedron rec = epi.recession_cone();
    if (!rec.contains(to_vec(up))) throw std::invalid_argument("epigraph is not upward closed");
    IVec down(n + 1, Int(0));
    down[n] = -1;
    if (rec.contains(to_vec(down))) throw std::invalid_argument("function is -infinity somewhere");
    ProperPolyhedralFunction f;
    f.n_ = n;
    f.epi_ = std::move(epi);
    return f;
  }

  // max of the given affine forms <peg,w> + c restricted to the domain
  static ProperPolyhedralFunction from_affine_pieces(const Polyhedron& domain,
                                                     const std::vector<std::pair<Vec, Rat>>& affines) {
    if (domain.is_empty() || affines.empty())
      throw std::invalid_argument("from_affine_pieces: empty domain or no pieces");
    size_t n = domain.ambient_dim();
    std::vector<HalfSpace> in, eq;
    for (const auto& h : domain.ineqs()) {
      IVec u = h.u;
      u.push_back(0);
      in.push_back({std::move(u), h.c});
    }
    for (const auto& h : domain.eqs()) {
      IVec u = h.u;
      u.push_back(0);
      eq.push_back({std::move(u), h.c});
    }
    for (const auto& [peg, c] : affines) {
      // s >= c + <peg,w>  <=>  <-peg,w> + s >= c, scaled integral
      Vec row(n + 1);
      for (size_t i = 0; i < n; ++i) row[i] = -peg[i];
      row[n] = 1;
      Int den = 1;
      for (const auto& x : row) den = lcm(den, x.get_den());
      den = lcm(den, c.get_den());
      IVec u(n + 1);
      for (size_t i = 0; i <= n; ++i) {
        Rat s = row[i] * Rat(den);
        u[i] = s.get_num();
      }
      in.push_back({std::move(u), c * Rat(den)});
    }
    return from_epigraph(Polyhedron::from_halfspaces(n + 1, in, eq));
  }

  static ProperPolyhedralFunction indicator(const Polyhedron& domain) {
    return from_affine_pieces(domain, {{Vec(domain.ambient_dim(), Rat(0)), Rat(0)}});
  }

  size_t ambient_dim() const { return n_; }
  const Polyhedron& epigraph() const { return epi_; }

  Polyhedron domain() const {
    IMat proj(n_, IVec(n_ + 1, Int(0)));
    for (size_t i = 0; i < n_; ++i) proj[i][i] = 1;
    return epi_.image(proj);
  }

  // nullopt encodes +infinity
  std::optional<Rat> value(const Vec& w) const {
    if (w.size() != n_) throw std::invalid_argument("value: dimension mismatch");
    bool bounded_below = false;
    Rat best = 0;
    for (const auto& h : epi_.ineqs()) {
      Rat b(h.u[n_]);
      Rat lhs = 0;
      for (size_t i = 0; i < n_; ++i) lhs += Rat(h.u[i]) * w[i];
      if (b == 0) {
        if (lhs < h.c) return std::nullopt;
      } else {
        Rat bound = (h.c - lhs) / b;  // b > 0 for an upward-closed epigraph
        if (!bounded_below || bound > best) best = bound;
        bounded_below = true;
      }
    }
    for (const auto& h : epi_.eqs()) {
      if (h.u[n_] != 0) throw std::logic_error("value: epigraph with sloped equation");
      Rat lhs = 0;
      for (size_t i = 0; i < n_; ++i) lhs += Rat(h.u[i]) * w[i];
      if (lhs != h.c) return std::nullopt;
    }
    if (!bounded_below) throw std::logic_error("value: epigraph unbounded below");
    return best;
  }

  // f*(u) = sup { <u,w> - f(w) }; epi(f*) read off the generators of epi(f)
  ProperPolyhedralFunction conjugate() const {
    std::vector<HalfSpace> in, eq;
    for (const auto& v : epi_.vertices()) {
      // t >= <u, v'> - s_v   <=>   <-v', u> + t >= -s_v, cleared to integers
      Vec row(n_ + 1);
      for (size_t i = 0; i < n_; ++i) row[i] = -v[i];
      row[n_] = 1;
      Int den = 1;
      for (const auto& x : row) den = lcm(den, x.get_den());
      den = lcm(den, v[n_].get_den());
      IVec u(n_ + 1);
      for (size_t i = 0; i <= n_; ++i) {
        Rat s = row[i] * Rat(den);
        u[i] = s.get_num();
      }
      in.push_back({std::move(u), -v[n_] * Rat(den)});
    }
    for (const auto& r : epi_.rays()) {
      IVec u(n_ + 1, Int(0));
      for (size_t i = 0; i < n_; ++i) u[i] = -r[i];
      in.push_back({std::move(u), Rat(-r[n_])});
    }
    for (const auto& l : epi_.lineality()) {
      IVec u(n_ + 1, Int(0));
      for (size_t i = 0; i < n_; ++i) u[i] = l[i];
      eq.push_back({std::move(u), Rat(l[n_])});
    }
    return from_epigraph(Polyhedron::from_halfspaces(n_ + 1, in, eq));
  }

  // projections of the epigraph faces lying in the graph
  PolyhedralComplex coherent_complex() const {
    IMat proj(n_, IVec(n_ + 1, Int(0)));
    for (size_t i = 0; i < n_; ++i) proj[i][i] = 1;
    std::vector<Polyhedron> cells;
    for (const auto& face : epi_.faces()) {
      Vec p = face.relint_point();
      Vec w(p.begin(), p.end() - 1);
      if (*value(w) != p[n_]) continue;
      cells.push_back(face.image(proj));
    }
    return PolyhedralComplex::from_cells(n_, cells);
  }

  struct Piece {
    Polyhedron cell;
    Vec peg;
    Rat constant;
  };

  // maximal linearity domains with their affine data f = constant + <peg, w>
  std::vector<Piece> pieces() const {
    IMat proj(n_, IVec(n_ + 1, Int(0)));
    for (size_t i = 0; i < n_; ++i) proj[i][i] = 1;
    std::vector<Piece> out;
    for (const auto& h : epi_.ineqs()) {
      if (h.u[n_] == 0) continue;
      Rat b(h.u[n_]);
      Piece p;
      p.peg.resize(n_);
      for (size_t i = 0; i < n_; ++i) p.peg[i] = -Rat(h.u[i]) / b;
      p.constant = h.c / b;
      p.cell = epi_.intersect_hyperplane({h.u, h.c}).image(proj);
      out.push_back(std::move(p));
    }
    return out;
  }

  bool operator==(const ProperPolyhedralFunction& o) const { return epi_ == o.epi_; }

 private:
  size_t n_ = 0;
  Polyhedron epi_;
};

struct DualPair {
  Polyhedron cell;  // sigma in the coherent complex of f
  Polyhedron dual;  // sigma^f in the coherent complex of f*
};

struct FunctionDuality {
  PolyhedralComplex primal;
  PolyhedralComplex dual;
  std::vector<DualPair> pairing;
};

// The order-reversing bijection sigma -> sigma^f with dim + dim = n.
inline FunctionDuality dual_complex_of_function(const ProperPolyhedralFunction& f) {
  FunctionDuality out;
  ProperPolyhedralFunction g = f.conjugate();
  out.primal = f.coherent_complex();
  out.dual = g.coherent_complex();
  size_t n = f.ambient_dim();
  IMat proj(n, IVec(n + 1, Int(0)));
  for (size_t i = 0; i < n; ++i) proj[i][i] = 1;
  for (const auto& sigma : out.primal.cells()) {
    Vec w0 = sigma.relint_point();
    Rat c0 = *f.value(w0);
    // sigma^f = face of epi(f*) where t = <u,w0> - f(w0), projected to u-space
    Int den = c0.get_den();
    for (size_t i = 0; i < n; ++i) den = lcm(den, w0[i].get_den());
    IVec normal(n + 1);
    for (size_t i = 0; i < n; ++i) {
      Rat s = -w0[i] * Rat(den);
      normal[i] = s.get_num();
    }
    normal[n] = den;
    HalfSpace cut{std::move(normal), -c0 * Rat(den)};
    Polyhedron dual_cell = g.epigraph().intersect_hyperplane(cut).image(proj);
    out.pairing.push_back({sigma, std::move(dual_cell)});
  }
  return out;
}

}  // namespace tropkit
