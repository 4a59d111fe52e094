#pragma once

#include "tropkit/rational.hpp"

#include <map>

namespace tropkit {

// Finite generalized power series over Q with rational exponents; the scalar
// model of the valued field. valuation = least exponent, +infinity for zero.
class ValuedScalar {
 public:
  ValuedScalar() = default;

  static ValuedScalar zero() { return {}; }

  // c * t^0: the trivially valued embedding of a rational constant
  static ValuedScalar constant(const Rat& c) { return monomial(Rat(0), c); }

  static ValuedScalar monomial(const Rat& gamma, const Rat& coeff) {
    ValuedScalar s;
    if (coeff != 0) s.terms_[gamma] = coeff;
    return s;
  }

  bool is_zero() const { return terms_.empty(); }

  // least exponent; nullopt encodes +infinity
  std::optional<Rat> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  // leading coefficient of t^{-v(a)} * a
  Rat residue() const {
    if (terms_.empty()) throw std::invalid_argument("residue of zero");
    return terms_.begin()->second;
  }

  bool is_trivially_valued() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  ValuedScalar operator+(const ValuedScalar& o) const {
    ValuedScalar r = *this;
    for (const auto& [g, c] : o.terms_) {
      Rat s = r.terms_[g] + c;
      if (s == 0)
        r.terms_.erase(g);
      else
        r.terms_[g] = s;
    }
    return r;
  }

  ValuedScalar operator*(const ValuedScalar& o) const {
    ValuedScalar r;
    for (const auto& [g1, c1] : terms_)
      for (const auto& [g2, c2] : o.terms_) {
        Rat g = g1 + g2;
        Rat s = r.terms_[g] + c1 * c2;
        if (s == 0)
          r.terms_.erase(g);
        else
          r.terms_[g] = s;
      }
    return r;
  }

  ValuedScalar operator-() const {
    ValuedScalar r = *this;
    for (auto& [g, c] : r.terms_) c = -c;
    return r;
  }

  const std::map<Rat, Rat>& terms() const { return terms_; }

  bool operator==(const ValuedScalar& o) const { return terms_ == o.terms_; }

 private:
  std::map<Rat, Rat> terms_;  // exponent -> nonzero coefficient
};

// Laurent polynomial over the residue field (modeled as Q).
class ResidueLaurentPolynomial {
 public:
  explicit ResidueLaurentPolynomial(size_t n) : n_(n) {}

  size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const IVec& exponent, const Rat& coeff) {
    if (exponent.size() != n_) throw std::invalid_argument("residue poly: exponent length");
    Rat s = terms_[exponent] + coeff;
    if (s == 0)
      terms_.erase(exponent);
    else
      terms_[exponent] = s;
  }

  bool is_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("is_monomial on the zero polynomial");
    return terms_.size() == 1;
  }

  const std::map<IVec, Rat, IVecLess>& terms() const { return terms_; }

  bool operator==(const ResidueLaurentPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  size_t n_;
  std::map<IVec, Rat, IVecLess> terms_;
};

// Laurent polynomial with ValuedScalar coefficients; the hypersurface input.
class ValuedLaurentPolynomial {
 public:
  explicit ValuedLaurentPolynomial(size_t n) : n_(n) {}

  size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const IVec& exponent, const ValuedScalar& coeff) {
    if (exponent.size() != n_) throw std::invalid_argument("poly: exponent length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_.emplace(exponent, coeff);
    } else {
      ValuedScalar s = it->second + coeff;
      if (s.is_zero())
        terms_.erase(it);
      else
        it->second = s;
    }
  }

  const std::map<IVec, ValuedScalar, IVecLess>& terms() const { return terms_; }

  ValuedLaurentPolynomial operator+(const ValuedLaurentPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("poly +: arity mismatch");
    ValuedLaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  ValuedLaurentPolynomial operator*(const ValuedLaurentPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("poly *: arity mismatch");
    ValuedLaurentPolynomial r(n_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        IVec e(n_);
        for (size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  bool is_trivially_valued() const {
    for (const auto& [e, c] : terms_)
      if (!c.is_trivially_valued()) return false;
    return true;
  }

  // v_omega(f) = min over terms of v(alpha_u) + <u, omega>; nullopt for f = 0
  std::optional<Rat> omega_weight(const Vec& omega) const {
    if (omega.size() != n_) throw std::invalid_argument("omega_weight: dimension mismatch");
    std::optional<Rat> best;
    for (const auto& [e, c] : terms_) {
      Rat w = *c.valuation() + dot(e, omega);
      if (!best || w < *best) best = w;
    }
    return best;
  }

  // sum of residues of the terms achieving v_omega(f)
  ResidueLaurentPolynomial initial_form(const Vec& omega) const {
    if (terms_.empty()) throw std::invalid_argument("initial_form of the zero polynomial");
    Rat vw = *omega_weight(omega);
    ResidueLaurentPolynomial r(n_);
    for (const auto& [e, c] : terms_)
      if (*c.valuation() + dot(e, omega) == vw) r.add_term(e, c.residue());
    return r;
  }

  bool operator==(const ValuedLaurentPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  size_t n_;
  std::map<IVec, ValuedScalar, IVecLess> terms_;
};

// Same exponent support, all coefficients re-read with the trivial valuation.
inline ValuedLaurentPolynomial trivialize(const ValuedLaurentPolynomial& f) {
  ValuedLaurentPolynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, ValuedScalar::constant(c.residue()));
  return r;
}

// View a residue polynomial over the trivially valued field.
inline ValuedLaurentPolynomial with_trivial_valuation(const ResidueLaurentPolynomial& g) {
  ValuedLaurentPolynomial r(g.nvars());
  for (const auto& [e, c] : g.terms()) r.add_term(e, ValuedScalar::constant(c));
  return r;
}

}  // namespace tropkit
