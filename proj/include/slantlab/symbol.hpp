#pragma once

// Harmonic polynomial symbols phi(z) + sum_{j>=1} c_j zbar^j.

#include "slantlab/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace slantlab {

/// Analytic part plus co-analytic part. The co-analytic polynomial is read in
/// zbar and never carries a constant: a zbar^0 term is folded into the
/// analytic constant on construction.
class HarmonicSymbol {
 public:
  HarmonicSymbol() = default;
  HarmonicSymbol(AnalyticPoly analytic, AnalyticPoly coanalytic = {})
      : analytic_(std::move(analytic)), coanalytic_(std::move(coanalytic)) {
    Rational c0 = coanalytic_.coeff(0);
    if (c0 != 0) {
      coanalytic_.add_term(0, -c0);
      analytic_.add_term(0, c0);
    }
  }

  /// c zbar^n.
  static HarmonicSymbol zbar_power(Degree n, const Rational& c = 1) {
    return HarmonicSymbol({}, AnalyticPoly::monomial(n, c));
  }

  /// sum_{j=0}^{N} c_j zbar^j, with c_0 landing in the analytic part.
  static HarmonicSymbol from_conjugate_coeffs(const std::vector<Rational>& c) {
    AnalyticPoly co;
    for (std::size_t j = 0; j < c.size(); ++j) co.add_term(j, c[j]);
    return HarmonicSymbol({}, std::move(co));
  }

  const AnalyticPoly& analytic() const { return analytic_; }
  const AnalyticPoly& coanalytic() const { return coanalytic_; }
  bool is_analytic() const { return coanalytic_.is_zero(); }
  bool is_zero() const { return analytic_.is_zero() && coanalytic_.is_zero(); }

  /// N, the zbar-degree; -1 when there is no co-analytic part.
  long coanalytic_degree() const { return coanalytic_.degree(); }

  HarmonicSymbol& operator+=(const HarmonicSymbol& o) {
    analytic_ += o.analytic_;
    coanalytic_ += o.coanalytic_;
    return *this;
  }
  HarmonicSymbol& operator*=(const Rational& s) {
    analytic_ *= s;
    coanalytic_ *= s;
    return *this;
  }
  friend HarmonicSymbol operator+(HarmonicSymbol a, const HarmonicSymbol& b) { return a += b; }
  friend HarmonicSymbol operator-(HarmonicSymbol a, const HarmonicSymbol& b) {
    HarmonicSymbol nb = b;
    nb *= Rational(-1);
    return a += nb;
  }
  friend HarmonicSymbol operator*(const Rational& s, HarmonicSymbol a) { return a *= s; }

  friend bool operator==(const HarmonicSymbol&, const HarmonicSymbol&) = default;

 private:
  AnalyticPoly analytic_;
  AnalyticPoly coanalytic_;
};

/// The scalar c with f = c g, if one exists. g must be nonzero.
inline std::optional<Rational> proportionality_ratio(const HarmonicSymbol& f, const HarmonicSymbol& g) {
  if (g.is_zero()) return std::nullopt;
  const auto& lead = !g.analytic().is_zero() ? g.analytic().terms().begin() : g.coanalytic().terms().begin();
  bool from_analytic = !g.analytic().is_zero();
  Rational fc = from_analytic ? f.analytic().coeff(static_cast<long>(lead->first))
                              : f.coanalytic().coeff(static_cast<long>(lead->first));
  Rational c = fc / lead->second;
  if (c * g == f) return c;
  return std::nullopt;
}

}  // namespace slantlab
