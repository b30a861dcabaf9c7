#pragma once

// Sparse analytic polynomials sum a_n z^n with exact rational coefficients.

#include "slantlab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

namespace slantlab {

using Degree = std::size_t;

/// Finitely supported map degree -> coefficient. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class AnalyticPoly {
 public:
  using Terms = std::map<Degree, Rational>;

  AnalyticPoly() = default;
  AnalyticPoly(std::initializer_list<std::pair<const Degree, Rational>> terms) {
    for (const auto& [n, c] : terms) add_term(n, c);
  }

  static AnalyticPoly monomial(Degree n, const Rational& coeff = 1) {
    AnalyticPoly p;
    p.add_term(n, coeff);
    return p;
  }
  static AnalyticPoly constant(const Rational& c) { return monomial(0, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Highest stored degree, or -1 for the zero polynomial.
  long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first); }

  /// Coefficient of z^n; negative indices read as zero.
  Rational coeff(long n) const {
    if (n < 0) return 0;
    auto it = terms_.find(static_cast<Degree>(n));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Degree n, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AnalyticPoly& operator+=(const AnalyticPoly& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  AnalyticPoly& operator-=(const AnalyticPoly& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
  }
  AnalyticPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [n, c] : terms_) c *= s;
    return *this;
  }

  friend AnalyticPoly operator+(AnalyticPoly p, const AnalyticPoly& q) { return p += q; }
  friend AnalyticPoly operator-(AnalyticPoly p, const AnalyticPoly& q) { return p -= q; }
  friend AnalyticPoly operator-(AnalyticPoly p) { return p *= Rational(-1); }
  friend AnalyticPoly operator*(AnalyticPoly p, const Rational& s) { return p *= s; }
  friend AnalyticPoly operator*(const Rational& s, AnalyticPoly p) { return p *= s; }

  friend AnalyticPoly operator*(const AnalyticPoly& p, const AnalyticPoly& q) {
    AnalyticPoly r;
    for (const auto& [n, a] : p.terms_)
      for (const auto& [m, b] : q.terms_) r.add_term(n + m, a * b);
    return r;
  }

  friend bool operator==(const AnalyticPoly&, const AnalyticPoly&) = default;

 private:
  Terms terms_;
};

inline AnalyticPoly add_poly(const AnalyticPoly& p, const AnalyticPoly& q) { return p + q; }

/// p(z) -> p(z^2).
inline AnalyticPoly substitute_z_squared(const AnalyticPoly& p) {
  AnalyticPoly r;
  for (const auto& [n, c] : p.terms()) r.add_term(2 * n, c);
  return r;
}

/// h = psi - phi, the coefficient differences d_i = b_i - a_i.
inline AnalyticPoly diff_symbol(const AnalyticPoly& psi, const AnalyticPoly& phi) { return psi - phi; }

/// Bergman inner product with <z^m, z^n> = delta_mn / (n + 1).
inline Rational bergman_inner(const AnalyticPoly& p, const AnalyticPoly& q) {
  Rational sum = 0;
  const auto& small = p.term_count() <= q.term_count() ? p : q;
  const auto& large = &small == &p ? q : p;
  for (const auto& [n, c] : small.terms()) {
    auto it = large.terms().find(n);
    if (it != large.terms().end()) sum += c * it->second / Rational(static_cast<long>(n + 1));
  }
  return sum;
}

/// ||p||^2 = sum |a_n|^2 / (n + 1).
inline Rational bergman_norm_squared(const AnalyticPoly& p) { return bergman_inner(p, p); }

}  // namespace slantlab
