#pragma once

// Exact action of the Bergman projection P, Toeplitz operators T_phi, the
// slant operator W, its adjoint W*, and slant Toeplitz operators B_phi = W T_phi
// on analytic polynomials.

#include "slantlab/poly.hpp"
#include "slantlab/symbol.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace slantlab {

/// P(zbar^j z^k) = ((k + 1 - j) / (k + 1)) z^(k - j) for k >= j, else 0.
inline AnalyticPoly project_monomial(Degree j, Degree k) {
  if (k < j) return {};
  return AnalyticPoly::monomial(k - j, make_rational(static_cast<long>(k + 1 - j), static_cast<long>(k + 1)));
}

/// T_sym p = P(sym * p). The co-analytic part goes through project_monomial.
inline AnalyticPoly toeplitz_apply(const HarmonicSymbol& sym, const AnalyticPoly& p) {
  AnalyticPoly r = sym.analytic() * p;
  for (const auto& [j, c] : sym.coanalytic().terms()) {
    for (const auto& [k, pk] : p.terms()) {
      if (k < j) continue;
      auto proj = project_monomial(j, k);
      const auto& [deg, factor] = *proj.terms().begin();
      r.add_term(deg, c * pk * factor);
    }
  }
  return r;
}

/// W z^(2n) = z^n, W z^(2n+1) = 0.
inline AnalyticPoly slant_apply(const AnalyticPoly& p) {
  AnalyticPoly r;
  for (const auto& [n, c] : p.terms())
    if (n % 2 == 0) r.add_term(n / 2, c);
  return r;
}

/// W* z^n = ((2n + 1) / (n + 1)) z^(2n).
inline AnalyticPoly slant_adjoint_apply(const AnalyticPoly& p) {
  AnalyticPoly r;
  for (const auto& [n, c] : p.terms())
    r.add_term(2 * n, c * make_rational(static_cast<long>(2 * n + 1), static_cast<long>(n + 1)));
  return r;
}

/// B_sym p = W T_sym p.
inline AnalyticPoly slant_toeplitz_apply(const HarmonicSymbol& sym, const AnalyticPoly& p) {
  return slant_apply(toeplitz_apply(sym, p));
}

struct Toeplitz {
  HarmonicSymbol symbol;
  friend bool operator==(const Toeplitz&, const Toeplitz&) = default;
};
struct Slant {
  friend bool operator==(const Slant&, const Slant&) = default;
};
struct SlantAdjoint {
  friend bool operator==(const SlantAdjoint&, const SlantAdjoint&) = default;
};

using Primitive = std::variant<Toeplitz, Slant, SlantAdjoint>;

/// A composition word. The last primitive acts first, so the word
/// [W, T_phi] is the operator W T_phi.
class OperatorExpr {
 public:
  OperatorExpr() = default;
  explicit OperatorExpr(std::vector<Primitive> word) : word_(std::move(word)) {}

  static OperatorExpr identity() { return {}; }
  static OperatorExpr toeplitz(HarmonicSymbol s) { return OperatorExpr({Toeplitz{std::move(s)}}); }
  static OperatorExpr slant() { return OperatorExpr({Slant{}}); }
  static OperatorExpr slant_adjoint() { return OperatorExpr({SlantAdjoint{}}); }
  static OperatorExpr slant_toeplitz(HarmonicSymbol s) { return OperatorExpr({Slant{}, Toeplitz{std::move(s)}}); }

  const std::vector<Primitive>& word() const { return word_; }
  bool empty() const { return word_.empty(); }

  /// Composition: (a * b) acts as b first, then a.
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
    std::vector<Primitive> w = a.word_;
    w.insert(w.end(), b.word_.begin(), b.word_.end());
    return OperatorExpr(std::move(w));
  }

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  std::vector<Primitive> word_;
};

inline AnalyticPoly apply_primitive(const Primitive& op, const AnalyticPoly& p) {
  struct Visitor {
    const AnalyticPoly& p;
    AnalyticPoly operator()(const Toeplitz& t) const { return toeplitz_apply(t.symbol, p); }
    AnalyticPoly operator()(const Slant&) const { return slant_apply(p); }
    AnalyticPoly operator()(const SlantAdjoint&) const { return slant_adjoint_apply(p); }
  };
  return std::visit(Visitor{p}, op);
}

inline AnalyticPoly apply_expr(const OperatorExpr& expr, AnalyticPoly p) {
  const auto& w = expr.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (p.is_zero()) break;
    p = apply_primitive(*it, p);
  }
  return p;
}

}  // namespace slantlab
