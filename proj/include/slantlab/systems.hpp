#pragma once

// The 2x2 homogeneous systems that pin odd/even coefficient pairs in the
// zbar-power proofs, and the Cauchy-matrix rank argument of the pbar proof.

#include "slantlab/identities.hpp"
#include "slantlab/matrix.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slantlab {

/// Each system subtracts consecutive members of a triple of identity
/// instances (s_i, k_i). Unknown X multiplies an s-dependent factor F(s),
/// unknown Y a k-dependent factor G(k).
enum class TwoByTwo { SingleZbarOdd, OddPower4t1, OddPower4t3, EvenPower4t, EvenPower4t2 };

inline const std::array<TwoByTwo, 5>& all_two_by_two() {
  static const std::array<TwoByTwo, 5> all = {TwoByTwo::SingleZbarOdd, TwoByTwo::OddPower4t1, TwoByTwo::OddPower4t3,
                                              TwoByTwo::EvenPower4t, TwoByTwo::EvenPower4t2};
  return all;
}

inline const char* to_string(TwoByTwo w) {
  switch (w) {
    case TwoByTwo::SingleZbarOdd: return "single-zbar-odd";
    case TwoByTwo::OddPower4t1: return "odd-power-4t+1";
    case TwoByTwo::OddPower4t3: return "odd-power-4t+3";
    case TwoByTwo::EvenPower4t: return "even-power-4t";
    case TwoByTwo::EvenPower4t2: return "even-power-4t+2";
  }
  return "?";
}

inline TwoByTwo parse_two_by_two(const std::string& s) {
  for (auto w : all_two_by_two())
    if (s == to_string(w)) return w;
  throw std::invalid_argument("unknown system '" + s + "'");
}

/// How the system is read: the matrix as typeset, the matrix the subtraction
/// step actually produces from the printed source identities, or the same
/// subtraction with the corrected s-factor (2s+1)/(2s+N+1).
enum class SystemReading { Printed, Derived, Corrected };

inline const char* to_string(SystemReading r) {
  switch (r) {
    case SystemReading::Printed: return "printed";
    case SystemReading::Derived: return "derived";
    case SystemReading::Corrected: return "corrected";
  }
  return "?";
}

struct SystemShape {
  long s0 = 0;       // first s of the triple (as an offset from t)
  long k0 = 0;       // first k of the triple (as an offset from N, or absolute)
  bool k_from_N = true;
  bool even_G = false;  // G(k) = (2k+1-N)/(2k+1) instead of (2k+2-N)/(2k+2)
  const char* x_name = "X";
  const char* y_name = "Y";
  const char* x_def = "";
  const char* y_def = "";
};

inline SystemShape system_shape(TwoByTwo w) {
  switch (w) {
    case TwoByTwo::SingleZbarOdd:
      return {1, 1, false, false, "M", "N", "a*b_(4t+3) - a_(4t+3)", "a_(2t+1) - a*b_(2t+1)"};
    case TwoByTwo::OddPower4t1:
      return {0, -1, true, false, "E", "F", "a*b_(4t+1) - a_(4t+1)",
              "a_(2t-N+1+(N-1)/2) - a*b_(2t-N+1+(N-1)/2)"};
    case TwoByTwo::OddPower4t3:
      return {1, 0, true, false, "X", "Y", "a*b_(4t+3) - a_(4t+3)",
              "a_(2t+2-N+(N-1)/2) - a*b_(2t+2-N+(N-1)/2)"};
    case TwoByTwo::EvenPower4t:
      return {0, 0, true, true, "E", "F", "a*b_(4t) - a_(4t)", "a_(2t-N+1+N/2) - a*b_(2t-N+1+N/2)"};
    case TwoByTwo::EvenPower4t2:
      return {1, 1, true, true, "X", "Y", "a*b_(4t+2) - a_(4t+2)", "a_(2t-N+1+N/2) - a*b_(2t-N+1+N/2)"};
  }
  throw std::logic_error("unknown system");
}

/// The coefficient matrix as typeset.
inline RationalMatrix printed_system_matrix(TwoByTwo w, long t, long N) {
  auto q = [](long num, long den) { return make_rational(num, den); };
  const long x = 2 * t + N + 1;
  switch (w) {
    case TwoByTwo::SingleZbarOdd:
      return {{q(2, (2 * t + 4) * (2 * t + 6)), q(1, 8)}, {q(2, (2 * t + 6) * (2 * t + 8)), q(1, 24)}};
    case TwoByTwo::OddPower4t1:
      return {{q(2, x * (x + 2)), q(4 * N, 2 * N * (2 * N + 4))},
              {q(2, (x + 2) * (x + 4)), q(4 * N, (2 * N + 4) * (2 * N + 8))}};
    case TwoByTwo::OddPower4t3:
      return {{q(2, x * (x + 2)), q(4 * N, (2 * N + 2) * (2 * N + 6))},
              {q(2, (x + 2) * (x + 4)), q(4 * N, (2 * N + 6) * (2 * N + 10))}};
    case TwoByTwo::EvenPower4t:
      return {{q(2, x * (x + 2)), q(4 * N, (2 * N + 1) * (2 * N + 5))},
              {q(2, (x + 2) * (x + 4)), q(4 * N, (2 * N + 5) * (2 * N + 9))}};
    case TwoByTwo::EvenPower4t2:
      return {{q(2, (x + 2) * (x + 4)), q(4 * N, (2 * N + 3) * (2 * N + 7))},
              {q(2, (x + 4) * (x + 6)), q(4 * N, (2 * N + 7) * (2 * N + 11))}};
  }
  throw std::logic_error("unknown system");
}

/// Row i is (F(s_{i+1}) - F(s_i), G(k_{i+1}) - G(k_i)) over the triple
/// s_i = t + s0 + i, k_i = k0 (+ N) + 2i.
inline RationalMatrix derived_system_matrix(TwoByTwo w, long t, long N, bool corrected_factor = false) {
  const SystemShape sp = system_shape(w);
  const long n_eff = w == TwoByTwo::SingleZbarOdd ? 1 : N;
  auto F = [&](long s) {
    return corrected_factor ? make_rational(2 * s + 1, 2 * s + n_eff + 1) : make_rational(2 * s + n_eff, 2 * s + n_eff + 1);
  };
  auto G = [&](long k) {
    return sp.even_G ? make_rational(2 * k + 1 - n_eff, 2 * k + 1) : make_rational(2 * k + 2 - n_eff, 2 * k + 2);
  };
  RationalMatrix m(2, 2);
  for (long i = 0; i < 2; ++i) {
    const long s = t + sp.s0 + i;
    const long k = (sp.k_from_N ? n_eff : 0) + sp.k0 + 2 * i;
    m(static_cast<std::size_t>(i), 0) = F(s + 1) - F(s);
    m(static_cast<std::size_t>(i), 1) = G(k + 2) - G(k);
  }
  return m;
}

inline RationalMatrix system_matrix(TwoByTwo w, long t, long N, SystemReading r) {
  switch (r) {
    case SystemReading::Printed: return printed_system_matrix(w, t, N);
    case SystemReading::Derived: return derived_system_matrix(w, t, N, false);
    case SystemReading::Corrected: return derived_system_matrix(w, t, N, true);
  }
  throw std::logic_error("unknown reading");
}

struct SystemReport {
  TwoByTwo which = TwoByTwo::SingleZbarOdd;
  long t = 0;
  long N = 1;
  SystemReading reading = SystemReading::Derived;
  RationalMatrix matrix;
  Rational determinant;
  bool invertible = false;
  // The unknown pair; for a nonsingular homogeneous system both are 0.
  std::string x_name, y_name, x_def, y_def;
  std::optional<std::array<Rational, 2>> solution;
};

inline SystemReport check_2x2_system(TwoByTwo w, long t, long N, SystemReading r = SystemReading::Derived) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  SystemReport rep;
  rep.which = w;
  rep.t = t;
  rep.N = N;
  rep.reading = r;
  rep.matrix = system_matrix(w, t, N, r);
  rep.determinant = determinant_2x2(rep.matrix);
  rep.invertible = rep.determinant != 0;
  const SystemShape sp = system_shape(w);
  rep.x_name = sp.x_name;
  rep.y_name = sp.y_name;
  rep.x_def = sp.x_def;
  rep.y_def = sp.y_def;
  if (rep.invertible) rep.solution = std::array<Rational, 2>{Rational(0), Rational(0)};
  return rep;
}

// ---------------------------------------------------------------------------
// Rank argument for the pbar proof.

/// Row coefficient of c_j d_(2j) after the weighted second difference, in
/// closed form: 8j(2j+1) / ((2t+j+1)(2t+j+3)(2t+j+5)).
inline Rational rank_row_coefficient(long t, long j) {
  const long x = 2 * t + j + 1;
  return make_rational(8 * j * (2 * j + 1), x * (x + 2) * (x + 4));
}

/// Odd-input analogue, coefficient of c_j d_(2j-1): 16 j^2 / (same cubic).
inline Rational odd_rank_row_coefficient(long t, long j) {
  const long x = 2 * t + j + 1;
  return make_rational(16 * j * j, x * (x + 2) * (x + 4));
}

/// The same coefficient re-derived by evaluating the even-input pbar
/// identity at (s, k) = (t', 2t') for t' = t, t+1, t+2 with c = e_j,
/// phi = 0, psi = z^(2j), and forming (4t+9) D2 - (4t+1) D1 of the left side.
inline Rational rank_row_by_subtraction(long N, long t, long j, Reading reading = Reading::Printed) {
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  c[static_cast<std::size_t>(j)] = 1;
  const AnalyticPoly psi = AnalyticPoly::monomial(static_cast<Degree>(2 * j));
  auto A = [&](long tp) { return eval_identity_pbar(c, {}, psi, tp, 2 * tp, Parity::EvenInput, reading).lhs.total; };
  const Rational a0 = A(t), a1 = A(t + 1), a2 = A(t + 2);
  return Rational(4 * t + 9) * (a2 - a1) - Rational(4 * t + 1) * (a1 - a0);
}

/// Odd-input version: psi = z^(2j-1) and weights (4t+10), (4t+2).
inline Rational odd_rank_row_by_subtraction(long N, long t, long j, Reading reading = Reading::Corrected) {
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  c[static_cast<std::size_t>(j)] = 1;
  const AnalyticPoly psi = AnalyticPoly::monomial(static_cast<Degree>(2 * j - 1));
  auto C = [&](long tp) { return eval_identity_pbar(c, {}, psi, tp, 2 * tp, Parity::OddInput, reading).lhs.total; };
  const Rational c0 = C(t), c1 = C(t + 1), c2 = C(t + 2);
  return Rational(4 * t + 10) * (c2 - c1) - Rational(4 * t + 2) * (c1 - c0);
}

struct RankReport {
  long N = 1;
  RationalMatrix system;  // (N+4) x N, rows t = N..2N+3, entries 1/(x(x+2)(x+4))
  RationalMatrix A;       // (N+4) x (N+4), A(r, c) = 1/(2t + c + 2)
  RationalMatrix B;       // (N+4) x N, columns 1/8, 0, -1/4, 0, 1/8
  bool factorization_holds = false;
  std::size_t rank_A = 0;
  std::size_t rank_B = 0;
  std::size_t rank_AB = 0;
  std::size_t rank_system = 0;
  bool rank_inequality_holds = false;  // r(AB) >= r(A) + r(B) - (N+4)
  bool odd_family_column_scaled = false;  // odd-row matrix = system * diag
  bool odd_family_identical = false;      // literal equality with the even family
  std::size_t rank_odd = 0;
};

inline RankReport hilbert_rank_argument(long N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const std::size_t rows = static_cast<std::size_t>(N + 4), cols = static_cast<std::size_t>(N);
  RankReport r;
  r.N = N;
  r.system = RationalMatrix(rows, cols);
  r.A = RationalMatrix(rows, rows);
  r.B = RationalMatrix(rows, cols);
  RationalMatrix even(rows, cols), odd(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const long t = N + static_cast<long>(i);
    for (std::size_t jj = 0; jj < cols; ++jj) {
      const long j = static_cast<long>(jj) + 1;
      const long x = 2 * t + j + 1;
      r.system(i, jj) = make_rational(1, x * (x + 2) * (x + 4));
      even(i, jj) = rank_row_coefficient(t, j);
      odd(i, jj) = odd_rank_row_coefficient(t, j);
    }
    for (std::size_t c = 0; c < rows; ++c) r.A(i, c) = make_rational(1, 2 * t + static_cast<long>(c) + 2);
  }
  for (std::size_t jj = 0; jj < cols; ++jj) {
    r.B(jj, jj) = make_rational(1, 8);
    r.B(jj + 2, jj) = make_rational(-1, 4);
    r.B(jj + 4, jj) = make_rational(1, 8);
  }
  r.factorization_holds = r.A * r.B == r.system;
  r.rank_A = rank_bareiss(r.A);
  r.rank_B = rank_bareiss(r.B);
  r.rank_AB = rank_bareiss(r.A * r.B);
  r.rank_system = rank_bareiss(r.system);
  r.rank_inequality_holds = r.rank_AB + rows >= r.rank_A + r.rank_B;
  r.rank_odd = rank_bareiss(odd);
  r.odd_family_identical = odd == even;
  bool scaled = true;
  for (std::size_t jj = 0; jj < cols && scaled; ++jj) {
    const Rational ratio = odd(0, jj) / even(0, jj);
    for (std::size_t i = 0; i < rows; ++i)
      if (odd(i, jj) != ratio * even(i, jj)) scaled = false;
  }
  r.odd_family_column_scaled = scaled;
  return r;
}

}  // namespace slantlab
