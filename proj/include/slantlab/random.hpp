#pragma once

// Seeded instance generators for the randomized suites. Coefficients are
// drawn from {-3, ..., 3} \ {0}.

#include "slantlab/operators.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace slantlab {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational coeff() {
    long v = uniform(-3, 2);
    return Rational(v >= 0 ? v + 1 : v);
  }

  /// Nonzero rational p/q with p in the coefficient range and q in 1..4.
  Rational nonzero_rational() { return coeff() / Rational(uniform(1, 4)); }

  /// Degree exactly `deg` (leading coefficient nonzero), other terms present
  /// with probability 1/2.
  AnalyticPoly poly_of_degree(long deg) {
    AnalyticPoly p;
    for (long n = 0; n < deg; ++n)
      if (coin()) p.add_term(static_cast<Degree>(n), coeff());
    p.add_term(static_cast<Degree>(deg), coeff());
    return p;
  }

  /// Degree uniform in 0..max_deg.
  AnalyticPoly poly(long max_deg) { return poly_of_degree(uniform(0, max_deg)); }

  /// c_0..c_N with c_N nonzero and c_0 = 0 (constants live in phi and psi).
  std::vector<Rational> conjugate_coeffs(long N) {
    std::vector<Rational> c(static_cast<std::size_t>(N + 1));
    for (long j = 1; j < N; ++j)
      if (coin()) c[static_cast<std::size_t>(j)] = coeff();
    c[static_cast<std::size_t>(N)] = coeff();
    return c;
  }

  HarmonicSymbol symbol(long max_deg, long max_conj) {
    AnalyticPoly conj;
    long m = uniform(0, max_conj);
    for (long j = 1; j <= m; ++j)
      if (coin() || j == m) conj.add_term(static_cast<Degree>(j), coeff());
    return HarmonicSymbol(poly(max_deg), conj);
  }

  /// A word of 1..max_len primitives.
  OperatorExpr word(long max_len, long max_deg, long max_conj) {
    std::vector<Primitive> w;
    long len = uniform(1, max_len);
    for (long i = 0; i < len; ++i) {
      switch (uniform(0, 2)) {
        case 0: w.emplace_back(Slant{}); break;
        case 1: w.emplace_back(SlantAdjoint{}); break;
        default: w.emplace_back(Toeplitz{symbol(max_deg, max_conj)}); break;
      }
    }
    return OperatorExpr(std::move(w));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace slantlab
