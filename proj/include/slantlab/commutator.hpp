#pragma once

// Commutator columns [B_f, B_g] z^k = B_f B_g z^k - B_g B_f z^k, exhaustive
// scans over k, and commutativity verdicts for the p-bar + phi shapes.

#include "slantlab/operators.hpp"
#include "slantlab/parallel.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slantlab {

inline AnalyticPoly commutator_column(const HarmonicSymbol& f, const HarmonicSymbol& g, Degree k) {
  AnalyticPoly zk = AnalyticPoly::monomial(k);
  AnalyticPoly fg = slant_toeplitz_apply(f, slant_toeplitz_apply(g, zk));
  AnalyticPoly gf = slant_toeplitz_apply(g, slant_toeplitz_apply(f, zk));
  return fg - gf;
}

struct Witness {
  Degree k = 0;  // input monomial z^k
  Degree s = 0;  // output degree
  Rational value;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CommutatorReport {
  HarmonicSymbol f;
  HarmonicSymbol g;
  Degree k_max = 0;
  std::optional<Witness> first_witness;  // lexicographically least (k, s)
  Rational max_abs_entry;
};

/// Columns k = 0..kMax, evaluated on `jobs` threads and reduced in k order,
/// so the report is identical to the sequential scan.
inline CommutatorReport scan_commutator(const HarmonicSymbol& f, const HarmonicSymbol& g, Degree k_max,
                                        unsigned jobs = 1) {
  std::vector<AnalyticPoly> columns(k_max + 1);
  parallel_for(k_max + 1, jobs, [&](std::size_t k) { columns[k] = commutator_column(f, g, k); });
  CommutatorReport r{f, g, k_max, std::nullopt, Rational(0)};
  for (Degree k = 0; k <= k_max; ++k) {
    for (const auto& [s, v] : columns[k].terms()) {
      if (!r.first_witness) r.first_witness = Witness{k, s, v};
      Rational mag = abs(v);
      if (mag > r.max_abs_entry) r.max_abs_entry = mag;
    }
  }
  return r;
}

/// 2 (deg phi + deg psi + 2N + 4), with the zero polynomial counted as degree 0.
inline Degree default_scan_bound(const AnalyticPoly& phi, const AnalyticPoly& psi, long N) {
  long dp = std::max(phi.degree(), 0L);
  long dq = std::max(psi.degree(), 0L);
  return static_cast<Degree>(2 * (dp + dq + 2 * std::max(N, 0L) + 4));
}

enum class VerdictKind { Commute, NonCommuteWitness, InconclusiveWithinBound };

inline const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Commute: return "Commute";
    case VerdictKind::NonCommuteWitness: return "NonCommuteWitness";
    case VerdictKind::InconclusiveWithinBound: return "InconclusiveWithinBound";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::InconclusiveWithinBound;
  CommutatorReport scan;
  std::optional<Rational> ratio;  // c with f = c g, when one exists
  std::string note;
};

/// f = pbar + phi, g = pbar + psi. pbar must be purely co-analytic with N >= 1.
inline Verdict theorem_verdict(const HarmonicSymbol& pbar, const AnalyticPoly& phi, const AnalyticPoly& psi,
                               std::optional<Degree> k_max = std::nullopt, unsigned jobs = 1) {
  if (!pbar.analytic().is_zero())
    throw std::invalid_argument("pbar must have zero analytic part (fold its constant into phi and psi)");
  long N = pbar.coanalytic_degree();
  if (N < 1) throw std::invalid_argument("pbar must have co-analytic degree N >= 1");
  Degree bound = k_max.value_or(default_scan_bound(phi, psi, N));
  Verdict v;
  v.scan = scan_commutator(pbar + HarmonicSymbol(phi), pbar + HarmonicSymbol(psi), bound, jobs);
  if (v.scan.first_witness) {
    v.kind = VerdictKind::NonCommuteWitness;
  } else if (phi == psi) {
    v.kind = VerdictKind::Commute;
  } else {
    v.kind = VerdictKind::InconclusiveWithinBound;
    v.note = "phi != psi but every column up to kMax vanished";
  }
  return v;
}

/// f = a zbar^N + phi, g = b zbar^N + psi. A clean scan is upgraded to Commute
/// only when f and g are proportional.
inline Verdict lemma_verdict(const Rational& a, const Rational& b, long N, const AnalyticPoly& phi,
                             const AnalyticPoly& psi, std::optional<Degree> k_max = std::nullopt,
                             unsigned jobs = 1) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  HarmonicSymbol f = HarmonicSymbol::zbar_power(static_cast<Degree>(N), a) + HarmonicSymbol(phi);
  HarmonicSymbol g = HarmonicSymbol::zbar_power(static_cast<Degree>(N), b) + HarmonicSymbol(psi);
  Degree bound = k_max.value_or(default_scan_bound(phi, psi, N));
  Verdict v;
  v.scan = scan_commutator(f, g, bound, jobs);
  if (v.scan.first_witness) {
    v.kind = VerdictKind::NonCommuteWitness;
    return v;
  }
  if (auto c = proportionality_ratio(f, g)) {
    v.kind = VerdictKind::Commute;
    v.ratio = *c;
  } else if (g.is_zero()) {
    v.kind = VerdictKind::Commute;
    v.note = "degenerate: g = 0, so B_g = 0 commutes with every B_f";
  } else {
    v.kind = VerdictKind::InconclusiveWithinBound;
    v.note = "every column up to kMax vanished but f is not a multiple of g";
  }
  return v;
}

}  // namespace slantlab
