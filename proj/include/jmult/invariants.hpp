#ifndef JMULT_INVARIANTS_HPP
#define JMULT_INVARIANTS_HPP

#include <memory>
#include <vector>

#include "jmult/hilbert.hpp"

namespace jmult {

/// Everything read off the stable H11 fit of T = G_m(G_I(A)):
///   j[k]  = (a_{k,d−k}, a_{k−1,d−k}, …, a_{0,d−k}),   0 ≤ k ≤ d
///   c[i]  = a_{i,d−i}            (multiplicity sequence)
///   jMult = c[0]                 (j-multiplicity)
///   analyticSpread = d − min{k : c_k ≠ 0}
struct CoefficientReport {
  int d = 0;
  std::vector<std::vector<BigInt>> j;
  std::vector<BigInt> c;
  BigInt jMult;
  int analyticSpread = 0;
  FitReport fit;
};

CoefficientReport generalizedCoefficients(const MonomialIdeal& I, const FitConfig& cfg,
                                          const std::shared_ptr<PowerCache>& cache);

/// Classical Hilbert coefficients of an m-primary ideal, from the univariate
/// fit of λ(A/Iⁿ):
///   λ(A/Iⁿ) = e₀·C(n+d−1,d) − e₁·C(n+d−2,d−1) + … + (−1)^d·e_d  for n ≫ 0.
struct ClassicalCoeffs {
  std::vector<BigInt> e;  // e_0..e_d
  Fit1D fit;
};

bool isMPrimary(const MonomialIdeal& I);

ClassicalCoeffs classicalCoefficients(const MonomialIdeal& I, const FitConfig& cfg,
                                      const std::shared_ptr<PowerCache>& cache);

/// dim ⊕ J·Iⁿ/Iⁿ⁺¹ as the total degree of the stable H11 fit of G_m(N).
/// N = 0 (all cells vanish) is flagged and reported as dimension 0.
struct DimNResult {
  int dim = 0;
  bool nZero = false;
  FitReport fit;
};

DimNResult dimensionOfN(const MonomialIdeal& I, const MonomialIdeal& J, const FitConfig& cfg,
                        const std::shared_ptr<PowerCache>& cache);

}  // namespace jmult

#endif
