#ifndef JMULT_ANALYSIS_HPP
#define JMULT_ANALYSIS_HPP

#include <memory>
#include <vector>

#include "jmult/invariants.hpp"

namespace jmult {

/// A prime generated by a subset of the variables, as sorted indices.
struct MonomialPrime {
  std::vector<int> support;

  bool operator==(const MonomialPrime& other) const { return support == other.support; }
};

/// Minimal primes = minimal covers of the generator supports, ordered by
/// cardinality then lexicographically.
std::vector<MonomialPrime> minimalPrimes(const MonomialIdeal& I);

int height(const MonomialIdeal& I);

/// Substitutes x_t ← 1 for t outside the support; the result lives in the
/// |support|-variable ring (and may be the unit ideal).
MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p);

/// Minimal generators of the integral closure: lattice points of the Newton
/// polyhedron inside the componentwise-max box, minimalized.
MonomialIdeal integralClosureGens(const MonomialIdeal& I);

/// J·Iⁿ = Iⁿ⁺¹ for the least n ≤ nMax. A miss after nMax is inconclusive,
/// never a proof.
struct ReductionResult {
  bool reduction = false;
  int witness = -1;
  int nMaxTried = 0;
};

ReductionResult isReduction(const MonomialIdeal& J, const MonomialIdeal& I, int nMax,
                            const std::shared_ptr<PowerCache>& cache);

/// J ⊆ I_{1} iff dim ⊕ J·Iⁿ/Iⁿ⁺¹ < dim A (the prime-free criterion; this is
/// the authoritative containment test).
bool fciContains(const MonomialIdeal& I, const MonomialIdeal& J, const FitConfig& cfg,
                 const std::shared_ptr<PowerCache>& cache);

struct FciResult {
  MonomialIdeal fci;
  std::vector<Monomial> accepted;
  long candidatesTested = 0;
  Exponent degreeBound = 0;
  bool complete = true;

  FciResult() : fci(MonomialIdeal::zeroIdeal({})) {}
};

/// I_{1} as I plus every monomial of Ī \ I up to dBound that individually
/// passes the containment test. dBound < 0 selects the default
/// maxGenDegree(I) + nvars. complete=false when a monomial was accepted at
/// the bound itself (the bound may truncate). The result is post-verified:
/// fciContains(I, fci) and agreement of j₀, j₁.
FciResult firstCoefficientIdeal(const MonomialIdeal& I, Exponent dBound, const FitConfig& cfg,
                                const std::shared_ptr<PowerCache>& cache);

/// One localized j₀/j₁ comparison. `support` empty means the full ring.
struct PrimeComparison {
  std::vector<int> support;
  bool trivial = false;  // localizations coincide or are both the unit ideal
  bool equal = false;
  BigInt j0I, j0J;
  std::vector<BigInt> j1I, j1J;
  std::string note;
};

/// Diagnostic realization of the localized criterion over monomial primes:
/// compares j₀ and j₁ of I_p and J_p at the full ring and at every monomial
/// prime containing I. Whether monomial primes suffice for monomial input is
/// open; fciContains is the authoritative test.
struct ComparisonReport {
  bool verdict = false;
  std::vector<PrimeComparison> perPrime;
};

ComparisonReport compareLocalized(const MonomialIdeal& I, const MonomialIdeal& J,
                                  const FitConfig& cfg,
                                  const std::shared_ptr<PowerCache>& cache,
                                  bool allPrimes = true);

/// c_q from the table against the associativity-formula value
/// Σ_p e₀(I_p)·e(A/p) over the minimal primes of maximal dimension
/// (e(A/p) = 1: coordinate subspaces are regular).
struct CqCheck {
  int q = 0;
  BigInt fromTable;
  BigInt fromFormula;
};

CqCheck cqCrossCheck(const MonomialIdeal& I, const FitConfig& cfg,
                     const std::shared_ptr<PowerCache>& cache);

}  // namespace jmult

#endif
