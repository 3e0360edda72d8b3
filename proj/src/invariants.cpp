#include "jmult/invariants.hpp"

#include <algorithm>

namespace jmult {

CoefficientReport generalizedCoefficients(const MonomialIdeal& I, const FitConfig& cfg,
                                          const std::shared_ptr<PowerCache>& cache) {
  if (!I.isProper()) {
    throw Error(Errc::InvalidArgument, "generalized coefficients need a nonzero proper ideal");
  }
  const int d = I.nvars();
  TSource src(I, cache);
  FitReport fit = stableFit(src, TableKind::H11, d, cfg);

  CoefficientReport report;
  report.d = d;
  report.fit = fit;
  report.c.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    BigInt ck = fit.poly.coeff(k, d - k);
    if (ck < 0) {
      throw Error(Errc::Internal, "negative leading diagonal coefficient in the H11 fit");
    }
    report.c[static_cast<size_t>(k)] = ck;
  }
  report.j.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    auto& jk = report.j[static_cast<size_t>(k)];
    jk.resize(static_cast<size_t>(k) + 1);
    for (int t = 0; t <= k; ++t) jk[static_cast<size_t>(t)] = fit.poly.coeff(k - t, d - k);
  }
  report.jMult = report.c[0];
  int firstNonzero = -1;
  for (int k = 0; k <= d; ++k) {
    if (report.c[static_cast<size_t>(k)] != 0) {
      firstNonzero = k;
      break;
    }
  }
  if (firstNonzero < 0) {
    throw Error(Errc::Internal, "all-zero multiplicity sequence");
  }
  report.analyticSpread = d - firstNonzero;
  return report;
}

bool isMPrimary(const MonomialIdeal& I) {
  if (I.isZero()) return false;
  const int n = I.nvars();
  std::vector<bool> purePower(static_cast<size_t>(n), false);
  for (const Monomial& g : I.gens()) {
    int supportVar = -1;
    bool pure = true;
    for (int t = 0; t < n; ++t) {
      if (g.exponent(t) > 0) {
        if (supportVar >= 0) {
          pure = false;
          break;
        }
        supportVar = t;
      }
    }
    if (pure && supportVar >= 0) purePower[static_cast<size_t>(supportVar)] = true;
  }
  for (bool p : purePower) {
    if (!p) return false;
  }
  return true;
}

ClassicalCoeffs classicalCoefficients(const MonomialIdeal& I, const FitConfig& cfg,
                                      const std::shared_ptr<PowerCache>& cache) {
  if (!isMPrimary(I)) {
    throw Error(Errc::NotMPrimary, "classical coefficients need an m-primary ideal");
  }
  const int d = I.nvars();
  const MonomialIdeal unit = MonomialIdeal::unitIdeal(I.vars());
  // λ(A/I^{j+1}) = Σ_l b_l·C(j+l,l) with b_{d−k} = (−1)^k e_k. Standard
  // monomials stay inside the componentwise-max box, which can be deeper than
  // the default maxGenDegree-based ceiling; pass the box bound explicitly.
  auto value = [&](int j) {
    MonomialIdeal power = cache->power(I, j + 1);
    Exponent box = 0;
    for (int t = 0; t < d; ++t) {
      Exponent bt = 0;
      for (const Monomial& g : power.gens()) bt = std::max(bt, g.exponent(t));
      box += bt;
    }
    return countBetween(ScaledSum(unit), ScaledSum(power), box + 1);
  };
  Fit1D fit = stableFit1D(value, d, cfg);
  ClassicalCoeffs out;
  out.e.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    BigInt b = fit.coeffs[static_cast<size_t>(d - k)];
    out.e[static_cast<size_t>(k)] = (k % 2 == 0) ? b : -b;
  }
  out.fit = std::move(fit);
  return out;
}

DimNResult dimensionOfN(const MonomialIdeal& I, const MonomialIdeal& J, const FitConfig& cfg,
                        const std::shared_ptr<PowerCache>& cache) {
  if (I.isZero()) throw Error(Errc::InvalidArgument, "dimensionOfN requires a nonzero ideal");
  if (!J.containsIdeal(I)) throw Error(Errc::NotASubideal, "dimensionOfN requires I ⊆ J");
  NSource src(I, J, cache);
  FitReport fit = stableFit(src, TableKind::H11, I.nvars(), cfg);
  DimNResult out;
  out.fit = fit;
  if (fit.poly.isZero()) {
    out.dim = 0;
    out.nZero = true;
  } else {
    out.dim = fit.poly.totalDegree();
    out.nZero = false;
  }
  return out;
}

}  // namespace jmult
