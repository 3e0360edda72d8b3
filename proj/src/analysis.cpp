#include "jmult/analysis.hpp"

#include <algorithm>

#include "jmult/parallel.hpp"
#include "jmult/ratlp.hpp"

namespace jmult {

std::vector<MonomialPrime> minimalPrimes(const MonomialIdeal& I) {
  if (!I.isProper()) {
    throw Error(Errc::InvalidArgument, "minimal primes need a nonzero proper ideal");
  }
  const int n = I.nvars();
  if (n > 20) throw Error(Errc::InvalidArgument, "too many variables for prime enumeration");
  std::vector<unsigned> supports;
  supports.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) {
    unsigned mask = 0;
    for (int t = 0; t < n; ++t) {
      if (g.exponent(t) > 0) mask |= 1u << t;
    }
    supports.push_back(mask);
  }
  std::vector<unsigned> covers;
  for (unsigned S = 1; S < (1u << n); ++S) {
    bool covering = true;
    for (unsigned mask : supports) {
      if ((mask & S) == 0) {
        covering = false;
        break;
      }
    }
    if (covering) covers.push_back(S);
  }
  std::vector<unsigned> minimal;
  for (unsigned S : covers) {
    bool isMin = true;
    for (unsigned T : covers) {
      if (T != S && (T & S) == T) {
        isMin = false;
        break;
      }
    }
    if (isMin) minimal.push_back(S);
  }
  std::vector<MonomialPrime> out;
  out.reserve(minimal.size());
  for (unsigned S : minimal) {
    MonomialPrime p;
    for (int t = 0; t < n; ++t) {
      if (S & (1u << t)) p.support.push_back(t);
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const MonomialPrime& a, const MonomialPrime& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return a.support < b.support;
  });
  return out;
}

int height(const MonomialIdeal& I) {
  std::vector<MonomialPrime> primes = minimalPrimes(I);
  size_t h = static_cast<size_t>(I.nvars());
  for (const MonomialPrime& p : primes) h = std::min(h, p.support.size());
  return static_cast<int>(h);
}

MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p) {
  if (p.support.empty()) throw Error(Errc::InvalidArgument, "empty prime support");
  const int n = I.nvars();
  for (int t : p.support) {
    if (t < 0 || t >= n) throw Error(Errc::InvalidArgument, "prime support out of range");
  }
  std::vector<std::string> vars;
  vars.reserve(p.support.size());
  for (int t : p.support) vars.push_back(I.vars()[static_cast<size_t>(t)]);
  if (I.isZero()) return MonomialIdeal::zeroIdeal(std::move(vars));
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) {
    std::vector<Exponent> e;
    e.reserve(p.support.size());
    for (int t : p.support) e.push_back(g.exponent(t));
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal integralClosureGens(const MonomialIdeal& I) {
  if (I.isZero()) throw Error(Errc::InvalidArgument, "integral closure needs a nonzero ideal");
  if (I.isUnit()) return I;
  const int n = I.nvars();
  std::vector<std::vector<Exponent>> points;
  points.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) points.push_back(g.exponents());
  std::vector<Exponent> box(static_cast<size_t>(n), 0);
  for (const auto& p : points) {
    for (int t = 0; t < n; ++t) box[static_cast<size_t>(t)] = std::max(box[static_cast<size_t>(t)], p[static_cast<size_t>(t)]);
  }
  std::vector<Monomial> found;
  std::vector<Exponent> v(static_cast<size_t>(n), 0);
  // Walk the box ∏[0, B_t]; minimal generators of the closure cannot leave it.
  std::function<void(int)> walk = [&](int t) {
    if (t == n) {
      if (inNewtonPolyhedron(v, points)) found.emplace_back(v);
      return;
    }
    for (Exponent e = 0; e <= box[static_cast<size_t>(t)]; ++e) {
      v[static_cast<size_t>(t)] = e;
      walk(t + 1);
    }
  };
  walk(0);
  return MonomialIdeal(I.vars(), std::move(found));
}

ReductionResult isReduction(const MonomialIdeal& J, const MonomialIdeal& I, int nMax,
                            const std::shared_ptr<PowerCache>& cache) {
  if (!I.containsIdeal(J)) throw Error(Errc::NotASubideal, "isReduction requires J ⊆ I");
  ReductionResult out;
  out.nMaxTried = nMax;
  for (int n = 0; n <= nMax; ++n) {
    MonomialIdeal lhs = idealProduct(J, cache->power(I, n));
    if (lhs == cache->power(I, n + 1)) {
      out.reduction = true;
      out.witness = n;
      return out;
    }
  }
  return out;
}

bool fciContains(const MonomialIdeal& I, const MonomialIdeal& J, const FitConfig& cfg,
                 const std::shared_ptr<PowerCache>& cache) {
  DimNResult dim = dimensionOfN(I, J, cfg, cache);
  return dim.nZero || dim.dim < I.nvars();
}

FciResult firstCoefficientIdeal(const MonomialIdeal& I, Exponent dBound, const FitConfig& cfg,
                                const std::shared_ptr<PowerCache>& cache) {
  if (!I.isProper()) {
    throw Error(Errc::InvalidArgument, "first coefficient ideal needs a nonzero proper ideal");
  }
  if (dBound < 0) dBound = I.maxGenDegree() + I.nvars();
  if (dBound < I.maxGenDegree()) {
    throw Error(Errc::InvalidArgument, "degree bound below the maximal generator degree");
  }
  const MonomialIdeal closure = integralClosureGens(I);

  // Candidates by degree: monomials of Ī \ I. Within one degree no candidate
  // divides another, so a whole batch can be tested concurrently; multiples
  // of an accepted monomial are skipped (the containment is an ideal).
  FciResult result;
  result.degreeBound = dBound;
  std::vector<Monomial> accepted;
  long tested = 0;
  for (Exponent D = closure.minGenDegree(); D <= dBound; ++D) {
    std::vector<Monomial> batch;
    forEachMonomialOfDegree(I.nvars(), D, [&](const std::vector<Exponent>& e) {
      Monomial u(e);
      if (!closure.contains(u) || I.contains(u)) return;
      for (const Monomial& a : accepted) {
        if (a.divides(u)) return;
      }
      batch.push_back(std::move(u));
    });
    if (batch.empty()) continue;
    // Candidates run concurrently; their fits run serially inside to keep
    // the thread count at cfg.jobs.
    FitConfig inner = cfg;
    if (batch.size() > 1) inner.jobs = 1;
    std::vector<char> verdicts(batch.size(), 0);
    parallelFor(static_cast<long>(batch.size()), cfg.jobs, [&](long k) {
      MonomialIdeal candidate =
          idealSum(I, MonomialIdeal(I.vars(), {batch[static_cast<size_t>(k)]}));
      verdicts[static_cast<size_t>(k)] = fciContains(I, candidate, inner, cache) ? 1 : 0;
    });
    tested += static_cast<long>(batch.size());
    for (size_t k = 0; k < batch.size(); ++k) {
      if (verdicts[k]) accepted.push_back(batch[k]);
    }
  }
  result.candidatesTested = tested;
  result.accepted = accepted;
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), accepted.begin(), accepted.end());
  result.fci = MonomialIdeal(I.vars(), std::move(gens));
  result.complete = true;
  for (const Monomial& a : accepted) {
    if (a.degree() == dBound) result.complete = false;
  }

  if (!fciContains(I, result.fci, cfg, cache)) {
    throw Error(Errc::VerificationFailed, "computed fci fails the containment criterion");
  }
  if (result.fci != I) {
    CoefficientReport a = generalizedCoefficients(I, cfg, cache);
    CoefficientReport b = generalizedCoefficients(result.fci, cfg, cache);
    if (a.j[0] != b.j[0] || a.j[1] != b.j[1]) {
      throw Error(Errc::VerificationFailed, "j0/j1 of the fci disagree with the input ideal");
    }
  }
  return result;
}

namespace {

PrimeComparison compareAt(const MonomialIdeal& I, const MonomialIdeal& J,
                          const std::vector<int>& support, bool fullRing, const FitConfig& cfg,
                          const std::shared_ptr<PowerCache>& cache) {
  PrimeComparison out;
  out.support = support;
  MonomialIdeal Ip = I;
  MonomialIdeal Jp = J;
  if (!fullRing) {
    MonomialPrime p{support};
    Ip = localize(I, p);
    Jp = localize(J, p);
  }
  if (Ip == Jp) {
    out.trivial = true;
    out.equal = true;
    out.note = "localizations coincide";
    return out;
  }
  if (Ip.isUnit() && Jp.isUnit()) {
    out.trivial = true;
    out.equal = true;
    out.note = "unit-ideal localizations";
    return out;
  }
  if (Ip.isUnit() || Jp.isUnit()) {
    out.equal = false;
    out.note = "exactly one localization is the unit ideal";
    return out;
  }
  CoefficientReport a = generalizedCoefficients(Ip, cfg, cache);
  CoefficientReport b = generalizedCoefficients(Jp, cfg, cache);
  out.j0I = a.j[0][0];
  out.j0J = b.j[0][0];
  out.j1I = a.j[1];
  out.j1J = b.j[1];
  out.equal = (out.j0I == out.j0J) && (out.j1I == out.j1J);
  return out;
}

}  // namespace

ComparisonReport compareLocalized(const MonomialIdeal& I, const MonomialIdeal& J,
                                  const FitConfig& cfg,
                                  const std::shared_ptr<PowerCache>& cache, bool allPrimes) {
  if (!J.containsIdeal(I)) throw Error(Errc::NotASubideal, "compareLocalized requires I ⊆ J");
  if (!I.isProper() || J.isUnit()) {
    throw Error(Errc::InvalidArgument, "compareLocalized needs proper nonzero ideals");
  }
  ComparisonReport report;
  std::vector<std::vector<int>> primes;
  {
    std::vector<int> full;
    for (int t = 0; t < I.nvars(); ++t) full.push_back(t);
    primes.push_back(std::move(full));  // the full ring (the maximal ideal)
  }
  if (allPrimes) {
    // Every monomial prime containing I = every cover of the generator
    // supports, except the maximal ideal already handled above.
    const int n = I.nvars();
    if (n > 20) throw Error(Errc::InvalidArgument, "too many variables for prime enumeration");
    for (unsigned S = 1; S + 1 < (1u << n); ++S) {
      bool covering = true;
      for (const Monomial& g : I.gens()) {
        bool hits = false;
        for (int t = 0; t < n; ++t) {
          if ((S & (1u << t)) && g.exponent(t) > 0) {
            hits = true;
            break;
          }
        }
        if (!hits) {
          covering = false;
          break;
        }
      }
      if (!covering) continue;
      std::vector<int> support;
      for (int t = 0; t < n; ++t) {
        if (S & (1u << t)) support.push_back(t);
      }
      primes.push_back(std::move(support));
    }
    std::sort(primes.begin() + 1, primes.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
  }
  report.verdict = true;
  for (size_t k = 0; k < primes.size(); ++k) {
    PrimeComparison pc = compareAt(I, J, primes[k], k == 0, cfg, cache);
    if (!pc.equal) report.verdict = false;
    report.perPrime.push_back(std::move(pc));
  }
  return report;
}

CqCheck cqCrossCheck(const MonomialIdeal& I, const FitConfig& cfg,
                     const std::shared_ptr<PowerCache>& cache) {
  if (!I.isProper()) throw Error(Errc::InvalidArgument, "cqCrossCheck needs a nonzero proper ideal");
  const int h = height(I);
  const int q = I.nvars() - h;
  CqCheck out;
  out.q = q;
  CoefficientReport rep = generalizedCoefficients(I, cfg, cache);
  out.fromTable = rep.c[static_cast<size_t>(q)];
  out.fromFormula = 0;
  for (const MonomialPrime& p : minimalPrimes(I)) {
    if (static_cast<int>(p.support.size()) != h) continue;
    MonomialIdeal Ip = localize(I, p);
    ClassicalCoeffs cc = classicalCoefficients(Ip, cfg, cache);
    out.fromFormula += cc.e[0];  // e(A/p) = 1: coordinate subspaces are regular
  }
  return out;
}

}  // namespace jmult
