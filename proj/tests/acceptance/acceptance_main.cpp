// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
//   usage: acceptance_tests [--jobs N] [--seed S]

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>

#include "jmult/analysis.hpp"
#include "jmult/parallel.hpp"
#include "support/testutil.hpp"

using namespace jmult;
using testutil::idealOf;

namespace {

int gJobs = 0;
std::uint64_t gSeed = 20260809;

const char* kFixtureI = "vars: x y z\nx^5\ny^3\nx y z^2\n";
const char* kFixtureJ = "vars: x y z\nx^5\ny^3\nx y z^2\nx^4 y^2\n";

FitConfig config(int margin = 2) {
  FitConfig cfg;
  cfg.margin = margin;
  cfg.jobs = gJobs;
  return cfg;
}

std::vector<BigInt> vec(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool check(bool ok, const std::string& what, std::string& log) {
  if (!ok) log += "    failed: " + what + "\n";
  return ok;
}

// 1. Exact reproduction of the three-variable height-2 fixture: j-vectors,
//    height, analytic spread, and the first coefficient ideal, at margin 2
//    and margin 3.
bool criterion1(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  MonomialIdeal I = idealOf(kFixtureI);
  MonomialIdeal J = idealOf(kFixtureJ);
  bool ok = true;
  for (int margin : {2, 3}) {
    FitConfig cfg = config(margin);
    CoefficientReport rI = generalizedCoefficients(I, cfg, cache);
    CoefficientReport rJ = generalizedCoefficients(J, cfg, cache);
    const std::string tag = " (margin " + std::to_string(margin) + ")";
    ok &= check(rI.j[0] == vec({30}), "j0(I) = 30" + tag, log);
    ok &= check(rJ.j[0] == vec({30}), "j0(J) = 30" + tag, log);
    ok &= check(rI.j[1] == vec({8, -32}), "j1(I) = (8,-32)" + tag, log);
    ok &= check(rJ.j[1] == vec({8, -32}), "j1(J) = (8,-32)" + tag, log);
    ok &= check(rI.j[2] == vec({0, -1, 5}), "j2(I) = (0,-1,5)" + tag, log);
    ok &= check(rJ.j[2] == vec({0, -1, 3}), "j2(J) = (0,-1,3)" + tag, log);
    ok &= check(rI.analyticSpread == 3, "ell(I) = 3" + tag, log);
    ok &= check(rJ.analyticSpread == 3, "ell(J) = 3" + tag, log);
    FciResult fci = firstCoefficientIdeal(I, -1, cfg, cache);
    ok &= check(fci.fci == J, "fci(I) = J" + tag, log);
    ok &= check(fci.complete, "fci complete" + tag, log);
  }
  ok &= check(height(I) == 2, "height(I) = 2", log);
  ok &= check(height(J) == 2, "height(J) = 2", log);
  return ok;
}

// 2. c₁ from the bigraded table equals the associativity-formula value
//    e₀((x⁵,y³,xy)) computed independently in two variables.
bool criterion2(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  FitConfig cfg = config();
  CqCheck cq = cqCrossCheck(idealOf(kFixtureI), cfg, cache);
  bool ok = check(cq.q == 1, "q = 1", log);
  ok &= check(cq.fromTable == 8, "c1 from the table = 8", log);
  ok &= check(cq.fromFormula == 8, "sum of localized e0 = 8", log);
  ClassicalCoeffs local =
      classicalCoefficients(idealOf("vars: x y\nx^5\ny^3\nx y\n"), cfg, cache);
  ok &= check(local.e[0] == 8, "e0((x^5,y^3,xy)) = 8", log);
  return ok;
}

// 3. m-primary dictionary on ≥ 50 random ideals in 2–3 variables.
bool criterion3(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  FitConfig cfg = config();
  std::mt19937_64 rng(gSeed);
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    int nvars = 2 + (trial % 2);
    MonomialIdeal I = testutil::randomMPrimary(rng, nvars, 4);
    CoefficientReport r = generalizedCoefficients(I, cfg, cache);
    ClassicalCoeffs cc = classicalCoefficients(I, cfg, cache);
    for (int k = 0; k <= r.d && ok; ++k) {
      const auto& jk = r.j[static_cast<size_t>(k)];
      for (int t = 0; t < k; ++t) {
        ok &= check(jk[static_cast<size_t>(t)] == 0,
                    "leading zeros of j[" + std::to_string(k) + "] for " + I.str(), log);
      }
      BigInt expected = cc.e[static_cast<size_t>(k)];
      if (k % 2 == 1) expected = -expected;
      ok &= check(jk[static_cast<size_t>(k)] == expected,
                  "j[" + std::to_string(k) + "] tail = (-1)^k e_k for " + I.str(), log);
    }
    if (!ok) break;
  }
  return ok;
}

// 4. Reduction invariance on ≥ 30 pairs (I, I + (u)) with u integral over I.
bool criterion4(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  FitConfig cfg = config();
  std::mt19937_64 rng(gSeed + 1);
  bool ok = true;
  int done = 0;
  int attempts = 0;
  while (done < 30 && attempts < 2000) {
    ++attempts;
    int nvars = 2 + (attempts % 2);
    MonomialIdeal I = testutil::randomIdeal(rng, nvars, 4, 4);
    // principal monomial ideals are integrally closed; skip early
    if (I.isUnit() || I.gens().size() < 2) continue;
    MonomialIdeal closure = integralClosureGens(I);
    const Monomial* pick = nullptr;
    for (const Monomial& g : closure.gens()) {
      if (!I.contains(g)) {
        pick = &g;
        break;
      }
    }
    if (!pick) continue;  // integrally closed; resample
    MonomialIdeal J = idealSum(I, MonomialIdeal(I.vars(), {*pick}));
    ReductionResult red = isReduction(I, J, 8, cache);
    ok &= check(red.reduction && red.witness <= 8,
                "reduction witness for " + I.str() + " + " + pick->str(I.vars()), log);
    CoefficientReport a = generalizedCoefficients(I, cfg, cache);
    CoefficientReport b = generalizedCoefficients(J, cfg, cache);
    ok &= check(a.c == b.c, "multiplicity sequences of " + I.str() + " and +(u) agree", log);
    if (!ok) break;
    ++done;
  }
  ok &= check(done >= 30, "collected 30 integral extensions", log);
  return ok;
}

// 5. h10Cell agrees bit-exactly with the naive full-enumeration oracle on a
//    6×6 grid for 20 random ideals.
bool criterion5(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  std::mt19937_64 rng(gSeed + 2);
  bool ok = true;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    int nvars = 1 + (trial % 3);
    MonomialIdeal I = testutil::randomIdeal(rng, nvars, 4, 4);
    std::vector<char> cellOk(36, 0);
    parallelFor(36, gJobs, [&](long k) {
      int i = static_cast<int>(k / 6);
      int j = static_cast<int>(k % 6);
      cellOk[static_cast<size_t>(k)] =
          (h10Cell(I, i, j, *cache) == testutil::naiveH10Cell(I, i, j)) ? 1 : 0;
    });
    for (long k = 0; k < 36; ++k) {
      ok &= check(cellOk[static_cast<size_t>(k)] == 1,
                  "cell (" + std::to_string(k / 6) + "," + std::to_string(k % 6) + ") of " +
                      I.str(),
                  log);
    }
  }
  return ok;
}

// 6. Transform identity between independent H10 and H11 fits.
bool criterion6(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  FitConfig cfg = config();
  std::mt19937_64 rng(gSeed + 3);
  std::vector<MonomialIdeal> corpus = {idealOf(kFixtureI)};
  while (corpus.size() < 11) {
    MonomialIdeal I = testutil::randomIdeal(rng, 2 + (corpus.size() % 2), 3, 3);
    if (!I.isUnit()) corpus.push_back(I);
  }
  bool ok = true;
  for (const MonomialIdeal& I : corpus) {
    const int n = I.nvars();
    TSource src10(I, cache);
    TSource src11(I, cache);
    FitReport f10 = stableFit(src10, TableKind::H10, n - 1, cfg);
    FitReport f11 = stableFit(src11, TableKind::H11, n, cfg);
    for (int k = 0; k <= n - 1; ++k) {
      for (int l = 0; k + l <= n - 1; ++l) {
        ok &= check(f11.poly.coeff(k, l + 1) == f10.poly.coeff(k, l),
                    "a11[" + std::to_string(k) + "," + std::to_string(l + 1) + "] = a10[" +
                        std::to_string(k) + "," + std::to_string(l) + "] for " + I.str(),
                    log);
      }
    }
    if (!ok) break;
  }
  return ok;
}

// 7. Negative control: the containment fails for ((x²,y²), m²) and the
//    localized comparison pins the j₁ discrepancy to the maximal ideal.
bool criterion7(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  FitConfig cfg = config();
  MonomialIdeal I = idealOf("vars: x y\nx^2\ny^2\n");
  MonomialIdeal J = idealOf("vars: x y\nx^2\nx y\ny^2\n");
  bool ok = check(!fciContains(I, J, cfg, cache), "fciContains = false", log);
  ComparisonReport r = compareLocalized(I, J, cfg, cache, true);
  ok &= check(!r.verdict, "comparison verdict = false", log);
  ok &= check(!r.perPrime.empty() && r.perPrime[0].support.size() == 2,
              "first entry is the maximal ideal", log);
  if (!r.perPrime.empty()) {
    const PrimeComparison& atM = r.perPrime[0];
    ok &= check(!atM.equal, "unequal at the maximal ideal", log);
    ok &= check(atM.j0I == atM.j0J, "j0 agrees (both 4)", log);
    ok &= check(atM.j1I == vec({0, 0}) && atM.j1J == vec({0, -1}),
                "j1 = (0,0) vs (0,-1)", log);
  }
  return ok;
}

// 8. jMult ≠ 0 ⇔ analytic spread = d across the corpus, including the
//    principal ideal with multiplicity sequence (0,1,0).
bool criterion8(std::string& log) {
  auto cache = std::make_shared<PowerCache>();
  FitConfig cfg = config();
  std::mt19937_64 rng(gSeed + 4);
  std::vector<MonomialIdeal> corpus = {
      idealOf("vars: x y\nx\n"),
      idealOf(kFixtureI),
      idealOf(kFixtureJ),
      idealOf("vars: x y\nx\ny\n"),
      idealOf("vars: x y z\nx y\nx z\n"),
      idealOf("vars: x y z\nx y\n"),
  };
  while (corpus.size() < 16) {
    MonomialIdeal I = testutil::randomIdeal(rng, 2 + (corpus.size() % 2), 3, 3);
    if (!I.isUnit()) corpus.push_back(I);
  }
  bool ok = true;
  for (const MonomialIdeal& I : corpus) {
    CoefficientReport r = generalizedCoefficients(I, cfg, cache);
    ok &= check((r.jMult != 0) == (r.analyticSpread == r.d),
                "jmult/spread law for " + I.str(), log);
  }
  CoefficientReport principal =
      generalizedCoefficients(idealOf("vars: x y\nx\n"), cfg, cache);
  ok &= check(principal.c == vec({0, 1, 0}), "c((x)) = (0,1,0)", log);
  ok &= check(principal.jMult == 0 && principal.analyticSpread == 1,
              "jmult((x)) = 0, ell = 1", log);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--jobs") == 0 && a + 1 < argc) {
      gJobs = std::atoi(argv[++a]);
    } else if (std::strcmp(argv[a], "--seed") == 0 && a + 1 < argc) {
      gSeed = std::strtoull(argv[++a], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance_tests [--jobs N] [--seed S]\n";
      return 2;
    }
  }

  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"1 fixture-reproduction", criterion1},
      {"2 c1-cross-consistency", criterion2},
      {"3 m-primary-dictionary", criterion3},
      {"4 reduction-invariance", criterion4},
      {"5 counting-oracle-equivalence", criterion5},
      {"6 transform-identity", criterion6},
      {"7 negative-control", criterion7},
      {"8 j-multiplicity-law", criterion8},
  };

  int passed = 0;
  const auto startAll = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log += std::string("    exception: ") + e.what() + "\n";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << " (" << ms << " ms)\n";
    if (!log.empty()) std::cout << log;
    if (ok) ++passed;
  }
  const auto totalMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - startAll)
                           .count();
  std::cout << passed << "/8 criteria passed in " << totalMs << " ms\n";
  return passed == 8 ? 0 : 1;
}
