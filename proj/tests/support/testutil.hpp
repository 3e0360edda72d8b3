#ifndef JMULT_TESTS_TESTUTIL_HPP
#define JMULT_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jmult/io.hpp"
#include "jmult/monomial.hpp"

// Test-side reference implementations. Everything here recomputes from first
// principles (plain divisibility over unminimalized generator lists) so the
// library's counting, minimalization and caching paths are checked against an
// independent route.
namespace testutil {

using jmult::BigInt;
using jmult::Exponent;
using jmult::Monomial;
using jmult::MonomialIdeal;

inline MonomialIdeal idealOf(const std::string& text) {
  return jmult::parseIdealText(text).ideal;
}

inline Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

inline bool rawDivides(const std::vector<Exponent>& g, const std::vector<Exponent>& u) {
  for (size_t t = 0; t < g.size(); ++t) {
    if (g[t] > u[t]) return false;
  }
  return true;
}

inline Exponent rawDegree(const std::vector<Exponent>& e) {
  Exponent d = 0;
  for (Exponent x : e) d += x;
  return d;
}

/// All exponent vectors of total degree ≤ maxDeg.
inline std::vector<std::vector<Exponent>> allMonomialsUpTo(int nvars, Exponent maxDeg) {
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> buf(static_cast<size_t>(nvars), 0);
  std::function<void(int, Exponent)> rec = [&](int t, Exponent rest) {
    if (t == nvars - 1) {
      for (Exponent e = 0; e <= rest; ++e) {
        buf[static_cast<size_t>(t)] = e;
        out.push_back(buf);
      }
      return;
    }
    for (Exponent e = 0; e <= rest; ++e) {
      buf[static_cast<size_t>(t)] = e;
      rec(t + 1, rest - e);
    }
  };
  if (nvars > 0) rec(0, maxDeg);
  return out;
}

/// Generators of Kⁿ as all n-fold products (multisets, unminimalized).
inline std::vector<std::vector<Exponent>> naivePowerGens(
    const std::vector<std::vector<Exponent>>& gens, int n, int nvars) {
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> acc(static_cast<size_t>(nvars), 0);
  std::function<void(size_t, int)> rec = [&](size_t from, int left) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (size_t g = from; g < gens.size(); ++g) {
      for (int t = 0; t < nvars; ++t) acc[static_cast<size_t>(t)] += gens[g][static_cast<size_t>(t)];
      rec(g, left - 1);
      for (int t = 0; t < nvars; ++t) acc[static_cast<size_t>(t)] -= gens[g][static_cast<size_t>(t)];
    }
  };
  rec(0, n);
  return out;
}

inline bool naiveMember(const std::vector<std::vector<Exponent>>& gens,
                        const std::vector<Exponent>& u, Exponent shift = 0) {
  for (const auto& g : gens) {
    if (rawDivides(g, u) && rawDegree(u) - rawDegree(g) >= shift) return true;
  }
  return false;
}

/// Full-enumeration h^{(1,0)} oracle: counts monomials of I^j outside
/// m^{i+1}·I^j + I^{j+1} by walking every monomial up to the stabilization
/// degree and testing membership twice.
inline BigInt naiveH10Cell(const MonomialIdeal& I, int i, int j) {
  const int n = I.nvars();
  std::vector<std::vector<Exponent>> base;
  for (const Monomial& g : I.gens()) base.push_back(g.exponents());
  auto pGens = naivePowerGens(base, j, n);
  auto qGens = naivePowerGens(base, j + 1, n);
  Exponent maxP = 0;
  for (const auto& g : pGens) maxP = std::max(maxP, rawDegree(g));
  BigInt count = 0;
  for (const auto& u : allMonomialsUpTo(n, maxP + i + 1)) {
    if (!naiveMember(pGens, u)) continue;
    if (naiveMember(pGens, u, static_cast<Exponent>(i) + 1)) continue;
    if (naiveMember(qGens, u)) continue;
    ++count;
  }
  return count;
}

/// Independent count of #(U \ V) for scaled sums given as (gens, shift) term
/// lists, enumerating all monomials of degree ≤ bound.
struct RawTerm {
  std::vector<std::vector<Exponent>> gens;
  Exponent shift = 0;
};

inline BigInt naiveCountBetween(const std::vector<RawTerm>& U, const std::vector<RawTerm>& V,
                                int nvars, Exponent bound) {
  auto member = [](const std::vector<RawTerm>& terms, const std::vector<Exponent>& u) {
    for (const RawTerm& t : terms) {
      if (naiveMember(t.gens, u, t.shift)) return true;
    }
    return false;
  };
  BigInt count = 0;
  for (const auto& u : allMonomialsUpTo(nvars, bound)) {
    if (member(U, u) && !member(V, u)) ++count;
  }
  return count;
}

inline std::vector<std::string> varNames(int nvars) {
  static const std::vector<std::string> names{"x", "y", "z", "w", "v", "u"};
  return std::vector<std::string>(names.begin(), names.begin() + nvars);
}

inline Monomial randomMonomial(std::mt19937_64& rng, int nvars, Exponent maxDeg) {
  std::uniform_int_distribution<Exponent> degDist(1, maxDeg);
  Exponent d = degDist(rng);
  std::vector<Exponent> e(static_cast<size_t>(nvars), 0);
  std::uniform_int_distribution<int> varDist(0, nvars - 1);
  for (Exponent k = 0; k < d; ++k) e[static_cast<size_t>(varDist(rng))] += 1;
  return Monomial(std::move(e));
}

inline MonomialIdeal randomIdeal(std::mt19937_64& rng, int nvars, int maxGens, Exponent maxDeg) {
  std::uniform_int_distribution<int> countDist(1, maxGens);
  int count = countDist(rng);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) gens.push_back(randomMonomial(rng, nvars, maxDeg));
  return MonomialIdeal(varNames(nvars), std::move(gens));
}

/// Pure power of every variable plus a few extra monomials: always m-primary.
inline MonomialIdeal randomMPrimary(std::mt19937_64& rng, int nvars, Exponent maxDeg) {
  std::uniform_int_distribution<Exponent> expDist(1, maxDeg);
  std::uniform_int_distribution<int> extraDist(0, 2);
  std::vector<Monomial> gens;
  for (int t = 0; t < nvars; ++t) {
    std::vector<Exponent> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(t)] = expDist(rng);
    gens.emplace_back(std::move(e));
  }
  int extras = extraDist(rng);
  for (int k = 0; k < extras; ++k) gens.push_back(randomMonomial(rng, nvars, maxDeg));
  return MonomialIdeal(varNames(nvars), std::move(gens));
}

inline bool isMinimalSet(const std::vector<Monomial>& gens) {
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = 0; b < gens.size(); ++b) {
      if (a != b && gens[a].divides(gens[b])) return false;
    }
  }
  return true;
}

}  // namespace testutil

#endif
