#include "jmult/hilbert.hpp"

#include <algorithm>

#include "jmult/parallel.hpp"

namespace jmult {

const char* tableKindName(TableKind k) {
  return k == TableKind::H10 ? "H10" : "H11";
}

BigradedTable tabulate(const CellFn& cellFn, int iMax, int jMax, bool parallel, int jobs) {
  if (iMax < 0 || jMax < 0) throw Error(Errc::InvalidArgument, "negative table bounds");
  BigradedTable t;
  t.kind = TableKind::H10;
  t.iMax = iMax;
  t.jMax = jMax;
  t.values.assign(static_cast<size_t>(iMax) + 1,
                  std::vector<BigInt>(static_cast<size_t>(jMax) + 1));
  const long cells = static_cast<long>(iMax + 1) * (jMax + 1);
  auto work = [&](long k) {
    int i = static_cast<int>(k / (jMax + 1));
    int j = static_cast<int>(k % (jMax + 1));
    try {
      t.values[static_cast<size_t>(i)][static_cast<size_t>(j)] = cellFn(i, j);
    } catch (const Error& e) {
      throw Error(e.code(), "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                "): " + e.what());
    }
  };
  parallelFor(cells, parallel ? jobs : 1, work);
  return t;
}

BigradedTable sumTransformJ(const BigradedTable& t) {
  if (t.kind != TableKind::H10) throw Error(Errc::InvalidArgument, "sumTransformJ expects an H10 table");
  BigradedTable out = t;
  out.kind = TableKind::H11;
  for (auto& row : out.values) {
    for (size_t j = 1; j < row.size(); ++j) row[j] += row[j - 1];
  }
  return out;
}

BinomialPoly2 interpolate(const BigradedTable& t, std::pair<int, int> origin, int degCap) {
  const auto [i0, j0] = origin;
  if (degCap < 0 || i0 < 0 || j0 < 0 || i0 + degCap > t.iMax || j0 + degCap > t.jMax) {
    throw Error(Errc::InvalidArgument, "interpolation window outside the table");
  }
  const size_t m = static_cast<size_t>(degCap) + 1;
  std::vector<std::vector<BigInt>> window(m, std::vector<BigInt>(m));
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < m; ++c) {
      window[r][c] = t.at(i0 + static_cast<int>(r), j0 + static_cast<int>(c));
    }
  }
  return interpolate2D(window, i0, j0, degCap);
}

std::vector<BigInt> h10ColumnCounts(const MonomialIdeal& P, const MonomialIdeal& Q, int iMax) {
  std::vector<BigInt> counts(static_cast<size_t>(iMax) + 1, BigInt(0));
  if (P.isZero()) return counts;
  // Generators sorted by ascending degree: the first divisor found has
  // minimal degree, which is all the histogram needs.
  std::vector<Monomial> pGens = P.gens();
  std::sort(pGens.begin(), pGens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  const std::vector<Monomial>& qGens = Q.gens();
  const int n = P.nvars();
  const Exponent maxD = P.maxGenDegree() + iMax;
  std::vector<long long> hist(static_cast<size_t>(iMax) + 1, 0);
  std::vector<Exponent> u;
  auto visit = [&](const std::vector<Exponent>& e) {
    // in Q => counted in no cell
    for (const Monomial& g : qGens) {
      bool div = true;
      const auto& ge = g.exponents();
      for (int t = 0; t < n; ++t) {
        if (ge[static_cast<size_t>(t)] > e[static_cast<size_t>(t)]) {
          div = false;
          break;
        }
      }
      if (div) return;
    }
    Exponent deg = 0;
    for (Exponent x : e) deg += x;
    for (const Monomial& g : pGens) {
      if (g.degree() > deg) break;
      bool div = true;
      const auto& ge = g.exponents();
      for (int t = 0; t < n; ++t) {
        if (ge[static_cast<size_t>(t)] > e[static_cast<size_t>(t)]) {
          div = false;
          break;
        }
      }
      if (div) {
        Exponent s = deg - g.degree();
        if (s <= iMax) ++hist[static_cast<size_t>(s)];
        return;
      }
    }
  };
  for (Exponent D = P.minGenDegree(); D <= maxD; ++D) forEachMonomialOfDegree(n, D, visit);
  BigInt running = 0;
  for (size_t i = 0; i < hist.size(); ++i) {
    running += hist[i];
    counts[i] = running;
  }
  return counts;
}

BigInt h10Cell(const MonomialIdeal& I, int i, int j, PowerCache& cache) {
  if (I.isZero()) throw Error(Errc::InvalidArgument, "h10Cell requires a nonzero ideal");
  if (i < 0 || j < 0) throw Error(Errc::InvalidArgument, "negative cell coordinates");
  MonomialIdeal Pj = cache.power(I, j);
  MonomialIdeal Pj1 = cache.power(I, j + 1);
  ScaledSum U(Pj, 0);
  ScaledSum V({ScaledSum::Term{Pj, static_cast<Exponent>(i) + 1}, ScaledSum::Term{Pj1, 0}});
  try {
    return countBetween(U, V);
  } catch (const Error& e) {
    if (e.code() == Errc::NonFiniteLength) {
      throw Error(Errc::Internal, std::string("h10Cell cannot be infinite: ") + e.what());
    }
    throw;
  }
}

BigInt h10CellOfN(const MonomialIdeal& I, const MonomialIdeal& J, int i, int j,
                  PowerCache& cache) {
  if (I.isZero()) throw Error(Errc::InvalidArgument, "h10CellOfN requires a nonzero ideal");
  if (!J.containsIdeal(I)) throw Error(Errc::NotASubideal, "h10CellOfN requires I ⊆ J");
  if (i < 0 || j < 0) throw Error(Errc::InvalidArgument, "negative cell coordinates");
  MonomialIdeal JIj = idealProduct(J, cache.power(I, j));
  MonomialIdeal Pj1 = cache.power(I, j + 1);
  ScaledSum U({ScaledSum::Term{JIj, 0}, ScaledSum::Term{Pj1, 0}});
  ScaledSum V({ScaledSum::Term{JIj, static_cast<Exponent>(i) + 1}, ScaledSum::Term{Pj1, 0}});
  return countBetween(U, V);
}

void HilbertSource::ensure(int iMax, int jMax, int jobs) {
  if (iMax < 0 || jMax < 0) throw Error(Errc::InvalidArgument, "negative table bounds");
  const bool growI = iMax > iMax_;
  const int haveJ = static_cast<int>(columns_.size()) - 1;
  if (!growI && jMax <= haveJ) return;
  const int newIMax = std::max(iMax, iMax_);
  const int newJMax = std::max(jMax, haveJ);
  std::vector<int> todo;
  for (int j = 0; j <= newJMax; ++j) {
    if (growI || j > haveJ) todo.push_back(j);
  }
  columns_.resize(static_cast<size_t>(newJMax) + 1);
  std::vector<std::vector<BigInt>> fresh(todo.size());
  parallelFor(static_cast<long>(todo.size()), jobs,
              [&](long k) { fresh[static_cast<size_t>(k)] = computeColumn(todo[static_cast<size_t>(k)], newIMax); });
  for (size_t k = 0; k < todo.size(); ++k) {
    columns_[static_cast<size_t>(todo[k])] = std::move(fresh[k]);
  }
  iMax_ = newIMax;
}

const BigInt& HilbertSource::h10(int i, int j) const {
  if (j < 0 || j >= static_cast<int>(columns_.size()) || i < 0 || i > iMax_) {
    throw Error(Errc::InvalidArgument, "cell outside the computed grid");
  }
  return columns_[static_cast<size_t>(j)][static_cast<size_t>(i)];
}

BigInt HilbertSource::h11(int i, int j) const {
  BigInt v = 0;
  for (int u = 0; u <= j; ++u) v += h10(i, u);
  return v;
}

BigInt HilbertSource::value(TableKind kind, int i, int j) const {
  return kind == TableKind::H10 ? h10(i, j) : h11(i, j);
}

TSource::TSource(MonomialIdeal I, std::shared_ptr<PowerCache> cache)
    : ideal_(std::move(I)), cache_(std::move(cache)) {
  if (ideal_.isZero()) throw Error(Errc::InvalidArgument, "nonzero ideal required");
}

std::vector<BigInt> TSource::computeColumn(int j, int iMax) const {
  return h10ColumnCounts(cache_->power(ideal_, j), cache_->power(ideal_, j + 1), iMax);
}

NSource::NSource(MonomialIdeal I, MonomialIdeal J, std::shared_ptr<PowerCache> cache)
    : inner_(std::move(I)), outer_(std::move(J)), cache_(std::move(cache)) {
  if (inner_.isZero()) throw Error(Errc::InvalidArgument, "nonzero ideal required");
  if (!outer_.containsIdeal(inner_)) throw Error(Errc::NotASubideal, "NSource requires I ⊆ J");
}

std::vector<BigInt> NSource::computeColumn(int j, int iMax) const {
  MonomialIdeal P = idealProduct(outer_, cache_->power(inner_, j));
  return h10ColumnCounts(P, cache_->power(inner_, j + 1), iMax);
}

std::vector<BigInt> FnSource::computeColumn(int j, int iMax) const {
  std::vector<BigInt> col(static_cast<size_t>(iMax) + 1);
  for (int i = 0; i <= iMax; ++i) col[static_cast<size_t>(i)] = fn_(i, j);
  return col;
}

namespace {

BinomialPoly2 interpolateFromSource(const HilbertSource& src, TableKind kind, int s, int degCap) {
  const size_t m = static_cast<size_t>(degCap) + 1;
  std::vector<std::vector<BigInt>> window(m, std::vector<BigInt>(m));
  for (size_t r = 0; r < m; ++r) {
    for (size_t c = 0; c < m; ++c) {
      window[r][c] = src.value(kind, s + static_cast<int>(r), s + static_cast<int>(c));
    }
  }
  return interpolate2D(window, s, s, degCap);
}

}  // namespace

FitReport stableFit(HilbertSource& src, TableKind kind, int degCap, const FitConfig& cfg) {
  if (cfg.margin < 1) throw Error(Errc::InvalidArgument, "margin must be >= 1");
  if (degCap < 0) throw Error(Errc::InvalidArgument, "negative degree cap");
  for (int s = 0; s <= cfg.maxOrigin; ++s) {
    const int need = std::max(s + 1 + degCap, s + degCap + cfg.margin);
    src.ensure(need, need, cfg.jobs);
    BinomialPoly2 fit;
    try {
      fit = interpolateFromSource(src, kind, s, degCap);
      BinomialPoly2 again = interpolateFromSource(src, kind, s + 1, degCap);
      if (fit != again) continue;
    } catch (const Error& e) {
      if (e.code() == Errc::NotYetPolynomial || e.code() == Errc::NonIntegerCoefficient) continue;
      throw;
    }
    bool marginOk = true;
    for (int i = s + degCap + 1; marginOk && i <= s + degCap + cfg.margin; ++i) {
      for (int j = s + degCap + 1; j <= s + degCap + cfg.margin; ++j) {
        if (fit.eval(i, j) != src.value(kind, i, j)) {
          marginOk = false;
          break;
        }
      }
    }
    if (!marginOk) continue;
    FitReport report;
    report.poly = fit;
    report.originUsed = {s, s};
    report.marginVerified = cfg.margin;
    report.stable = true;
    return report;
  }
  throw Error(Errc::NoStabilization,
              "no stable window with origin <= " + std::to_string(cfg.maxOrigin));
}

FitReport stableFit(const CellFn& h10Fn, TableKind kind, int degCap, const FitConfig& cfg) {
  FnSource src(h10Fn);
  return stableFit(src, kind, degCap, cfg);
}

Fit1D stableFit1D(const std::function<BigInt(int)>& valueFn, int degCap, const FitConfig& cfg) {
  if (cfg.margin < 1) throw Error(Errc::InvalidArgument, "margin must be >= 1");
  std::vector<BigInt> cache;
  auto value = [&](int j) -> const BigInt& {
    while (static_cast<int>(cache.size()) <= j) {
      cache.push_back(valueFn(static_cast<int>(cache.size())));
    }
    return cache[static_cast<size_t>(j)];
  };
  const size_t m = static_cast<size_t>(degCap) + 1;
  for (int s = 0; s <= cfg.maxOrigin; ++s) {
    std::vector<BigInt> w0(m), w1(m);
    for (size_t r = 0; r < m; ++r) {
      w0[r] = value(s + static_cast<int>(r));
      w1[r] = value(s + 1 + static_cast<int>(r));
    }
    std::vector<BigInt> b0, b1;
    try {
      b0 = solveBinomial1D(w0, s);
      b1 = solveBinomial1D(w1, s + 1);
    } catch (const Error& e) {
      if (e.code() == Errc::NonIntegerCoefficient) continue;
      throw;
    }
    if (b0 != b1) continue;
    bool marginOk = true;
    for (int j = s + degCap + 1; j <= s + degCap + cfg.margin; ++j) {
      BigInt predicted = 0;
      for (size_t l = 0; l < m; ++l) {
        predicted += b0[l] * binomial(BigInt(j) + static_cast<int>(l), static_cast<int>(l));
      }
      if (predicted != value(j)) {
        marginOk = false;
        break;
      }
    }
    if (!marginOk) continue;
    return Fit1D{std::move(b0), s, cfg.margin};
  }
  throw Error(Errc::NoStabilization,
              "no stable window with origin <= " + std::to_string(cfg.maxOrigin));
}

BigradedTable tableFromSource(HilbertSource& src, TableKind kind, int iMax, int jMax,
                              bool parallel, int jobs) {
  src.ensure(iMax, jMax, parallel ? jobs : 1);
  BigradedTable t =
      tabulate([&](int i, int j) { return src.h10(i, j); }, iMax, jMax, parallel, jobs);
  if (kind == TableKind::H11) t = sumTransformJ(t);
  return t;
}

}  // namespace jmult
