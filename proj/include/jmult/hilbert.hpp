#ifndef JMULT_HILBERT_HPP
#define JMULT_HILBERT_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jmult/binomial.hpp"
#include "jmult/monomial.hpp"

namespace jmult {

enum class TableKind { H10, H11 };

const char* tableKindName(TableKind k);

/// Exact integer grid of one sum transform of a bigraded Hilbert function,
/// indexed (i, j) with 0 ≤ i ≤ iMax, 0 ≤ j ≤ jMax.
struct BigradedTable {
  TableKind kind = TableKind::H10;
  int iMax = 0;
  int jMax = 0;
  std::vector<std::vector<BigInt>> values;  // values[i][j]
  std::string source;                       // which ideals produced it

  const BigInt& at(int i, int j) const { return values[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

using CellFn = std::function<BigInt(int, int)>;

/// Maps cellFn over the grid. Cell errors are rethrown with the coordinates
/// attached. Parallel and serial runs produce identical grids.
BigradedTable tabulate(const CellFn& cellFn, int iMax, int jMax, bool parallel, int jobs = 0);

/// Prefix sums along j: H10 → H11.
BigradedTable sumTransformJ(const BigradedTable& t);

/// Window interpolation on a materialized table: the unique tensor-binomial
/// interpolant on the (degCap+1)² subgrid at `origin`, which must lie inside
/// the table. Throws NonIntegerCoefficient / NotYetPolynomial.
BinomialPoly2 interpolate(const BigradedTable& t, std::pair<int, int> origin, int degCap);

struct FitConfig {
  int margin = 2;
  int maxOrigin = 12;
  int jobs = 0;  // 0 = all cores
};

struct FitReport {
  BinomialPoly2 poly;
  std::pair<int, int> originUsed{0, 0};
  int marginVerified = 0;
  bool stable = false;
};

/// h^{(1,0)} of T = G_m(G_I(A)) at one cell, straight from the counting
/// primitive: λ(I^j / (m^{i+1}·I^j + I^{j+1})).
BigInt h10Cell(const MonomialIdeal& I, int i, int j, PowerCache& cache);

/// h^{(1,0)} of G_m(N), N = ⊕ J·Iⁿ/Iⁿ⁺¹:
/// λ((J·I^j + I^{j+1}) / (m^{i+1}·(J·I^j) + I^{j+1})). For J = I the module N
/// is zero and every cell is 0.
BigInt h10CellOfN(const MonomialIdeal& I, const MonomialIdeal& J, int i, int j, PowerCache& cache);

/// Lazily extensible h^{(1,0)} grid. Columns (fixed j) are computed in one
/// enumeration pass each and cached; extending iMax recomputes the affected
/// columns. ensure() may tabulate columns in parallel.
class HilbertSource {
public:
  virtual ~HilbertSource() = default;

  void ensure(int iMax, int jMax, int jobs = 0);
  const BigInt& h10(int i, int j) const;
  BigInt h11(int i, int j) const;
  BigInt value(TableKind kind, int i, int j) const;
  int computedIMax() const { return iMax_; }
  int computedJMax() const { return static_cast<int>(columns_.size()) - 1; }

protected:
  virtual std::vector<BigInt> computeColumn(int j, int iMax) const = 0;

private:
  std::vector<std::vector<BigInt>> columns_;  // columns_[j][i]
  int iMax_ = -1;
};

/// Source for T = G_m(G_I(A)).
class TSource : public HilbertSource {
public:
  TSource(MonomialIdeal I, std::shared_ptr<PowerCache> cache);

protected:
  std::vector<BigInt> computeColumn(int j, int iMax) const override;

private:
  MonomialIdeal ideal_;
  std::shared_ptr<PowerCache> cache_;
};

/// Source for G_m(N), N = ⊕ J·Iⁿ/Iⁿ⁺¹ with I ⊆ J.
class NSource : public HilbertSource {
public:
  NSource(MonomialIdeal I, MonomialIdeal J, std::shared_ptr<PowerCache> cache);

protected:
  std::vector<BigInt> computeColumn(int j, int iMax) const override;

private:
  MonomialIdeal inner_;
  MonomialIdeal outer_;
  std::shared_ptr<PowerCache> cache_;
};

/// Wraps an arbitrary cell function (tests, synthetic grids).
class FnSource : public HilbertSource {
public:
  explicit FnSource(CellFn fn) : fn_(std::move(fn)) {}

protected:
  std::vector<BigInt> computeColumn(int j, int iMax) const override;

private:
  CellFn fn_;
};

/// Diagonal stabilization search: smallest s with identical interpolants at
/// origins (s,s) and (s+1,s+1) that also reproduce the table exactly on the
/// margin block s+degCap+1 ≤ i,j ≤ s+degCap+margin. Throws NoStabilization
/// past cfg.maxOrigin.
FitReport stableFit(HilbertSource& src, TableKind kind, int degCap, const FitConfig& cfg);

/// Convenience overload fitting an arbitrary h10 cell function.
FitReport stableFit(const CellFn& h10Fn, TableKind kind, int degCap, const FitConfig& cfg);

/// One-dimensional analogue used for classical Hilbert coefficients: fits
/// valueFn(j) = Σ_l b_l·C(j+l, l) on windows of degCap+1 consecutive points.
struct Fit1D {
  std::vector<BigInt> coeffs;  // b_0..b_degCap
  int originUsed = 0;
  int marginVerified = 0;
};
Fit1D stableFit1D(const std::function<BigInt(int)>& valueFn, int degCap, const FitConfig& cfg);

/// Materializes a table from a source (ensure + copy; H11 by prefix sums).
BigradedTable tableFromSource(HilbertSource& src, TableKind kind, int iMax, int jMax,
                              bool parallel, int jobs = 0);

/// Column kernel: counts[i] = #{monomials u ∈ P \ Q : deg u − (min degree of a
/// generator of P dividing u) ≤ i} for i = 0..iMax. Requires Q ⊆ P as ideals.
std::vector<BigInt> h10ColumnCounts(const MonomialIdeal& P, const MonomialIdeal& Q, int iMax);

}  // namespace jmult

#endif
