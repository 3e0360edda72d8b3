#ifndef JMULT_BINOMIAL_HPP
#define JMULT_BINOMIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "jmult/bigint.hpp"
#include "jmult/errors.hpp"

namespace jmult {

/// C(top, k) for integer top ≥ 0 (0 when k < 0 or k > top).
BigInt binomial(const BigInt& top, int k);

/// Solves f(x₀+r) = Σ_l b_l·C(x₀+r+l, l), r = 0..c, by exact rational
/// elimination. The basis {C(x+l,l)} is a ℤ-basis of integer-valued
/// polynomials, so integer inputs always yield integer b_l; a non-integer
/// result signals a solver inconsistency and throws NonIntegerCoefficient.
std::vector<BigInt> solveBinomial1D(const std::vector<BigInt>& values, long x0);

/// Bivariate polynomial stored on the basis binom(i+k,k)·binom(j+l,l),
/// finitely supported integer coefficients. The zero polynomial has total
/// degree -1.
class BinomialPoly2 {
public:
  BinomialPoly2() = default;
  explicit BinomialPoly2(std::map<std::pair<int, int>, BigInt> coeffs);

  const std::map<std::pair<int, int>, BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k, int l) const;
  int totalDegree() const { return totalDegree_; }
  bool isZero() const { return coeffs_.empty(); }
  BigInt eval(long i, long j) const;

  bool operator==(const BinomialPoly2& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const BinomialPoly2& other) const { return !(*this == other); }

  std::string str() const;

private:
  std::map<std::pair<int, int>, BigInt> coeffs_;  // nonzero entries only
  int totalDegree_ = -1;
};

/// The unique tensor-basis interpolant of the (degCap+1)×(degCap+1) window
/// whose (r,c) entry is window[r][c] = value at (i₀+r, j₀+c). Coefficients
/// with k+l > degCap must vanish; otherwise the window is outside the stable
/// region and NotYetPolynomial is thrown.
BinomialPoly2 interpolate2D(const std::vector<std::vector<BigInt>>& window, long i0, long j0,
                            int degCap);

}  // namespace jmult

#endif
