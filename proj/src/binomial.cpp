#include "jmult/binomial.hpp"

#include <sstream>

namespace jmult {

BigInt binomial(const BigInt& top, int k) {
  if (k < 0 || top < 0 || top < k) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int t = 1; t <= k; ++t) {
    num *= top - (k - t);
    den *= t;
  }
  return num / den;
}

namespace {

// Gaussian elimination over exact rationals; M is square, b the rhs.
std::vector<Rational> solveLinear(std::vector<std::vector<Rational>> M, std::vector<Rational> b) {
  const size_t n = M.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && M[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(Errc::Internal, "singular interpolation matrix");
    std::swap(M[pivot], M[col]);
    std::swap(b[pivot], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rational factor = M[row][col] / M[col][col];
      for (size_t c2 = col; c2 < n; ++c2) M[row][c2] -= factor * M[col][c2];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (size_t k = 0; k < n; ++k) x[k] = b[k] / M[k][k];
  return x;
}

BigInt requireInteger(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw Error(Errc::NonIntegerCoefficient, "interpolation produced a non-integer coefficient");
  }
  return BigInt(boost::multiprecision::numerator(q));
}

}  // namespace

std::vector<BigInt> solveBinomial1D(const std::vector<BigInt>& values, long x0) {
  const size_t n = values.size();
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t l = 0; l < n; ++l) {
      M[r][l] = Rational(binomial(BigInt(x0) + static_cast<long>(r) + static_cast<long>(l),
                                  static_cast<int>(l)));
    }
    b[r] = Rational(values[r]);
  }
  std::vector<Rational> x = solveLinear(std::move(M), std::move(b));
  std::vector<BigInt> out(n);
  for (size_t l = 0; l < n; ++l) out[l] = requireInteger(x[l]);
  return out;
}

BinomialPoly2::BinomialPoly2(std::map<std::pair<int, int>, BigInt> coeffs) {
  for (auto& [kl, a] : coeffs) {
    if (a != 0) coeffs_.emplace(kl, a);
  }
  totalDegree_ = -1;
  for (const auto& [kl, a] : coeffs_) {
    totalDegree_ = std::max(totalDegree_, kl.first + kl.second);
  }
}

BigInt BinomialPoly2::coeff(int k, int l) const {
  auto it = coeffs_.find({k, l});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BigInt BinomialPoly2::eval(long i, long j) const {
  BigInt v = 0;
  for (const auto& [kl, a] : coeffs_) {
    v += a * binomial(BigInt(i) + kl.first, kl.first) * binomial(BigInt(j) + kl.second, kl.second);
  }
  return v;
}

std::string BinomialPoly2::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [kl, a] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << a << "*C(i+" << kl.first << "," << kl.first << ")*C(j+" << kl.second << ","
        << kl.second << ")";
  }
  return out.str();
}

BinomialPoly2 interpolate2D(const std::vector<std::vector<BigInt>>& window, long i0, long j0,
                            int degCap) {
  const size_t m = static_cast<size_t>(degCap) + 1;
  if (window.size() != m) throw Error(Errc::InvalidArgument, "window size mismatch");
  for (const auto& row : window) {
    if (row.size() != m) throw Error(Errc::InvalidArgument, "window size mismatch");
  }
  // Tensor structure: first resolve each row in j, then each coefficient
  // column in i. Both steps are 1-D solves in the same binomial basis.
  std::vector<std::vector<BigInt>> rowCoeffs(m);  // rowCoeffs[r][l] = g_l(i0+r)
  for (size_t r = 0; r < m; ++r) rowCoeffs[r] = solveBinomial1D(window[r], j0);
  std::map<std::pair<int, int>, BigInt> coeffs;
  for (size_t l = 0; l < m; ++l) {
    std::vector<BigInt> column(m);
    for (size_t r = 0; r < m; ++r) column[r] = rowCoeffs[r][l];
    std::vector<BigInt> a = solveBinomial1D(column, i0);
    for (size_t k = 0; k < m; ++k) {
      if (a[k] == 0) continue;
      if (static_cast<int>(k) + static_cast<int>(l) > degCap) {
        throw Error(Errc::NotYetPolynomial,
                    "tensor coefficient beyond the total-degree cap is nonzero");
      }
      coeffs[{static_cast<int>(k), static_cast<int>(l)}] = a[k];
    }
  }
  return BinomialPoly2(std::move(coeffs));
}

}  // namespace jmult
