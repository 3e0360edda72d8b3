#include "jmult/ratlp.hpp"

#include "jmult/errors.hpp"

namespace jmult {

bool inNewtonPolyhedron(const std::vector<Exponent>& v,
                        const std::vector<std::vector<Exponent>>& points) {
  const size_t n = v.size();
  const size_t m = points.size();
  if (m == 0) return false;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(Errc::VariableMismatch, "point dimension mismatch");
  }
  for (Exponent x : v) {
    if (x < 0) throw Error(Errc::InvalidArgument, "negative point coordinate");
  }

  // max Σλ  s.t.  Σ_g points[g][t]·λ_g + s_t = v_t,  λ, s ≥ 0.
  // Slack basis is feasible (v ≥ 0). Columns 0..m-1 are λ, m..m+n-1 slacks.
  const size_t cols = m + n;
  std::vector<std::vector<Rational>> tab(n, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> rhs(n);
  std::vector<Rational> obj(cols, Rational(0));  // reduced costs
  Rational objValue = 0;
  std::vector<size_t> basis(n);
  for (size_t t = 0; t < n; ++t) {
    for (size_t g = 0; g < m; ++g) tab[t][g] = Rational(points[g][t]);
    tab[t][m + t] = 1;
    rhs[t] = Rational(v[t]);
    basis[t] = m + t;
  }
  for (size_t g = 0; g < m; ++g) obj[g] = 1;

  const Rational one = 1;
  for (;;) {
    if (objValue >= one) return true;
    // Bland: smallest-index improving column.
    size_t enter = cols;
    for (size_t cidx = 0; cidx < cols; ++cidx) {
      if (obj[cidx] > 0) {
        enter = cidx;
        break;
      }
    }
    if (enter == cols) return objValue >= one;
    size_t leave = n;
    Rational bestRatio = 0;
    for (size_t r = 0; r < n; ++r) {
      if (tab[r][enter] > 0) {
        Rational ratio = rhs[r] / tab[r][enter];
        if (leave == n || ratio < bestRatio ||
            (ratio == bestRatio && basis[r] < basis[leave])) {
          leave = r;
          bestRatio = ratio;
        }
      }
    }
    if (leave == n) return true;  // unbounded objective certainly exceeds 1
    // Pivot on (leave, enter).
    Rational pivot = tab[leave][enter];
    for (size_t cidx = 0; cidx < cols; ++cidx) tab[leave][cidx] /= pivot;
    rhs[leave] /= pivot;
    for (size_t r = 0; r < n; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      Rational f = tab[r][enter];
      for (size_t cidx = 0; cidx < cols; ++cidx) tab[r][cidx] -= f * tab[leave][cidx];
      rhs[r] -= f * rhs[leave];
    }
    if (obj[enter] != 0) {
      Rational f = obj[enter];
      for (size_t cidx = 0; cidx < cols; ++cidx) obj[cidx] -= f * tab[leave][cidx];
      objValue += f * rhs[leave];
    }
    basis[leave] = enter;
  }
}

}  // namespace jmult
