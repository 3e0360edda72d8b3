#ifndef JMULT_MONOMIAL_HPP
#define JMULT_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "jmult/bigint.hpp"
#include "jmult/errors.hpp"

namespace jmult {

using Exponent = std::int64_t;

/// A monomial in a fixed number of variables: an exponent vector plus its
/// cached total degree. Immutable after construction.
class Monomial {
public:
  explicit Monomial(std::vector<Exponent> exps);
  static Monomial one(int nvars);

  int nvars() const { return static_cast<int>(exps_.size()); }
  Exponent degree() const { return degree_; }
  Exponent exponent(int t) const { return exps_[static_cast<size_t>(t)]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool divides(const Monomial& u) const;
  Monomial times(const Monomial& other) const;  // overflow-checked
  Monomial power(Exponent k) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, u): the generator image under the colon by u.
  Monomial colonBy(const Monomial& u) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
  /// Lexicographic order on exponent vectors; the canonical generator order.
  bool lexLess(const Monomial& other) const { return exps_ < other.exps_; }

  std::string str(const std::vector<std::string>& vars) const;

private:
  std::vector<Exponent> exps_;
  Exponent degree_;
};

/// A monomial ideal held by its minimal generating set, kept sorted
/// lexicographically so equal ideals compare equal. The zero ideal is a
/// distinct value with an explicit flag, never an empty generator list
/// read ambiguously.
class MonomialIdeal {
public:
  /// Minimalizes and sorts; duplicate or divisible generators are dropped.
  MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens);
  static MonomialIdeal zeroIdeal(std::vector<std::string> vars);
  static MonomialIdeal unitIdeal(std::vector<std::string> vars);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool isZero() const { return zero_; }
  bool isUnit() const;
  /// True when I = A or I = (0) — the report operations reject both.
  bool isProper() const { return !isZero() && !isUnit(); }
  Exponent maxGenDegree() const { return maxGenDegree_; }
  Exponent minGenDegree() const { return minGenDegree_; }

  bool contains(const Monomial& u) const;
  /// other ⊆ this (every generator of other is a member of this).
  bool containsIdeal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& other) const {
    return zero_ == other.zero_ && vars_ == other.vars_ && gens_ == other.gens_;
  }
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

  /// Canonical cache key: the sorted minimal generator list, flattened.
  std::string cacheKey() const;
  std::string str() const;

private:
  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
  bool zero_ = false;
  Exponent maxGenDegree_ = 0;
  Exponent minGenDegree_ = 0;
};

MonomialIdeal idealSum(const MonomialIdeal& K, const MonomialIdeal& L);
MonomialIdeal idealProduct(const MonomialIdeal& K, const MonomialIdeal& L);
MonomialIdeal colonByMonomial(const MonomialIdeal& K, const Monomial& u);

/// Drops generators divisible by another; sorts lexicographically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Σ_t m^{shift_t}·K_t, kept symbolic. Membership is a divisibility test per
/// term; the shifted maximal-ideal factors are never materialized.
class ScaledSum {
public:
  struct Term {
    MonomialIdeal ideal;
    Exponent shift;
  };

  explicit ScaledSum(std::vector<Term> terms);
  ScaledSum(const MonomialIdeal& ideal, Exponent shift = 0);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool contains(const Monomial& u) const;
  /// Degree from which on every member has a same-term divisor one degree
  /// down: max over nonzero terms of (shift + maxGenDegree). The counting
  /// stop rule is only sound at or beyond this degree.
  Exponent stabilizationDegree() const;
  /// Largest shift and largest generator degree over nonzero terms.
  Exponent maxShift() const;
  Exponent maxGenDegree() const;
  bool allZero() const;

private:
  std::vector<Term> terms_;
  int nvars_;
};

/// #{monomials u : u ∈ U, u ∉ V}, by increasing degree, with the finiteness
/// certificate: once D ≥ U.stabilizationDegree() and no monomial of U \ V has
/// degree exactly D, nothing contributes at higher degree. Throws
/// NonFiniteLength past the ceiling (default: max shift + max generator degree
/// over all terms of U and V, plus nvars + 8).
BigInt countBetween(const ScaledSum& U, const ScaledSum& V, Exponent ceilingOverride = -1);

/// Visits every exponent vector of total degree exactly D (lexicographic
/// order); buf has nvars entries and is reused between calls.
void forEachMonomialOfDegree(int nvars, Exponent D,
                             const std::function<void(const std::vector<Exponent>&)>& fn);

/// Power ladders keyed by the canonical generator list. K⁰ is the unit ideal.
/// Concurrent reads share a lock; insertion is exclusive. Powers are computed
/// outside the lock, so a race costs duplicate work, never a wrong value.
class PowerCache {
public:
  MonomialIdeal power(const MonomialIdeal& K, int n);
  size_t entries() const;
  size_t memoryBytes() const;
  void clear();

private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::vector<MonomialIdeal>> ladders_;

  std::optional<MonomialIdeal> lookup(const std::string& key, int n) const;
  void store(const std::string& key, int n, const MonomialIdeal& value);
};

}  // namespace jmult

#endif
