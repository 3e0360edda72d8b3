#include "jmult/monomial.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>

namespace jmult {

namespace {

Exponent checkedAdd(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw Error(Errc::InvalidArgument, "exponent overflow");
  }
  return a + b;
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)), degree_(0) {
  for (Exponent e : exps_) {
    if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
    degree_ = checkedAdd(degree_, e);
  }
}

Monomial Monomial::one(int nvars) {
  return Monomial(std::vector<Exponent>(static_cast<size_t>(nvars), 0));
}

bool Monomial::divides(const Monomial& u) const {
  if (nvars() != u.nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  if (degree_ > u.degree_) return false;
  for (size_t t = 0; t < exps_.size(); ++t) {
    if (exps_[t] > u.exps_[t]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  std::vector<Exponent> e(exps_.size());
  for (size_t t = 0; t < exps_.size(); ++t) e[t] = checkedAdd(exps_[t], other.exps_[t]);
  return Monomial(std::move(e));
}

Monomial Monomial::power(Exponent k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative power");
  std::vector<Exponent> e(exps_.size());
  for (size_t t = 0; t < exps_.size(); ++t) {
    if (k != 0 && exps_[t] > std::numeric_limits<Exponent>::max() / k) {
      throw Error(Errc::InvalidArgument, "exponent overflow");
    }
    e[t] = exps_[t] * k;
  }
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (nvars() != other.nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  std::vector<Exponent> e(exps_.size());
  for (size_t t = 0; t < exps_.size(); ++t) e[t] = std::min(exps_[t], other.exps_[t]);
  return Monomial(std::move(e));
}

Monomial Monomial::colonBy(const Monomial& u) const {
  if (nvars() != u.nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  std::vector<Exponent> e(exps_.size());
  for (size_t t = 0; t < exps_.size(); ++t) e[t] = std::max<Exponent>(exps_[t] - u.exps_[t], 0);
  return Monomial(std::move(e));
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
  if (vars.size() != exps_.size()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  std::ostringstream out;
  bool first = true;
  for (size_t t = 0; t < exps_.size(); ++t) {
    if (exps_[t] == 0) continue;
    if (!first) out << ' ';
    first = false;
    out << vars[t];
    if (exps_[t] > 1) out << '^' << exps_[t];
  }
  if (first) out << '1';
  return out.str();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.lexLess(b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return a.lexLess(b); });
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)) {
  for (const Monomial& g : gens) {
    if (g.nvars() != nvars()) throw Error(Errc::VariableMismatch, "generator variable count mismatch");
  }
  gens_ = minimalize(std::move(gens));
  zero_ = gens_.empty();
  maxGenDegree_ = 0;
  minGenDegree_ = 0;
  if (!zero_) {
    minGenDegree_ = gens_.front().degree();
    for (const Monomial& g : gens_) {
      maxGenDegree_ = std::max(maxGenDegree_, g.degree());
      minGenDegree_ = std::min(minGenDegree_, g.degree());
    }
  }
}

MonomialIdeal MonomialIdeal::zeroIdeal(std::vector<std::string> vars) {
  return MonomialIdeal(std::move(vars), {});
}

MonomialIdeal MonomialIdeal::unitIdeal(std::vector<std::string> vars) {
  int n = static_cast<int>(vars.size());
  return MonomialIdeal(std::move(vars), {Monomial::one(n)});
}

bool MonomialIdeal::isUnit() const {
  return gens_.size() == 1 && gens_.front().degree() == 0;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  if (u.nvars() != nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  for (const Monomial& g : gens_) {
    if (g.divides(u)) return true;
  }
  return false;
}

bool MonomialIdeal::containsIdeal(const MonomialIdeal& other) const {
  if (vars_ != other.vars_) throw Error(Errc::VariableMismatch, "ambient variable sets differ");
  if (other.isZero()) return true;
  for (const Monomial& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::string MonomialIdeal::cacheKey() const {
  std::ostringstream out;
  for (const std::string& v : vars_) out << v << ' ';
  out << ';';
  for (const Monomial& g : gens_) {
    for (Exponent e : g.exponents()) out << e << ',';
    out << '|';
  }
  return out.str();
}

std::string MonomialIdeal::str() const {
  if (zero_) return "(0)";
  std::ostringstream out;
  out << '(';
  for (size_t k = 0; k < gens_.size(); ++k) {
    if (k) out << ", ";
    out << gens_[k].str(vars_);
  }
  out << ')';
  return out.str();
}

namespace {

void requireSameVars(const MonomialIdeal& K, const MonomialIdeal& L) {
  if (K.vars() != L.vars()) throw Error(Errc::VariableMismatch, "ambient variable sets differ");
}

}  // namespace

MonomialIdeal idealSum(const MonomialIdeal& K, const MonomialIdeal& L) {
  requireSameVars(K, L);
  std::vector<Monomial> gens = K.gens();
  gens.insert(gens.end(), L.gens().begin(), L.gens().end());
  return MonomialIdeal(K.vars(), std::move(gens));
}

MonomialIdeal idealProduct(const MonomialIdeal& K, const MonomialIdeal& L) {
  requireSameVars(K, L);
  if (K.isZero() || L.isZero()) return MonomialIdeal::zeroIdeal(K.vars());
  std::vector<Monomial> gens;
  gens.reserve(K.gens().size() * L.gens().size());
  for (const Monomial& a : K.gens()) {
    for (const Monomial& b : L.gens()) gens.push_back(a.times(b));
  }
  return MonomialIdeal(K.vars(), std::move(gens));
}

MonomialIdeal colonByMonomial(const MonomialIdeal& K, const Monomial& u) {
  if (u.nvars() != K.nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  if (K.isZero()) return K;
  std::vector<Monomial> gens;
  gens.reserve(K.gens().size());
  for (const Monomial& g : K.gens()) gens.push_back(g.colonBy(u));
  return MonomialIdeal(K.vars(), std::move(gens));
}

ScaledSum::ScaledSum(std::vector<Term> terms) : terms_(std::move(terms)), nvars_(0) {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "ScaledSum needs at least one term");
  nvars_ = terms_.front().ideal.nvars();
  for (const Term& t : terms_) {
    if (t.ideal.vars() != terms_.front().ideal.vars()) {
      throw Error(Errc::VariableMismatch, "ambient variable sets differ");
    }
    if (t.shift < 0) throw Error(Errc::InvalidArgument, "negative shift");
  }
}

ScaledSum::ScaledSum(const MonomialIdeal& ideal, Exponent shift)
    : ScaledSum(std::vector<Term>{Term{ideal, shift}}) {}

bool ScaledSum::contains(const Monomial& u) const {
  if (u.nvars() != nvars_) throw Error(Errc::VariableMismatch, "variable count mismatch");
  for (const Term& t : terms_) {
    for (const Monomial& g : t.ideal.gens()) {
      if (g.divides(u) && u.degree() - g.degree() >= t.shift) return true;
    }
  }
  return false;
}

Exponent ScaledSum::stabilizationDegree() const {
  Exponent d = 0;
  for (const Term& t : terms_) {
    if (t.ideal.isZero()) continue;
    d = std::max(d, t.shift + t.ideal.maxGenDegree());
  }
  return d;
}

Exponent ScaledSum::maxShift() const {
  Exponent s = 0;
  for (const Term& t : terms_) {
    if (!t.ideal.isZero()) s = std::max(s, t.shift);
  }
  return s;
}

Exponent ScaledSum::maxGenDegree() const {
  Exponent d = 0;
  for (const Term& t : terms_) {
    if (!t.ideal.isZero()) d = std::max(d, t.ideal.maxGenDegree());
  }
  return d;
}

bool ScaledSum::allZero() const {
  for (const Term& t : terms_) {
    if (!t.ideal.isZero()) return false;
  }
  return true;
}

void forEachMonomialOfDegree(int nvars, Exponent D,
                             const std::function<void(const std::vector<Exponent>&)>& fn) {
  if (nvars <= 0) {
    if (D == 0) {
      static const std::vector<Exponent> empty;
      fn(empty);
    }
    return;
  }
  std::vector<Exponent> buf(static_cast<size_t>(nvars), 0);
  // Distribute D over positions t..n-1; the last variable takes the remainder.
  std::function<void(int, Exponent)> rec = [&](int t, Exponent rest) {
    if (t == nvars - 1) {
      buf[static_cast<size_t>(t)] = rest;
      fn(buf);
      return;
    }
    for (Exponent e = rest; e >= 0; --e) {
      buf[static_cast<size_t>(t)] = e;
      rec(t + 1, rest - e);
    }
  };
  rec(0, D);
}

BigInt countBetween(const ScaledSum& U, const ScaledSum& V, Exponent ceilingOverride) {
  if (U.nvars() != V.nvars()) throw Error(Errc::VariableMismatch, "variable count mismatch");
  if (U.allZero()) return 0;
  const Exponent dMin = U.stabilizationDegree();
  Exponent ceiling = ceilingOverride;
  if (ceiling < 0) {
    ceiling = std::max(U.maxShift(), V.maxShift()) + std::max(U.maxGenDegree(), V.maxGenDegree()) +
              U.nvars() + 8;
  }
  BigInt total = 0;
  for (Exponent D = 0;; ++D) {
    long long atD = 0;
    forEachMonomialOfDegree(U.nvars(), D, [&](const std::vector<Exponent>& e) {
      Monomial u(e);
      if (U.contains(u) && !V.contains(u)) ++atD;
    });
    total += atD;
    if (D >= dMin && atD == 0) return total;
    if (D >= ceiling) {
      throw Error(Errc::NonFiniteLength,
                  "count did not stabilize by degree " + std::to_string(ceiling));
    }
  }
}

std::optional<MonomialIdeal> PowerCache::lookup(const std::string& key, int n) const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  auto it = ladders_.find(key);
  if (it == ladders_.end()) return std::nullopt;
  if (static_cast<size_t>(n) >= it->second.size()) return std::nullopt;
  return it->second[static_cast<size_t>(n)];
}

void PowerCache::store(const std::string& key, int n, const MonomialIdeal& value) {
  std::unique_lock<std::shared_mutex> lock(mutex_);
  auto& ladder = ladders_[key];
  if (static_cast<size_t>(n) < ladder.size()) return;  // raced; first writer wins
  if (static_cast<size_t>(n) != ladder.size()) {
    throw Error(Errc::Internal, "power cache ladder gap");
  }
  ladder.push_back(value);
}

MonomialIdeal PowerCache::power(const MonomialIdeal& K, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative ideal power");
  if (K.isZero()) {
    return n == 0 ? MonomialIdeal::unitIdeal(K.vars()) : K;
  }
  const std::string key = K.cacheKey();
  if (auto hit = lookup(key, n)) return *hit;
  // Fill the ladder bottom-up so store() never sees a gap. Another thread may
  // extend the ladder between the miss and this read, possibly past n.
  MonomialIdeal current = MonomialIdeal::unitIdeal(K.vars());
  int from = 0;
  {
    std::shared_lock<std::shared_mutex> lock(mutex_);
    auto it = ladders_.find(key);
    if (it != ladders_.end() && !it->second.empty()) {
      if (static_cast<int>(it->second.size()) > n) return it->second[static_cast<size_t>(n)];
      from = static_cast<int>(it->second.size()) - 1;
      current = it->second.back();
    }
  }
  if (from == 0) store(key, 0, current);
  for (int k = from + 1; k <= n; ++k) {
    current = idealProduct(current, K);
    store(key, k, current);
  }
  return current;
}

size_t PowerCache::entries() const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  size_t n = 0;
  for (const auto& [key, ladder] : ladders_) n += ladder.size();
  return n;
}

size_t PowerCache::memoryBytes() const {
  std::shared_lock<std::shared_mutex> lock(mutex_);
  size_t bytes = 0;
  for (const auto& [key, ladder] : ladders_) {
    bytes += key.size();
    for (const MonomialIdeal& ideal : ladder) {
      bytes += sizeof(MonomialIdeal);
      bytes += ideal.gens().size() * (sizeof(Monomial) + sizeof(Exponent) * ideal.nvars());
    }
  }
  return bytes;
}

void PowerCache::clear() {
  std::unique_lock<std::shared_mutex> lock(mutex_);
  ladders_.clear();
}

}  // namespace jmult
