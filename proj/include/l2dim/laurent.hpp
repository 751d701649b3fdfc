#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "l2dim/rational.hpp"

namespace l2dim {

/// Exponent vector in Z^n; compared lexicographically (a total group order,
/// so leading terms multiply).
using Monomial = std::vector<std::int64_t>;

/// Laurent polynomial over Q in finitely many variables, stored as a sparse
/// exponent-vector -> coefficient map with no zero coefficients.
///
/// A polynomial whose only monomial is empty is a scalar constant and is
/// arity-agnostic: it combines with polynomials of any variable count
/// (needed so that Scalar(0)/Scalar(1) work inside generic matrix code).
/// Nonconstant polynomials carry a fixed arity and mixing arities throws.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_[{}] = Rat(c); }
  LaurentPoly(const Rat& c) { if (c != 0) terms_[{}] = c; }

  static LaurentPoly term(Monomial m, const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }
  /// z_i as an arity-n variable (0-based i).
  static LaurentPoly variable(int i, int n) {
    Monomial m(n, 0);
    m.at(i) = 1;
    return term(std::move(m), Rat(1));
  }

  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  /// Number of variables: -1 for zero/constants, else the common exponent length.
  int arity() const {
    for (const auto& [m, c] : terms_)
      if (!m.empty()) return static_cast<int>(m.size());
    return -1;
  }

  /// Rewrite every monomial at the given arity (constants become zero
  /// vectors), so all keys share one length. No-op for n < 0.
  LaurentPoly lifted(int n) const {
    if (n < 0) return *this;
    LaurentPoly p;
    for (const auto& [m, c] : terms_) {
      if (static_cast<int>(m.size()) == n) p.terms_[m] = c;
      else if (m.empty()) {
        Rat& slot = p.terms_[Monomial(n, 0)];
        slot += c;
        if (slot == 0) p.terms_.erase(Monomial(n, 0));
      } else
        throw DomainError("laurent arity mismatch");
    }
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    int n = joinArity(a, b);
    LaurentPoly x = a.lifted(n), r = b.lifted(n);
    for (const auto& [m, c] : r.terms_) {
      auto it = x.terms_.find(m);
      if (it == x.terms_.end()) x.terms_[m] = c;
      else {
        it->second += c;
        if (it->second == 0) x.terms_.erase(it);
      }
    }
    return x;
  }
  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    int n = joinArity(a, b);
    LaurentPoly x = a.lifted(n), y = b.lifted(n), r;
    for (const auto& [ma, ca] : x.terms_)
      for (const auto& [mb, cb] : y.terms_) {
        Monomial m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
        Rat& slot = r.terms_[m];
        slot += ca * cb;
        if (slot == 0) r.terms_.erase(m);
      }
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    int n = joinArity(a, b);
    return a.lifted(n).terms_ == b.lifted(n).terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Leading term under lex order. Poly must be nonzero.
  std::pair<Monomial, Rat> leading() const {
    if (isZero()) throw DomainError("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  /// Units of Q[z1^+-,...,zn^+-] are exactly the single terms c*z^m.
  bool isUnit() const { return terms_.size() == 1; }
  LaurentPoly unitInverse() const {
    if (!isUnit()) throw DomainError("inverse of a non-unit Laurent polynomial");
    Monomial m = terms_.begin()->first;
    for (auto& e : m) e = -e;
    return term(std::move(m), Rat(1) / terms_.begin()->second);
  }

  long lowDegree() const {
    requireUni("lowDegree");
    if (isZero()) throw DomainError("degree of zero polynomial");
    const Monomial& m = terms_.begin()->first;
    return m.empty() ? 0 : m[0];
  }
  long topDegree() const {
    requireUni("topDegree");
    if (isZero()) throw DomainError("degree of zero polynomial");
    const Monomial& m = terms_.rbegin()->first;
    return m.empty() ? 0 : m[0];
  }
  /// Euclidean size in the univariate ring: topDegree - lowDegree.
  long span() const { return topDegree() - lowDegree(); }

  Rat coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it != terms_.end()) return it->second;
    bool allZero = true;
    for (auto e : m) allZero = allZero && e == 0;
    if (allZero) {
      // constant slot may be stored at a different arity
      for (const auto& key : {Monomial{}, Monomial(std::max(arity(), 0), 0)}) {
        auto c = terms_.find(key);
        if (c != terms_.end()) return c->second;
      }
    }
    return Rat(0);
  }

  /// Evaluate at a point with nonzero rational coordinates.
  Rat evaluate(const std::vector<Rat>& point) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
      Rat v = c;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (point.at(i) == 0) throw DomainError("Laurent evaluation at zero coordinate");
        Int e = m[i] >= 0 ? Int(m[i]) : Int(-m[i]);
        Rat p(1);
        Rat base = m[i] >= 0 ? point[i] : Rat(1) / point[i];
        for (Int k = 0; k < e; ++k) p *= base;
        v *= p;
      }
      total += v;
    }
    return total;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (isZero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      Rat a = abs(c);
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : (m.size() == 1 ? "z" : "z" + std::to_string(i + 1));
        if (m[i] != 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) out += ratToString(a);
      else {
        if (a != 1) out += ratToString(a) + "*";
        out += mono;
      }
    }
    return out;
  }

private:
  static int joinArity(const LaurentPoly& a, const LaurentPoly& b) {
    int na = a.arity(), nb = b.arity();
    if (na == -1) return nb;
    if (nb == -1 || na == nb) return na;
    throw DomainError("laurent arity mismatch");
  }
  void requireUni(const char* op) const {
    if (arity() > 1)
      throw DomainError(std::string(op) + " requires a univariate Laurent polynomial");
  }

  std::map<Monomial, Rat> terms_;
};

/// Exact quotient a/b when b divides a. Leading-term reduction under lex
/// order; the cofactor loses one term per step, so termination is guaranteed
/// exactly when divisibility holds. The iteration cap guards misuse.
inline LaurentPoly laurentExactDiv(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.isZero()) throw DomainError("laurent division by zero");
  LaurentPoly q, rem = a;
  auto [mb, cb] = b.leading();
  std::size_t guard = 0;
  while (!rem.isZero()) {
    if (++guard > 1000000) throw DomainError("laurent exact division does not terminate: not divisible");
    auto [ma, ca] = rem.lifted(b.arity()).leading();
    Monomial m = ma;
    if (!mb.empty()) {
      if (m.empty()) m.assign(mb.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] -= mb[i];
    }
    LaurentPoly t = LaurentPoly::term(std::move(m), ca / cb);
    q += t;
    rem -= t * b;
  }
  return q;
}

/// Division with remainder in the univariate Laurent ring: a = q*b + r with
/// r = 0 or span(r) < span(b). Computed by shifting both operands into
/// ordinary polynomials and dividing there.
inline std::pair<LaurentPoly, LaurentPoly> laurentDivModUni(const LaurentPoly& a,
                                                            const LaurentPoly& b) {
  if (b.isZero()) throw DomainError("laurent division by zero");
  if (a.arity() > 1 || b.arity() > 1)
    throw DomainError("divmod requires univariate Laurent polynomials");
  if (a.isZero()) return {LaurentPoly(), LaurentPoly()};

  long la = a.lowDegree(), lb = b.lowDegree();
  auto dense = [](const LaurentPoly& p, long low) {
    std::vector<Rat> c(static_cast<std::size_t>(p.topDegree() - low) + 1, Rat(0));
    for (const auto& [m, co] : p.terms()) c[static_cast<std::size_t>((m.empty() ? 0 : m[0]) - low)] = co;
    return c;
  };
  std::vector<Rat> na = dense(a, la), nb = dense(b, lb);

  std::vector<Rat> q(na.size() >= nb.size() ? na.size() - nb.size() + 1 : 0, Rat(0));
  // schoolbook division on the shifted (ordinary) polynomials
  for (long i = static_cast<long>(na.size()) - static_cast<long>(nb.size()); i >= 0; --i) {
    Rat f = na[i + nb.size() - 1] / nb.back();
    if (f == 0) continue;
    q[i] = f;
    for (std::size_t j = 0; j < nb.size(); ++j) na[i + j] -= f * nb[j];
  }

  LaurentPoly qp, rp;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) qp += LaurentPoly::term({static_cast<std::int64_t>(i) + la - lb}, q[i]);
  for (std::size_t i = 0; i < na.size(); ++i)
    if (na[i] != 0) rp += LaurentPoly::term({static_cast<std::int64_t>(i) + la}, na[i]);
  return {qp, rp};
}

/// Unit u = c*z^m such that p/u has componentwise-min exponent zero, integer
/// coefficients with content one, and positive leading coefficient.
inline LaurentPoly laurentContentUnit(const LaurentPoly& p) {
  if (p.isZero()) return LaurentPoly(1);
  Monomial low;
  Int g(0), l(1);
  for (const auto& [m, c] : p.terms()) {
    if (low.empty()) low = m;
    else
      for (std::size_t i = 0; i < low.size() && i < m.size(); ++i)
        low[i] = std::min(low[i], m[i]);
    g = gcd(g, numerator(c));
    l = lcm(l, denominator(c));
  }
  Rat content(g, l);
  if (p.leading().second < 0) content = -content;
  return LaurentPoly::term(low, content);
}

}  // namespace l2dim
