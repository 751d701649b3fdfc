#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace l2dim {

/// Arbitrary-precision integer (GMP-backed).
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always reduced with positive denominator.
/// Construct from integer pairs (which canonicalize); avoid the "a/b" string
/// constructor, which does not.
using Rat = boost::multiprecision::mpq_rational;

/// Raised when an operation's mathematical precondition is violated
/// (wrong ring, invalid group table, nonzero boundary composite, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed input files or flag values.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parse "n" or "n/d" into a reduced rational.
inline Rat parseRat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s), Int(1));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: " + s);
  }
}

inline std::string ratToString(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// A value in [0, +inf]: the common carrier for dimensions, Betti numbers
/// and cell-weight sums. Finite values are nonnegative rationals.
class ExtDim {
public:
  ExtDim() : value_(Rat(0)) {}
  ExtDim(const Rat& v) : value_(v) {
    if (v < 0) throw DomainError("ExtDim must be nonnegative, got " + ratToString(v));
  }
  ExtDim(long v) : ExtDim(Rat(v)) {}

  static ExtDim infinity() {
    ExtDim d;
    d.value_.reset();
    return d;
  }

  bool isFinite() const { return value_.has_value(); }
  /// Finite value; throws if infinite.
  const Rat& finite() const {
    if (!value_) throw DomainError("infinite ExtDim has no finite value");
    return *value_;
  }

  friend ExtDim operator+(const ExtDim& a, const ExtDim& b) {
    if (!a.isFinite() || !b.isFinite()) return infinity();
    return ExtDim(a.finite() + b.finite());
  }
  friend bool operator==(const ExtDim& a, const ExtDim& b) {
    if (a.isFinite() != b.isFinite()) return false;
    return !a.isFinite() || a.finite() == b.finite();
  }
  friend bool operator!=(const ExtDim& a, const ExtDim& b) { return !(a == b); }
  friend bool operator<(const ExtDim& a, const ExtDim& b) {
    if (!a.isFinite()) return false;
    if (!b.isFinite()) return true;
    return a.finite() < b.finite();
  }
  friend bool operator<=(const ExtDim& a, const ExtDim& b) { return a < b || a == b; }

  std::string str() const { return isFinite() ? ratToString(finite()) : "inf"; }

private:
  std::optional<Rat> value_;
};

/// floor(x^(1/k)) for nonnegative x.
inline Int floorKthRoot(const Int& x, unsigned k) {
  if (x < 0) throw DomainError("floorKthRoot of negative value");
  if (x == 0 || k == 1) return x;
  Int lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, k) <= x) hi <<= 1;
  while (lo < hi - 1) {
    Int mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, k) <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

/// Decimal string of r^(1/k) truncated to `digits` fraction digits, for
/// rational r in [0,1]. Exact integer arithmetic throughout.
inline std::string kthRootDecimal(const Rat& r, unsigned k, unsigned digits) {
  if (r < 0 || r > 1) throw DomainError("kthRootDecimal expects r in [0,1]");
  Int scale = boost::multiprecision::pow(Int(10), digits * k);
  Int scaled = numerator(r) * scale / denominator(r);
  Int root = floorKthRoot(scaled, k);  // floor(10^digits * r^(1/k))
  std::string s = root.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

}  // namespace l2dim
