#pragma once

#include <variant>

#include "l2dim/matrix.hpp"

namespace l2dim {

/// Base ring of a matrix or module presentation.
struct RingTag {
  enum class Kind { Integers, LaurentUni, LaurentMulti };
  Kind kind = Kind::Integers;
  int vars = 0;  // 0 for Integers, 1 for LaurentUni, n >= 2 for LaurentMulti

  static RingTag integers() { return {Kind::Integers, 0}; }
  static RingTag laurent(int n) {
    if (n < 1) throw DomainError("Laurent ring needs at least one variable");
    return n == 1 ? RingTag{Kind::LaurentUni, 1} : RingTag{Kind::LaurentMulti, n};
  }

  bool isPid() const { return kind != Kind::LaurentMulti; }
  bool isLaurent() const { return kind != Kind::Integers; }

  friend bool operator==(const RingTag& a, const RingTag& b) {
    return a.kind == b.kind && a.vars == b.vars;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::LaurentUni: return "Q[z,z^-1]";
      default: return "Q[z1..z" + std::to_string(vars) + ",inverses]";
    }
  }
};

/// Dense matrix over a tagged ring. Integer matrices keep honest Int entries
/// (the SNF torsion data lives there); Laurent matrices hold LaurentPoly.
struct RingMatrix {
  RingTag ring;
  std::variant<IntMatrix, LaurentMatrix> entries;

  static RingMatrix zero(const RingTag& r, Index rows, Index cols) {
    RingMatrix m;
    m.ring = r;
    if (r.isLaurent()) m.entries = LaurentMatrix(LaurentMatrix::Zero(rows, cols));
    else m.entries = IntMatrix(IntMatrix::Zero(rows, cols));
    return m;
  }
  static RingMatrix fromInt(IntMatrix m) {
    return {RingTag::integers(), std::move(m)};
  }
  static RingMatrix fromLaurent(int vars, LaurentMatrix m) {
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (m(i, j).arity() > vars)
          throw DomainError("matrix entry uses more variables than its ring");
    return {RingTag::laurent(vars), std::move(m)};
  }

  Index rows() const {
    return std::visit([](const auto& m) { return m.rows(); }, entries);
  }
  Index cols() const {
    return std::visit([](const auto& m) { return m.cols(); }, entries);
  }

  const IntMatrix& asInt() const {
    if (ring.isLaurent()) throw DomainError("expected an integer matrix");
    return std::get<IntMatrix>(entries);
  }
  const LaurentMatrix& asLaurent() const {
    if (!ring.isLaurent()) throw DomainError("expected a Laurent matrix");
    return std::get<LaurentMatrix>(entries);
  }

  /// View over the fraction field: integer entries become constant polys only
  /// when a uniform Laurent computation is required (not used for SNF).
  LaurentMatrix toLaurent() const {
    if (ring.isLaurent()) return asLaurent();
    const IntMatrix& m = asInt();
    LaurentMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly(Rat(m(i, j), Int(1)));
    return out;
  }
};

}  // namespace l2dim
