#pragma once

#include "l2dim/ring.hpp"

namespace l2dim {

/// Diagonalization U*A*V = S over a Euclidean ring, with d1 | d2 | ... on the
/// diagonal. U, V are unimodular; their inverses are tracked alongside so
/// consumers (saturation, torsion splitting) never invert anything.
struct SNFResult {
  RingMatrix S;
  RingMatrix U, V;
  RingMatrix Uinv, Vinv;

  Index diagonalRank() const;
};

namespace detail {

/// Euclidean structure used by the SNF sweep.
template <class Scalar>
struct EuclideanOps;

template <>
struct EuclideanOps<Int> {
  static bool isZero(const Int& x) { return x == 0; }
  static Int size(const Int& x) { return abs(x); }
  // truncated division: |r| < |b|
  static std::pair<Int, Int> divMod(const Int& a, const Int& b) {
    Int q = a / b;
    return {q, a - q * b};
  }
  static bool isUnit(const Int& x) { return x == 1 || x == -1; }
  /// Unit u with u*x canonical (nonnegative).
  static Int canonicalUnit(const Int& x) { return x < 0 ? Int(-1) : Int(1); }
  static Int unitInverse(const Int& u) { return u; }
  static bool divides(const Int& a, const Int& b) { return a != 0 && b % a == 0; }
};

template <>
struct EuclideanOps<LaurentPoly> {
  static bool isZero(const LaurentPoly& x) { return x.isZero(); }
  static Int size(const LaurentPoly& x) { return Int(x.span()); }
  static std::pair<LaurentPoly, LaurentPoly> divMod(const LaurentPoly& a, const LaurentPoly& b) {
    return laurentDivModUni(a, b);
  }
  static bool isUnit(const LaurentPoly& x) { return x.isUnit(); }
  /// Unit u with u*x monic and supported in degrees 0..span.
  static LaurentPoly canonicalUnit(const LaurentPoly& x) {
    return LaurentPoly::term({-x.lowDegree()}, Rat(1) / x.leading().second);
  }
  static LaurentPoly unitInverse(const LaurentPoly& u) { return u.unitInverse(); }
  static bool divides(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.isZero()) return false;
    return laurentDivModUni(b, a).second.isZero();
  }
};

template <class Scalar>
struct SmithState {
  MatrixX<Scalar> a, u, v, ui, vi;

  explicit SmithState(MatrixX<Scalar> m) : a(std::move(m)) {
    u = MatrixX<Scalar>::Identity(a.rows(), a.rows());
    ui = u;
    v = MatrixX<Scalar>::Identity(a.cols(), a.cols());
    vi = v;
  }

  void rowSwap(Index i, Index j) {
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
    ui.col(i).swap(ui.col(j));
  }
  void colSwap(Index i, Index j) {
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    vi.row(i).swap(vi.row(j));
  }
  // row i += c * row j
  void rowAdd(Index i, Index j, const Scalar& c) {
    a.row(i) += c * a.row(j).eval();
    u.row(i) += c * u.row(j).eval();
    ui.col(j) -= c * ui.col(i).eval();
  }
  // col i += c * col j
  void colAdd(Index i, Index j, const Scalar& c) {
    a.col(i) += c * a.col(j).eval();
    v.col(i) += c * v.col(j).eval();
    vi.row(j) -= c * vi.row(i).eval();
  }
  void rowScale(Index i, const Scalar& unit) {
    Scalar inv = EuclideanOps<Scalar>::unitInverse(unit);
    for (Index k = 0; k < a.cols(); ++k) a(i, k) = unit * a(i, k);
    for (Index k = 0; k < u.cols(); ++k) u(i, k) = unit * u(i, k);
    for (Index k = 0; k < ui.rows(); ++k) ui(k, i) = ui(k, i) * inv;
  }
};

template <class Scalar>
void smithSweep(SmithState<Scalar>& st) {
  using Ops = EuclideanOps<Scalar>;
  MatrixX<Scalar>& a = st.a;
  Index t = 0;
  while (t < a.rows() && t < a.cols()) {
    // lightest nonzero entry of the trailing block becomes the pivot
    Index pi = -1, pj = -1;
    for (Index i = t; i < a.rows(); ++i)
      for (Index j = t; j < a.cols(); ++j)
        if (!Ops::isZero(a(i, j)) &&
            (pi < 0 || Ops::size(a(i, j)) < Ops::size(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) st.rowSwap(pi, t);
    if (pj != t) st.colSwap(pj, t);

    bool settled = false;
    while (!settled) {
      settled = true;
      for (Index i = t + 1; i < a.rows(); ++i) {
        if (Ops::isZero(a(i, t))) continue;
        auto [q, r] = Ops::divMod(a(i, t), a(t, t));
        st.rowAdd(i, t, Scalar(0) - q);
        if (!Ops::isZero(r)) {
          st.rowSwap(i, t);  // strictly smaller pivot, start over
          settled = false;
        }
      }
      if (!settled) continue;
      for (Index j = t + 1; j < a.cols(); ++j) {
        if (Ops::isZero(a(t, j))) continue;
        auto [q, r] = Ops::divMod(a(t, j), a(t, t));
        st.colAdd(j, t, Scalar(0) - q);
        if (!Ops::isZero(r)) {
          st.colSwap(j, t);
          settled = false;
        }
      }
      if (!settled) continue;
      // pivot must divide the whole trailing block for the chain condition
      for (Index i = t + 1; i < a.rows() && settled; ++i)
        for (Index j = t + 1; j < a.cols() && settled; ++j)
          if (!Ops::isZero(a(i, j)) && !Ops::divides(a(t, t), a(i, j))) {
            st.rowAdd(t, i, Scalar(1));
            settled = false;
          }
    }
    ++t;
  }
  // canonical associates on the diagonal
  for (Index i = 0; i < a.rows() && i < a.cols(); ++i)
    if (!Ops::isZero(a(i, i))) {
      Scalar unit = Ops::canonicalUnit(a(i, i));
      if (!(unit == Scalar(1))) st.rowScale(i, unit);
    }
}

}  // namespace detail

template <class Scalar>
detail::SmithState<Scalar> smithNormalFormTyped(const MatrixX<Scalar>& m) {
  detail::SmithState<Scalar> st(m);
  detail::smithSweep(st);
  return st;
}

/// Smith normal form over a PID (integers or univariate Laurent ring).
inline SNFResult smithNormalForm(const RingMatrix& m) {
  if (!m.ring.isPid())
    throw DomainError("Smith normal form requires a PID ring (integers or one Laurent variable), got " +
                      m.ring.str());
  SNFResult out;
  auto pack = [&](auto st) {
    using S = decltype(st.a(0, 0));
    auto wrap = [&](MatrixX<std::decay_t<S>> mat) {
      RingMatrix rm;
      rm.ring = m.ring;
      rm.entries = std::move(mat);
      return rm;
    };
    out.S = wrap(std::move(st.a));
    out.U = wrap(std::move(st.u));
    out.V = wrap(std::move(st.v));
    out.Uinv = wrap(std::move(st.ui));
    out.Vinv = wrap(std::move(st.vi));
  };
  if (m.ring.isLaurent()) pack(smithNormalFormTyped(m.asLaurent()));
  else pack(smithNormalFormTyped(m.asInt()));
  return out;
}

inline Index SNFResult::diagonalRank() const {
  Index r = 0;
  std::visit(
      [&](const auto& s) {
        using Sc = std::decay_t<decltype(s(0, 0))>;
        for (Index i = 0; i < s.rows() && i < s.cols(); ++i)
          if (!(s(i, i) == Sc(0))) ++r;
      },
      S.entries);
  return r;
}

}  // namespace l2dim
