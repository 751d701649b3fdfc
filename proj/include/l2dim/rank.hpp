#pragma once

#include "l2dim/ring.hpp"

namespace l2dim {

namespace detail {

template <class Scalar>
void contentScaleRows(MatrixX<Scalar>&) {}

/// Dividing a row by a unit (or any nonzero scalar) leaves the rank over the
/// fraction field unchanged; doing it up front keeps Bareiss entries small.
inline void contentScaleRows(LaurentMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    int arity = -1;
    for (Index j = 0; j < m.cols(); ++j) arity = std::max(arity, m(i, j).arity());
    Monomial low;
    Int g(0), l(1);
    bool any = false;
    for (Index j = 0; j < m.cols(); ++j) {
      LaurentPoly lifted = m(i, j).lifted(std::max(arity, 0));
      for (const auto& [mono, c] : lifted.terms()) {
        if (!any) low = mono;
        else
          for (std::size_t k = 0; k < low.size(); ++k) low[k] = std::min(low[k], mono[k]);
        any = true;
        g = gcd(g, numerator(c));
        l = lcm(l, denominator(c));
      }
    }
    if (!any) continue;
    LaurentPoly inv = LaurentPoly::term(low, Rat(g, l)).unitInverse();
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * inv;
  }
}

inline void contentScaleRows(IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    Int g(0);
    for (Index j = 0; j < m.cols(); ++j) g = gcd(g, m(i, j));
    if (g > 1)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) /= g;
  }
}

}  // namespace detail

/// Rank over the fraction field of the entry ring, by fraction-free
/// (Bareiss) elimination. Every division is exact in the ring, so the
/// computation never leaves exact arithmetic.
template <class Scalar>
Index fractionFieldRank(MatrixX<Scalar> m) {
  using Ops = RingOps<Scalar>;
  detail::contentScaleRows(m);
  Index r = 0;
  Scalar prev(1);
  while (r < m.rows() && r < m.cols()) {
    // pick the lightest nonzero pivot in the trailing block
    Index pi = -1, pj = -1;
    for (Index i = r; i < m.rows(); ++i)
      for (Index j = r; j < m.cols(); ++j)
        if (!Ops::isZero(m(i, j)) && (pi < 0 || Ops::lighter(m(i, j), m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != r) m.row(pi).swap(m.row(r));
    if (pj != r) m.col(pj).swap(m.col(r));

    for (Index i = r + 1; i < m.rows(); ++i)
      for (Index j = r + 1; j < m.cols(); ++j)
        m(i, j) = Ops::exactDiv(m(r, r) * m(i, j) - m(i, r) * m(r, j), prev);
    prev = m(r, r);
    ++r;
  }
  return r;
}

inline Index fractionFieldRank(const RingMatrix& m) {
  return std::visit([](const auto& e) { return fractionFieldRank(e); }, m.entries);
}

}  // namespace l2dim
