#pragma once

#include <vector>

#include "l2dim/rank.hpp"

namespace l2dim {

/// Chain complex of finitely generated free modules, row convention:
/// an element of degree p is a row vector, and d[p] is the ranks[p] x
/// ranks[p-1] matrix of its boundary (d[0] is unused and kept empty).
template <class Scalar>
struct ChainComplex {
  std::vector<Index> ranks;
  std::vector<MatrixX<Scalar>> d;

  Index topDegree() const { return static_cast<Index>(ranks.size()) - 1; }
};

template <class Scalar>
void validateChainShapes(const ChainComplex<Scalar>& c) {
  if (c.d.size() != c.ranks.size())
    throw DomainError("chain complex needs one differential slot per degree");
  for (std::size_t p = 1; p < c.ranks.size(); ++p)
    if (c.d[p].rows() != c.ranks[p] || c.d[p].cols() != c.ranks[p - 1])
      throw DomainError("differential at degree " + std::to_string(p) + " has wrong shape");
}

/// d o d = 0, checked exactly.
template <class Scalar>
void validateBoundaryComposite(const ChainComplex<Scalar>& c) {
  for (std::size_t p = 2; p < c.ranks.size(); ++p) {
    if (c.ranks[p] == 0 || c.ranks[p - 2] == 0) continue;
    MatrixX<Scalar> prod = c.d[p] * c.d[p - 1];
    if (!isZeroMatrix(prod))
      throw DomainError("boundary composite is nonzero between degrees " + std::to_string(p) +
                        " and " + std::to_string(p - 2));
  }
}

/// Ranks of homology over the fraction field:
/// h_p = nullity(d_p) - rank(d_{p+1}).
template <class Scalar>
std::vector<Index> chainHomologyRanks(const ChainComplex<Scalar>& c) {
  validateChainShapes(c);
  validateBoundaryComposite(c);
  std::size_t n = c.ranks.size();
  std::vector<Index> dRank(n + 1, 0);
  for (std::size_t p = 1; p < n; ++p) dRank[p] = fractionFieldRank(c.d[p]);
  std::vector<Index> h(n);
  for (std::size_t p = 0; p < n; ++p) h[p] = c.ranks[p] - dRank[p] - dRank[p + 1];
  return h;
}

/// Tagged-ring chain complex for file-facing code.
struct FreeChainComplex {
  RingTag ring;
  std::vector<Index> ranks;
  std::vector<RingMatrix> differentials;  // slot 0 unused

  template <class Scalar>
  ChainComplex<Scalar> typed() const;
};

template <>
inline ChainComplex<LaurentPoly> FreeChainComplex::typed<LaurentPoly>() const {
  ChainComplex<LaurentPoly> c;
  c.ranks = ranks;
  c.d.emplace_back();
  for (std::size_t p = 1; p < differentials.size(); ++p) c.d.push_back(differentials[p].toLaurent());
  return c;
}

template <>
inline ChainComplex<Int> FreeChainComplex::typed<Int>() const {
  ChainComplex<Int> c;
  c.ranks = ranks;
  c.d.emplace_back();
  for (std::size_t p = 1; p < differentials.size(); ++p) c.d.push_back(differentials[p].asInt());
  return c;
}

inline std::vector<Index> chainHomologyRanks(const FreeChainComplex& c) {
  if (c.ring.isLaurent()) return chainHomologyRanks(c.typed<LaurentPoly>());
  return chainHomologyRanks(c.typed<Int>());
}

}  // namespace l2dim
