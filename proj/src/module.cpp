#include "l2dim/module.hpp"

namespace l2dim {

FGModulePresentation FGModulePresentation::free(const RingTag& ring, Index rank) {
  FGModulePresentation m;
  m.ring = ring;
  m.generatorCount = rank;
  m.relations = RingMatrix::zero(ring, 0, rank);
  return m;
}

FGModulePresentation FGModulePresentation::cokernel(RingMatrix relations) {
  FGModulePresentation m;
  m.ring = relations.ring;
  m.generatorCount = relations.cols();
  m.relations = std::move(relations);
  return m;
}

ExtDim extendedDimension(const FGModulePresentation& m) {
  m.requirePid();
  return ExtDim(Rat(Int(m.generatorCount - fractionFieldRank(m.relations)), Int(1)));
}

TorsionProjectiveSplit torsionProjectiveSplit(const FGModulePresentation& m) {
  m.requirePid();
  SNFResult snf = smithNormalForm(m.relations);
  TorsionProjectiveSplit out;

  std::visit(
      [&](const auto& s) {
        using Sc = std::decay_t<decltype(s(0, 0))>;
        std::vector<Sc> torsionDivisors;
        Index nonzero = 0;
        for (Index i = 0; i < s.rows() && i < s.cols(); ++i) {
          if (s(i, i) == Sc(0)) continue;
          ++nonzero;
          if (!detail::EuclideanOps<Sc>::isUnit(s(i, i))) torsionDivisors.push_back(s(i, i));
        }
        out.projectiveRank = m.generatorCount - nonzero;
        MatrixX<Sc> diag = MatrixX<Sc>::Zero(torsionDivisors.size(), torsionDivisors.size());
        for (std::size_t i = 0; i < torsionDivisors.size(); ++i)
          diag(static_cast<Index>(i), static_cast<Index>(i)) = torsionDivisors[i];
        RingMatrix rm;
        rm.ring = m.ring;
        rm.entries = std::move(diag);
        out.torsion = FGModulePresentation::cokernel(std::move(rm));
      },
      snf.S.entries);
  return out;
}

RingMatrix stackRows(const RingMatrix& a, const RingMatrix& b) {
  if (!(a.ring == b.ring)) throw DomainError("cannot stack matrices over different rings");
  if (a.cols() != b.cols()) throw DomainError("cannot stack matrices with different column counts");
  RingMatrix out;
  out.ring = a.ring;
  std::visit(
      [&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        const M& mb = std::get<M>(b.entries);
        M stacked(ma.rows() + mb.rows(), ma.cols());
        stacked.topRows(ma.rows()) = ma;
        stacked.bottomRows(mb.rows()) = mb;
        out.entries = std::move(stacked);
      },
      a.entries);
  return out;
}

SubmoduleSpec closure(const SubmoduleSpec& k) {
  k.ambient.requirePid();
  if (k.generators.cols() != k.ambient.generatorCount)
    throw DomainError("submodule generator length does not match the ambient generator count");

  RingMatrix combined = stackRows(k.ambient.relations, k.generators);
  SNFResult snf = smithNormalForm(combined);

  // x maps to torsion in M/K  <=>  r*x lies in the combined row span for
  // some nonzero r  <=>  in SNF coordinates x is supported on the nonzero
  // diagonal positions; pulling back means taking those rows of V^-1.
  SubmoduleSpec out;
  out.ambient = k.ambient;
  std::visit(
      [&](const auto& s) {
        using Sc = std::decay_t<decltype(s(0, 0))>;
        const MatrixX<Sc>& vinv = std::get<MatrixX<Sc>>(snf.Vinv.entries);
        std::vector<Index> keep;
        for (Index i = 0; i < s.rows() && i < s.cols(); ++i)
          if (!(s(i, i) == Sc(0))) keep.push_back(i);
        MatrixX<Sc> gens(keep.size(), vinv.cols());
        for (std::size_t r = 0; r < keep.size(); ++r) gens.row(r) = vinv.row(keep[r]);
        RingMatrix rm;
        rm.ring = k.ambient.ring;
        rm.entries = std::move(gens);
        out.generators = std::move(rm);
      },
      snf.S.entries);
  return out;
}

bool rowSpanContains(const RingMatrix& span, const RingMatrix& rowVector) {
  if (rowVector.rows() != 1 || rowVector.cols() != span.cols())
    throw DomainError("membership query expects a single row vector of matching width");
  SNFResult snf = smithNormalForm(span);
  bool inside = true;
  // x in rowspan(B)  <=>  x*V is divisible entrywise by the SNF diagonal
  std::visit(
      [&](const auto& s) {
        using Sc = std::decay_t<decltype(s(0, 0))>;
        const MatrixX<Sc>& v = std::get<MatrixX<Sc>>(snf.V.entries);
        const MatrixX<Sc>& x = std::get<MatrixX<Sc>>(rowVector.entries);
        MatrixX<Sc> y = x * v;
        for (Index j = 0; j < y.cols(); ++j) {
          Sc d = (j < s.rows() && j < s.cols()) ? s(j, j) : Sc(0);
          if (d == Sc(0)) {
            if (!(y(0, j) == Sc(0))) inside = false;
          } else if (!detail::EuclideanOps<Sc>::divides(d, y(0, j))) {
            inside = false;
          }
        }
      },
      snf.S.entries);
  return inside;
}

ExtDim spanDimension(const SubmoduleSpec& k) {
  k.ambient.requirePid();
  if (k.generators.cols() != k.ambient.generatorCount)
    throw DomainError("submodule generator length does not match the ambient generator count");
  Index total = fractionFieldRank(stackRows(k.ambient.relations, k.generators));
  Index rel = fractionFieldRank(k.ambient.relations);
  return ExtDim(Rat(Int(total - rel), Int(1)));
}

namespace {

/// Presentation of the mapping telescope of M_0 -> ... -> M_k:
/// generators are all blocks, relations identify x with its image one step on.
FGModulePresentation telescopePresentation(const DirectedChain& chain) {
  Index total = 0;
  for (Index r : chain.ranks) total += r;
  Index relRows = total - chain.ranks.back();

  RingMatrix rel = RingMatrix::zero(chain.ring, relRows, total);
  std::visit(
      [&](auto& rm) {
        using Sc = std::decay_t<decltype(rm(0, 0))>;
        Index rowBase = 0, colBase = 0;
        for (std::size_t i = 0; i + 1 < chain.ranks.size(); ++i) {
          const auto& phi = std::get<MatrixX<Sc>>(chain.maps[i].entries);
          for (Index r = 0; r < chain.ranks[i]; ++r) {
            rm(rowBase + r, colBase + r) = Sc(1);
            for (Index c = 0; c < chain.ranks[i + 1]; ++c)
              rm(rowBase + r, colBase + chain.ranks[i] + c) = Sc(0) - phi(r, c);
          }
          rowBase += chain.ranks[i];
          colBase += chain.ranks[i];
        }
      },
      rel.entries);
  return FGModulePresentation::cokernel(std::move(rel));
}

}  // namespace

ColimitDimension colimitDimension(const DirectedChain& chain) {
  if (chain.maps.empty()) throw DomainError("directed chain needs at least one map");
  if (chain.maps.size() + 1 != chain.ranks.size())
    throw DomainError("directed chain needs one map between consecutive modules");
  for (std::size_t i = 0; i < chain.maps.size(); ++i)
    if (chain.maps[i].rows() != chain.ranks[i] || chain.maps[i].cols() != chain.ranks[i + 1])
      throw DomainError("directed chain map " + std::to_string(i) + " has wrong shape");

  ColimitDimension out;
  out.direct = extendedDimension(telescopePresentation(chain));

  // sup over i of inf over j >= i of rank(phi_{i,j}), with phi_{i,i} = id
  std::size_t n = chain.ranks.size();
  Index best = 0;
  std::visit(
      [&](const auto& firstMap) {
        using Sc = std::decay_t<decltype(firstMap(0, 0))>;
        for (std::size_t i = 0; i < n; ++i) {
          Index inf = chain.ranks[i];
          MatrixX<Sc> composite = MatrixX<Sc>::Identity(chain.ranks[i], chain.ranks[i]);
          for (std::size_t j = i; j + 1 < n; ++j) {
            composite = (composite * std::get<MatrixX<Sc>>(chain.maps[j].entries)).eval();
            inf = std::min(inf, fractionFieldRank(composite));
          }
          best = std::max(best, inf);
        }
      },
      chain.maps[0].entries);
  out.formula = ExtDim(Rat(Int(best), Int(1)));
  return out;
}

}  // namespace l2dim
