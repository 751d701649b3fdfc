#pragma once

#include "l2dim/chain.hpp"
#include "l2dim/smith.hpp"

namespace l2dim {

/// Finitely generated module over a PID, presented as R^n / rowspan(A):
/// each row of the relation matrix is one relation among the n generators.
struct FGModulePresentation {
  RingTag ring;
  Index generatorCount = 0;
  RingMatrix relations;  // shape m x generatorCount

  static FGModulePresentation free(const RingTag& ring, Index rank);
  static FGModulePresentation cokernel(RingMatrix relations);

  void requirePid() const {
    if (!ring.isPid())
      throw DomainError("module operation requires a PID ring, got " + ring.str());
  }
};

/// Submodule of an ambient presented module, spanned by row vectors written
/// in the ambient generators.
struct SubmoduleSpec {
  FGModulePresentation ambient;
  RingMatrix generators;  // shape k x ambient.generatorCount
};

/// Finite truncation of a directed system of free modules
/// M_0 -> M_1 -> ... -> M_k; maps act on row vectors by right multiplication,
/// so maps[i] has shape ranks[i] x ranks[i+1].
struct DirectedChain {
  RingTag ring;
  std::vector<Index> ranks;
  std::vector<RingMatrix> maps;
};

/// dim'(M) = generator count minus fraction-field rank of the relations;
/// equals the sup of ranks of free submodules.
ExtDim extendedDimension(const FGModulePresentation& m);

struct TorsionProjectiveSplit {
  FGModulePresentation torsion;  // diagonal presentation by the nonzero, non-unit divisors
  Index projectiveRank = 0;
};

/// M ~= TM (+) R^projectiveRank, read off the Smith normal form.
TorsionProjectiveSplit torsionProjectiveSplit(const FGModulePresentation& m);

/// Saturation: generators of the preimage in M of the torsion submodule of
/// M/K. Contains K; idempotent; spans a submodule of the same dimension.
SubmoduleSpec closure(const SubmoduleSpec& k);

/// Membership of a row vector in the row span of a matrix over a PID.
bool rowSpanContains(const RingMatrix& span, const RingMatrix& rowVector);

/// Dimension of the submodule of the ambient module spanned by the given
/// generators: rank(relations stacked with generators) - rank(relations).
ExtDim spanDimension(const SubmoduleSpec& k);

struct ColimitDimension {
  ExtDim direct;   // dimension of the mapping-telescope cokernel
  ExtDim formula;  // sup_i inf_{j>=i} rank(im phi_{i,j})
};

/// Both sides of the colimit dimension identity over the finite truncation.
ColimitDimension colimitDimension(const DirectedChain& chain);

/// Stack rows of b under rows of a (shared ring and column count).
RingMatrix stackRows(const RingMatrix& a, const RingMatrix& b);

}  // namespace l2dim
