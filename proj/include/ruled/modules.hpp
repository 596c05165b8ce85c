#pragma once

#include "ruled/gb.hpp"
#include "ruled/rng.hpp"

namespace ruled {

// Finitely presented graded module over S: rows of the presentation are
// generators (with twists), columns are relations; the module is the cokernel.
struct GradedModule {
  RingPtr ring;
  RingMatrix presentation;

  int rank() const { return presentation.rows(); }
  const std::vector<int>& twists() const { return presentation.rowTwists; }

  static GradedModule free(const RingPtr& ring, std::vector<int> twists);
};

// dim_K of the degree-t slice of the cokernel.
std::int64_t moduleHilbertFunction(const GradedModule& m, int t);

// Hom_S(I_D, S) presented via the colon trick: pick nonzero f in I_D, present
// (f) : I_D and shift every twist down by deg f.  For the unit ideal this is
// the free module S.
GradedModule dualOfDivisorIdeal(const Ideal& divisorIdeal);

// K-basis of the degree-0 homomorphisms image(phi_a) -> coker(phi_b); each
// basis element is a matrix (source of phi_a) -> (target of phi_b).
std::vector<RingMatrix> homBasis(const GradedModule& a, const GradedModule& b);

// Extension of a by b determined by a seeded random combination of the hom
// basis: presentation [[phi_a, 0], [phi_ab, phi_b]].
GradedModule randomExtension(const GradedModule& a, const GradedModule& b, Rng rng);

GradedModule directSum(const GradedModule& a, const GradedModule& b);

// Isomorphic module with a minimal presentation (unit entries cancelled,
// redundant relations dropped).
GradedModule prunePresentation(const GradedModule& m);

// Presentation of the submodule generated by a K-basis of the degree-0 slice;
// target rank equals dim_K M_0.  Errors when the slice is zero.
RingMatrix degreeZeroPartPresentation(const GradedModule& m);

}  // namespace ruled
