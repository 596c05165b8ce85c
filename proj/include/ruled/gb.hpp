#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ruled/algebra.hpp"

namespace ruled {

// ---------------------------------------------------------------------------
// Ideals and Groebner bases
// ---------------------------------------------------------------------------

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // reduced, monic, sorted ascending
  bool isUnit() const { return elements.size() == 1 && elements[0].isConstant() && !elements[0].isZero(); }
  bool isZeroIdeal() const { return elements.empty(); }
};

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GroebnerBasis& gb() const;  // computed on demand, cached

  bool isZero() const { return gens_.empty(); }
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;  // canonically sorted, nonzero
  mutable std::shared_ptr<GroebnerBasis> gbCache_;
};

bool idealEquals(const Ideal& a, const Ideal& b);

// Reduced GB of homogeneous generators (throws on inhomogeneous input).
GroebnerBasis groebnerBasis(const std::vector<Polynomial>& gens, const RingPtr& ring);
Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normalForm(const Polynomial& f, const Ideal& ideal);

// Minimal generators: degree-by-degree reduction modulo previously kept ones.
std::vector<Polynomial> minimalGenerators(std::vector<Polynomial> gens, const RingPtr& ring);
Ideal minimalized(const Ideal& ideal);

// ---------------------------------------------------------------------------
// Modules: free-module vectors, module GBs, syzygies
// ---------------------------------------------------------------------------

struct ModTerm {
  int comp = 0;
  Monomial m;
  std::int32_t c = 0;
};

struct ModVec {
  std::vector<ModTerm> t;  // sorted descending under the engine's order
  bool isZero() const { return t.empty(); }
};

struct ModuleGB {
  RingPtr ring;
  int rank = 0;
  std::vector<int> twists;
  std::vector<ModVec> elements;  // reduced module GB, monic, sorted
};

// GB of the column space of a graded matrix (columns as elements of the free
// module on the rows).  Quotient-ring matrices are handled by lifting to the
// base ring and adjoining relation columns.
ModuleGB moduleGroebner(const RingMatrix& m);
// Membership normal form of a column vector against a module GB.
std::vector<Polynomial> moduleNormalForm(const std::vector<Polynomial>& v, const ModuleGB& gb);

// Full syzygy matrix of the columns of m: m * syz = 0 and the columns of the
// result generate the syzygy module (over the matrix ring, quotients allowed).
RingMatrix syzygyMatrix(const RingMatrix& m);
// Syzygy coordinates restricted to the first `tracked` columns (the rows of
// the result); the restriction of a generating set still generates the
// projection, which is all the colon/intersection machinery needs.
RingMatrix syzygyMatrixPartial(const RingMatrix& m, int tracked);

// Column minimalization: drops columns lying in the module generated by the
// remaining ones (degree-by-degree).
RingMatrix minimalColumns(const RingMatrix& m);

// Incrementally completed Groebner basis of a submodule of a free module;
// quotient-ring relations are adjoined automatically.  add() reduces the
// element against the basis so far, reports whether it was new, and completes
// the basis again — feeding homogeneous elements by ascending degree makes
// the membership answers exact.
class IncrementalBasis {
 public:
  IncrementalBasis(RingPtr ring, std::vector<int> twists);
  ~IncrementalBasis();
  IncrementalBasis(IncrementalBasis&&) noexcept;
  bool add(const std::vector<Polynomial>& column);  // true if not yet in the span
  bool addPoly(const Polynomial& f);                // rank-1 convenience
  std::vector<Monomial> leadMonomials(int component) const;
  int size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// (Krull dimension, degree) from the lead-term monomials of a GB.
std::pair<int, std::int64_t> dimDegreeFromLeads(std::vector<Monomial> leads, const RingPtr& ring);

// ---------------------------------------------------------------------------
// Ideal operations
// ---------------------------------------------------------------------------

Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& a, int k);
Ideal idealQuotient(const Ideal& i, const Ideal& j);        // i : j
Ideal saturation(const Ideal& i, const Ideal& j);           // i : j^infinity
Ideal saturationIrrelevant(const Ideal& i);                 // saturate by (all variables)
Ideal idealIntersection(const Ideal& a, const Ideal& b);

// Generators of i ∩ K[trailing block]; the ring order must be Block with the
// stated leading block size.  Result lives in the same ring.
Ideal eliminate(const Ideal& i, int leadingVars);
// Same, but mapped into the given subring of the trailing variables.
Ideal eliminateInto(const Ideal& i, int leadingVars, const RingPtr& subring);

// Quotient ring factory S = base/relations (stores the reduced relation GB).
RingPtr makeQuotientRing(const RingPtr& base, const std::vector<Polynomial>& relations);
// Plain polynomial ring underlying a quotient (identity for plain rings).
RingPtr plainRing(const RingPtr& ring);

// ---------------------------------------------------------------------------
// Hilbert data, dimension, degree
// ---------------------------------------------------------------------------

struct HilbertData {
  std::map<int, std::int64_t> values;
  int dimension = 0;      // Krull dimension of the quotient
  std::int64_t degree = 0;
};

// dim_K of the degree-t slice of ring/ideal quotient.
std::int64_t hilbertFunction(const Ideal& ideal, int t);
// (Krull dimension, degree) of the quotient by a homogeneous ideal in a
// standard-graded ring.
std::pair<int, std::int64_t> dimDegree(const Ideal& ideal);
HilbertData hilbertData(const Ideal& ideal, int tmax);

// Monomials of weighted degree d in the ring (ascending order).
std::vector<Monomial> monomialsOfDegree(const RingPtr& ring, int d);
// Standard monomials of degree d modulo the lead terms of a GB.
std::vector<Monomial> standardMonomials(const RingPtr& ring, int d, const GroebnerBasis& gb);

// ---------------------------------------------------------------------------
// Betti tables and minimal free resolutions
// ---------------------------------------------------------------------------

struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> ranks;  // (homological index, internal degree) -> rank
  std::vector<std::int64_t> totals() const;
  std::int64_t at(int i, int j) const;
  bool operator==(const BettiTable& o) const { return ranks == o.ranks; }
};

struct FreeResolution {
  std::vector<RingMatrix> maps;  // maps[0] = minimal generators of the module
  BettiTable betti;
};

// Minimal free resolution of ring/ideal (plain polynomial rings).
FreeResolution minimalFreeResolution(const Ideal& ideal);
// Minimal free resolution of the cokernel of a presentation matrix.
FreeResolution minimalFreeResolution(const RingMatrix& presentation);

// ---------------------------------------------------------------------------
// gcd, squarefree part, univariate roots
// ---------------------------------------------------------------------------

// gcd of homogeneous polynomials via (f) ∩ (g) = (lcm), gcd = f*g/lcm.
Polynomial polyGcd(const Polynomial& f, const Polynomial& g);
// Product of the distinct irreducible factors of f (requires p > deg f).
Polynomial squarefreePart(const Polynomial& f);

// Roots in Z/p of a univariate polynomial (dense coefficient form, c[i] the
// coefficient of x^i); multiplicities not reported.
std::vector<std::int64_t> univariateRootsDense(const std::vector<std::int64_t>& coeffs, std::int64_t p);
// Roots of a polynomial supported on a single ring variable.
std::vector<std::int64_t> univariateRoots(const Polynomial& f);

// ---------------------------------------------------------------------------
// Kernel of a ring map
// ---------------------------------------------------------------------------

// Kernel of K[newVars] -> (ring of J)/J, newVar_i -> forms[i], where the forms
// are homogeneous of equal degree k.  Built from the graph ideal in a block
// ring eliminating the source variables, saturating first.
Ideal ringMapKernel(const Ideal& j, const std::vector<Polynomial>& forms, int k,
                    const std::vector<std::string>& newVarNames);

}  // namespace ruled
