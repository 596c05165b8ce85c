#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruled/gb.hpp"
#include "ruled/modules.hpp"
#include "ruled/rng.hpp"

namespace ruled {

struct ConstructionError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// ---------------------------------------------------------------------------
// Curves and point divisors
// ---------------------------------------------------------------------------

struct CurveModel {
  int ambientDim = 0;  // curve lives in P^ambientDim
  RingPtr R;           // ambient coordinate ring
  RingPtr S;           // R / I_C
  Ideal ideal;         // I_C in R
  int genus = 0;
  int degree = 0;
};

struct PointOnCurve {
  std::vector<std::int64_t> coords;  // normalized: first nonzero coordinate 1
  Ideal linearIdeal;                 // ambient ideal of the point
};

struct DivisorRep {
  std::vector<PointOnCurve> points;  // with multiplicity by repetition
  Ideal ideal;                       // saturated ambient ideal of the point set
  int degree = 0;
};

// Smooth genus-2 degree-5 curve in P^3 built from a random mapping cone;
// retries until (codim, degree) = (2, 5) and the curve is smooth.
CurveModel randomGenus2Curve(std::int64_t p, Rng rng, int retries = 20);
// Smooth random plane cubic.
CurveModel randomPlaneCubic(std::int64_t p, Rng rng, int retries = 20);
// Plane cubic with prescribed equation (rejects singular input).
CurveModel fixedPlaneCubic(std::int64_t p, const std::string& equation);

// One random rational point of C (random hyperplane slice, univariate root
// extraction, lift back to the curve).
PointOnCurve randomPointOnCurve(const CurveModel& c, Rng& rng, int retries = 50);
// t distinct random rational points with their intersected ideal.
DivisorRep randomPoints(const CurveModel& c, int t, Rng rng, int retries = 50);
// Divisor from explicitly given points (e.g. parsed fixed configurations).
DivisorRep divisorFromPoints(const CurveModel& c, std::vector<PointOnCurve> pts);
PointOnCurve pointFromCoords(const CurveModel& c, std::vector<std::int64_t> coords);

// Divisor ideal inside S = R/I_C.
Ideal divisorIdealInS(const CurveModel& c, const DivisorRep& d);

// ---------------------------------------------------------------------------
// Scroll embeddings
// ---------------------------------------------------------------------------

struct ScrollEmbedding {
  RingPtr TR;          // K[x..., y...] with the x block eliminated
  RingPtr T;           // K[y...]
  int xCount = 0;      // size of the eliminated block
  RingMatrix Phi;      // presentation of the degree-0 submodule, over TR
  Ideal incidence;     // (y * Phi) + I_C, over TR
  Ideal saturated;     // incidence saturated w.r.t. the x block
  Ideal J;             // scroll ideal in T
  int r = 0;           // embedding target P^r
};

// Theorem-level scroll construction: presentation of the degree-0 submodule,
// incidence ideal (y_1 .. y_n) * Phi, saturation, elimination.
ScrollEmbedding scrollIdeal(const GradedModule& m, const CurveModel& c);

// Ideal in K[y] of the union of fibers over V(I) (I an ambient curve ideal).
Ideal pullbackIdeal(const ScrollEmbedding& emb, const Ideal& ambientIdeal);

// Representatives of a K-basis of A_k / J_k (requires J_k ⊆ A_k, dim > 0).
std::vector<Polynomial> quotientFormBasis(const Ideal& a, const Ideal& j, int k);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct SurfaceReport {
  bool degenerate = false;
  int dim = 0;
  std::int64_t degree = 0;
  BettiTable betti;
  std::vector<std::int64_t> hilbert;  // t = 0..10
  bool smooth = false;
  std::optional<int> sectionalGenus;  // when dim == 3
  bool degreeConsistent = false;      // Hilbert-series degree matches Betti-derived degree
};

// codim(I + minors(codim I, jacobian gens I)) >= expectedSingCodim
bool smoothnessCheck(const Ideal& ideal, int expectedSingCodim);

SurfaceReport surfaceReport(const Ideal& ideal);

struct KNormalityReport {
  std::vector<bool> flags;  // index k, 0..kmax
  int castelnuovoBound = 0;  // k0 = d - 2 + r
};

KNormalityReport kNormalityReport(const Ideal& ideal, const std::vector<std::int64_t>& h0Values, int kmax);

// ---------------------------------------------------------------------------
// Bundle pipelines (fibers of degree k >= 2)
// ---------------------------------------------------------------------------

struct BundleConfig {
  int k = 2;
  DivisorRep d;        // the auxiliary divisor D (D - B effective)
  std::vector<int> bMultiplicity;  // multiplicity of each D point inside B
  DivisorRep d2;       // effective divisor representing L ⊗ O(D)
  std::uint64_t seed = 1;
};

struct BundleResult {
  GradedModule module;        // H^0_*(E ⊗ O(D)) as an extension
  ScrollEmbedding emb;        // X' in P^r
  SurfaceReport reportXPrime;
  Ideal fiberIdeal;           // forms through the fibers over kD - B
  std::vector<Polynomial> forms;
  Ideal x;                    // final ideal in K[z]
  SurfaceReport reportX;
};

BundleResult kBundleIdeal(const CurveModel& c, const BundleConfig& cfg);

// ---------------------------------------------------------------------------
// Nets of quadrics and vertex loci
// ---------------------------------------------------------------------------

struct NetAnalysis {
  RingPtr par;                 // K[a, b, c]
  RingMatrix matrix;           // 6x6 symmetric, entries linear in parameters
  Ideal minors5;               // minimal generators of the 5x5 minors
  Ideal minors5Saturated;
  Ideal minors4Saturated;
  Polynomial det;              // determinant (possibly zero)
  std::optional<Polynomial> detSquarefree;
};

// Hessian of a*Q1 + b*Q2 + c*Q3 over the parameter ring.
RingMatrix quadricNetMatrix(const std::vector<Polynomial>& quadrics, const RingPtr& par);
NetAnalysis netRankLoci(const std::vector<Polynomial>& quadrics);

// Rank of a single quadric's Gram matrix over Z/p.
int quadricRank(const Polynomial& quadric);
// Saturated singular locus of a single quadric (its vertex).
Ideal quadricVertex(const Polynomial& quadric, const Ideal& ambient);

struct VertexLoci {
  Ideal vertexSurface;  // locus in P^r swept by the singular quadrics' vertices
  Ideal meetWithX;      // vertexSurface + J, minimal generators
};

// Vertex locus of the singular members (parametrized by G in the net plane)
// of the net spanned by the quadrics, and its intersection with V(J).
VertexLoci vertexLocus(const std::vector<Polynomial>& quadrics, const Ideal& gInPar, const Ideal& j);

// Parameter-plane locus of net members whose vertex line lies on V(J).
Ideal vertexInSurfaceLocus(const std::vector<Polynomial>& quadrics, const Ideal& j, const RingPtr& par);

// Section class C_0 cut out by the unique hyperplane through the fibers over
// the divisor: ((h) + J) : fiberIdeal.
Ideal sectionCurveByLinkage(const ScrollEmbedding& emb, const Ideal& fiberIdeal);

// rad(V) == rad(C): V ⊆ C and every generator of C has a power in V.
bool sameRadical(const Ideal& v, const Ideal& c, int maxPower = 4);

}  // namespace ruled
