#include <algorithm>

#include "ruled/surfaces.hpp"

namespace ruled {

namespace {

Polynomial randomForm(const RingPtr& ring, int degree, Rng& rng) {
  std::vector<Term> raw;
  for (const Monomial& m : monomialsOfDegree(ring, degree)) {
    std::int64_t c = rng.below(ring->p);
    if (c) raw.push_back(Term{m, static_cast<std::int32_t>(c)});
  }
  return Polynomial::fromTerms(ring, std::move(raw));
}

}  // namespace

bool smoothnessCheck(const Ideal& ideal, int expectedSingCodim) {
  const RingPtr& ring = ideal.ring();
  auto [dim, deg] = dimDegree(ideal);
  (void)deg;
  int codim = ring->nvars() - dim;
  std::vector<Polynomial> gens = ideal.gens();
  RingMatrix jac = jacobianMatrix(gens, ring);
  std::vector<Polynomial> mins = minorsList(codim, jac);

  // grow the singular-locus ideal incrementally; done as soon as its
  // dimension drops to the cone point
  IncrementalBasis inc(ring, {0});
  for (const Polynomial& g : ideal.gb().elements) inc.addPoly(g);
  auto currentCodim = [&]() {
    auto [sdim, sdeg] = dimDegreeFromLeads(inc.leadMonomials(0), ring);
    (void)sdeg;
    return ring->nvars() - sdim;
  };
  int sinceCheck = 0;
  for (const Polynomial& f : mins) {
    if (inc.addPoly(f) && ++sinceCheck >= 8) {
      sinceCheck = 0;
      if (currentCodim() >= expectedSingCodim) return true;
    }
  }
  return currentCodim() >= expectedSingCodim;
}

CurveModel randomGenus2Curve(std::int64_t p, Rng rng, int retries) {
  RingPtr R = PolyRing::makeStd(p, 4);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Rng local = rng.fork(attempt);
    // 9x2 block of linear forms over a zero row
    RingMatrix alpha(R, 9, 2);
    alpha.colTwists = {2, 2};
    for (int i = 0; i < 8; ++i) alpha.rowTwists[i] = 1;
    alpha.rowTwists[8] = 0;
    for (int i = 0; i < 4; ++i) {
      alpha.at(i, 0) = Polynomial::variable(R, i);
      alpha.at(4 + i, 1) = Polynomial::variable(R, i);
    }
    // 9x6 random block: scalars over a row of linear forms
    RingMatrix rd(R, 9, 6);
    rd.colTwists.assign(6, 1);
    for (int i = 0; i < 8; ++i) rd.rowTwists[i] = 1;
    rd.rowTwists[8] = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 6; ++j) rd.at(i, j) = Polynomial::constant(R, local.below(p));
    for (int j = 0; j < 6; ++j) rd.at(8, j) = randomForm(R, 1, local);

    RingMatrix cone = RingMatrix::hcat(rd, alpha);
    RingMatrix syz = syzygyMatrix(cone.transpose());
    std::vector<Polynomial> entries;
    for (int i = 0; i < syz.rows(); ++i)
      for (int j = 0; j < syz.cols(); ++j)
        if (!syz.at(i, j).isZero()) entries.push_back(syz.at(i, j));
    Ideal curve(R, minimalGenerators(std::move(entries), R));
    if (curve.isZero()) continue;
    auto [dim, deg] = dimDegree(curve);
    if (dim != 2 || deg != 5) continue;
    if (!smoothnessCheck(curve, 4)) continue;
    CurveModel c;
    c.ambientDim = 3;
    c.R = R;
    c.ideal = curve;
    c.S = makeQuotientRing(R, curve.gens());
    c.genus = 2;
    c.degree = 5;
    return c;
  }
  throw ConstructionError("no smooth genus-2 quintic found within the retry budget");
}

static CurveModel cubicFromPolynomial(const RingPtr& R, const Polynomial& f) {
  Ideal curve(R, {f});
  CurveModel c;
  c.ambientDim = 2;
  c.R = R;
  c.ideal = curve;
  c.S = makeQuotientRing(R, curve.gens());
  c.genus = 1;
  c.degree = 3;
  return c;
}

CurveModel randomPlaneCubic(std::int64_t p, Rng rng, int retries) {
  RingPtr R = PolyRing::makeStd(p, 3);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Rng local = rng.fork(attempt);
    Polynomial f = randomForm(R, 3, local);
    if (f.isZero()) continue;
    Ideal curve(R, {f});
    if (!smoothnessCheck(curve, 3)) continue;
    return cubicFromPolynomial(R, f);
  }
  throw ConstructionError("no smooth plane cubic found within the retry budget");
}

CurveModel fixedPlaneCubic(std::int64_t p, const std::string& equation) {
  RingPtr R = PolyRing::makeStd(p, 3);
  Polynomial f = parsePolynomial(equation, R);
  if (f.isZero() || !f.isHomogeneous() || f.degree() != 3) throw ConstructionError("expected a nonzero cubic form");
  if (!smoothnessCheck(Ideal(R, {f}), 3)) throw ConstructionError("the given cubic is singular");
  return cubicFromPolynomial(R, f);
}

// ---------------------------------------------------------------------------
// rational points
// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> normalizeCoords(std::vector<std::int64_t> v, std::int64_t p) {
  int pivot = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = ((v[i] % p) + p) % p;
    if (pivot < 0 && v[i]) pivot = static_cast<int>(i);
  }
  if (pivot < 0) throw AlgebraError("zero coordinate vector");
  std::int64_t inv = modInverse(v[pivot], p);
  for (auto& c : v) c = c * inv % p;
  return v;
}

Ideal pointIdeal(const RingPtr& R, const std::vector<std::int64_t>& coords) {
  int pivot = 0;
  while (coords[pivot] == 0) ++pivot;
  std::vector<Polynomial> gens;
  for (int j = 0; j < R->nvars(); ++j) {
    if (j == pivot) continue;
    gens.push_back(Polynomial::variable(R, j) - Polynomial::variable(R, pivot).scaled(coords[j]));
  }
  return Ideal(R, std::move(gens));
}

bool onCurve(const CurveModel& c, const std::vector<std::int64_t>& coords) {
  for (const Polynomial& g : c.ideal.gens())
    if (evaluate(g, coords) != 0) return false;
  return true;
}

// dense univariate restriction of f along the pencil v + t*w
std::vector<std::int64_t> restrictToLine(const Polynomial& f, const std::vector<std::int64_t>& v,
                                         const std::vector<std::int64_t>& w) {
  const RingPtr& R = f.ring();
  const std::int64_t p = R->p;
  std::vector<std::int64_t> acc{0};
  auto mulLin = [&](std::vector<std::int64_t> poly, std::int64_t a, std::int64_t b) {
    // multiply by (a + b t)
    std::vector<std::int64_t> out(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      out[i] = (out[i] + poly[i] * a) % p;
      out[i + 1] = (out[i + 1] + poly[i] * b) % p;
    }
    return out;
  };
  for (const Term& t : f.terms()) {
    std::vector<std::int64_t> mono{t.c};
    for (int i = 0; i < R->nvars(); ++i)
      for (int e = 0; e < t.m.e[i]; ++e) mono = mulLin(std::move(mono), v[i], w[i]);
    if (mono.size() > acc.size()) acc.resize(mono.size(), 0);
    for (size_t i = 0; i < mono.size(); ++i) acc[i] = (acc[i] + mono[i]) % p;
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

// points of C on the line cut out by the given independent linear forms
std::vector<std::vector<std::int64_t>> curvePointsOnLine(const CurveModel& c,
                                                         const std::vector<Polynomial>& linearForms) {
  const RingPtr& R = c.R;
  const std::int64_t p = R->p;
  const int n = R->nvars();
  FpMatrix sys(static_cast<int>(linearForms.size()), n, p);
  for (size_t r = 0; r < linearForms.size(); ++r)
    for (const Term& t : linearForms[r].terms())
      for (int i = 0; i < n; ++i)
        if (t.m.e[i]) sys.at(static_cast<int>(r), i) = t.c;
  auto null = sys.nullspace();
  if (null.size() != 2) return {};
  const auto& v = null[0];
  const auto& w = null[1];

  std::vector<std::int64_t> restricted;
  for (const Polynomial& g : c.ideal.gens()) {
    restricted = restrictToLine(g, v, w);
    if (!restricted.empty()) break;
  }
  std::vector<std::vector<std::int64_t>> points;
  auto tryPoint = [&](std::vector<std::int64_t> coords) {
    bool zero = true;
    for (auto x : coords)
      if (x % p) zero = false;
    if (zero) return;
    coords = normalizeCoords(std::move(coords), p);
    if (onCurve(c, coords)) points.push_back(coords);
  };
  if (restricted.empty()) {
    // the whole line lies on the curve: cannot split points here
    return {};
  }
  for (std::int64_t t : univariateRootsDense(restricted, p)) {
    std::vector<std::int64_t> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = (v[i] + t * w[i]) % p;
    tryPoint(std::move(coords));
  }
  // the point at infinity of the pencil
  tryPoint(std::vector<std::int64_t>(w.begin(), w.end()));
  return points;
}

}  // namespace

PointOnCurve pointFromCoords(const CurveModel& c, std::vector<std::int64_t> coords) {
  coords = normalizeCoords(std::move(coords), c.R->p);
  if (!onCurve(c, coords)) throw ConstructionError("point does not lie on the curve");
  return PointOnCurve{coords, pointIdeal(c.R, coords)};
}

PointOnCurve randomPointOnCurve(const CurveModel& c, Rng& rng, int retries) {
  const RingPtr& R = c.R;
  const std::int64_t p = R->p;
  for (int attempt = 0; attempt < retries; ++attempt) {
    Polynomial h = randomForm(R, 1, rng);
    if (h.isZero()) continue;
    std::vector<std::vector<std::int64_t>> candidates;
    if (c.ambientDim == 2) {
      candidates = curvePointsOnLine(c, {h});
    } else if (c.ambientDim == 3) {
      // eliminate the first two variables from I_C + (h), then slice along
      // each projective root of the resulting binary form
      RingPtr blk = PolyRing::make(p, R->vars, TermOrder::block(2));
      std::vector<Polynomial> gens;
      for (const Polynomial& g : c.ideal.gens()) gens.push_back(transfer(g, blk));
      gens.push_back(transfer(h, blk));
      Ideal sliced(blk, std::move(gens));
      Ideal elim = eliminate(sliced, 2);
      if (elim.isZero()) continue;
      Polynomial binary = transfer(elim.gens()[0], R);
      std::vector<std::int64_t> dense;  // coefficients in x_2 with x_3 = 1
      int degB = binary.degree();
      dense.assign(degB + 1, 0);
      bool pureBinary = true;
      for (const Term& t : binary.terms()) {
        if (t.m.e[0] || t.m.e[1]) pureBinary = false;
        dense[t.m.e[2]] = t.c;
      }
      if (!pureBinary) continue;
      std::vector<std::pair<std::int64_t, std::int64_t>> ratios;  // (x_2 : x_3)
      for (std::int64_t a : univariateRootsDense(dense, p)) ratios.push_back({a, 1});
      if (dense[degB] == 0) ratios.push_back({1, 0});
      for (auto [a, b] : ratios) {
        Polynomial ell = Polynomial::variable(R, 2).scaled(b) - Polynomial::variable(R, 3).scaled(a);
        for (auto& pt : curvePointsOnLine(c, {h, ell})) candidates.push_back(pt);
      }
    } else {
      throw ConstructionError("point finding supports plane and space curves");
    }
    if (!candidates.empty()) {
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      auto coords = candidates[static_cast<size_t>(rng.below(static_cast<std::int64_t>(candidates.size())))];
      return PointOnCurve{coords, pointIdeal(R, coords)};
    }
  }
  throw ConstructionError("no rational point found within the retry budget");
}

DivisorRep randomPoints(const CurveModel& c, int t, Rng rng, int retries) {
  if (t < 1) throw ConstructionError("divisor degree must be positive");
  std::vector<PointOnCurve> pts;
  Rng stream = rng.fork(17);
  int guard = 0;
  while (static_cast<int>(pts.size()) < t) {
    if (++guard > retries * t) throw ConstructionError("could not collect distinct points");
    PointOnCurve pt = randomPointOnCurve(c, stream, retries);
    bool dup = false;
    for (const PointOnCurve& q : pts)
      if (q.coords == pt.coords) dup = true;
    if (!dup) pts.push_back(std::move(pt));
  }
  return divisorFromPoints(c, std::move(pts));
}

DivisorRep divisorFromPoints(const CurveModel& c, std::vector<PointOnCurve> pts) {
  if (pts.empty()) throw ConstructionError("empty divisor");
  Ideal acc = pts[0].linearIdeal;
  for (size_t i = 1; i < pts.size(); ++i) acc = idealIntersection(acc, pts[i].linearIdeal);
  DivisorRep d;
  d.degree = static_cast<int>(pts.size());
  d.points = std::move(pts);
  d.ideal = acc;
  (void)c;
  return d;
}

Ideal divisorIdealInS(const CurveModel& c, const DivisorRep& d) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : d.ideal.gens()) gens.push_back(transfer(g, c.S));
  return Ideal(c.S, std::move(gens));
}

}  // namespace ruled
