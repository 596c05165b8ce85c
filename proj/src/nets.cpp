#include <algorithm>

#include "ruled/surfaces.hpp"

namespace ruled {

RingMatrix quadricNetMatrix(const std::vector<Polynomial>& quadrics, const RingPtr& par) {
  if (quadrics.empty()) throw ConstructionError("empty net");
  const RingPtr& T = quadrics[0].ring();
  if (static_cast<size_t>(par->nvars()) != quadrics.size())
    throw ConstructionError("one parameter per quadric expected");
  const int n = T->nvars();
  RingMatrix h(par, n, n);
  for (int i = 0; i < n; ++i) h.rowTwists[i] = 0;
  for (int j = 0; j < n; ++j) h.colTwists[j] = 1;
  for (size_t q = 0; q < quadrics.size(); ++q) {
    const Polynomial& f = quadrics[q];
    if (f.isZero() || !f.isHomogeneous() || f.degree() != 2) throw ConstructionError("net members must be quadrics");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Polynomial second = differentiate(differentiate(f, i), j);
        if (second.isZero()) continue;
        h.at(i, j) = h.at(i, j) + Polynomial::variable(par, static_cast<int>(q)).scaled(second.lead().c);
      }
  }
  return h;
}

NetAnalysis netRankLoci(const std::vector<Polynomial>& quadrics) {
  NetAnalysis out;
  out.par = PolyRing::make(quadrics[0].ring()->p, {"a", "b", "c"});
  out.matrix = quadricNetMatrix(quadrics, out.par);
  const int n = out.matrix.rows();
  out.minors5 = Ideal(out.par, minimalGenerators(minorsList(n - 1, out.matrix), out.par));
  out.minors5Saturated = out.minors5.isZero() ? out.minors5 : saturationIrrelevant(out.minors5);
  Ideal m4(out.par, minorsList(n - 2, out.matrix));
  out.minors4Saturated = m4.isZero() ? m4 : saturationIrrelevant(m4);
  out.det = determinant(out.matrix);
  if (!out.det.isZero()) out.detSquarefree = squarefreePart(out.det);
  return out;
}

int quadricRank(const Polynomial& quadric) {
  const RingPtr& T = quadric.ring();
  const int n = T->nvars();
  FpMatrix gram(n, n, T->p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial second = differentiate(differentiate(quadric, i), j);
      gram.at(i, j) = second.isZero() ? 0 : second.lead().c;
    }
  return gram.rank();
}

Ideal quadricVertex(const Polynomial& quadric, const Ideal& ambient) {
  (void)ambient;
  const RingPtr& T = quadric.ring();
  std::vector<Polynomial> gens{quadric};
  for (int v = 0; v < T->nvars(); ++v) {
    Polynomial d = differentiate(quadric, v);
    if (!d.isZero()) gens.push_back(d);
  }
  return minimalized(saturationIrrelevant(Ideal(T, std::move(gens))));
}

namespace {

struct NetRings {
  RingPtr parFirst;  // [a,b,c | y...] eliminating the parameters
  RingPtr yFirst;    // [y... | a,b,c] eliminating the y block
};

NetRings productRings(const RingPtr& T, const RingPtr& par) {
  NetRings r;
  std::vector<std::string> pf = par->vars;
  pf.insert(pf.end(), T->vars.begin(), T->vars.end());
  r.parFirst = PolyRing::make(T->p, pf, TermOrder::block(par->nvars()));
  std::vector<std::string> yf = T->vars;
  yf.insert(yf.end(), par->vars.begin(), par->vars.end());
  r.yFirst = PolyRing::make(T->p, yf, TermOrder::block(T->nvars()));
  return r;
}

// generic member of the net and its y-gradient, over the given product ring
std::vector<Polynomial> genericVertexGens(const std::vector<Polynomial>& quadrics, const RingPtr& par,
                                          const RingPtr& product) {
  const RingPtr& T = quadrics[0].ring();
  Polynomial generic(product);
  for (size_t q = 0; q < quadrics.size(); ++q) {
    Polynomial pq = transfer(Polynomial::variable(par, static_cast<int>(q)), product);
    generic = generic + pq * transfer(quadrics[q], product);
  }
  std::vector<Polynomial> gens{generic};
  for (const std::string& name : T->vars) {
    Polynomial d = differentiate(generic, product->varIndex(name));
    if (!d.isZero()) gens.push_back(d);
  }
  return gens;
}

}  // namespace

VertexLoci vertexLocus(const std::vector<Polynomial>& quadrics, const Ideal& gInPar, const Ideal& j) {
  const RingPtr& T = quadrics[0].ring();
  const RingPtr& par = gInPar.ring();
  NetRings rings = productRings(T, par);

  std::vector<Polynomial> gens = genericVertexGens(quadrics, par, rings.parFirst);
  for (const Polynomial& g : gInPar.gens()) gens.push_back(transfer(g, rings.parFirst));
  Ideal incidence(rings.parFirst, std::move(gens));
  std::vector<Polynomial> parVars;
  for (int v = 0; v < par->nvars(); ++v) parVars.push_back(Polynomial::variable(rings.parFirst, v));
  Ideal sat = saturation(incidence, Ideal(rings.parFirst, std::move(parVars)));
  Ideal pushed = eliminateInto(sat, par->nvars(), T);
  VertexLoci out;
  out.vertexSurface = saturationIrrelevant(pushed);
  out.meetWithX = minimalized(idealSum(out.vertexSurface, j));
  return out;
}

Ideal vertexInSurfaceLocus(const std::vector<Polynomial>& quadrics, const Ideal& j, const RingPtr& par) {
  const RingPtr& T = quadrics[0].ring();
  NetRings rings = productRings(T, par);
  std::vector<Polynomial> gens = genericVertexGens(quadrics, par, rings.yFirst);
  for (const Polynomial& g : j.gens()) gens.push_back(transfer(g, rings.yFirst));
  Ideal incidence(rings.yFirst, std::move(gens));
  std::vector<Polynomial> yvars;
  for (int v = 0; v < T->nvars(); ++v) yvars.push_back(Polynomial::variable(rings.yFirst, v));
  Ideal sat = saturation(incidence, Ideal(rings.yFirst, std::move(yvars)));
  Ideal pushed = eliminateInto(sat, T->nvars(), par);
  return saturationIrrelevant(pushed);
}

Ideal sectionCurveByLinkage(const ScrollEmbedding& emb, const Ideal& fiberIdeal) {
  if (fiberIdeal.isZero()) throw ConstructionError("empty fiber ideal");
  const Polynomial& h = fiberIdeal.gens()[0];
  if (h.degree() != 1) throw ConstructionError("no hyperplane through the chosen fibers");
  Ideal sum = idealSum(Ideal(emb.T, {h}), emb.J);
  return minimalized(idealQuotient(sum, fiberIdeal));
}

bool sameRadical(const Ideal& v, const Ideal& c, int maxPower) {
  for (const Polynomial& g : v.gens())
    if (!c.contains(g)) return false;
  for (const Polynomial& g : c.gens()) {
    bool hit = false;
    Polynomial pw = g;
    for (int k = 1; k <= maxPower && !hit; ++k) {
      if (v.contains(pw)) hit = true;
      if (k < maxPower) pw = pw * g;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace ruled
