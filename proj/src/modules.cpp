#include <algorithm>
#include <map>

#include "ruled/modules.hpp"

namespace ruled {

namespace {

RingMatrix rowOfGens(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  RingMatrix m(ring, 1, static_cast<int>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    m.at(0, static_cast<int>(j)) = gens[j];
    m.colTwists[j] = gens[j].degree();
  }
  return m;
}

// lead terms of a module GB, bucketed by component
std::vector<std::vector<Monomial>> leadsByComponent(const ModuleGB& gb) {
  std::vector<std::vector<Monomial>> leads(gb.rank);
  for (const ModVec& v : gb.elements)
    if (!v.isZero()) leads[v.t[0].comp].push_back(v.t[0].m);
  return leads;
}

bool standardAgainst(const Monomial& m, const std::vector<Monomial>& leads) {
  for (const Monomial& l : leads)
    if (monoDivides(l, m)) return false;
  return true;
}

}  // namespace

GradedModule GradedModule::free(const RingPtr& ring, std::vector<int> twists) {
  RingMatrix pres(ring, static_cast<int>(twists.size()), 0);
  pres.rowTwists = std::move(twists);
  return GradedModule{ring, std::move(pres)};
}

std::int64_t moduleHilbertFunction(const GradedModule& m, int t) {
  ModuleGB gb = moduleGroebner(m.presentation);
  auto leads = leadsByComponent(gb);
  RingPtr base = plainRing(m.ring);
  std::int64_t count = 0;
  for (int i = 0; i < m.rank(); ++i) {
    int d = t - m.twists()[i];
    for (const Monomial& mono : monomialsOfDegree(base, d))
      if (standardAgainst(mono, leads[i])) ++count;
  }
  return count;
}

GradedModule dualOfDivisorIdeal(const Ideal& divisorIdeal) {
  const RingPtr& ring = divisorIdeal.ring();
  if (divisorIdeal.isZero()) throw AlgebraError("dual of the zero ideal");
  if (divisorIdeal.gb().isUnit()) return GradedModule::free(ring, {0});
  const Polynomial& f = divisorIdeal.gens()[0];
  const int df = f.degree();
  Ideal colon = idealQuotient(Ideal(ring, {f}), divisorIdeal);
  std::vector<Polynomial> gens = minimalGenerators(colon.gens(), ring);
  RingMatrix row = rowOfGens(ring, gens);
  RingMatrix pres = minimalColumns(syzygyMatrix(row));
  for (int& t : pres.rowTwists) t -= df;
  for (int& t : pres.colTwists) t -= df;
  return GradedModule{ring, std::move(pres)};
}

std::vector<RingMatrix> homBasis(const GradedModule& a, const GradedModule& b) {
  const RingPtr& ring = a.ring;
  if (ring != b.ring) throw AlgebraError("hom basis needs one common ring");
  const RingMatrix& pa = a.presentation;
  const RingMatrix& pb = b.presentation;
  const int ca = pa.cols(), rb = pb.rows();
  RingPtr base = plainRing(ring);

  // ring slice bases (standard monomials modulo the quotient relations)
  GroebnerBasis ringGB;
  if (ring->isQuotient()) ringGB.elements = ring->relationsGB;
  std::map<int, std::vector<Monomial>> slice;
  auto sliceOf = [&](int d) -> const std::vector<Monomial>& {
    auto it = slice.find(d);
    if (it == slice.end()) it = slice.emplace(d, standardMonomials(base, d, ringGB)).first;
    return it->second;
  };

  // unknowns: (target row i of pb, source column j of pa, monomial)
  struct Unknown {
    int i, j;
    Monomial m;
  };
  std::vector<Unknown> unknowns;
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < ca; ++j) {
      int d = pa.colTwists[j] - pb.rowTwists[i];
      if (d < 0) continue;
      for (const Monomial& m : sliceOf(d)) unknowns.push_back(Unknown{i, j, m});
    }
  if (unknowns.empty()) return {};

  RingMatrix syzA = syzygyMatrix(pa);
  ModuleGB gbB = moduleGroebner(pb);
  auto leadsB = leadsByComponent(gbB);

  // conditions: eta * (syzygy column) must reduce to zero in coker(pb)
  struct Key {
    int l, comp;
    Monomial m;
  };
  std::vector<Key> keys;
  std::map<std::tuple<int, int, std::vector<std::uint8_t>>, int> keyIndex;
  auto keyOf = [&](int l, int comp, const Monomial& m) {
    std::vector<std::uint8_t> e(m.e.begin(), m.e.end());
    auto it = keyIndex.find({l, comp, e});
    if (it != keyIndex.end()) return it->second;
    int idx = static_cast<int>(keys.size());
    keyIndex.emplace(std::make_tuple(l, comp, e), idx);
    keys.push_back(Key{l, comp, m});
    return idx;
  };

  std::vector<std::map<int, std::int64_t>> columns(unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    const Unknown& un = unknowns[u];
    for (int l = 0; l < syzA.cols(); ++l) {
      const Polynomial& s = syzA.at(un.j, l);
      if (s.isZero()) continue;
      std::vector<Polynomial> vec(rb, Polynomial(ring));
      vec[un.i] = ringNormalForm(s.mulTerm(un.m, 1));
      std::vector<Polynomial> nf = moduleNormalForm(vec, gbB);
      for (int i = 0; i < rb; ++i)
        for (const Term& t : nf[i].terms()) columns[u][keyOf(l, i, t.m)] = t.c;
    }
  }

  FpMatrix mat(static_cast<int>(keys.size()), static_cast<int>(unknowns.size()), ring->p);
  for (size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [row, c] : columns[u]) mat.at(row, static_cast<int>(u)) = c;

  std::vector<RingMatrix> out;
  for (const auto& v : mat.nullspace()) {
    RingMatrix eta(ring, rb, ca);
    eta.rowTwists = pb.rowTwists;
    eta.colTwists = pa.colTwists;
    std::vector<std::vector<Term>> cells(static_cast<size_t>(rb) * ca);
    for (size_t u = 0; u < unknowns.size(); ++u) {
      if (v[u] == 0) continue;
      const Unknown& un = unknowns[u];
      cells[static_cast<size_t>(un.i) * ca + un.j].push_back(Term{un.m, static_cast<std::int32_t>(v[u])});
    }
    for (int i = 0; i < rb; ++i)
      for (int j = 0; j < ca; ++j)
        eta.at(i, j) = Polynomial::fromTerms(ring, std::move(cells[static_cast<size_t>(i) * ca + j]));
    out.push_back(std::move(eta));
  }
  return out;
}

GradedModule randomExtension(const GradedModule& a, const GradedModule& b, Rng rng) {
  const RingPtr& ring = a.ring;
  const RingMatrix& pa = a.presentation;
  const RingMatrix& pb = b.presentation;
  RingMatrix phiAB(ring, pb.rows(), pa.cols());
  phiAB.rowTwists = pb.rowTwists;
  phiAB.colTwists = pa.colTwists;
  for (const RingMatrix& eta : homBasis(a, b)) {
    std::int64_t c = rng.below(ring->p);
    if (c == 0) continue;
    for (int i = 0; i < phiAB.rows(); ++i)
      for (int j = 0; j < phiAB.cols(); ++j) phiAB.at(i, j) = phiAB.at(i, j) + eta.at(i, j).scaled(c);
  }
  RingMatrix zero(ring, pa.rows(), pb.cols());
  zero.rowTwists = pa.rowTwists;
  zero.colTwists = pb.colTwists;
  RingMatrix pres = RingMatrix::vcat(RingMatrix::hcat(pa, zero), RingMatrix::hcat(phiAB, pb));
  return GradedModule{ring, std::move(pres)};
}

GradedModule directSum(const GradedModule& a, const GradedModule& b) {
  return GradedModule{a.ring, RingMatrix::diag(a.presentation, b.presentation)};
}

GradedModule prunePresentation(const GradedModule& m) {
  RingMatrix p = m.presentation;
  const RingPtr& ring = m.ring;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < p.rows() && !changed; ++i)
      for (int j = 0; j < p.cols() && !changed; ++j) {
        const Polynomial& e = p.at(i, j);
        if (e.isZero() || !e.isConstant()) continue;
        // cancel generator i against relation j
        std::int64_t inv = modInverse(e.lead().c, ring->p);
        RingMatrix q(ring, p.rows() - 1, p.cols() - 1);
        for (int r = 0, rr = 0; r < p.rows(); ++r) {
          if (r == i) continue;
          q.rowTwists[rr] = p.rowTwists[r];
          for (int c = 0, cc = 0; c < p.cols(); ++c) {
            if (c == j) continue;
            // clear row i: col_c -= (p(i,c)/p(i,j)) * col_j
            Polynomial adj = p.at(r, c);
            if (!p.at(i, c).isZero()) adj = adj - p.at(i, c).scaled(inv) * p.at(r, j);
            q.at(rr, cc) = std::move(adj);
            q.colTwists[cc] = p.colTwists[c];
            ++cc;
          }
          ++rr;
        }
        p = std::move(q);
        changed = true;
      }
  }
  return GradedModule{ring, minimalColumns(p)};
}

RingMatrix degreeZeroPartPresentation(const GradedModule& m) {
  const RingPtr& ring = m.ring;
  RingPtr base = plainRing(ring);
  ModuleGB gb = moduleGroebner(m.presentation);
  auto leads = leadsByComponent(gb);

  // K-basis of M_0: standard module monomials of degree zero
  struct BasisVec {
    int comp;
    Monomial m;
  };
  std::vector<BasisVec> basis;
  for (int i = 0; i < m.rank(); ++i) {
    int d = -m.twists()[i];
    for (const Monomial& mono : monomialsOfDegree(base, d))
      if (standardAgainst(mono, leads[i])) basis.push_back(BasisVec{i, mono});
  }
  if (basis.empty()) throw AlgebraError("degree-0 slice is zero; nothing to embed");

  RingMatrix v(ring, m.rank(), static_cast<int>(basis.size()));
  v.rowTwists = m.twists();
  for (size_t k = 0; k < basis.size(); ++k) {
    v.colTwists[k] = 0;
    std::vector<Term> single{Term{basis[k].m, 1}};
    v.at(basis[k].comp, static_cast<int>(k)) = Polynomial(ring, std::move(single));
  }
  RingMatrix combined = RingMatrix::hcat(v, m.presentation);
  // relations among the degree-0 generators: the leading block of coordinates
  RingMatrix pres = syzygyMatrixPartial(combined, static_cast<int>(basis.size()));
  return minimalColumns(pres);
}

}  // namespace ruled
