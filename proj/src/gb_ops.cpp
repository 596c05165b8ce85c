#include <algorithm>

#include "ruled/gb.hpp"

namespace ruled {

namespace {

// 1 x n matrix with the given entries (rank-1 free module, twist 0).
RingMatrix rowMatrix(const RingPtr& ring, const std::vector<Polynomial>& entries) {
  RingMatrix m(ring, 1, static_cast<int>(entries.size()));
  for (size_t j = 0; j < entries.size(); ++j) {
    m.at(0, static_cast<int>(j)) = entries[j];
    m.colTwists[j] = entries[j].isZero() ? 0 : entries[j].degree();
  }
  return m;
}

}  // namespace

Ideal idealSum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), minimalGenerators(std::move(gens), a.ring()));
}

Ideal idealPower(const Ideal& a, int k) {
  if (k < 1) throw AlgebraError("ideal power wants k >= 1");
  Ideal r = a;
  for (int i = 1; i < k; ++i) r = idealProduct(r, a);
  return r;
}

Ideal idealIntersection(const Ideal& a, const Ideal& b) {
  if (a.isZero()) return a;
  if (b.isZero()) return b;
  std::vector<Polynomial> entries = a.gens();
  entries.insert(entries.end(), b.gens().begin(), b.gens().end());
  RingMatrix m = rowMatrix(a.ring(), entries);
  const int na = static_cast<int>(a.gens().size());
  RingMatrix syz = syzygyMatrixPartial(m, na);
  std::vector<Polynomial> gens;
  for (int j = 0; j < syz.cols(); ++j) {
    Polynomial e(a.ring());
    for (int i = 0; i < na; ++i) {
      if (syz.at(i, j).isZero()) continue;
      e = e + syz.at(i, j) * a.gens()[i];
    }
    if (!e.isZero()) gens.push_back(e);
  }
  return Ideal(a.ring(), std::move(gens));
}

// i : j in one syzygy pass: rows indexed by the generators f_t of j; the
// tracked column holds (f_1 .. f_t)^T and each row carries a private copy of
// the generators of i, so a syzygy's tracked coordinate multiplies every f_t
// into i at once.
Ideal idealQuotient(const Ideal& i, const Ideal& j) {
  if (j.isZero()) return Ideal::unit(i.ring());
  const RingPtr& ring = i.ring();
  const auto& fs = j.gens();
  const auto& gs = i.gens();
  const int t = static_cast<int>(fs.size());
  const int s = static_cast<int>(gs.size());
  RingMatrix m(ring, t, 1 + t * s);
  for (int r = 0; r < t; ++r) m.rowTwists[r] = -fs[r].degree();
  m.colTwists[0] = 0;
  for (int r = 0; r < t; ++r) {
    m.at(r, 0) = fs[r];
    for (int c = 0; c < s; ++c) {
      m.at(r, 1 + r * s + c) = gs[c];
      m.colTwists[1 + r * s + c] = gs[c].degree() - fs[r].degree();
    }
  }
  RingMatrix syz = syzygyMatrixPartial(m, 1);
  std::vector<Polynomial> gens;
  for (int c = 0; c < syz.cols(); ++c)
    if (!syz.at(0, c).isZero()) gens.push_back(syz.at(0, c));
  return Ideal(ring, std::move(gens));
}

Ideal saturation(const Ideal& i, const Ideal& j) {
  Ideal cur = i;
  for (int round = 0; round < 200; ++round) {
    Ideal next = idealQuotient(cur, j);
    if (idealEquals(next, cur)) return cur;
    cur = next;
  }
  throw AlgebraError("saturation did not stabilize");
}

Ideal saturationIrrelevant(const Ideal& i) {
  std::vector<Polynomial> vars;
  for (int v = 0; v < i.ring()->nvars(); ++v) vars.push_back(Polynomial::variable(i.ring(), v));
  return saturation(i, Ideal(i.ring(), std::move(vars)));
}

Ideal eliminate(const Ideal& i, int leadingVars) {
  const RingPtr& ring = i.ring();
  if (ring->isQuotient()) throw AlgebraError("eliminate expects a plain ring");
  if (ring->order.kind != OrderKind::Block || ring->order.blockSize != leadingVars)
    throw AlgebraError("eliminate requires a block order with the stated leading block");
  const std::uint32_t leadMask = (1u << leadingVars) - 1;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : i.gb().elements) {
    bool free = true;
    for (const Term& t : g.terms())
      if (t.m.mask & leadMask) {
        free = false;
        break;
      }
    if (free) kept.push_back(g);
  }
  return Ideal(ring, std::move(kept));
}

Ideal eliminateInto(const Ideal& i, int leadingVars, const RingPtr& subring) {
  Ideal e = eliminate(i, leadingVars);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : e.gens()) gens.push_back(transfer(g, subring));
  return Ideal(subring, minimalGenerators(std::move(gens), subring));
}

// ---------------------------------------------------------------------------
// gcd / squarefree part
// ---------------------------------------------------------------------------

Polynomial polyGcd(const Polynomial& f, const Polynomial& g) {
  if (f.isZero()) return g.monic();
  if (g.isZero()) return f.monic();
  const RingPtr& ring = f.ring();
  if (ring->isQuotient()) throw AlgebraError("gcd expects a plain ring");
  Ideal inter = idealIntersection(Ideal(ring, {f}), Ideal(ring, {g}));
  std::vector<Polynomial> gens = minimalGenerators(inter.gens(), ring);
  if (gens.size() != 1) throw AlgebraError("principal intersection expected in gcd");
  return exactDivide(f * g, gens[0]).monic();
}

Polynomial squarefreePart(const Polynomial& f) {
  if (f.isZero()) throw AlgebraError("squarefree part of zero");
  if (f.degree() >= f.ring()->p) throw AlgebraError("squarefree part needs p > deg f");
  Polynomial h = f;
  for (int v = 0; v < f.ring()->nvars(); ++v) {
    Polynomial d = differentiate(f, v);
    if (!d.isZero()) h = polyGcd(h, d);
  }
  return exactDivide(f, h).monic();
}

// ---------------------------------------------------------------------------
// kernel of a ring map
// ---------------------------------------------------------------------------

Ideal ringMapKernel(const Ideal& j, const std::vector<Polynomial>& forms, int k,
                    const std::vector<std::string>& newVarNames) {
  const RingPtr src = j.ring();
  const RingPtr srcBase = plainRing(src);
  if (forms.empty()) throw AlgebraError("ring map needs at least one form");
  for (const Polynomial& f : forms) {
    if (f.isZero() || !f.isHomogeneous() || f.degree() != k)
      throw AlgebraError("ring map forms must be nonzero homogeneous of the common degree");
  }
  if (forms.size() != newVarNames.size()) throw AlgebraError("one new variable per form");

  const int ny = srcBase->nvars();
  std::vector<std::string> names = srcBase->vars;
  names.insert(names.end(), newVarNames.begin(), newVarNames.end());
  std::vector<int> weights = srcBase->weights;
  for (size_t t = 0; t < newVarNames.size(); ++t) weights.push_back(k);
  RingPtr big = PolyRing::make(src->p, names, TermOrder::block(ny), weights);

  std::vector<Polynomial> gens;
  for (const Polynomial& g : j.gens()) gens.push_back(transfer(g, big));
  if (src->isQuotient())
    for (const Polynomial& rel : src->relationsGB) gens.push_back(transfer(rel, big));
  for (size_t t = 0; t < forms.size(); ++t)
    gens.push_back(Polynomial::variable(big, ny + static_cast<int>(t)) - transfer(forms[t], big));

  std::vector<Polynomial> yvars;
  for (int v = 0; v < ny; ++v) yvars.push_back(Polynomial::variable(big, v));
  Ideal graph(big, std::move(gens));
  Ideal sat = saturation(graph, Ideal(big, std::move(yvars)));

  RingPtr zring = PolyRing::make(src->p, std::vector<std::string>(newVarNames.begin(), newVarNames.end()));
  return eliminateInto(sat, ny, zring);
}

}  // namespace ruled
