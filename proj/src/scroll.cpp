#include <algorithm>

#include "ruled/surfaces.hpp"

namespace ruled {

ScrollEmbedding scrollIdeal(const GradedModule& m, const CurveModel& c) {
  const RingPtr& S = c.S;
  if (m.ring != S) throw ConstructionError("module must live over the curve's coordinate ring");
  RingMatrix phi = degreeZeroPartPresentation(m);
  const int n1 = phi.rows();
  const std::int64_t p = S->p;
  const int xs = c.R->nvars();

  std::vector<std::string> names = c.R->vars;
  for (int i = 1; i <= n1; ++i) names.push_back("y_" + std::to_string(i));
  RingPtr TR = PolyRing::make(p, names, TermOrder::block(xs));
  std::vector<std::string> ynames(names.begin() + xs, names.end());
  RingPtr T = PolyRing::make(p, ynames);

  RingMatrix Phi(TR, n1, phi.cols());
  Phi.rowTwists = phi.rowTwists;
  Phi.colTwists = phi.colTwists;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < phi.cols(); ++j) Phi.at(i, j) = transfer(phi.at(i, j), TR);

  std::vector<Polynomial> gens;
  for (int j = 0; j < phi.cols(); ++j) {
    Polynomial e(TR);
    for (int i = 0; i < n1; ++i) {
      if (Phi.at(i, j).isZero()) continue;
      e = e + Polynomial::variable(TR, xs + i) * Phi.at(i, j);
    }
    if (!e.isZero()) gens.push_back(e);
  }
  for (const Polynomial& g : c.ideal.gens()) gens.push_back(transfer(g, TR));

  ScrollEmbedding emb;
  emb.TR = TR;
  emb.T = T;
  emb.xCount = xs;
  emb.Phi = Phi;
  emb.incidence = Ideal(TR, std::move(gens));
  std::vector<Polynomial> xvars;
  for (int v = 0; v < xs; ++v) xvars.push_back(Polynomial::variable(TR, v));
  emb.saturated = saturation(emb.incidence, Ideal(TR, std::move(xvars)));
  emb.J = eliminateInto(emb.saturated, xs, T);
  emb.r = n1 - 1;
  return emb;
}

Ideal pullbackIdeal(const ScrollEmbedding& emb, const Ideal& ambientIdeal) {
  std::vector<Polynomial> gens = emb.incidence.gens();
  for (const Polynomial& g : ambientIdeal.gens()) gens.push_back(transfer(g, emb.TR));
  Ideal lifted(emb.TR, std::move(gens));
  std::vector<Polynomial> xvars;
  for (int v = 0; v < emb.xCount; ++v) xvars.push_back(Polynomial::variable(emb.TR, v));
  Ideal sat = saturation(lifted, Ideal(emb.TR, std::move(xvars)));
  return eliminateInto(sat, emb.xCount, emb.T);
}

std::vector<Polynomial> quotientFormBasis(const Ideal& a, const Ideal& j, int k) {
  const RingPtr& ring = a.ring();
  std::vector<Monomial> monos = monomialsOfDegree(ring, k);
  std::map<std::vector<std::uint8_t>, int> index;
  for (size_t i = 0; i < monos.size(); ++i)
    index[std::vector<std::uint8_t>(monos[i].e.begin(), monos[i].e.end())] = static_cast<int>(i);
  const std::int64_t p = ring->p;

  auto sliceVectors = [&](const Ideal& ideal) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const Polynomial& g : ideal.gb().elements) {
      if (g.degree() > k) continue;
      for (const Monomial& m : monomialsOfDegree(ring, k - g.degree())) {
        Polynomial f = g.mulTerm(m, 1);
        std::vector<std::int64_t> row(monos.size(), 0);
        for (const Term& t : f.terms())
          row[index.at(std::vector<std::uint8_t>(t.m.e.begin(), t.m.e.end()))] = t.c;
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };

  // echelon of the J slice, then representatives from the A slice
  std::vector<std::vector<std::int64_t>> echelon;  // rows with recorded pivots
  std::vector<int> pivots;
  auto reduceRow = [&](std::vector<std::int64_t> row) {
    for (size_t r = 0; r < echelon.size(); ++r) {
      std::int64_t c = row[pivots[r]];
      if (!c) continue;
      for (size_t i = 0; i < row.size(); ++i) row[i] = ((row[i] - c * echelon[r][i]) % p + p) % p;
    }
    return row;
  };
  auto insertRow = [&](std::vector<std::int64_t> row) -> bool {
    row = reduceRow(std::move(row));
    int pivot = -1;
    for (size_t i = 0; i < row.size(); ++i)
      if (row[i]) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) return false;
    std::int64_t inv = modInverse(row[pivot], p);
    for (auto& x : row) x = x * inv % p;
    echelon.push_back(std::move(row));
    pivots.push_back(pivot);
    return true;
  };

  for (auto& row : sliceVectors(j)) insertRow(std::move(row));
  std::vector<Polynomial> reps;
  for (auto& row : sliceVectors(a)) {
    std::vector<std::int64_t> reduced = reduceRow(row);
    std::vector<std::int64_t> saved = reduced;
    if (!insertRow(std::move(reduced))) continue;
    // canonical representative: the reduced residue, monic
    std::vector<Term> raw;
    for (size_t i = 0; i < saved.size(); ++i)
      if (saved[i]) raw.push_back(Term{monos[i], static_cast<std::int32_t>(saved[i])});
    reps.push_back(Polynomial::fromTerms(ring, std::move(raw)).monic());
  }
  if (reps.empty()) throw ConstructionError("degree slice quotient is zero; no embedding forms");
  return reps;
}

}  // namespace ruled
