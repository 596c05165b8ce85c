#include <algorithm>
#include <functional>

#include "ruled/gb.hpp"

namespace ruled {

std::vector<Monomial> monomialsOfDegree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = ring->nvars();
  std::vector<int> exps(n, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == n - 1) {
      if (remaining % ring->weights[i]) return;
      exps[i] = remaining / ring->weights[i];
      if (exps[i] > 255) return;
      out.push_back(ring->makeMono(exps));
      exps[i] = 0;
      return;
    }
    for (int e = 0; e * ring->weights[i] <= remaining && e <= 255; ++e) {
      exps[i] = e;
      rec(i + 1, remaining - e * ring->weights[i]);
    }
    exps[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring->less(a, b); });
  return out;
}

std::vector<Monomial> standardMonomials(const RingPtr& ring, int d, const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const Polynomial& g : gb.elements) leads.push_back(g.lead().m);
  std::vector<Monomial> out;
  for (const Monomial& m : monomialsOfDegree(ring, d)) {
    bool standard = true;
    for (const Monomial& l : leads)
      if (monoDivides(l, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
  }
  return out;
}

std::int64_t hilbertFunction(const Ideal& ideal, int t) {
  if (t < 0) return 0;
  return static_cast<std::int64_t>(standardMonomials(ideal.ring(), t, ideal.gb()).size());
}

// ---------------------------------------------------------------------------
// Hilbert series numerator of a monomial ideal (pivot recursion)
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<std::int64_t>;  // coefficients of t^0, t^1, ...

ZPoly zAdd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

ZPoly zMul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zShift(const ZPoly& a, int d) {
  ZPoly r(a.size() + d, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + d] = a[i];
  return r;
}

void dropDivisible(std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && monoDivides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

ZPoly hilbNumerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
  dropDivisible(gens);
  if (gens.empty()) return {1};
  for (const Monomial& g : gens)
    if (g.isOne()) return {0};
  // pairwise coprime: product formula
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (gens[i].mask & gens[j].mask) coprime = false;
  if (coprime) {
    ZPoly r{1};
    for (const Monomial& g : gens) {
      ZPoly f(g.wdeg + 1, 0);
      f[0] = 1;
      f[g.wdeg] -= 1;
      r = zMul(r, f);
    }
    return r;
  }
  // pivot on the most frequent variable
  std::array<int, kMaxVars> freq{};
  for (const Monomial& g : gens)
    for (int v = 0; v < kMaxVars; ++v)
      if (g.e[v]) ++freq[v];
  int pivot = 0;
  for (int v = 1; v < kMaxVars; ++v)
    if (freq[v] > freq[pivot]) pivot = v;

  std::vector<Monomial> plus;   // gens of I + (x_pivot)
  std::vector<Monomial> colon;  // gens of I : x_pivot
  Monomial xv;
  xv.e[pivot] = 1;
  xv.mask = 1u << pivot;
  xv.wdeg = weights[pivot];
  plus.push_back(xv);
  for (const Monomial& g : gens) {
    if (!g.e[pivot]) plus.push_back(g);
    Monomial h = g;
    if (h.e[pivot]) {
      h.e[pivot] -= 1;
      if (!h.e[pivot]) h.mask &= ~(1u << pivot);
      h.wdeg -= weights[pivot];
    }
    colon.push_back(h);
  }
  ZPoly a = hilbNumerator(std::move(plus), weights);
  ZPoly b = hilbNumerator(std::move(colon), weights);
  return zAdd(a, zShift(b, weights[pivot]));
}

}  // namespace

std::pair<int, std::int64_t> dimDegree(const Ideal& ideal) {
  const GroebnerBasis& gb = ideal.gb();
  if (gb.isUnit()) return {-1, 0};
  std::vector<Monomial> leads;
  for (const Polynomial& g : gb.elements) leads.push_back(g.lead().m);
  return dimDegreeFromLeads(std::move(leads), ideal.ring());
}

std::pair<int, std::int64_t> dimDegreeFromLeads(std::vector<Monomial> leads, const RingPtr& ring) {
  for (int w : ring->weights)
    if (w != 1) throw AlgebraError("dimDegree expects a standard grading");
  for (const Monomial& m : leads)
    if (m.isOne()) return {-1, 0};
  ZPoly num = hilbNumerator(std::move(leads), ring->weights);
  // strip (1-t) factors
  int c = 0;
  auto evalAt1 = [](const ZPoly& f) {
    std::int64_t s = 0;
    for (std::int64_t v : f) s += v;
    return s;
  };
  ZPoly cur = num;
  while (!cur.empty() && evalAt1(cur) == 0) {
    // divide by (1 - t): q_i = sum_{j<=i} cur_j
    ZPoly q(cur.size() - 1, 0);
    std::int64_t run = 0;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      run += cur[i];
      q[i] = run;
    }
    cur = std::move(q);
    ++c;
  }
  int dim = ring->nvars() - c;
  std::int64_t degree = evalAt1(cur);
  return {dim, degree};
}

HilbertData hilbertData(const Ideal& ideal, int tmax) {
  HilbertData h;
  for (int t = 0; t <= tmax; ++t) h.values[t] = hilbertFunction(ideal, t);
  auto [dim, deg] = dimDegree(ideal);
  h.dimension = dim;
  h.degree = deg;
  return h;
}

// ---------------------------------------------------------------------------
// Betti tables
// ---------------------------------------------------------------------------

std::vector<std::int64_t> BettiTable::totals() const {
  int imax = 0;
  for (const auto& [key, v] : ranks) imax = std::max(imax, key.first);
  std::vector<std::int64_t> t(imax + 1, 0);
  for (const auto& [key, v] : ranks) t[key.first] += v;
  return t;
}

std::int64_t BettiTable::at(int i, int j) const {
  auto it = ranks.find({i, j});
  return it == ranks.end() ? 0 : it->second;
}

}  // namespace ruled
