#include <algorithm>
#include <set>
#include <tuple>

#include "ruled/gb.hpp"

namespace ruled {

namespace {

// Retag between a quotient ring and its base (identical variable layout).
Polynomial withRing(const Polynomial& f, const RingPtr& r) { return Polynomial(r, f.terms()); }

// ---------------------------------------------------------------------------
// Buchberger engine on free modules with optional syzygy tags.
//
// Elements live in F ⊕ S^c where F has `realRank` components and the tag part
// tracks representations in terms of the input columns.  The order puts every
// real term above every tag term, compares real terms by the ring order with
// position as tie-break, and compares tag terms by the Schreyer order induced
// by the input columns.  Pure-tag elements of the final basis generate the
// syzygy module of the input columns.
// ---------------------------------------------------------------------------

class Engine {
 public:
  Engine(RingPtr ring, int realRank, std::vector<int> twists, bool wantSyzygies)
      : ring_(std::move(ring)), realRank_(realRank), twists_(std::move(twists)), tags_(wantSyzygies) {}

  // column: real coordinates (size realRank); tagged with input index when
  // syzygies are requested and tracked is true (relation columns pass false).
  void addInput(const std::vector<Polynomial>& column, int degree, bool tracked);

  void run();

  struct Elem {
    ModVec v;
    int comp = 0;  // lead component
    Monomial lm;
    std::int32_t lc = 0;
    int deg = 0;
    bool pureTag = false;
    bool hasTag = false;
    bool removed = false;
  };

  std::vector<Elem> finish();                 // reduced basis, canonical order
  ModVec reduceVector(ModVec v) const;        // full normal form (real + tag zones)

  int tagBase() const { return realRank_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& twists() const { return twists_; }
  size_t basisSize() const { return basis_.size(); }
  std::vector<Monomial> leadMonomials(int component) const {
    std::vector<Monomial> out;
    for (const Elem& e : basis_)
      if (!e.pureTag && e.comp == component) out.push_back(e.lm);
    return out;
  }

  // --- ModVec arithmetic under this engine's order ---
  int cmpTerm(int c1, const Monomial& m1, int c2, const Monomial& m2) const;
  ModVec normalize(std::vector<ModTerm> raw) const;
  ModVec vecAdd(const ModVec& a, const ModVec& b) const;
  ModVec vecMulTerm(const ModVec& a, const Monomial& m, std::int64_t c) const;
  ModVec vecScaled(const ModVec& a, std::int64_t c) const;
  int vecDegree(const ModVec& v) const;

 private:
  RingPtr ring_;
  int realRank_;
  std::vector<int> twists_;  // real twists then tag twists
  bool tags_;

  std::vector<Monomial> tagLm_;  // Schreyer data per tag
  std::vector<int> tagLc_;

  std::vector<Elem> basis_;
  std::set<std::tuple<int, int, int>> queue_;  // (degree, i, j)
  std::set<std::pair<int, int>> done_;

  void addElement(ModVec v);
  void makePairs(int idx);
  Polynomial realPartAsPoly(const ModVec& v) const;
};

int Engine::cmpTerm(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
  const bool tag1 = c1 >= realRank_, tag2 = c2 >= realRank_;
  if (tag1 != tag2) return tag1 ? -1 : 1;
  if (!tag1) {
    Cmp c = ring_->compare(m1, m2);
    if (c != Cmp::EQ) return static_cast<int>(c);
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
  }
  // Schreyer order on tags: compare via the input columns' lead terms.
  const int t1 = c1 - realRank_, t2 = c2 - realRank_;
  Monomial u1 = monoMul(m1, tagLm_[t1]);
  Monomial u2 = monoMul(m2, tagLm_[t2]);
  Cmp c = ring_->compare(u1, u2);
  if (c != Cmp::EQ) return static_cast<int>(c);
  if (tagLc_[t1] != tagLc_[t2]) return tagLc_[t1] < tagLc_[t2] ? 1 : -1;
  if (t1 != t2) return t1 < t2 ? 1 : -1;
  return 0;
}

ModVec Engine::normalize(std::vector<ModTerm> raw) const {
  std::sort(raw.begin(), raw.end(), [&](const ModTerm& a, const ModTerm& b) { return cmpTerm(a.comp, a.m, b.comp, b.m) > 0; });
  const std::int64_t p = ring_->p;
  ModVec out;
  out.t.reserve(raw.size());
  for (size_t i = 0; i < raw.size();) {
    std::int64_t c = 0;
    size_t j = i;
    while (j < raw.size() && raw[j].comp == raw[i].comp && raw[j].m == raw[i].m) {
      c = (c + raw[j].c) % p;
      ++j;
    }
    if (c < 0) c += p;
    if (c) out.t.push_back(ModTerm{raw[i].comp, raw[i].m, static_cast<std::int32_t>(c)});
    i = j;
  }
  return out;
}

ModVec Engine::vecAdd(const ModVec& a, const ModVec& b) const {
  const std::int64_t p = ring_->p;
  ModVec out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = cmpTerm(a.t[i].comp, a.t[i].m, b.t[j].comp, b.t[j].m);
    if (c > 0) {
      out.t.push_back(a.t[i++]);
    } else if (c < 0) {
      out.t.push_back(b.t[j++]);
    } else {
      std::int64_t s = (a.t[i].c + b.t[j].c) % p;
      if (s) out.t.push_back(ModTerm{a.t[i].comp, a.t[i].m, static_cast<std::int32_t>(s)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
  return out;
}

ModVec Engine::vecMulTerm(const ModVec& a, const Monomial& m, std::int64_t c) const {
  const std::int64_t p = ring_->p;
  c %= p;
  if (c < 0) c += p;
  ModVec out;
  if (c == 0) return out;
  out.t.reserve(a.t.size());
  for (const ModTerm& t : a.t)
    out.t.push_back(ModTerm{t.comp, monoMul(t.m, m), static_cast<std::int32_t>(t.c * c % p)});
  return out;
}

ModVec Engine::vecScaled(const ModVec& a, std::int64_t c) const { return vecMulTerm(a, Monomial::one(), c); }

int Engine::vecDegree(const ModVec& v) const {
  if (v.isZero()) return 0;
  return v.t[0].m.wdeg + twists_[v.t[0].comp];
}

Polynomial Engine::realPartAsPoly(const ModVec& v) const {
  std::vector<Term> terms;
  for (const ModTerm& t : v.t)
    if (t.comp < realRank_) terms.push_back(Term{t.m, t.c});
  return Polynomial(ring_, std::move(terms));
}

void Engine::addInput(const std::vector<Polynomial>& column, int degree, bool tracked) {
  std::vector<ModTerm> raw;
  for (int i = 0; i < realRank_; ++i)
    for (const Term& t : column[i].terms()) raw.push_back(ModTerm{i, t.m, t.c});
  if (tags_ && tracked) {
    int tagIdx = static_cast<int>(tagLm_.size());
    // Schreyer data from the column's real lead
    ModVec probe = normalize(raw);
    if (probe.isZero()) {
      tagLm_.push_back(Monomial::one());
      tagLc_.push_back(0);
    } else {
      tagLm_.push_back(probe.t[0].m);
      tagLc_.push_back(probe.t[0].comp);
    }
    twists_.push_back(degree);
    raw.push_back(ModTerm{realRank_ + tagIdx, Monomial::one(), 1});
  }
  ModVec v = normalize(std::move(raw));
  if (v.isZero()) return;
  addElement(reduceVector(std::move(v)));
}

ModVec Engine::reduceVector(ModVec v) const {
  const std::int64_t p = ring_->p;
  std::vector<ModTerm> out;
  while (!v.isZero()) {
    const ModTerm lt = v.t[0];
    const bool ltTag = lt.comp >= realRank_;
    int hit = -1;
    for (size_t k = 0; k < basis_.size(); ++k) {
      const Elem& e = basis_[k];
      if (e.removed) continue;
      if (e.pureTag != ltTag) continue;
      if (e.comp != lt.comp) continue;
      if ((e.lm.mask & ~lt.m.mask) != 0) continue;
      if (!monoDivides(e.lm, lt.m)) continue;
      hit = static_cast<int>(k);
      break;
    }
    if (hit < 0) {
      out.push_back(lt);
      v.t.erase(v.t.begin());
      continue;
    }
    const Elem& e = basis_[hit];
    std::int64_t c = static_cast<std::int64_t>(lt.c) * modInverse(e.lc, p) % p;
    v = vecAdd(v, vecMulTerm(e.v, monoDiv(lt.m, e.lm), p - c));
  }
  ModVec r;
  r.t = std::move(out);
  return r;
}

void Engine::addElement(ModVec v) {
  if (v.isZero()) return;
  Elem e;
  e.comp = v.t[0].comp;
  e.lm = v.t[0].m;
  e.pureTag = e.comp >= realRank_;
  e.hasTag = v.t.back().comp >= realRank_;
  e.deg = vecDegree(v);
  // monic
  std::int64_t inv = modInverse(v.t[0].c, ring_->p);
  e.v = vecScaled(v, inv);
  e.lc = 1;
  basis_.push_back(std::move(e));
  if (!basis_.back().pureTag) makePairs(static_cast<int>(basis_.size()) - 1);
}

void Engine::makePairs(int idx) {
  const Elem& n = basis_[idx];
  for (int i = 0; i < idx; ++i) {
    const Elem& e = basis_[i];
    if (e.pureTag || e.comp != n.comp) continue;
    Monomial l = monoLcm(e.lm, n.lm, ring_->weights);
    int deg = l.wdeg + twists_[n.comp];
    queue_.emplace(deg, i, idx);
  }
}

void Engine::run() {
  const std::int64_t p = ring_->p;
  long processed = 0;
  while (!queue_.empty()) {
    auto [deg, i, j] = *queue_.begin();
    queue_.erase(queue_.begin());
    (void)deg;
    if (++processed > 2000000) throw AlgebraError("pair queue runaway");
    done_.emplace(i, j);
    const Elem& a = basis_[i];
    const Elem& b = basis_[j];
    Monomial l = monoLcm(a.lm, b.lm, ring_->weights);

    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < basis_.size() && !skip; ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      const Elem& e = basis_[k];
      if (e.pureTag || e.removed || e.comp != a.comp) continue;
      if (!monoDivides(e.lm, l)) continue;
      int ik = std::min<int>(i, static_cast<int>(k)), ki = std::max<int>(i, static_cast<int>(k));
      int jk = std::min<int>(j, static_cast<int>(k)), kj = std::max<int>(j, static_cast<int>(k));
      if (done_.count({ik, ki}) && done_.count({jk, kj})) skip = true;
    }
    if (skip) continue;

    // coprime lead monomials (rank-1 real part): the pair reduces to zero; its
    // syzygy is the Koszul relation of the two real parts.
    if (realRank_ == 1 && monoGcd(a.lm, b.lm, ring_->weights).isOne()) {
      if (tags_ && (a.hasTag || b.hasTag)) {
        Polynomial ra = realPartAsPoly(a.v);
        Polynomial rb = realPartAsPoly(b.v);
        ModVec koszul(normalize([&] {
          std::vector<ModTerm> raw;
          for (const Term& t : rb.terms())
            for (const ModTerm& s : a.v.t) raw.push_back(ModTerm{s.comp, monoMul(s.m, t.m), static_cast<std::int32_t>(static_cast<std::int64_t>(s.c) * t.c % p)});
          for (const Term& t : ra.terms())
            for (const ModTerm& s : b.v.t) raw.push_back(ModTerm{s.comp, monoMul(s.m, t.m), static_cast<std::int32_t>(p - static_cast<std::int64_t>(s.c) * t.c % p)});
          return raw;
        }()));
        addElement(reduceVector(std::move(koszul)));
      }
      continue;
    }

    ModVec s = vecAdd(vecMulTerm(a.v, monoDiv(l, a.lm), 1), vecMulTerm(b.v, monoDiv(l, b.lm), p - 1));
    addElement(reduceVector(std::move(s)));
  }
}

std::vector<Engine::Elem> Engine::finish() {
  // minimal basis: drop elements whose lead is divisible by another's
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].removed) continue;
    for (size_t j = 0; j < basis_.size(); ++j) {
      if (i == j || basis_[j].removed) continue;
      const Elem& a = basis_[i];
      const Elem& b = basis_[j];
      if (a.pureTag != b.pureTag || a.comp != b.comp) continue;
      if (monoDivides(b.lm, a.lm) && !(a.lm == b.lm && j > i)) {
        basis_[i].removed = true;
        break;
      }
    }
  }
  // full tail reduction against the surviving set
  std::vector<Elem> out;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].removed) continue;
    Elem e = basis_[i];
    basis_[i].removed = true;  // do not reduce by itself
    ModVec r = reduceVector(e.v);
    basis_[i].removed = false;
    if (r.isZero()) continue;
    e.v = vecScaled(r, modInverse(r.t[0].c, ring_->p));
    e.comp = e.v.t[0].comp;
    e.lm = e.v.t[0].m;
    e.lc = 1;
    e.pureTag = e.comp >= realRank_;
    e.deg = vecDegree(e.v);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [&](const Elem& a, const Elem& b) {
    if (a.pureTag != b.pureTag) return !a.pureTag;
    int c = cmpTerm(a.comp, a.lm, b.comp, b.lm);
    return c < 0;
  });
  return out;
}

// ---------------------------------------------------------------------------
// lifting helpers
// ---------------------------------------------------------------------------

struct LiftedMatrix {
  RingPtr base;
  int rank = 0;
  std::vector<int> rowTwists;
  std::vector<std::vector<Polynomial>> columns;  // tracked columns first
  std::vector<int> colDegrees;
  int trackedCols = 0;
};

// Columns of m over the base ring, with relation columns appended for
// quotient rings.
LiftedMatrix liftColumns(const RingMatrix& m) {
  LiftedMatrix out;
  const RingPtr ring = m.ring();
  out.base = plainRing(ring);
  out.rank = m.rows();
  out.rowTwists = m.rowTwists;
  out.trackedCols = m.cols();
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<Polynomial> col;
    col.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) col.push_back(withRing(m.at(i, j), out.base));
    out.columns.push_back(std::move(col));
    out.colDegrees.push_back(m.colTwists[j]);
  }
  if (ring->isQuotient()) {
    for (const Polynomial& rel : ring->relationsGB)
      for (int i = 0; i < m.rows(); ++i) {
        std::vector<Polynomial> col(m.rows(), Polynomial(out.base));
        col[i] = rel;
        out.columns.push_back(std::move(col));
        out.colDegrees.push_back(rel.degree() + m.rowTwists[i]);
      }
  }
  return out;
}

void checkColumnGraded(const std::vector<Polynomial>& col, const std::vector<int>& rowTwists, int colDeg) {
  for (size_t i = 0; i < col.size(); ++i) {
    if (col[i].isZero()) continue;
    if (!col[i].isHomogeneous() || col[i].degree() != colDeg - rowTwists[i])
      throw AlgebraError("matrix column is not homogeneous for its twists");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// public: ideal GBs
// ---------------------------------------------------------------------------

GroebnerBasis groebnerBasis(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  RingPtr base = plainRing(ring);
  Engine eng(base, 1, {0}, false);
  std::vector<Polynomial> input;
  for (const Polynomial& g : gens) {
    if (g.isZero()) continue;
    if (!g.isHomogeneous()) throw AlgebraError("groebnerBasis requires homogeneous generators");
    input.push_back(withRing(g, base));
  }
  if (ring->isQuotient())
    for (const Polynomial& rel : ring->relationsGB) input.push_back(rel);
  std::sort(input.begin(), input.end(), polyLess);
  for (const Polynomial& g : input) eng.addInput({g}, g.degree(), false);
  eng.run();
  GroebnerBasis gb;
  for (const auto& e : eng.finish()) {
    std::vector<Term> terms;
    for (const ModTerm& t : e.v.t) terms.push_back(Term{t.m, t.c});
    gb.elements.push_back(Polynomial(ring, std::move(terms)));
  }
  return gb;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (Polynomial& g : gens) {
    Polynomial h = ringNormalForm(g);
    if (!h.isZero()) gens_.push_back(std::move(h));
  }
  std::sort(gens_.begin(), gens_.end(), polyLess);
  gens_.erase(std::unique(gens_.begin(), gens_.end(), [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              gens_.end());
}

const GroebnerBasis& Ideal::gb() const {
  if (!gbCache_) gbCache_ = std::make_shared<GroebnerBasis>(groebnerBasis(gens_, ring_));
  return *gbCache_;
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.elements.empty()) return f;
  const RingPtr ring = f.ring();
  RingPtr base = plainRing(ring);
  std::vector<Polynomial> lifted;
  lifted.reserve(gb.elements.size());
  for (const Polynomial& g : gb.elements) lifted.push_back(withRing(g, base));
  Polynomial r = reduceByList(withRing(f, base), lifted);
  return withRing(r, ring);
}

Polynomial normalForm(const Polynomial& f, const Ideal& ideal) { return normalForm(f, ideal.gb()); }

bool Ideal::contains(const Polynomial& f) const { return normalForm(ringNormalForm(f), gb()).isZero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const Polynomial& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool idealEquals(const Ideal& a, const Ideal& b) {
  const auto& ga = a.gb().elements;
  const auto& gz = b.gb().elements;
  if (ga.size() != gz.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gz[i])) return false;
  return true;
}

std::vector<Polynomial> minimalGenerators(std::vector<Polynomial> gens, const RingPtr& ring) {
  std::vector<Polynomial> in;
  for (Polynomial& g : gens) {
    Polynomial h = ringNormalForm(g);
    if (!h.isZero()) in.push_back(h.monic());
  }
  std::sort(in.begin(), in.end(), polyLess);
  in.erase(std::unique(in.begin(), in.end(), [](const Polynomial& a, const Polynomial& b) { return a == b; }), in.end());
  IncrementalBasis inc(ring, {0});
  std::vector<Polynomial> kept;
  for (const Polynomial& g : in)
    if (inc.addPoly(g)) kept.push_back(g);
  return kept;
}

Ideal minimalized(const Ideal& ideal) { return Ideal(ideal.ring(), minimalGenerators(ideal.gens(), ideal.ring())); }

// ---------------------------------------------------------------------------
// public: module GBs and syzygies
// ---------------------------------------------------------------------------

ModuleGB moduleGroebner(const RingMatrix& m) {
  LiftedMatrix lift = liftColumns(m);
  Engine eng(lift.base, lift.rank, lift.rowTwists, false);
  for (size_t j = 0; j < lift.columns.size(); ++j) {
    checkColumnGraded(lift.columns[j], lift.rowTwists, lift.colDegrees[j]);
    eng.addInput(lift.columns[j], lift.colDegrees[j], false);
  }
  eng.run();
  ModuleGB gb;
  gb.ring = m.ring();
  gb.rank = m.rows();
  gb.twists = m.rowTwists;
  for (const auto& e : eng.finish()) gb.elements.push_back(e.v);
  return gb;
}

std::vector<Polynomial> moduleNormalForm(const std::vector<Polynomial>& v, const ModuleGB& gb) {
  RingPtr base = plainRing(gb.ring);
  Engine eng(base, gb.rank, gb.twists, false);
  // rebuild engine state from the stored GB (already inter-reduced)
  for (const ModVec& e : gb.elements) {
    std::vector<Polynomial> comps(gb.rank, Polynomial(base));
    for (const ModTerm& t : e.t) {
      std::vector<Term> single{Term{t.m, t.c}};
      comps[t.comp] = comps[t.comp] + Polynomial(base, std::move(single));
    }
    eng.addInput(comps, 0, false);
  }
  ModVec x;
  {
    std::vector<ModTerm> raw;
    for (int i = 0; i < gb.rank; ++i) {
      Polynomial lifted = withRing(v[i], base);
      for (const Term& t : lifted.terms()) raw.push_back(ModTerm{i, t.m, t.c});
    }
    x = eng.normalize(std::move(raw));
  }
  ModVec r = eng.reduceVector(std::move(x));
  std::vector<Polynomial> out(gb.rank, Polynomial(gb.ring));
  for (const ModTerm& t : r.t) {
    std::vector<Term> single{Term{t.m, t.c}};
    out[t.comp] = out[t.comp] + Polynomial(gb.ring, std::move(single));
  }
  return out;
}

RingMatrix syzygyMatrixPartial(const RingMatrix& m, int tracked) {
  LiftedMatrix lift = liftColumns(m);
  Engine eng(lift.base, lift.rank, lift.rowTwists, true);
  for (size_t j = 0; j < lift.columns.size(); ++j) {
    checkColumnGraded(lift.columns[j], lift.rowTwists, lift.colDegrees[j]);
    eng.addInput(lift.columns[j], lift.colDegrees[j], static_cast<int>(j) < tracked);
  }
  eng.run();
  const RingPtr ring = m.ring();
  const int tb = eng.tagBase();
  std::vector<std::vector<Polynomial>> cols;
  std::vector<int> degs;
  for (const auto& e : eng.finish()) {
    if (!e.pureTag) continue;
    std::vector<Polynomial> coord(tracked, Polynomial(ring));
    bool nonzero = false;
    for (const ModTerm& t : e.v.t) {
      int tagIdx = t.comp - tb;
      if (tagIdx >= tracked) continue;
      std::vector<Term> single{Term{t.m, t.c}};
      coord[tagIdx] = coord[tagIdx] + Polynomial(ring, std::move(single));
    }
    for (Polynomial& f : coord) {
      f = ringNormalForm(f);
      if (!f.isZero()) nonzero = true;
    }
    if (nonzero) {
      cols.push_back(std::move(coord));
      degs.push_back(e.deg);
    }
  }
  RingMatrix out(ring, tracked, static_cast<int>(cols.size()));
  out.rowTwists.assign(m.colTwists.begin(), m.colTwists.begin() + tracked);
  for (size_t j = 0; j < cols.size(); ++j) {
    out.colTwists[j] = degs[j];
    for (int i = 0; i < tracked; ++i) out.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return out;
}

RingMatrix syzygyMatrix(const RingMatrix& m) { return syzygyMatrixPartial(m, m.cols()); }

RingMatrix minimalColumns(const RingMatrix& m) {
  struct Col {
    std::vector<Polynomial> v;
    int deg = 0;
  };
  std::vector<Col> cols;
  for (int j = 0; j < m.cols(); ++j) {
    Col c;
    c.deg = m.colTwists[j];
    bool nonzero = false;
    for (int i = 0; i < m.rows(); ++i) {
      c.v.push_back(m.at(i, j));
      if (!m.at(i, j).isZero()) nonzero = true;
    }
    if (nonzero) cols.push_back(std::move(c));
  }
  std::stable_sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) { return a.deg < b.deg; });
  IncrementalBasis inc(m.ring(), m.rowTwists);
  std::vector<Col> kept;
  for (const Col& c : cols)
    if (inc.add(c.v)) kept.push_back(c);
  RingMatrix out(m.ring(), m.rows(), static_cast<int>(kept.size()));
  out.rowTwists = m.rowTwists;
  for (size_t j = 0; j < kept.size(); ++j) {
    out.colTwists[j] = kept[j].deg;
    for (int i = 0; i < m.rows(); ++i) out.at(i, static_cast<int>(j)) = kept[j].v[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// incremental bases
// ---------------------------------------------------------------------------

struct IncrementalBasis::Impl {
  RingPtr ring;
  RingPtr base;
  Engine eng;
  Impl(RingPtr r, std::vector<int> twists)
      : ring(std::move(r)), base(plainRing(ring)), eng(base, static_cast<int>(twists.size()), twists, false) {
    if (ring->isQuotient()) {
      const int rank = static_cast<int>(twists.size());
      for (const Polynomial& rel : ring->relationsGB)
        for (int i = 0; i < rank; ++i) {
          std::vector<Polynomial> col(rank, Polynomial(base));
          col[i] = rel;
          eng.addInput(col, rel.degree() + twists[i], false);
        }
      eng.run();
    }
  }
};

IncrementalBasis::IncrementalBasis(RingPtr ring, std::vector<int> twists)
    : impl_(std::make_unique<Impl>(std::move(ring), std::move(twists))) {}
IncrementalBasis::~IncrementalBasis() = default;
IncrementalBasis::IncrementalBasis(IncrementalBasis&&) noexcept = default;

bool IncrementalBasis::add(const std::vector<Polynomial>& column) {
  std::vector<Polynomial> lifted;
  lifted.reserve(column.size());
  for (const Polynomial& f : column) lifted.push_back(withRing(ringNormalForm(f), impl_->base));
  size_t before = impl_->eng.basisSize();
  impl_->eng.addInput(lifted, 0, false);
  if (impl_->eng.basisSize() == before) return false;
  impl_->eng.run();
  return true;
}

bool IncrementalBasis::addPoly(const Polynomial& f) { return add({f}); }

std::vector<Monomial> IncrementalBasis::leadMonomials(int component) const {
  return impl_->eng.leadMonomials(component);
}

int IncrementalBasis::size() const { return static_cast<int>(impl_->eng.basisSize()); }

// ---------------------------------------------------------------------------
// quotient ring factory
// ---------------------------------------------------------------------------

RingPtr plainRing(const RingPtr& ring) { return ring->isQuotient() ? ring->base : ring; }

RingPtr makeQuotientRing(const RingPtr& base, const std::vector<Polynomial>& relations) {
  if (base->isQuotient()) throw AlgebraError("iterated quotient rings unsupported");
  GroebnerBasis gb = groebnerBasis(relations, base);
  auto r = std::make_shared<PolyRing>();
  r->p = base->p;
  r->vars = base->vars;
  r->weights = base->weights;
  r->order = base->order;
  r->base = base;
  r->relationsGB = gb.elements;
  return r;
}

}  // namespace ruled
