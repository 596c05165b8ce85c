#include "ruled/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace ruled {

// ---------------------------------------------------------------------------
// field
// ---------------------------------------------------------------------------

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t modPow(std::int64_t a, std::int64_t e, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::int64_t modInverse(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw AlgebraError("division by zero in Z/" + std::to_string(p));
  return modPow(a, p - 2, p);
}

std::int64_t balanced(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  return a > p / 2 ? a - p : a;
}

FieldElement::FieldElement(std::int64_t v, std::int64_t prime) : p(prime) {
  if (!isPrime(p) || p == 2) throw AlgebraError("modulus must be an odd prime");
  value = v % p;
  if (value < 0) value += p;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return FieldElement(value + o.value, p); }
FieldElement FieldElement::operator-(const FieldElement& o) const { return FieldElement(value - o.value, p); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return FieldElement(value * o.value, p); }

FieldElement fieldInverse(const FieldElement& a) { return FieldElement(modInverse(a.value, a.p), a.p); }

// ---------------------------------------------------------------------------
// monomials
// ---------------------------------------------------------------------------

Monomial monoMul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw AlgebraError("monomial exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.wdeg = a.wdeg + b.wdeg;
  r.mask = a.mask | b.mask;
  return r;
}

bool monoDivides(const Monomial& a, const Monomial& b) {
  if ((a.mask & ~b.mask) != 0) return false;
  if (a.wdeg > b.wdeg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial monoDiv(const Monomial& b, const Monomial& a) {
  Monomial r;
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    if (r.e[i]) mask |= 1u << i;
  }
  r.wdeg = b.wdeg - a.wdeg;
  r.mask = mask;
  return r;
}

static Monomial monoCombine(const Monomial& a, const Monomial& b, const std::vector<int>& w, bool takeMax) {
  Monomial r;
  int deg = 0;
  std::uint32_t mask = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    std::uint8_t v = takeMax ? std::max(a.e[i], b.e[i]) : std::min(a.e[i], b.e[i]);
    r.e[i] = v;
    if (v) mask |= 1u << i;
    deg += v * w[i];
  }
  r.wdeg = deg;
  r.mask = mask;
  return r;
}

Monomial monoLcm(const Monomial& a, const Monomial& b, const std::vector<int>& w) { return monoCombine(a, b, w, true); }
Monomial monoGcd(const Monomial& a, const Monomial& b, const std::vector<int>& w) { return monoCombine(a, b, w, false); }

// grevlex on a variable range [lo, hi): weighted degree first, then the last
// variable with differing exponent decides (smaller exponent wins).
static Cmp grevlexRange(const Monomial& a, const Monomial& b, const std::vector<int>& w, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i] * w[i];
    db += b.e[i] * w[i];
  }
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

Cmp PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  if (order.kind == OrderKind::GrevLex) {
    if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg ? Cmp::GT : Cmp::LT;
    for (int i = n - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::GT : Cmp::LT;
    return Cmp::EQ;
  }
  Cmp c = grevlexRange(a, b, weights, 0, order.blockSize);
  if (c != Cmp::EQ) return c;
  return grevlexRange(a, b, weights, order.blockSize, n);
}

Cmp compareMonomials(const Monomial& a, const Monomial& b, const PolyRing& ring) { return ring.compare(a, b); }

int PolyRing::varIndex(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[i] == name) return i;
  return -1;
}

Monomial PolyRing::makeMono(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != nvars()) throw AlgebraError("exponent arity mismatch");
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw AlgebraError("exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    if (exps[i]) m.mask |= 1u << i;
    m.wdeg += exps[i] * weights[i];
  }
  return m;
}

Monomial PolyRing::makeVar(int i, int power) const {
  Monomial m;
  m.e[i] = static_cast<std::uint8_t>(power);
  if (power) m.mask |= 1u << i;
  m.wdeg = power * weights[i];
  return m;
}

RingPtr PolyRing::make(std::int64_t p, std::vector<std::string> names, TermOrder order, std::vector<int> weights) {
  if (!isPrime(p) || p == 2) throw AlgebraError("modulus must be an odd prime");
  if (names.size() > static_cast<size_t>(kMaxVars)) throw AlgebraError("too many variables");
  auto r = std::make_shared<PolyRing>();
  r->p = p;
  r->vars = std::move(names);
  if (weights.empty()) weights.assign(r->vars.size(), 1);
  if (weights.size() != r->vars.size()) throw AlgebraError("weight arity mismatch");
  for (int w : weights)
    if (w <= 0) throw AlgebraError("weights must be positive");
  r->weights = std::move(weights);
  r->order = order;
  return r;
}

RingPtr PolyRing::makeStd(std::int64_t p, int n, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(stem + "_" + std::to_string(i));
  return make(p, std::move(names));
}

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

const Term& Polynomial::lead() const {
  if (t_.empty()) throw AlgebraError("leading term of zero polynomial");
  return t_[0];
}

int Polynomial::degree() const { return lead().m.wdeg; }

bool Polynomial::isHomogeneous() const {
  if (t_.empty()) return true;
  const int d = t_[0].m.wdeg;
  for (const Term& t : t_)
    if (t.m.wdeg != d) return false;
  return true;
}

Polynomial Polynomial::fromTerms(const RingPtr& r, std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) { return r->compare(a.m, b.m) == Cmp::GT; });
  std::vector<Term> out;
  out.reserve(raw.size());
  const std::int64_t p = r->p;
  for (size_t i = 0; i < raw.size();) {
    std::int64_t c = 0;
    size_t j = i;
    while (j < raw.size() && raw[j].m == raw[i].m) {
      c = (c + raw[j].c) % p;
      ++j;
    }
    if (c < 0) c += p;
    if (c != 0) out.push_back(Term{raw[i].m, static_cast<std::int32_t>(c)});
    i = j;
  }
  return Polynomial(r, std::move(out));
}

static void checkSameRing(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw AlgebraError("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  checkSameRing(*this, o);
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  const std::int64_t p = ring_->p;
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    Cmp c = ring_->compare(t_[i].m, o.t_[j].m);
    if (c == Cmp::GT) {
      out.push_back(t_[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(o.t_[j++]);
    } else {
      std::int64_t s = (t_[i].c + o.t_[j].c) % p;
      if (s) out.push_back(Term{t_[i].m, static_cast<std::int32_t>(s)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) out.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = t_;
  const std::int64_t p = ring_ ? ring_->p : 101;
  for (Term& t : out) t.c = static_cast<std::int32_t>(p - t.c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::int64_t c) const {
  const std::int64_t p = ring_->p;
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return Polynomial(ring_);
  if (c == 1) return *this;
  std::vector<Term> out = t_;
  for (Term& t : out) t.c = static_cast<std::int32_t>(t.c * c % p);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return scaled(modInverse(t_[0].c, ring_->p));
}

Polynomial Polynomial::mulTerm(const Monomial& m, std::int64_t c) const {
  const std::int64_t p = ring_->p;
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const Term& t : t_) out.push_back(Term{monoMul(t.m, m), static_cast<std::int32_t>(t.c * c % p)});
  return Polynomial(ring_, std::move(out));
}

// hash for monomials, used only as an accumulator before canonical sorting
struct MonoHash {
  size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

Polynomial Polynomial::operator*(const Polynomial& o) const {
  checkSameRing(*this, o);
  const std::int64_t p = ring_->p;
  std::unordered_map<Monomial, std::int64_t, MonoHash> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (const Term& a : t_)
    for (const Term& b : o.t_) {
      Monomial m = monoMul(a.m, b.m);
      auto [it, fresh] = acc.try_emplace(m, 0);
      it->second = (it->second + static_cast<std::int64_t>(a.c) * b.c) % p;
    }
  std::vector<Term> raw;
  raw.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c % p != 0) raw.push_back(Term{m, static_cast<std::int32_t>(c % p)});
  Polynomial prod = fromTerms(ring_, std::move(raw));
  return ringNormalForm(prod);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_) return false;
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].c != o.t_[i].c || t_[i].m != o.t_[i].m) return false;
  return true;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw AlgebraError("negative power");
  Polynomial r = constant(ring_, 1);
  Polynomial b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Polynomial Polynomial::constant(const RingPtr& r, std::int64_t c) {
  c %= r->p;
  if (c < 0) c += r->p;
  if (c == 0) return Polynomial(r);
  return Polynomial(r, {Term{Monomial::one(), static_cast<std::int32_t>(c)}});
}

Polynomial Polynomial::variable(const RingPtr& r, int i, int power) {
  if (power == 0) return constant(r, 1);
  return Polynomial(r, {Term{r->makeVar(i, power), 1}});
}

bool polyLess(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() != b.isZero()) return b.isZero() ? false : true;
  if (a.isZero()) return false;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp c = a.ring()->compare(ta[i].m, tb[i].m);
    if (c != Cmp::EQ) return c == Cmp::LT;
    if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
  }
  return ta.size() < tb.size();
}

Polynomial reduceByList(const Polynomial& f, const std::vector<Polynomial>& gs) {
  if (gs.empty() || f.isZero()) return f;
  const RingPtr& r = f.ring();
  const std::int64_t p = r->p;
  Polynomial work = f;
  std::vector<Term> remainder;
  while (!work.isZero()) {
    const Term& lt = work.lead();
    bool hit = false;
    for (const Polynomial& g : gs) {
      const Term& gl = g.lead();
      if ((gl.m.mask & ~lt.m.mask) != 0) continue;
      if (!monoDivides(gl.m, lt.m)) continue;
      std::int64_t c = lt.c * modInverse(gl.c, p) % p;
      work = work - g.mulTerm(monoDiv(lt.m, gl.m), c);
      hit = true;
      break;
    }
    if (!hit) {
      remainder.push_back(lt);
      std::vector<Term> rest(work.terms().begin() + 1, work.terms().end());
      work = Polynomial(r, std::move(rest));
    }
  }
  return Polynomial(r, std::move(remainder));
}

Polynomial ringNormalForm(const Polynomial& f) {
  const RingPtr& r = f.ring();
  if (!r || !r->isQuotient() || f.isZero()) return f;
  Polynomial lifted(r->base, f.terms());
  Polynomial reduced = reduceByList(lifted, r->relationsGB);
  return Polynomial(r, reduced.terms());
}

Polynomial exactDivide(const Polynomial& f, const Polynomial& g) {
  if (g.isZero()) throw AlgebraError("division by zero polynomial");
  const RingPtr& r = f.ring();
  const std::int64_t p = r->p;
  Polynomial work = f;
  std::vector<Term> q;
  while (!work.isZero()) {
    const Term& lt = work.lead();
    const Term& gl = g.lead();
    if (!monoDivides(gl.m, lt.m)) throw AlgebraError("inexact polynomial division");
    Monomial m = monoDiv(lt.m, gl.m);
    std::int64_t c = lt.c * modInverse(gl.c, p) % p;
    q.push_back(Term{m, static_cast<std::int32_t>(c)});
    work = work - g.mulTerm(m, c);
  }
  return Polynomial::fromTerms(r, std::move(q));
}

Polynomial transfer(const Polynomial& f, const RingPtr& target) {
  if (f.ring() == target) return f;
  const RingPtr& src = f.ring();
  std::vector<int> map(src->nvars());
  for (int i = 0; i < src->nvars(); ++i) {
    map[i] = target->varIndex(src->vars[i]);
    if (map[i] < 0) {
      // variables missing from the target are sent to zero
      map[i] = -1;
    }
  }
  std::vector<Term> raw;
  raw.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    Monomial m;
    bool killed = false;
    for (int i = 0; i < src->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (map[i] < 0) {
        killed = true;
        break;
      }
      m.e[map[i]] = t.m.e[i];
      m.mask |= 1u << map[i];
      m.wdeg += t.m.e[i] * target->weights[map[i]];
    }
    if (!killed) raw.push_back(Term{m, t.c});
  }
  Polynomial out = Polynomial::fromTerms(target, std::move(raw));
  return ringNormalForm(out);
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::vector<Polynomial>& images) {
  const RingPtr& src = f.ring();
  if (static_cast<int>(images.size()) != src->nvars()) throw AlgebraError("substitution arity mismatch");
  Polynomial out = Polynomial::zero(target);
  for (const Term& t : f.terms()) {
    Polynomial m = Polynomial::constant(target, t.c);
    for (int i = 0; i < src->nvars(); ++i)
      if (t.m.e[i]) m = m * images[i].pow(t.m.e[i]);
    out = out + m;
  }
  return ringNormalForm(out);
}

Polynomial differentiate(const Polynomial& f, int var) {
  const RingPtr& r = f.ring();
  if (var < 0 || var >= r->nvars()) throw AlgebraError("unknown variable in differentiate");
  const std::int64_t p = r->p;
  std::vector<Term> raw;
  for (const Term& t : f.terms()) {
    int e = t.m.e[var];
    if (!e) continue;
    std::int64_t c = static_cast<std::int64_t>(t.c) * (e % p) % p;
    if (!c) continue;
    Monomial m = t.m;
    m.e[var] = static_cast<std::uint8_t>(e - 1);
    if (!m.e[var]) m.mask &= ~(1u << var);
    m.wdeg -= r->weights[var];
    raw.push_back(Term{m, static_cast<std::int32_t>(c)});
  }
  return Polynomial::fromTerms(r, std::move(raw));
}

std::int64_t evaluate(const Polynomial& f, const std::vector<std::int64_t>& point) {
  const RingPtr& r = f.ring();
  if (static_cast<int>(point.size()) != r->nvars()) throw AlgebraError("evaluation arity mismatch");
  const std::int64_t p = r->p;
  std::int64_t acc = 0;
  for (const Term& t : f.terms()) {
    std::int64_t v = t.c;
    for (int i = 0; i < r->nvars(); ++i)
      if (t.m.e[i]) v = v * modPow(point[i], t.m.e[i], p) % p;
    acc = (acc + v) % p;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

RingMatrix::RingMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Polynomial(ring_)) {
  rowTwists.assign(rows, 0);
  colTwists.assign(cols, 0);
}

bool RingMatrix::isGraded() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Polynomial& f = at(i, j);
      if (f.isZero()) continue;
      if (!f.isHomogeneous()) return false;
      if (f.degree() != colTwists[j] - rowTwists[i]) return false;
    }
  return true;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  for (int j = 0; j < cols_; ++j) r.rowTwists[j] = -colTwists[j];
  for (int i = 0; i < rows_; ++i) r.colTwists[i] = -rowTwists[i];
  return r;
}

RingMatrix RingMatrix::mul(const RingMatrix& o) const {
  if (cols_ != o.rows_) throw AlgebraError("matrix shape mismatch");
  RingMatrix r(ring_, rows_, o.cols_);
  r.rowTwists = rowTwists;
  r.colTwists = o.colTwists;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Polynomial s(ring_);
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).isZero() || o.at(k, j).isZero()) continue;
        s = s + at(i, k) * o.at(k, j);
      }
      r.at(i, j) = std::move(s);
    }
  return r;
}

RingMatrix RingMatrix::hcat(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows_ != b.rows_) throw AlgebraError("hcat row mismatch");
  RingMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
  r.rowTwists = a.rowTwists;
  r.colTwists = a.colTwists;
  r.colTwists.insert(r.colTwists.end(), b.colTwists.begin(), b.colTwists.end());
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
  }
  return r;
}

RingMatrix RingMatrix::vcat(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols_ != b.cols_) throw AlgebraError("vcat column mismatch");
  RingMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
  r.colTwists = a.colTwists;
  r.rowTwists = a.rowTwists;
  r.rowTwists.insert(r.rowTwists.end(), b.rowTwists.begin(), b.rowTwists.end());
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
  return r;
}

RingMatrix RingMatrix::diag(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix r(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.rowTwists = a.rowTwists;
  r.rowTwists.insert(r.rowTwists.end(), b.rowTwists.begin(), b.rowTwists.end());
  r.colTwists = a.colTwists;
  r.colTwists.insert(r.colTwists.end(), b.colTwists.begin(), b.colTwists.end());
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return r;
}

// determinant of the submatrix on rows [k..n) hitting the column subset, by
// expansion along the first remaining row; memoized on the column bitmask
static Polynomial detRec(const RingMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols, int k,
                         std::uint32_t colMask, std::map<std::pair<int, std::uint32_t>, Polynomial>& memo) {
  const RingPtr& ring = m.ring();
  const int n = static_cast<int>(rows.size());
  if (k == n) return Polynomial::constant(ring, 1);
  auto key = std::make_pair(k, colMask);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Polynomial acc(ring);
  int sign = 1;
  for (int j = 0; j < n; ++j) {
    if (!(colMask & (1u << j))) continue;
    const Polynomial& e = m.at(rows[k], cols[j]);
    if (!e.isZero()) {
      Polynomial sub = detRec(m, rows, cols, k + 1, colMask & ~(1u << j), memo);
      Polynomial termP = e * sub;
      acc = sign > 0 ? acc + termP : acc - termP;
    }
    sign = -sign;
  }
  memo.emplace(key, acc);
  return acc;
}

Polynomial determinant(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("determinant of non-square matrix");
  std::vector<int> idx(m.rows());
  for (int i = 0; i < m.rows(); ++i) idx[i] = i;
  std::map<std::pair<int, std::uint32_t>, Polynomial> memo;
  std::uint32_t full = m.rows() >= 32 ? ~0u : ((1u << m.rows()) - 1);
  return detRec(m, idx, idx, 0, full, memo);
}

static void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<Polynomial> minorsList(int k, const RingMatrix& m) {
  if (k < 1 || k > std::min(m.rows(), m.cols())) throw AlgebraError("minor size out of range");
  std::vector<std::vector<int>> rowSets, colSets;
  combinations(m.rows(), k, rowSets);
  combinations(m.cols(), k, colSets);
  std::vector<Polynomial> out;
  for (const auto& rs : rowSets)
    for (const auto& cs : colSets) {
      std::map<std::pair<int, std::uint32_t>, Polynomial> memo;
      // reuse detRec on the selected rows/cols
      std::uint32_t full = (1u << k) - 1;
      Polynomial d = detRec(m, rs, cs, 0, full, memo);
      if (!d.isZero()) out.push_back(d.monic());
    }
  std::sort(out.begin(), out.end(), polyLess);
  out.erase(std::unique(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a == b; }),
            out.end());
  return out;
}

RingMatrix jacobianMatrix(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  RingMatrix j(ring, ring->nvars(), static_cast<int>(gens.size()));
  for (int i = 0; i < ring->nvars(); ++i) j.rowTwists[i] = ring->weights[i];
  for (size_t c = 0; c < gens.size(); ++c) {
    j.colTwists[c] = gens[c].isZero() ? 0 : gens[c].degree();
    for (int i = 0; i < ring->nvars(); ++i) j.at(i, static_cast<int>(c)) = differentiate(gens[c], i);
  }
  return j;
}

// ---------------------------------------------------------------------------
// parser / printer
// ---------------------------------------------------------------------------

ParseError::ParseError(const std::string& msg, size_t pos)
    : AlgebraError(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skipWs() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skipWs();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

struct Parser {
  Lexer lex;
  RingPtr ring;

  Polynomial parseExpr() {
    bool neg = false;
    if (lex.eat('-')) neg = true;
    else lex.eat('+');
    Polynomial acc = parseTerm();
    if (neg) acc = -acc;
    while (true) {
      char c = lex.peek();
      if (c == '+') {
        ++lex.pos;
        acc = acc + parseTerm();
      } else if (c == '-') {
        ++lex.pos;
        acc = acc - parseTerm();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parseTerm() {
    Polynomial acc = parseFactor();
    while (true) {
      char c = lex.peek();
      if (c == '*') {
        ++lex.pos;
        acc = acc * parseFactor();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * parseFactor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  int parseInt() {
    lex.skipWs();
    size_t start = lex.pos;
    while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) ++lex.pos;
    if (lex.pos == start) throw ParseError("expected integer", start);
    return std::stoi(lex.s.substr(start, lex.pos - start));
  }

  Polynomial parseFactor() {
    char c = lex.peek();
    size_t start = lex.pos;
    Polynomial base(ring);
    if (c == '(') {
      ++lex.pos;
      base = parseExpr();
      if (!lex.eat(')')) throw ParseError("expected ')'", lex.pos);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (lex.pos < lex.s.size() && std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
        v = (v * 10 + (lex.s[lex.pos] - '0')) % ring->p;
        ++lex.pos;
      }
      base = Polynomial::constant(ring, v);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t p0 = lex.pos;
      while (lex.pos < lex.s.size() &&
             (std::isalnum(static_cast<unsigned char>(lex.s[lex.pos])) || lex.s[lex.pos] == '_' || lex.s[lex.pos] == '\''))
        ++lex.pos;
      std::string name = lex.s.substr(p0, lex.pos - p0);
      int idx = ring->varIndex(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", p0);
      base = Polynomial::variable(ring, idx);
    } else {
      throw ParseError("unexpected character", start);
    }
    if (lex.peek() == '^') {
      ++lex.pos;
      int e = parseInt();
      base = base.pow(e);
    }
    return base;
  }
};

}  // namespace

Polynomial parsePolynomial(const std::string& text, const RingPtr& ring) {
  Parser parser{Lexer{text}, ring};
  Polynomial f = parser.parseExpr();
  parser.lex.skipWs();
  if (parser.lex.pos != text.size()) throw ParseError("trailing input", parser.lex.pos);
  return ringNormalForm(f);
}

static void formatMono(std::ostringstream& os, const Monomial& m, const PolyRing& ring, bool leadingStar) {
  bool first = !leadingStar;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!first) os << "*";
    first = false;
    os << ring.vars[i];
    if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
  }
}

std::string formatPolynomial(const Polynomial& f) {
  if (f.isZero()) return "0";
  const PolyRing& ring = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = balanced(t.c, ring.p);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    if (t.m.isOne()) {
      os << a;
    } else if (a != 1) {
      os << a;
      formatMono(os, t.m, ring, true);
    } else {
      formatMono(os, t.m, ring, false);
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// dense F_p linear algebra
// ---------------------------------------------------------------------------

std::vector<int> FpMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pr = -1;
    for (int i = row; i < rows_; ++i)
      if (at(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
    std::int64_t inv = modInverse(at(row, col), p_);
    for (int j = 0; j < cols_; ++j) at(row, j) = at(row, j) * inv % p_;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      std::int64_t f = at(i, col);
      for (int j = 0; j < cols_; ++j) at(i, j) = ((at(i, j) - f * at(row, j)) % p_ + p_) % p_;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int FpMatrix::rank() const {
  FpMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<std::int64_t>> FpMatrix::nullspace() const {
  FpMatrix copy = *this;
  std::vector<int> pivots = copy.rref();
  std::vector<bool> isPivot(cols_, false);
  for (int c : pivots) isPivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (int freeCol = 0; freeCol < cols_; ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<std::int64_t> v(cols_, 0);
    v[freeCol] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      std::int64_t coef = copy.at(static_cast<int>(r), freeCol);
      if (coef) v[pivots[r]] = (p_ - coef) % p_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ruled
