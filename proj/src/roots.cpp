#include <algorithm>

#include "ruled/gb.hpp"

namespace ruled {

namespace {

using UPoly = std::vector<std::int64_t>;  // dense, c[i] coeff of x^i, trimmed

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly uMod(UPoly f, const UPoly& g, std::int64_t p) {
  trim(f);
  const std::int64_t glead = modInverse(g.back(), p);
  while (f.size() >= g.size()) {
    std::int64_t c = f.back() * glead % p;
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) f[i + shift] = ((f[i + shift] - c * g[i]) % p + p) % p;
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

UPoly uMulMod(const UPoly& a, const UPoly& b, const UPoly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return uMod(std::move(r), m, p);
}

UPoly uGcd(UPoly a, UPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = uMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = modInverse(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

std::int64_t uEval(const UPoly& f, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return acc;
}

}  // namespace

std::vector<std::int64_t> univariateRootsDense(const std::vector<std::int64_t>& coeffs, std::int64_t p) {
  UPoly f;
  for (std::int64_t c : coeffs) f.push_back(((c % p) + p) % p);
  trim(f);
  if (f.empty()) throw AlgebraError("root finding on the zero polynomial");
  if (f.size() == 1) return {};
  // g = gcd(f, x^p - x) splits off the distinct roots in Z/p
  UPoly x{0, 1};
  UPoly xp = x;
  {
    // x^p mod f by square and multiply
    UPoly acc{1};
    UPoly base = uMod(x, f, p);
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) acc = uMulMod(acc, base, f, p);
      base = uMulMod(base, base, f, p);
      e >>= 1;
    }
    xp = std::move(acc);
  }
  UPoly diff = xp;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim(diff);
  UPoly g = diff.empty() ? f : uGcd(f, diff, p);
  if (g.empty() || g.size() == 1) return {};
  std::vector<std::int64_t> roots;
  for (std::int64_t a = 0; a < p; ++a)
    if (uEval(g, a, p) == 0) roots.push_back(a);
  return roots;
}

std::vector<std::int64_t> univariateRoots(const Polynomial& f) {
  if (f.isZero()) throw AlgebraError("root finding on the zero polynomial");
  const RingPtr& ring = f.ring();
  int var = -1;
  for (const Term& t : f.terms())
    for (int v = 0; v < ring->nvars(); ++v)
      if (t.m.e[v]) {
        if (var < 0) var = v;
        if (var != v) throw AlgebraError("univariateRoots expects a single-variable polynomial");
      }
  if (var < 0) return {};  // nonzero constant
  int deg = 0;
  for (const Term& t : f.terms()) deg = std::max(deg, static_cast<int>(t.m.e[var]));
  std::vector<std::int64_t> coeffs(deg + 1, 0);
  for (const Term& t : f.terms()) coeffs[t.m.e[var]] = t.c;
  return univariateRootsDense(coeffs, ring->p);
}

}  // namespace ruled
