// Acceptance suite: drives the four worked constructions across fixed seeds,
// the seed-independent property batch, and the determinism contract.  Each
// criterion prints one PASS/FAIL line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <thread>

#include "ruled/io.hpp"
#include "ruled/pipelines.hpp"
#include "ruled/rng.hpp"

using namespace ruled;

namespace {

constexpr std::int64_t kP = 101;
const std::vector<std::uint64_t> kSeeds{1, 2, 3, 4, 5};
constexpr int kNeeded = 3;

void reportFailures(const PipelineArtifacts& art) {
  for (const CheckResult& c : art.checks)
    if (!c.pass) std::printf("    seed %llu: %s (%s)\n", (unsigned long long)art.seed, c.name.c_str(), c.detail.c_str());
}

// run the pipeline over the fixed seeds until kNeeded pass
template <typename F>
bool passesEnoughSeeds(const char* label, F&& run) {
  int passes = 0, failures = 0;
  for (std::uint64_t seed : kSeeds) {
    PipelineArtifacts art;
    bool ok = false;
    try {
      art = run(seed);
      ok = art.allChecksPass();
    } catch (const std::exception& e) {
      std::printf("    seed %llu: exception: %s\n", (unsigned long long)seed, e.what());
    }
    if (ok) {
      ++passes;
    } else {
      ++failures;
      reportFailures(art);
    }
    if (passes >= kNeeded) break;
    if (failures > static_cast<int>(kSeeds.size()) - kNeeded) break;
  }
  std::printf("%s criterion: %s (%d/%d seeds passed, %d needed)\n", passes >= kNeeded ? "PASS" : "FAIL", label,
              passes, passes + failures, kNeeded);
  return passes >= kNeeded;
}

std::string serializeArtifacts(const PipelineArtifacts& art) {
  std::string all;
  for (const auto& [name, ideal] : art.ideals) {
    all += "--- " + name + "\n";
    all += serializeIdeal(ideal);
  }
  return all;
}

}  // namespace

TEST_CASE("criterion 1: genus-2 degree-8 scrolls in P5") {
  CHECK(passesEnoughSeeds("genus-2 scroll",
                          [](std::uint64_t seed) { return reproduceGenus2Scroll(kP, seed); }));
}

TEST_CASE("criterion 2: elliptic degree-6 scrolls and their quadric nets") {
  bool case0 = passesEnoughSeeds("elliptic scroll, split trivial type",
                                 [](std::uint64_t seed) { return reproduceEllipticScroll(kP, seed, 0); });
  bool case1 = passesEnoughSeeds("elliptic scroll, split twisted type",
                                 [](std::uint64_t seed) { return reproduceEllipticScroll(kP, seed, 1); });
  bool case2 = passesEnoughSeeds("elliptic scroll, nonsplit type",
                                 [](std::uint64_t seed) { return reproduceEllipticScroll(kP, seed, 2); });
  CHECK(case0);
  CHECK(case1);
  CHECK(case2);
}

TEST_CASE("criterion 3: conic bundles of degree 8") {
  CHECK(passesEnoughSeeds("conic bundle", [](std::uint64_t seed) { return reproduceConicBundle(kP, seed); }));
}

TEST_CASE("criterion 4: cubic bundles of degree 9") {
  CHECK(passesEnoughSeeds("cubic bundle", [](std::uint64_t seed) { return reproduceCubicBundle(kP, seed); }));
}

TEST_CASE("criterion 5: seed-independent property suite") {
  bool all = true;
  auto note = [&](const char* name, bool ok) {
    all = all && ok;
    if (!ok) std::printf("    property failed: %s\n", name);
  };

  RingPtr r4 = PolyRing::makeStd(kP, 4);
  auto pp = [&](const std::string& s, const RingPtr& rr) { return parsePolynomial(s, rr); };

  // GB S-pairs reduce to zero
  {
    Ideal tc(r4, {pp("x_0*x_2-x_1^2", r4), pp("x_0*x_3-x_1*x_2", r4), pp("x_1*x_3-x_2^2", r4)});
    const auto& gb = tc.gb().elements;
    bool ok = true;
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j) {
        Monomial l = monoLcm(gb[i].lead().m, gb[j].lead().m, r4->weights);
        Polynomial s = gb[i].mulTerm(monoDiv(l, gb[i].lead().m), 1) - gb[j].mulTerm(monoDiv(l, gb[j].lead().m), 1);
        if (!normalForm(s, tc.gb()).isZero()) ok = false;
      }
    note("all S-pairs reduce to zero", ok);
  }

  // membership by NF vs brute-force linear algebra on low-degree slices
  {
    Ideal tc(r4, {pp("x_0*x_2-x_1^2", r4), pp("x_0*x_3-x_1*x_2", r4), pp("x_1*x_3-x_2^2", r4)});
    bool ok = true;
    for (int d = 2; d <= 4; ++d) {
      std::vector<Monomial> monos = monomialsOfDegree(r4, d);
      FpMatrix rows(0, 0, kP);
      std::vector<std::vector<std::int64_t>> span;
      for (const Polynomial& g : tc.gens())
        for (const Monomial& m : monomialsOfDegree(r4, d - g.degree())) {
          Polynomial f = g.mulTerm(m, 1);
          std::vector<std::int64_t> row(monos.size(), 0);
          for (const Term& t : f.terms())
            for (size_t q = 0; q < monos.size(); ++q)
              if (monos[q] == t.m) row[q] = t.c;
          span.push_back(std::move(row));
        }
      FpMatrix mat(static_cast<int>(span.size()), static_cast<int>(monos.size()), kP);
      for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = 0; j < monos.size(); ++j) mat.at(static_cast<int>(i), static_cast<int>(j)) = span[i][j];
      std::int64_t sliceDim = mat.rank();
      std::int64_t viaHilbert = static_cast<std::int64_t>(monos.size()) - hilbertFunction(tc, d);
      if (sliceDim != viaHilbert) ok = false;
      (void)rows;
    }
    note("NF membership matches linear algebra", ok);
  }

  // M * Syz(M) = 0 on 50 random graded matrices
  {
    RingPtr r3 = PolyRing::makeStd(kP, 3);
    Rng rng(77);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      Rng local = rng.fork(trial);
      int rows = 1 + static_cast<int>(local.below(3));
      int cols = 1 + static_cast<int>(local.below(3));
      RingMatrix m(r3, rows, cols);
      for (int j = 0; j < cols; ++j) m.colTwists[j] = 1 + static_cast<int>(local.below(2));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          std::vector<Term> raw;
          for (const Monomial& mono : monomialsOfDegree(r3, m.colTwists[j]))
            if (local.below(2)) raw.push_back(Term{mono, static_cast<std::int32_t>(local.nonzeroBelow(kP))});
          m.at(i, j) = Polynomial::fromTerms(r3, std::move(raw));
        }
      RingMatrix syz = syzygyMatrix(m);
      RingMatrix prod = m.mul(syz);
      for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j)
          if (!prod.at(i, j).isZero()) ok = false;
    }
    note("M * Syz(M) = 0 on random graded matrices", ok);
  }

  // saturation is a fixed point of further quotients
  {
    RingPtr r3 = PolyRing::makeStd(kP, 3);
    Ideal i(r3, {pp("x_0^2*x_1", r3), pp("x_0^2*x_2", r3)});
    Ideal pt(r3, {pp("x_1", r3), pp("x_2", r3)});
    Ideal sat = saturation(i, pt);
    bool ok = idealEquals(idealQuotient(sat, pt), sat) && sat.contains(i);
    note("saturation fixed point", ok);
  }

  // resolution: differentials compose to zero, alternating slice sums match
  {
    Ideal tc(r4, {pp("x_0*x_2-x_1^2", r4), pp("x_0*x_3-x_1*x_2", r4), pp("x_1*x_3-x_2^2", r4)});
    FreeResolution res = minimalFreeResolution(tc);
    bool ok = true;
    for (size_t k = 0; k + 1 < res.maps.size(); ++k) {
      RingMatrix prod = res.maps[k].mul(res.maps[k + 1]);
      for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j)
          if (!prod.at(i, j).isZero()) ok = false;
    }
    for (int t = 0; t <= 6 && ok; ++t) {
      std::int64_t alt = static_cast<std::int64_t>(monomialsOfDegree(r4, t).size());
      int sign = -1;
      for (const RingMatrix& m : res.maps) {
        for (int tw : m.colTwists) alt += sign * static_cast<std::int64_t>(monomialsOfDegree(r4, t - tw).size());
        sign = -sign;
      }
      if (alt != hilbertFunction(tc, t)) ok = false;
    }
    note("resolution exactness and Betti alternating sums", ok);
  }

  // dual-module Hilbert functions against Riemann-Roch
  {
    bool ok = true;
    CurveModel cubic = fixedPlaneCubic(kP, "x_0*x_2^2-x_1*(x_1+x_0)*(x_1+2*x_0)");
    PointOnCurve q = pointFromCoords(cubic, {0, 0, 1});
    PointOnCurve qp = pointFromCoords(cubic, {1, kP - 1, 0});
    GradedModule dual2 = dualOfDivisorIdeal(divisorIdealInS(cubic, divisorFromPoints(cubic, {q, qp})));
    for (int t = 0; t <= 5; ++t)
      if (moduleHilbertFunction(dual2, t) != 3 * t + 2) ok = false;

    CurveModel g2 = randomGenus2Curve(kP, Rng(1));
    DivisorRep d3 = randomPoints(g2, 3, Rng(2));
    GradedModule dual3 = dualOfDivisorIdeal(divisorIdealInS(g2, d3));
    for (int t = 0; t <= 5; ++t)
      if (moduleHilbertFunction(dual3, t) != 5 * t + 2) ok = false;
    note("dual-module Hilbert functions match Riemann-Roch", ok);

    // extension Hilbert additivity
    GradedModule ext = randomExtension(dual2, dual2, Rng(5));
    bool okExt = true;
    for (int t = -1; t <= 6; ++t)
      if (moduleHilbertFunction(ext, t) != 2 * moduleHilbertFunction(dual2, t)) okExt = false;
    note("extension Hilbert additivity", okExt);

    // scroll fibers are lines
    GradedModule m = directSum(dual2, dual2);
    ScrollEmbedding emb = scrollIdeal(m, cubic);
    Ideal fiber = pullbackIdeal(emb, q.linearIdeal);
    auto [df, gf] = dimDegree(fiber);
    note("scroll fibers are lines", df == 2 && gf == 1);
  }

  // kernel generators substitute to zero; bundle fibers have degree k
  {
    PipelineArtifacts conic = reproduceConicBundle(kP, 1);
    bool subs = true, fib = true;
    for (const CheckResult& c : conic.checks) {
      if (c.name == "generators substitute to zero") subs = c.pass;
      if (c.name == "fibers embed as conics") fib = c.pass;
    }
    note("ring-map kernel generators substitute to zero", subs);
    note("bundle fibers have the embedding degree", fib);
  }

  std::printf("%s criterion: property suite\n", all ? "PASS" : "FAIL");
  CHECK(all);
}

TEST_CASE("criterion 6: determinism of seeded runs") {
  PipelineArtifacts a = reproduceConicBundle(kP, 2);
  PipelineArtifacts b = reproduceConicBundle(kP, 2);
  bool sameTwice = serializeArtifacts(a) == serializeArtifacts(b);

  // concurrent runs reproduce the serial artifacts
  PipelineArtifacts c1, c2;
  std::thread t1([&] { c1 = reproduceEllipticScroll(kP, 3, 0); });
  std::thread t2([&] { c2 = reproduceEllipticScroll(kP, 4, 0); });
  t1.join();
  t2.join();
  PipelineArtifacts s1 = reproduceEllipticScroll(kP, 3, 0);
  PipelineArtifacts s2 = reproduceEllipticScroll(kP, 4, 0);
  bool sameParallel = serializeArtifacts(c1) == serializeArtifacts(s1) && serializeArtifacts(c2) == serializeArtifacts(s2);

  std::printf("%s criterion: determinism (repeat runs %s, parallel runs %s)\n",
              sameTwice && sameParallel ? "PASS" : "FAIL", sameTwice ? "identical" : "diverged",
              sameParallel ? "identical" : "diverged");
  CHECK(sameTwice);
  CHECK(sameParallel);
}
