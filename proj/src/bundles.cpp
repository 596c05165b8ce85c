#include <algorithm>

#include "ruled/surfaces.hpp"

namespace ruled {

BundleResult kBundleIdeal(const CurveModel& c, const BundleConfig& cfg) {
  if (cfg.k < 2) throw ConstructionError("fiber degree k >= 2 expected");
  if (cfg.bMultiplicity.size() != cfg.d.points.size())
    throw ConstructionError("B must be given as multiplicities along the points of D");
  for (size_t i = 0; i < cfg.bMultiplicity.size(); ++i)
    if (cfg.bMultiplicity[i] < 0 || cfg.bMultiplicity[i] > 1)
      throw ConstructionError("B must be a subdivisor of D with multiplicity 0 or 1");

  Rng rng(cfg.seed);
  Ideal d1 = divisorIdealInS(c, cfg.d);
  Ideal d2 = divisorIdealInS(c, cfg.d2);

  BundleResult out;
  GradedModule quotientSide = dualOfDivisorIdeal(d2);  // H^0_*(L ⊗ O(D))
  GradedModule subSide = dualOfDivisorIdeal(d1);       // H^0_*(O(D))
  out.module = randomExtension(quotientSide, subSide, rng.fork(3));
  out.emb = scrollIdeal(out.module, c);
  out.reportXPrime = surfaceReport(out.emb.J);

  // fibers over kD - B, with multiplicity as ideal powers
  bool first = true;
  for (size_t i = 0; i < cfg.d.points.size(); ++i) {
    int mult = cfg.k - cfg.bMultiplicity[i];
    if (mult == 0) continue;
    Ideal pw = idealPower(cfg.d.points[i].linearIdeal, mult);
    Ideal fiber = pullbackIdeal(out.emb, pw);
    out.fiberIdeal = first ? fiber : idealIntersection(out.fiberIdeal, fiber);
    first = false;
  }
  if (first) throw ConstructionError("kD - B has no points");
  out.fiberIdeal = minimalized(out.fiberIdeal);

  out.forms = quotientFormBasis(out.fiberIdeal, out.emb.J, cfg.k);
  std::vector<std::string> znames;
  for (size_t i = 0; i < out.forms.size(); ++i) znames.push_back("z_" + std::to_string(i));
  out.x = ringMapKernel(out.emb.J, out.forms, cfg.k, znames);
  out.reportX = surfaceReport(out.x);
  return out;
}

}  // namespace ruled
