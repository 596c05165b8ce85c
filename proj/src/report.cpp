#include <algorithm>

#include "ruled/surfaces.hpp"

namespace ruled {

namespace {

// degree read off the Betti numbers: strip (1-t) factors from the alternating
// numerator and evaluate at 1
std::int64_t degreeFromBetti(const BettiTable& betti, int nvars) {
  int maxJ = 0;
  for (const auto& [key, v] : betti.ranks) maxJ = std::max(maxJ, key.second);
  std::vector<std::int64_t> num(maxJ + 1, 0);
  for (const auto& [key, v] : betti.ranks) num[key.second] += (key.first % 2 == 0 ? v : -v);
  auto evalAt1 = [](const std::vector<std::int64_t>& f) {
    std::int64_t s = 0;
    for (auto v : f) s += v;
    return s;
  };
  int stripped = 0;
  while (!num.empty() && evalAt1(num) == 0 && stripped < nvars) {
    std::vector<std::int64_t> q(num.size() - 1, 0);
    std::int64_t run = 0;
    for (size_t i = 0; i + 1 < num.size(); ++i) {
      run += num[i];
      q[i] = run;
    }
    num = std::move(q);
    ++stripped;
  }
  return evalAt1(num);
}

}  // namespace

SurfaceReport surfaceReport(const Ideal& ideal) {
  SurfaceReport rep;
  const RingPtr& ring = ideal.ring();
  if (ideal.gb().isUnit()) {
    rep.degenerate = true;
    return rep;
  }
  Ideal I = minimalized(ideal);
  auto [dim, deg] = dimDegree(I);
  rep.dim = dim;
  rep.degree = deg;
  FreeResolution res = minimalFreeResolution(I);
  rep.betti = res.betti;
  for (int t = 0; t <= 10; ++t) rep.hilbert.push_back(hilbertFunction(I, t));
  rep.smooth = smoothnessCheck(I, ring->nvars());
  rep.degreeConsistent = (degreeFromBetti(rep.betti, ring->nvars()) == deg);
  if (dim == 3) {
    // Hilbert polynomial through the stable tail values, kept in doubled
    // integers since the leading coefficient is deg/2
    std::int64_t h8 = rep.hilbert[8], h9 = rep.hilbert[9], h10 = rep.hilbert[10];
    std::int64_t twoA2 = h10 - 2 * h9 + h8;
    std::int64_t twoA1 = 2 * (h9 - h8) - twoA2 * 17;
    if ((twoA2 - twoA1) % 2 == 0) rep.sectionalGenus = static_cast<int>(1 + (twoA2 - twoA1) / 2);
    if (twoA2 != deg) rep.degreeConsistent = false;
  }
  return rep;
}

KNormalityReport kNormalityReport(const Ideal& ideal, const std::vector<std::int64_t>& h0Values, int kmax) {
  if (static_cast<int>(h0Values.size()) <= kmax) throw ConstructionError("h0 list shorter than kmax");
  KNormalityReport rep;
  for (int k = 0; k <= kmax; ++k) rep.flags.push_back(hilbertFunction(ideal, k) == h0Values[k]);
  auto [dim, deg] = dimDegree(ideal);
  (void)dim;
  rep.castelnuovoBound = static_cast<int>(deg) - 2 + (ideal.ring()->nvars() - 1);
  return rep;
}

}  // namespace ruled
