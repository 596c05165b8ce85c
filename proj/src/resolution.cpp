#include <algorithm>

#include "ruled/gb.hpp"

namespace ruled {

namespace {

bool hasUnitEntry(const RingMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).isZero() && m.at(i, j).isConstant()) return true;
  return false;
}

bool isZeroMatrix(const RingMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).isZero()) return false;
  return true;
}

}  // namespace

FreeResolution minimalFreeResolution(const RingMatrix& presentation) {
  const RingPtr ring = presentation.ring();
  if (ring->isQuotient()) throw AlgebraError("free resolutions over plain polynomial rings only");
  FreeResolution res;
  RingMatrix cur = minimalColumns(presentation);
  if (hasUnitEntry(cur)) throw AlgebraError("presentation not pruned: unit entry in differential");
  for (int t : cur.rowTwists) res.betti.ranks[{0, t}] += 1;
  for (int step = 1; step <= ring->nvars() + 1; ++step) {
    if (cur.cols() == 0) return res;
    for (int t : cur.colTwists) res.betti.ranks[{step, t}] += 1;
    res.maps.push_back(cur);
    RingMatrix syz = minimalColumns(syzygyMatrix(cur));
    if (hasUnitEntry(syz)) throw AlgebraError("non-minimal syzygy step");
    if (syz.cols() == 0 || isZeroMatrix(syz)) return res;
    cur = std::move(syz);
  }
  throw AlgebraError("resolution exceeded the ring's global dimension");
}

FreeResolution minimalFreeResolution(const Ideal& ideal) {
  std::vector<Polynomial> gens = minimalGenerators(ideal.gens(), ideal.ring());
  RingMatrix m(ideal.ring(), 1, static_cast<int>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    m.at(0, static_cast<int>(j)) = gens[j];
    m.colTwists[j] = gens[j].degree();
  }
  return minimalFreeResolution(m);
}

}  // namespace ruled
