#pragma once

#include <string>
#include <vector>

#include "ruled/surfaces.hpp"

namespace ruled {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure: expected vs computed
};

struct PipelineArtifacts {
  std::string kind;
  std::int64_t p = 101;
  std::uint64_t seed = 1;
  std::vector<std::pair<std::string, Ideal>> ideals;
  SurfaceReport report;
  std::vector<CheckResult> checks;
  bool allChecksPass() const;
};

// The four worked constructions, each with its declared checks.
PipelineArtifacts reproduceGenus2Scroll(std::int64_t p, std::uint64_t seed, int retries = 20);
PipelineArtifacts reproduceEllipticScroll(std::int64_t p, std::uint64_t seed, int caseNo, int retries = 20);
PipelineArtifacts reproduceConicBundle(std::int64_t p, std::uint64_t seed);
PipelineArtifacts reproduceCubicBundle(std::int64_t p, std::uint64_t seed);

// Generic constructions from numeric data: random curve of the stated genus,
// random points for the divisors, seeded extension.
struct GenericConfig {
  std::int64_t p = 101;
  int genus = 1;  // 1 or 2
  int k = 1;      // 1 = scroll, >= 2 = bundle with degree-k fibers
  int degB = 0;   // B = the first degB points of D
  int degD = 3;
  int degD2 = 3;
  std::uint64_t seed = 1;
  int retries = 20;
};

PipelineArtifacts constructFromConfig(const GenericConfig& cfg);

// Image in the final embedding of the fiber over a point (degree-k curve).
Ideal bundleFiberImage(const BundleResult& res, const Ideal& pointIdeal, int k);

}  // namespace ruled
