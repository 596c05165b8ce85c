// Command-line front end: seeded reproducible constructions of ruled-surface
// embeddings, generic runs from config files, and report emission.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include "ruled/io.hpp"
#include "ruled/pipelines.hpp"

using namespace ruled;
namespace fs = std::filesystem;

namespace {

struct RunOutcome {
  bool checksPassed = true;
  std::vector<std::string> files;
};

std::string checkLines(const PipelineArtifacts& art) {
  std::string out;
  for (const CheckResult& c : art.checks) {
    out += (c.pass ? "ok   " : "FAIL ") + c.name;
    if (!c.pass && !c.detail.empty()) out += "  [" + c.detail + "]";
    out += "\n";
  }
  return out;
}

RunOutcome emitArtifacts(const PipelineArtifacts& art, const std::string& outDir, const KeyValues& configEcho,
                         double wallSeconds, bool quiet) {
  RunOutcome outcome;
  fs::create_directories(outDir);
  for (const auto& [name, ideal] : art.ideals) {
    std::string path = outDir + "/" + name + ".ideal";
    writeFile(path, serializeIdeal(ideal));
    outcome.files.push_back(path);
  }
  std::string reportPath = outDir + "/report.txt";
  writeFile(reportPath, renderSurfaceReport(art.report) + "\nchecks:\n" + checkLines(art));
  outcome.files.push_back(reportPath);

  KeyValues manifest;
  manifest.push_back({"kind", art.kind});
  manifest.push_back({"p", std::to_string(art.p)});
  manifest.push_back({"seed", std::to_string(art.seed)});
  for (const auto& [k, v] : configEcho) manifest.push_back({"config." + k, v});
  for (const std::string& f : outcome.files) manifest.push_back({"output", f});
  int failed = 0;
  for (const CheckResult& c : art.checks)
    if (!c.pass) ++failed;
  manifest.push_back({"checks.total", std::to_string(art.checks.size())});
  manifest.push_back({"checks.failed", std::to_string(failed)});
  manifest.push_back({"wall_seconds", std::to_string(wallSeconds)});
  writeFile(outDir + "/manifest.txt", serializeKeyValues(manifest));
  outcome.files.push_back(outDir + "/manifest.txt");
  outcome.checksPassed = art.allChecksPass();

  if (!quiet) {
    std::cout << "== " << art.kind << " (seed " << art.seed << ", " << wallSeconds << "s)\n";
    std::cout << renderSurfaceReport(art.report);
    std::cout << "checks:\n" << checkLines(art);
    if (!outcome.checksPassed) std::cout << "some checks FAILED\n";
  }
  return outcome;
}

std::vector<std::uint64_t> parseSeeds(const std::string& spec, std::uint64_t fallback) {
  if (spec.empty()) return {fallback};
  auto dots = spec.find("..");
  if (dots == std::string::npos) return {std::stoull(spec)};
  std::uint64_t lo = std::stoull(spec.substr(0, dots));
  std::uint64_t hi = std::stoull(spec.substr(dots + 2));
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  return seeds;
}

int runSweep(const std::vector<std::uint64_t>& seeds, int jobs, const std::string& outDir,
             const KeyValues& configEcho, const std::function<PipelineArtifacts(std::uint64_t)>& make) {
  std::mutex mu;
  std::vector<std::uint64_t> queue = seeds;
  bool allPassed = true;
  bool anyError = false;
  auto worker = [&] {
    while (true) {
      std::uint64_t seed;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (queue.empty()) return;
        seed = queue.front();
        queue.erase(queue.begin());
      }
      auto start = std::chrono::steady_clock::now();
      try {
        PipelineArtifacts art = make(seed);
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string dir = seeds.size() == 1 ? outDir : outDir + "/seed-" + std::to_string(seed);
        std::lock_guard<std::mutex> lock(mu);
        RunOutcome oc = emitArtifacts(art, dir, configEcho, wall, false);
        allPassed = allPassed && oc.checksPassed;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(mu);
        std::cerr << "seed " << seed << ": " << e.what() << "\n";
        anyError = true;
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(seeds.size())));
  std::vector<std::thread> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (anyError) return 1;
  return allPassed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction of projectively embedded ruled surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  std::int64_t p = 101;
  std::uint64_t seed = 1;
  std::string seedSpec;
  std::string outDir = "out";
  int retries = 20;
  int jobs = 1;
  app.add_option("--p", p, "odd prime field modulus")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized choices")->capture_default_str();
  app.add_option("--seeds", seedSpec, "seed sweep, e.g. 1..5");
  app.add_option("--out", outDir, "output directory")->capture_default_str();
  app.add_option("--retries", retries, "retry budget for random curve/point search")->capture_default_str();
  app.add_option("--jobs", jobs, "parallel jobs for seed sweeps")->capture_default_str();

  auto* reproduce = app.add_subcommand("reproduce", "run a fixed worked construction and verify its reports");
  std::string target;
  reproduce->add_option("target", target, "example1|elliptic0|elliptic1|elliptic2|conic|cubic")->required();

  auto* construct = app.add_subcommand("construct", "run a generic construction from a config file");
  std::string kindArg;
  std::string configPath;
  construct->add_option("kind", kindArg, "scroll|conic-bundle|k-bundle")->required();
  construct->add_option("--config", configPath, "key-value config file");

  auto* analyze = app.add_subcommand("analyze", "recompute reports from a stored ideal");
  std::string idealPath;
  bool wantBetti = false, wantSmooth = false, wantNet = false, wantDim = false;
  std::string hilbertRange;
  analyze->add_option("--ideal", idealPath, "ideal file")->required();
  analyze->add_flag("--betti", wantBetti, "print the Betti table of a minimal free resolution");
  analyze->add_flag("--smooth", wantSmooth, "check smoothness via jacobian minors");
  analyze->add_flag("--net", wantNet, "analyze the net spanned by the first three quadric generators");
  analyze->add_flag("--dim", wantDim, "print dimension and degree");
  analyze->add_option("--hilbert", hilbertRange, "hilbert function range, e.g. 0..10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reproduce->parsed()) {
      std::vector<std::uint64_t> seeds = parseSeeds(seedSpec, seed);
      KeyValues echo{{"target", target}};
      std::function<PipelineArtifacts(std::uint64_t)> make;
      if (target == "example1") {
        make = [&](std::uint64_t s) { return reproduceGenus2Scroll(p, s, retries); };
      } else if (target == "elliptic0" || target == "elliptic1" || target == "elliptic2") {
        int caseNo = target.back() - '0';
        make = [&, caseNo](std::uint64_t s) { return reproduceEllipticScroll(p, s, caseNo, retries); };
      } else if (target == "conic") {
        make = [&](std::uint64_t s) { return reproduceConicBundle(p, s); };
      } else if (target == "cubic") {
        make = [&](std::uint64_t s) { return reproduceCubicBundle(p, s); };
      } else {
        std::cerr << "unknown reproduce target '" << target << "'\n";
        return 2;
      }
      return runSweep(seeds, jobs, outDir, echo, make);
    }

    if (construct->parsed()) {
      GenericConfig cfg;
      cfg.p = p;
      cfg.seed = seed;
      cfg.retries = retries;
      if (kindArg == "scroll") cfg.k = 1;
      else if (kindArg == "conic-bundle") cfg.k = 2;
      else if (kindArg == "k-bundle") cfg.k = 3;
      else {
        std::cerr << "unknown construction kind '" << kindArg << "'\n";
        return 2;
      }
      KeyValues echo;
      if (!configPath.empty()) {
        KeyValues kv = parseKeyValues(readFile(configPath));
        echo = kv;
        auto geti = [&](const std::string& key, int fallback) {
          std::string v = lookup(kv, key);
          return v.empty() ? fallback : std::stoi(v);
        };
        cfg.p = static_cast<std::int64_t>(geti("p", static_cast<int>(cfg.p)));
        cfg.genus = geti("genus", cfg.genus);
        cfg.k = geti("k", cfg.k);
        cfg.degB = geti("deg_B", cfg.degB);
        cfg.degD = geti("deg_D", cfg.degD);
        cfg.degD2 = geti("deg_D2", cfg.degD2);
        cfg.retries = geti("retries", cfg.retries);
        std::string s = lookup(kv, "seed");
        if (!s.empty()) cfg.seed = std::stoull(s);
      }
      if ((cfg.genus != 1 && cfg.genus != 2) || cfg.k < 1 || cfg.degD < 1 || cfg.degD2 < 1 || cfg.degB < 0 ||
          cfg.degB > cfg.degD || !isPrime(cfg.p) || cfg.p == 2) {
        std::cerr << "invalid configuration\n";
        return 2;
      }
      std::vector<std::uint64_t> seeds = parseSeeds(seedSpec, cfg.seed);
      return runSweep(seeds, jobs, outDir, echo, [&](std::uint64_t s) {
        GenericConfig local = cfg;
        local.seed = s;
        return constructFromConfig(local);
      });
    }

    if (analyze->parsed()) {
      Ideal ideal = deserializeIdeal(readFile(idealPath));
      if (wantDim) {
        auto [dim, deg] = dimDegree(ideal);
        std::cout << "dim = " << dim << "\ndegree = " << deg << "\n";
      }
      if (!hilbertRange.empty()) {
        auto dots = hilbertRange.find("..");
        int lo = 0, hi = 10;
        if (dots == std::string::npos) {
          hi = std::stoi(hilbertRange);
        } else {
          lo = std::stoi(hilbertRange.substr(0, dots));
          hi = std::stoi(hilbertRange.substr(dots + 2));
        }
        std::cout << "hilbert =";
        for (int t = lo; t <= hi; ++t) std::cout << " " << hilbertFunction(ideal, t);
        std::cout << "\n";
      }
      if (wantBetti) {
        FreeResolution res = minimalFreeResolution(minimalized(ideal));
        std::cout << renderBettiTable(res.betti);
      }
      if (wantSmooth) {
        bool smooth = smoothnessCheck(minimalized(ideal), ideal.ring()->nvars());
        std::cout << "smooth = " << (smooth ? "true" : "false") << "\n";
      }
      if (wantNet) {
        Ideal min = minimalized(ideal);
        if (min.gens().size() < 3 || min.gens()[0].degree() != 2 || min.gens()[2].degree() != 2) {
          std::cerr << "the ideal does not start with three quadrics\n";
          return 1;
        }
        std::vector<Polynomial> quadrics(min.gens().begin(), min.gens().begin() + 3);
        NetAnalysis net = netRankLoci(quadrics);
        std::cout << "net.minors5_zero = " << (net.minors5.isZero() ? "true" : "false") << "\n";
        std::cout << "net.minors4_saturated_unit = " << (net.minors4Saturated.gb().isUnit() ? "true" : "false")
                  << "\n";
        std::cout << "net.det_zero = " << (net.det.isZero() ? "true" : "false") << "\n";
        if (net.detSquarefree)
          std::cout << "net.det_squarefree = " << formatPolynomial(*net.detSquarefree) << "\n";
        for (const Polynomial& g : net.minors5Saturated.gens())
          std::cout << "net.corank1_locus_gen = " << formatPolynomial(g) << "\n";
      }
      return 0;
    }
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return 1;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
