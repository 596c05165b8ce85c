#include "ruled/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ruled {

std::string renderBettiTable(const BettiTable& b) {
  int imax = 0, rmin = 0, rmax = 0;
  for (const auto& [key, v] : b.ranks) {
    imax = std::max(imax, key.first);
    rmin = std::min(rmin, key.second - key.first);
    rmax = std::max(rmax, key.second - key.first);
  }
  auto cell = [&](int i, int r) { return b.at(i, i + r); };
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"total:"};
  for (std::int64_t t : b.totals()) header.push_back(std::to_string(t));
  rows.push_back(header);
  for (int r = rmin; r <= rmax; ++r) {
    std::vector<std::string> line{std::to_string(r) + ":"};
    for (int i = 0; i <= imax; ++i) {
      std::int64_t v = cell(i, r);
      line.push_back(v ? std::to_string(v) : ".");
    }
    rows.push_back(line);
  }
  std::vector<size_t> widths;
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << " ";
      os << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    os << "\n";
  }
  return os.str();
}

std::string renderBettiStructured(const BettiTable& b) {
  std::ostringstream os;
  for (const auto& [key, v] : b.ranks)
    if (v) os << "betti." << key.first << "." << key.second << " = " << v << "\n";
  return os.str();
}

std::string renderSurfaceReport(const SurfaceReport& rep) {
  std::ostringstream os;
  if (rep.degenerate) {
    os << "degenerate = true\n";
    return os.str();
  }
  os << "dim = " << rep.dim << "\n";
  os << "degree = " << rep.degree << "\n";
  os << "smooth = " << (rep.smooth ? "true" : "false") << "\n";
  os << "degree_consistent = " << (rep.degreeConsistent ? "true" : "false") << "\n";
  if (rep.sectionalGenus) os << "sectional_genus = " << *rep.sectionalGenus << "\n";
  os << "hilbert =";
  for (std::int64_t v : rep.hilbert) os << " " << v;
  os << "\n";
  os << renderBettiStructured(rep.betti);
  os << "betti_table:\n" << renderBettiTable(rep.betti);
  return os.str();
}

std::string serializeIdeal(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  std::ostringstream os;
  os << "p = " << ring->p << "\n";
  os << "vars =";
  for (const std::string& v : ring->vars) os << " " << v;
  os << "\n";
  os << "weights =";
  for (int w : ring->weights) os << " " << w;
  os << "\n";
  os << "order = " << (ring->order.kind == OrderKind::GrevLex ? "grevlex" : "block " + std::to_string(ring->order.blockSize))
     << "\n";
  os << "gens = " << ideal.gens().size() << "\n";
  for (const Polynomial& g : ideal.gens()) os << formatPolynomial(g) << "\n";
  return os.str();
}

Ideal deserializeIdeal(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::int64_t p = 101;
  std::vector<std::string> vars;
  std::vector<int> weights;
  TermOrder order = TermOrder::grevlex();
  size_t ngens = 0;
  std::vector<std::string> polyLines;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    std::string key = line.substr(0, eq == std::string::npos ? 0 : eq);
    while (!key.empty() && key.back() == ' ') key.pop_back();
    if (key == "p") {
      p = std::stoll(line.substr(eq + 1));
    } else if (key == "vars") {
      std::istringstream vs(line.substr(eq + 1));
      std::string v;
      while (vs >> v) vars.push_back(v);
    } else if (key == "weights") {
      std::istringstream vs(line.substr(eq + 1));
      int w;
      while (vs >> w) weights.push_back(w);
    } else if (key == "order") {
      std::istringstream vs(line.substr(eq + 1));
      std::string kind;
      vs >> kind;
      if (kind == "block") {
        int b = 0;
        vs >> b;
        order = TermOrder::block(b);
      }
    } else if (key == "gens") {
      ngens = static_cast<size_t>(std::stoll(line.substr(eq + 1)));
    } else {
      polyLines.push_back(line);
    }
  }
  if (vars.empty()) throw AlgebraError("ideal file without a ring header");
  RingPtr ring = PolyRing::make(p, vars, order, weights);
  std::vector<Polynomial> gens;
  for (const std::string& s : polyLines) gens.push_back(parsePolynomial(s, ring));
  if (gens.size() != ngens) throw AlgebraError("ideal file generator count mismatch");
  return Ideal(ring, std::move(gens));
}

std::string serializeKeyValues(const KeyValues& kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << " = " << v << "\n";
  return os.str();
}

KeyValues parseKeyValues(const std::string& text) {
  KeyValues kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.pop_back();
    };
    strip(key);
    strip(val);
    kv.push_back({key, val});
  }
  return kv;
}

std::string lookup(const KeyValues& kv, const std::string& key, const std::string& fallback) {
  for (const auto& [k, v] : kv)
    if (k == key) return v;
  return fallback;
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw AlgebraError("cannot write " + path);
  os << content;
}

std::string readFile(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw AlgebraError("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace ruled
