#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ruled/surfaces.hpp"

namespace ruled {

// Betti table in the classic row/column layout (rows indexed by j - i).
std::string renderBettiTable(const BettiTable& b);
// Structured key/value rendering: "betti.<i>.<j> = rank" lines.
std::string renderBettiStructured(const BettiTable& b);

std::string renderSurfaceReport(const SurfaceReport& rep);

// Ideal serialization: ring header plus one polynomial per line.
std::string serializeIdeal(const Ideal& ideal);
Ideal deserializeIdeal(const std::string& text);

// Ordered key-value text (configs, manifests).
using KeyValues = std::vector<std::pair<std::string, std::string>>;
std::string serializeKeyValues(const KeyValues& kv);
KeyValues parseKeyValues(const std::string& text);
std::string lookup(const KeyValues& kv, const std::string& key, const std::string& fallback = "");

void writeFile(const std::string& path, const std::string& content);
std::string readFile(const std::string& path);

}  // namespace ruled
