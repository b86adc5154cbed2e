#pragma once

#include <string>
#include <vector>

#include "toriclog/serialization.hpp"

namespace toriclog {

// p1, p2, p1xp1, f1, f2, f3 (Hirzebruch), blp2 (P^2 blown up at a point).
std::vector<std::string> builtin_fan_names();
Fan builtin_fan(const std::string& name);

// Bundle names: "O(k)" (k times the last ray divisor; on p1xp1 "O(a,b)"
// is a D_2 + b D_3), "D(a_0,...,a_m)" for an explicit divisor, "tangent",
// "cotangent", "trivial(r)", and '+'-joined direct sums of those.
// "corrupted-cocycle" is O(1) with g[0][1] multiplied by x_1.
BundleSpec builtin_bundle(const std::string& fan_name, const std::string& bundle_name);
// Same grammar on an arbitrary fan; `fan_name` only selects the O(a,b) reading.
BundleSpec builtin_bundle(const Fan& fan, const std::string& fan_name, const std::string& bundle_name);

struct BuiltinCase {
  std::string fan;
  std::string bundle;
  bool split = false;  // direct sum of line bundles
};

// The verified example library (negative controls excluded).
std::vector<BuiltinCase> builtin_catalog();

}  // namespace toriclog
