#include "toriclog/builtins.hpp"

#include <algorithm>

#include "toriclog/error.hpp"

namespace toriclog {

namespace {

Fan hirzebruch(std::int64_t a) { return Fan{2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// "X(a,b,...)" -> {a, b, ...}
IntVector arguments(const std::string& term, const std::string& head) {
  if (term.size() < head.size() + 2 || term.compare(0, head.size() + 1, head + "(") != 0 || term.back() != ')') {
    throw Error(ErrorKind::ParseError, "malformed bundle term '" + term + "'");
  }
  IntVector out;
  for (const auto& a : split_top_level(term.substr(head.size() + 1, term.size() - head.size() - 2), ',')) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(a, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != a.size()) throw Error(ErrorKind::ParseError, "bad integer '" + a + "' in '" + term + "'");
    out.push_back(v);
  }
  return out;
}

KlyachkoData single_term(const std::string& fan_name, const Fan& fan, const std::string& term) {
  if (term == "tangent") return tangent_bundle(fan);
  if (term == "cotangent") return cotangent_bundle(fan);
  if (term.rfind("trivial(", 0) == 0) {
    const auto r = arguments(term, "trivial");
    if (r.size() != 1 || r[0] < 1) throw Error(ErrorKind::ParseError, "trivial(r) needs one positive rank");
    return trivial_bundle(fan, static_cast<std::size_t>(r[0]));
  }
  if (term.rfind("D(", 0) == 0) {
    const auto d = arguments(term, "D");
    if (d.size() != fan.rays.size()) throw Error(ErrorKind::ParseError, "D(...) needs one coefficient per ray");
    return line_bundle(fan, d);
  }
  if (term.rfind("O(", 0) == 0) {
    const auto k = arguments(term, "O");
    IntVector d(fan.rays.size(), 0);
    if (fan_name == "p1xp1" && k.size() == 2) {
      d[2] = k[0];
      d[3] = k[1];
    } else if (k.size() == 1) {
      d.back() = k[0];
    } else {
      throw Error(ErrorKind::ParseError, "O(...) arity does not fit fan '" + fan_name + "'");
    }
    return line_bundle(fan, d);
  }
  throw Error(ErrorKind::ParseError, "unknown bundle term '" + term + "'");
}

}  // namespace

std::vector<std::string> builtin_fan_names() { return {"p1", "p2", "p1xp1", "f1", "f2", "f3", "blp2"}; }

Fan builtin_fan(const std::string& name) {
  if (name == "p1") return Fan{1, {{1}, {-1}}, {{0}, {1}}};
  if (name == "p2") return Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}};
  if (name == "p1xp1") return Fan{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  if (name == "f1") return hirzebruch(1);
  if (name == "f2") return hirzebruch(2);
  if (name == "f3") return hirzebruch(3);
  if (name == "blp2") return Fan{2, {{1, 0}, {1, 1}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  throw Error(ErrorKind::ParseError, "unknown builtin fan '" + name + "'");
}

BundleSpec builtin_bundle(const std::string& fan_name, const std::string& bundle_name) {
  return builtin_bundle(builtin_fan(fan_name), fan_name, bundle_name);
}

BundleSpec builtin_bundle(const Fan& fan, const std::string& fan_name, const std::string& bundle_name) {
  BundleSpec spec;
  if (bundle_name == "corrupted-cocycle") {
    spec.data = single_term(fan_name, fan, "O(1)");
    Exponent e(fan.rank, 0);
    e[0] = 1;
    spec.perturbation = CocyclePerturbation{0, 1, 1, e};
    return spec;
  }
  const auto terms = split_top_level(bundle_name, '+');
  spec.data = single_term(fan_name, fan, terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) spec.data = direct_sum(spec.data, single_term(fan_name, fan, terms[i]));
  return spec;
}

std::vector<BuiltinCase> builtin_catalog() {
  return {
      {"p1", "O(-2)", true},
      {"p1", "O(-1)", true},
      {"p1", "O(0)", true},
      {"p1", "O(1)", true},
      {"p1", "O(2)", true},
      {"p1", "tangent", true},
      {"p2", "O(-1)", true},
      {"p2", "O(1)", true},
      {"p2", "O(3)", true},
      {"p2", "tangent", false},
      {"p2", "cotangent", false},
      {"p2", "O(1)+O(-1)", true},
      {"p2", "trivial(2)", true},
      {"p1xp1", "O(1,0)", true},
      {"p1xp1", "O(1,-1)", true},
      {"p1xp1", "O(2,3)", true},
      {"p1xp1", "O(1,0)+O(0,1)", true},
      {"p1xp1", "tangent", false},
      {"f1", "D(1,2,0,-1)", true},
      {"f1", "tangent", false},
      {"f2", "D(1,2,0,-1)", true},
      {"f2", "tangent", false},
      {"f3", "D(1,2,0,-1)", true},
      {"f3", "tangent", false},
      {"blp2", "D(0,1,0,0)", true},
      {"blp2", "tangent", false},
  };
}

}  // namespace toriclog
