#include "toriclog/serialization.hpp"

#include <fstream>
#include <sstream>

#include "toriclog/error.hpp"

namespace toriclog {

namespace {

std::int64_t int_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, what + " must be an exact integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::size_t index_from_json(const Json& j, const std::string& what) {
  const auto v = int_from_json(j, what);
  if (v < 0) throw Error(ErrorKind::ParseError, what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

std::size_t index_from_key(const std::string& key, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != key.size()) throw Error(ErrorKind::ParseError, what + " key '" + key + "' is not an index");
  return v;
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::ParseError, where + " is missing \"" + name + "\"");
  return j.at(name);
}

IntVector int_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, what + " must be an array");
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x, what + " entry"));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

OrderedJson rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

Fan fan_from_json(const Json& j) {
  Fan fan;
  fan.rank = index_from_json(field(j, "rank", "fan"), "fan rank");
  const Json& rays = field(j, "rays", "fan");
  const Json& cones = field(j, "cones", "fan");
  if (!rays.is_array() || !cones.is_array()) throw Error(ErrorKind::ParseError, "fan rays and cones must be arrays");
  for (const auto& r : rays) fan.rays.push_back(int_vector(r, "ray"));
  for (const auto& c : cones) {
    if (!c.is_array()) throw Error(ErrorKind::ParseError, "cone must be an array of ray indices");
    std::vector<std::size_t> cone;
    for (const auto& x : c) cone.push_back(index_from_json(x, "cone ray index"));
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

OrderedJson fan_to_json(const Fan& fan) {
  OrderedJson j;
  j["rank"] = fan.rank;
  j["rays"] = fan.rays;
  j["cones"] = fan.cones;
  return j;
}

BundleSpec bundle_from_json(const Json& j, const Fan& fan) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "bundle must be a JSON object");
  BundleSpec spec;
  if (j.contains("cartier")) {
    const Json& c = j.at("cartier");
    if (!c.is_object()) throw Error(ErrorKind::ParseError, "cartier must map cone indices to characters");
    std::map<std::size_t, IntVector> cartier;
    for (const auto& [key, value] : c.items()) cartier[index_from_key(key, "cartier")] = int_vector(value, "cartier character");
    spec.data = line_bundle_from_cartier(fan, cartier);
  } else {
    spec.data.rank = index_from_json(field(j, "rank", "bundle"), "bundle rank");
    const Json& f = field(j, "filtrations", "bundle");
    if (!f.is_object()) throw Error(ErrorKind::ParseError, "filtrations must map ray indices to step lists");
    for (const auto& [key, steps] : f.items()) {
      if (!steps.is_array()) throw Error(ErrorKind::ParseError, "filtration of ray " + key + " must be an array");
      std::vector<FiltrationStep> parsed;
      for (const auto& s : steps) {
        FiltrationStep step;
        step.jump = int_from_json(field(s, "jump", "filtration step"), "jump");
        const Json& vs = field(s, "vectors", "filtration step");
        if (!vs.is_array()) throw Error(ErrorKind::ParseError, "vectors must be an array");
        for (const auto& v : vs) {
          if (!v.is_array()) throw Error(ErrorKind::ParseError, "vector must be an array");
          QVector q;
          for (const auto& x : v) q.push_back(rational_from_json(x));
          step.vectors.push_back(std::move(q));
        }
        parsed.push_back(std::move(step));
      }
      spec.data.filtrations[index_from_key(key, "filtrations")] = std::move(parsed);
    }
  }
  if (j.contains("perturb_cocycle")) {
    const Json& p = j.at("perturb_cocycle");
    const Json& pair = field(p, "pair", "perturb_cocycle");
    if (!pair.is_array() || pair.size() != 2) throw Error(ErrorKind::ParseError, "perturb_cocycle pair must have two cones");
    CocyclePerturbation pert;
    pert.source = index_from_json(pair[0], "cone index");
    pert.target = index_from_json(pair[1], "cone index");
    pert.coefficient = p.contains("coefficient") ? rational_from_json(p.at("coefficient")) : Rational(1);
    pert.exponent = int_vector(field(p, "exponent", "perturb_cocycle"), "exponent");
    if (pert.exponent.size() != fan.rank) throw Error(ErrorKind::ParseError, "perturb_cocycle exponent has wrong length");
    if (pert.coefficient == 0) throw Error(ErrorKind::ParseError, "perturb_cocycle coefficient must be nonzero");
    spec.perturbation = pert;
  }
  return spec;
}

OrderedJson bundle_to_json(const BundleSpec& bundle) {
  OrderedJson j;
  j["rank"] = bundle.data.rank;
  OrderedJson f = OrderedJson::object();
  for (const auto& [ray, steps] : bundle.data.filtrations) {
    OrderedJson list = OrderedJson::array();
    for (const auto& s : steps) {
      OrderedJson vs = OrderedJson::array();
      for (const auto& v : s.vectors) {
        OrderedJson row = OrderedJson::array();
        for (const auto& x : v) row.push_back(rational_to_json(x));
        vs.push_back(row);
      }
      list.push_back({{"jump", s.jump}, {"vectors", vs}});
    }
    f[std::to_string(ray)] = list;
  }
  j["filtrations"] = f;
  if (bundle.perturbation) {
    const auto& p = *bundle.perturbation;
    j["perturb_cocycle"] = {{"pair", {p.source, p.target}},
                            {"coefficient", rational_to_json(p.coefficient)},
                            {"exponent", p.exponent}};
  }
  return j;
}

OrderedJson poly_to_json(const LaurentPoly& p) {
  OrderedJson out = OrderedJson::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", rational_to_json(c)}, {"exp", e}});
  return out;
}

LaurentPoly poly_from_json(const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial must be an array of terms");
  LaurentPoly p(nvars);
  for (const auto& t : j) {
    const IntVector e = int_vector(field(t, "exp", "term"), "exponent");
    if (e.size() != nvars) throw Error(ErrorKind::ParseError, "exponent has wrong length");
    p.add_term(e, rational_from_json(field(t, "coeff", "term")));
  }
  return p;
}

OrderedJson matrix_to_json(const LaurentMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(poly_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

OrderedJson connection_to_json(const LogConnection& conn) {
  OrderedJson cones = OrderedJson::array();
  for (std::size_t c = 0; c < conn.forms.size(); ++c) {
    const auto& f = conn.forms[c];
    OrderedJson log = OrderedJson::array();
    OrderedJson hol = OrderedJson::array();
    for (std::size_t i = 0; i < f.dim(); ++i) {
      const auto& lp = f.log_part()[i];
      if (lp.is_constant()) {
        OrderedJson m = OrderedJson::array();
        const QMatrix q = lp.constant_value();
        for (std::size_t r = 0; r < q.rows(); ++r) {
          OrderedJson row = OrderedJson::array();
          for (std::size_t k = 0; k < q.cols(); ++k) row.push_back(rational_to_json(q(r, k)));
          m.push_back(row);
        }
        log.push_back(m);
      } else {
        log.push_back(matrix_to_json(lp));
      }
      hol.push_back(matrix_to_json(f.hol_part()[i]));
    }
    cones.push_back({{"cone", c}, {"log_part", log}, {"hol_part", hol}});
  }
  return {{"dim", conn.dim}, {"rank", conn.rank}, {"cones", cones}};
}

}  // namespace toriclog
