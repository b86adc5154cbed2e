#include "toriclog/pipeline.hpp"

#include <sstream>

#include "toriclog/error.hpp"
#include "toriclog/log_tangent.hpp"

namespace toriclog {

namespace {

OrderedJson rationals_json(const std::vector<Rational>& v) {
  OrderedJson out = OrderedJson::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

OrderedJson qvector_json(const QVector& v) { return rationals_json(v); }

}  // namespace

PipelineOptions parse_check_groups(const std::string& list) {
  PipelineOptions o{false, false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "lemma1") o.lemma1 = true;
    else if (item == "cocycle") o.cocycle = true;
    else if (item == "connection") o.connection = true;
    else if (item == "prop3") o.prop3 = true;
    else throw Error(ErrorKind::ParseError, "unknown check group '" + item + "'");
  }
  return o;
}

bool VerificationReport::pass() const {
  if (error) return false;
  for (const auto& s : sections)
    if (!s.pass()) return false;
  return true;
}

const SectionResult* VerificationReport::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

OrderedJson VerificationReport::to_json() const {
  OrderedJson j;
  j["fan"] = fan_label;
  j["bundle"] = bundle_label;
  OrderedJson secs = OrderedJson::object();
  for (const auto& s : sections) {
    OrderedJson e;
    e["ran"] = s.ran;
    e["pass"] = s.pass();
    e["failures"] = s.failures;
    e["detail"] = s.detail;
    secs[s.name] = e;
  }
  j["sections"] = secs;
  if (error) {
    j["error"] = {{"kind", std::string(to_string(*error))}, {"stage", error_stage}, {"message", error_message}};
  } else {
    j["error"] = nullptr;
  }
  j["verdict"] = pass() ? "pass" : "fail";
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "fan " << fan_label << ", bundle " << bundle_label << "\n";
  for (const auto& s : sections) {
    out << "  " << s.name << ": " << (!s.ran ? "skipped" : s.pass() ? "pass" : "FAIL") << "\n";
    for (const auto& f : s.failures) out << "    - " << f << "\n";
  }
  if (error) out << "  error at " << error_stage << ": " << error_message << "\n";
  out << "verdict: " << (pass() ? "pass" : "fail") << "\n";
  return out.str();
}

void apply_perturbation(Cocycle& cocycle, const CocyclePerturbation& p) {
  if (p.source >= cocycle.cone_count() || p.target >= cocycle.cone_count()) {
    throw Error(ErrorKind::ParseError, "perturb_cocycle names a cone that does not exist");
  }
  Exponent e = p.exponent;
  e.resize(cocycle.nvars, 0);
  cocycle(p.source, p.target) = cocycle(p.source, p.target).scaled(LaurentPoly::monomial(p.coefficient, e));
}

VerificationReport run_pipeline(const Fan& fan, const BundleSpec& bundle, const PipelineOptions& options,
                                const std::string& fan_label, const std::string& bundle_label) {
  VerificationReport rep;
  rep.fan_label = fan_label;
  rep.bundle_label = bundle_label;
  for (const char* name : {"fan_validation", "lemma1", "decomposition", "cocycle", "connection", "residues", "prop3"}) {
    rep.sections.push_back(SectionResult{name, false, {}, OrderedJson::object()});
  }
  auto sec = [&rep](const std::string& name) -> SectionResult& {
    for (auto& s : rep.sections)
      if (s.name == name) return s;
    throw std::logic_error("no section " + name);
  };
  std::string stage = "fan_validation";
  auto record = [&](const Error& e) {
    rep.error = e.kind();
    rep.error_stage = stage;
    rep.error_message = e.what();
    sec(stage).failures.push_back(e.what());
  };

  try {
    // Fan.
    {
      auto& s = sec(stage);
      s.ran = true;
      const auto v = validate_fan(fan);
      s.detail["rank"] = fan.rank;
      s.detail["rays"] = fan.rays.size();
      s.detail["cones"] = fan.cones.size();
      OrderedJson dets = OrderedJson::array();
      for (const auto& d : v.cone_determinants) dets.push_back(d.get_si());
      s.detail["cone_determinants"] = dets;
      s.detail["complete"] = v.complete;
      s.detail["facets_checked"] = v.facets_checked;
      s.detail["directions_probed"] = v.directions_probed;
      s.detail["simple_normal_crossing"] = v.simple_normal_crossing;
      if (!v.ok()) {
        for (const auto& i : v.issues) s.failures.push_back(std::string(to_string(i.kind)) + ": " + i.message);
        rep.error = v.issues.front().kind;
        rep.error_stage = stage;
        rep.error_message = s.failures.front();
        return rep;
      }
    }
    const Atlas atlas = build_atlas(fan);

    stage = "lemma1";
    if (options.lemma1) {
      auto& s = sec(stage);
      s.ran = true;
      const auto r = check_log_frame(atlas);
      OrderedJson cones = OrderedJson::array();
      for (const auto& c : r.cones) {
        cones.push_back({{"cone", c.cone}, {"determinant", c.determinant.get_si()}, {"unimodular", c.unimodular},
                         {"log_tangent", c.log_tangent}});
      }
      s.detail["cones"] = cones;
      s.detail["transports_checked"] = r.transports_checked;
      s.failures = r.failures;
    }

    stage = "decomposition";
    validate_klyachko(bundle.data, fan);
    auto& ds = sec(stage);
    ds.ran = true;
    const auto decs = solve_all_decompositions(bundle.data, atlas);
    OrderedJson cones = OrderedJson::array();
    for (const auto& d : decs) {
      OrderedJson frame = OrderedJson::array();
      for (const auto& w : d.frame) frame.push_back({{"weight", w.weight}, {"vector", qvector_json(w.vector)}});
      cones.push_back({{"cone", d.cone}, {"frame", frame}});
      if (auto f = reconstruction_failure(bundle.data, atlas, d)) ds.failures.push_back(*f);
    }
    ds.detail["rank"] = bundle.data.rank;
    ds.detail["cones"] = cones;

    Cocycle cocycle = build_cocycle(decs, atlas);
    if (bundle.perturbation) apply_perturbation(cocycle, *bundle.perturbation);

    stage = "cocycle";
    if (options.cocycle) {
      auto& s = sec(stage);
      s.ran = true;
      const auto r = check_cocycle(cocycle, atlas);
      s.detail["triples_checked"] = r.triples_checked;
      s.detail["determinants_are_units"] = r.determinants_are_units;
      s.detail["diagonal"] = cocycle.is_diagonal();
      s.failures = r.failures;
    }

    if (options.connection) {
      stage = "connection";
      auto& s = sec(stage);
      s.ran = true;
      const LogConnection conn = canonical_connection(decs, atlas);
      s.detail["sign"] = kConnectionSign;

      const auto gauge = check_gauge_law(conn, cocycle, atlas);
      OrderedJson pairs = OrderedJson::array();
      for (const auto& p : gauge.pairs) {
        pairs.push_back({{"source", p.source}, {"target", p.target}, {"ok", p.ok}});
        if (!p.ok) s.failures.push_back("pair (" + std::to_string(p.source) + "," + std::to_string(p.target) + "): " + p.detail);
      }
      s.detail["gauge_pairs"] = pairs;

      OrderedJson curv = OrderedJson::array();
      for (const auto& c : check_curvature(conn)) {
        curv.push_back({{"cone", c.cone}, {"zero", c.ok}});
        if (!c.ok) s.failures.push_back("chart " + std::to_string(c.cone) + ": " + c.detail);
      }
      s.detail["curvature"] = curv;

      const auto flat = flat_frame_check(conn, decs, atlas);
      OrderedJson ff = OrderedJson::array();
      for (const auto& c : flat.charts) {
        ff.push_back({{"cone", c.cone}, {"flat", c.ok}});
        if (!c.ok) s.failures.push_back("chart " + std::to_string(c.cone) + ": " + c.detail);
      }
      for (const auto& p : flat.transitions)
        if (!p.ok) s.failures.push_back("pair (" + std::to_string(p.source) + "," + std::to_string(p.target) + "): " + p.detail);
      s.detail["flat_frame"] = ff;
      s.detail["frame_transitions_checked"] = flat.transitions.size();
      s.detail["export"] = connection_to_json(conn);

      stage = "residues";
      auto& r = sec(stage);
      r.ran = true;
      const auto spectrum = residues(conn, atlas);
      OrderedJson rays = OrderedJson::array();
      for (const auto& rr : spectrum.rays) {
        rays.push_back({{"ray", rr.ray}, {"eigenvalues", rationals_json(rr.eigenvalues)},
                        {"trace", rational_to_json(rr.trace)}, {"charts", rr.charts}});
      }
      r.detail["rays"] = rays;
      for (const auto& m : residue_jump_mismatches(spectrum, bundle.data)) r.failures.push_back(m);
      try {
        const auto chern = check_first_chern(spectrum, cocycle, atlas);
        r.detail["chern"] = {{"residue_divisor", rationals_json(chern.residue_divisor)},
                             {"determinant_divisor", chern.determinant_divisor},
                             {"principal_character", chern.principal_character},
                             {"ok", chern.ok}};
        if (!chern.ok) r.failures.push_back(chern.detail);
      } catch (const Error& e) {
        r.failures.push_back(std::string("ChernMismatch: ") + e.what());
      }
    }

    if (options.prop3) {
      stage = "prop3";
      auto& s = sec(stage);
      s.ran = true;
      if (!cocycle.is_diagonal()) {
        s.detail["status"] = "not_split";
      } else {
        const Cocycle pulled = pullback_by_torus(cocycle, atlas);
        try {
          const auto w = solve_coboundary_split(cocycle, pulled, atlas);
          s.detail["status"] = "split";
          s.detail["witness"] = w.exponents;
        } catch (const Error& e) {
          s.detail["status"] = "failed";
          s.failures.push_back(e.what());
        }
      }
    }
  } catch (const Error& e) {
    record(e);
  }
  return rep;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return 3;
    case ErrorKind::MalformedFan:
    case ErrorKind::NonPrimitiveRay:
    case ErrorKind::DuplicateRay:
    case ErrorKind::NonSmoothCone:
    case ErrorKind::IncompleteFan:
      return 4;
    case ErrorKind::InvalidFiltration:
      return 5;
    case ErrorKind::IncompatibleFiltrations:
      return 6;
    default:
      return 7;
  }
}

int exit_code(const VerificationReport& report) {
  if (report.error) return exit_code(*report.error);
  return report.pass() ? 0 : 1;
}

}  // namespace toriclog
