#include "cyclab/serialize.hpp"

#include <charconv>
#include <stdexcept>

#include "cyclab/errors.hpp"

namespace cyclab {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw validation_error(path + ": " + message);
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

cplx complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return cplx(require_number(j[0], path + "[0]"), require_number(j[1], path + "[1]"));
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(complex_to_json(c));
  return arr;
}

Poly poly_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of [re, im] pairs");
  std::vector<cplx> coeffs;
  coeffs.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(complex_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return Poly(std::move(coeffs));
}

json rat_to_json(const Rat& r) {
  return json{{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
}

Rat rat_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with num/den");
  if (!j.contains("num")) fail(path + ".num", "missing");
  Rat r;
  r.num = poly_from_json(j["num"], path + ".num");
  r.den = j.contains("den") ? poly_from_json(j["den"], path + ".den") : Poly::one();
  if (r.den.is_zero()) fail(path + ".den", "denominator is the zero polynomial");
  return r;
}

json atoms_to_json(const MeasureAtoms& atoms) {
  json arr = json::array();
  for (const auto& a : atoms.atoms)
    arr.push_back(json{{"location", complex_to_json(a.location)}, {"weight", a.weight}});
  return arr;
}

MeasureAtoms atoms_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of atoms");
  MeasureAtoms atoms;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_object() || !j[i].contains("location")) fail(p + ".location", "missing");
    if (!j[i].contains("weight")) fail(p + ".weight", "missing");
    MeasureAtoms::Atom atom;
    atom.location = complex_from_json(j[i]["location"], p + ".location");
    atom.weight = require_number(j[i]["weight"], p + ".weight");
    if (!(atom.weight > 0.0)) fail(p + ".weight", "must be positive");
    if (std::abs(atom.location) > 1.0 + 1e-12) fail(p + ".location", "outside the closed disc");
    atoms.atoms.push_back(atom);
  }
  return atoms;
}

json space_to_json(const SpaceSpec& space) {
  json out;
  out["quadrature"] = {{"radial_nodes", space.quadrature.radial_nodes},
                       {"angular_nodes", space.quadrature.angular_nodes}};
  struct Visitor {
    json& out;
    void operator()(const HardySpec&) const {
      out["kind"] = "hardy";
      out["params"] = json::object();
    }
    void operator()(const WeightedDirichletSpec& s) const {
      out["kind"] = "weighted-dirichlet";
      out["params"] = {{"alpha", s.alpha}};
    }
    void operator()(const BesovDirichletSpec& s) const {
      out["kind"] = "besov-dirichlet";
      out["params"] = {{"p", s.p}, {"alpha", s.alpha}};
    }
    void operator()(const DeBrangesRovnyakSpec& s) const {
      out["kind"] = "de-branges-rovnyak";
      out["params"] = {{"b", rat_to_json(s.mate.b)}};
    }
    void operator()(const HarmonicDirichletSpec& s) const {
      out["kind"] = "harmonic-dirichlet";
      out["params"] = {{"atoms", atoms_to_json(s.atoms)}};
    }
  };
  std::visit(Visitor{out}, space.kind);
  return out;
}

SpaceSpec space_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a space object");
  if (!j.contains("kind")) fail(path + ".kind", "missing");
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  const json params = j.contains("params") ? j["params"] : json::object();
  const std::string pp = path + ".params";

  SpaceSpec space = SpaceSpec::hardy();
  try {
    if (kind == "hardy") {
      space = SpaceSpec::hardy();
    } else if (kind == "weighted-dirichlet") {
      if (!params.contains("alpha")) fail(pp + ".alpha", "missing");
      space = SpaceSpec::weighted_dirichlet(require_number(params["alpha"], pp + ".alpha"));
    } else if (kind == "besov-dirichlet") {
      if (!params.contains("p")) fail(pp + ".p", "missing");
      if (!params.contains("alpha")) fail(pp + ".alpha", "missing");
      space = SpaceSpec::besov_dirichlet(require_number(params["p"], pp + ".p"),
                                         require_number(params["alpha"], pp + ".alpha"));
    } else if (kind == "de-branges-rovnyak") {
      if (!params.contains("b")) fail(pp + ".b", "missing");
      space = SpaceSpec::de_branges_rovnyak(mate(rat_from_json(params["b"], pp + ".b")));
    } else if (kind == "harmonic-dirichlet") {
      if (!params.contains("atoms")) fail(pp + ".atoms", "missing");
      space = SpaceSpec::harmonic_dirichlet(atoms_from_json(params["atoms"], pp + ".atoms"));
    } else {
      fail(path + ".kind", "unknown space kind '" + kind + "'");
    }
  } catch (const std::invalid_argument& e) {
    fail(pp, e.what());
  }
  if (j.contains("quadrature")) {
    const json& q = j["quadrature"];
    if (q.contains("radial_nodes")) space.quadrature.radial_nodes = q["radial_nodes"].get<int>();
    if (q.contains("angular_nodes")) space.quadrature.angular_nodes = q["angular_nodes"].get<int>();
    if (space.quadrature.radial_nodes <= 0 || space.quadrature.angular_nodes <= 0)
      fail(path + ".quadrature", "node counts must be positive");
  }
  return space;
}

json gram_to_json(const GramMatrix& gram) {
  json out;
  out["basis"] = gram.basis_label;
  out["size"] = gram.entries.rows();
  json rows = json::array();
  for (Eigen::Index i = 0; i < gram.entries.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < gram.entries.cols(); ++k) row.push_back(complex_to_json(gram.entries(i, k)));
    rows.push_back(row);
  }
  out["entries"] = rows;
  return out;
}

json cyclicity_to_json(const CyclicityReport& report) {
  json out;
  out["degrees"] = report.degrees;
  out["distances"] = report.distances;
  out["decay_fit"] = {{"model", report.decay_fit.model},
                      {"c", report.decay_fit.c},
                      {"beta", report.decay_fit.beta},
                      {"residual", report.decay_fit.residual}};
  out["verdict"] = report.verdict;
  out["plateau_floor"] = report.plateau_floor;
  out["plateau_tolerance"] = report.plateau_tolerance;
  return out;
}

json bpe_to_json(const BpeReport& report) {
  json out;
  out["zeta"] = complex_to_json(report.zeta);
  out["degrees"] = report.degrees;
  out["values"] = report.values;
  out["bounded_flag"] = report.bounded_flag;
  out["cauchy_threshold"] = report.cauchy_threshold;
  return out;
}

json growth_to_json(const GrowthReport& report) {
  json out;
  out["designation"] = report.designation;
  out["indices"] = report.indices;
  out["values"] = report.values;
  out["bound_curve"] = report.bound_curve;
  out["fitted_exponent"] = report.fitted_exponent;
  out["bound_margin"] = report.bound_margin;
  return out;
}

json exponent_fit_to_json(const ExponentFit& fit) {
  json out;
  out["deltas"] = fit.deltas;
  out["norms"] = fit.norms;
  out["fitted_A"] = fit.fitted_A;
  out["fitted_logC"] = fit.fitted_logC;
  out["fit_residual"] = fit.fit_residual;
  json pts = json::array();
  for (const auto& p : fit.points) {
    pts.push_back(json{{"delta", p.delta},
                       {"degree", p.degree},
                       {"residual", p.residual},
                       {"g1_norm", p.g1_norm},
                       {"g2_norm", p.g2_norm},
                       {"g1_space_norm", p.g1_space_norm},
                       {"g2_space_norm", p.g2_space_norm}});
  }
  out["points"] = pts;
  return out;
}

json mate_to_json(const RationalMate& m, int c_preview) {
  json out;
  out["b"] = rat_to_json(m.b);
  out["a"] = rat_to_json(m.a);
  json zeros = json::array();
  for (const auto& [zeta, mult] : m.boundary_zeros)
    zeros.push_back(json{{"zeta", complex_to_json(zeta)}, {"multiplicity", mult}});
  out["boundary_zeros"] = zeros;
  out["N"] = m.N;
  out["roundtrip_residual"] = m.roundtrip_residual;
  out["truncation_length"] = m.truncation_length;
  out["cluster_tol"] = m.cluster_tol;
  json c = json::array();
  for (int k = 0; k < std::min<int>(c_preview, static_cast<int>(m.c.size())); ++k)
    c.push_back(complex_to_json(m.c[static_cast<size_t>(k)]));
  out["c_prefix"] = c;
  return out;
}

std::string gram_to_csv(const GramMatrix& gram) {
  std::string out;
  for (Eigen::Index i = 0; i < gram.entries.rows(); ++i) {
    for (Eigen::Index k = 0; k < gram.entries.cols(); ++k) {
      if (k) out += ',';
      out += '"';
      out += format_double(gram.entries(i, k).real());
      out += ',';
      out += format_double(gram.entries(i, k).imag());
      out += '"';
    }
    out += '\n';
  }
  return out;
}

std::string sequence_to_csv(const std::string& col0, const std::string& col1,
                            const std::vector<int>& ns, const std::vector<double>& values) {
  std::string out = col0 + "," + col1 + "\n";
  for (size_t i = 0; i < ns.size() && i < values.size(); ++i) {
    out += std::to_string(ns[i]);
    out += ',';
    out += format_double(values[i]);
    out += '\n';
  }
  return out;
}

std::string growth_to_csv(const GrowthReport& report) {
  std::string out = "n,value,bound\n";
  for (size_t i = 0; i < report.indices.size(); ++i) {
    out += std::to_string(report.indices[i]);
    out += ',';
    out += format_double(report.values[i]);
    out += ',';
    out += i < report.bound_curve.size() ? format_double(report.bound_curve[i]) : std::string();
    out += '\n';
  }
  return out;
}

std::string sweep_to_csv(const ExponentFit& fit) {
  std::string out = "delta,degree,residual,g1_norm,g2_norm\n";
  for (const auto& p : fit.points) {
    out += format_double(p.delta);
    out += ',';
    out += std::to_string(p.degree);
    out += ',';
    out += format_double(p.residual);
    out += ',';
    out += format_double(p.g1_norm);
    out += ',';
    out += format_double(p.g2_norm);
    out += '\n';
  }
  return out;
}

}  // namespace cyclab
