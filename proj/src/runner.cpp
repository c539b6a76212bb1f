#include "cyclab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cyclab/errors.hpp"
#include "cyclab/growth.hpp"
#include "cyclab/outerlab.hpp"

namespace cyclab {

namespace {

constexpr double kPi = std::numbers::pi;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Deterministic PRNG (splitmix64) so seeded experiment families are
// bit-reproducible across standard libraries.
struct SplitMix {
  uint64_t state;
  explicit SplitMix(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) { return lo + int(next() % uint64_t(hi - lo + 1)); }
};

json tolerances_or(const json& doc, const json& defaults) {
  json out = defaults;
  if (doc.contains("tolerances")) {
    for (auto it = doc["tolerances"].begin(); it != doc["tolerances"].end(); ++it)
      out[it.key()] = it.value();
  }
  return out;
}

}  // namespace

std::string canonical_hash(const json& doc) {
  const std::string dump = doc.dump();
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

json conventions_json() {
  return json{{"area_measure", "normalized (total mass 1)"},
              {"radial_rule", "gauss-jacobi in u = r^2 absorbing (1-u)^alpha"},
              {"angular_rule", "uniform"},
              {"algebra_norm", "sup_circle^p + seminorm^p, no (1+alpha) factor"},
              {"boundary_zero_cluster_tol", 1e-6},
              {"herglotz_grid", "midpoint nodes theta = 2 pi (j+1/2)/G"}};
}

// ---------------------------------------------------------------------------
// Manifest parsing

namespace {

const char* kKinds[] = {"mate",   "gram",         "opa",    "cyclicity", "bpe",
                        "corona-sweep", "growth", "identity-check", "outer"};

void require_field(const json& doc, const char* field, const std::string& path) {
  if (!doc.contains(field)) throw validation_error(path + "." + field + ": missing");
}

int require_int(const json& j, const std::string& path, int lo) {
  if (!j.is_number_integer()) throw validation_error(path + ": expected an integer");
  const int v = j.get<int>();
  if (v < lo) throw validation_error(path + ": must be >= " + std::to_string(lo));
  return v;
}

}  // namespace

ExperimentManifest parse_manifest(const json& doc) {
  if (!doc.is_object()) throw validation_error("manifest: expected a JSON object");
  require_field(doc, "kind", "manifest");
  const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  bool known = false;
  for (const char* k : kKinds) known = known || kind == k;
  if (!known) throw validation_error("manifest.kind: unknown experiment kind '" + kind + "'");

  ExperimentManifest m;
  m.kind = kind;
  m.doc = doc;

  auto materialize_space = [&]() {
    require_field(doc, "space", "manifest");
    const SpaceSpec space = space_from_json(doc["space"], "manifest.space");
    m.doc["space"] = space_to_json(space);  // materialize quadrature defaults
    return space;
  };

  if (kind == "mate") {
    require_field(doc, "inputs", "manifest");
    require_field(doc["inputs"], "b", "manifest.inputs");
    rat_from_json(doc["inputs"]["b"], "manifest.inputs.b");
    m.doc["tolerances"] =
        tolerances_or(doc, json{{"roundtrip", 1e-9}, {"ball", 1e-9}, {"series", 1e-9}});
    if (!m.doc.contains("c_length")) m.doc["c_length"] = 256;
  } else if (kind == "gram") {
    materialize_space();
    require_field(doc, "n_max", "manifest");
    require_int(doc["n_max"], "manifest.n_max", 0);
  } else if (kind == "opa") {
    materialize_space();
    require_field(doc, "inputs", "manifest");
    require_field(doc["inputs"], "f", "manifest.inputs");
    poly_from_json(doc["inputs"]["f"], "manifest.inputs.f");
    require_field(doc, "degree", "manifest");
    require_int(doc["degree"], "manifest.degree", 0);
  } else if (kind == "cyclicity") {
    materialize_space();
    require_field(doc, "inputs", "manifest");
    require_field(doc["inputs"], "f", "manifest.inputs");
    poly_from_json(doc["inputs"]["f"], "manifest.inputs.f");
    require_field(doc, "n_max", "manifest");
    const int n_max = require_int(doc["n_max"], "manifest.n_max", 1);
    if (!m.doc.contains("schedule")) m.doc["schedule"] = default_degree_schedule(n_max);
  } else if (kind == "bpe") {
    materialize_space();
    require_field(doc, "inputs", "manifest");
    require_field(doc["inputs"], "zeta", "manifest.inputs");
    const json& zeta = doc["inputs"]["zeta"];
    if (!zeta.is_array() || zeta.size() != 2 || !zeta[0].is_number() || !zeta[1].is_number())
      throw validation_error("manifest.inputs.zeta: expected [re, im]");
    require_field(doc, "n_max", "manifest");
    require_int(doc["n_max"], "manifest.n_max", 1);
  } else if (kind == "corona-sweep") {
    materialize_space();
    require_field(doc, "family", "manifest");
    const json& fam = doc["family"];
    if (!fam.is_object() || (!fam.contains("name") && !fam.contains("instances")))
      throw validation_error("manifest.family: expected {name: ...} or {instances: [...]}");
    if (fam.contains("name")) {
      const std::string name = fam["name"].get<std::string>();
      if (name != "constant" && name != "boundary")
        throw validation_error("manifest.family.name: unknown family '" + name + "'");
    }
    if (!m.doc.contains("degree_schedule"))
      m.doc["degree_schedule"] = std::vector<int>{0, 1, 2, 3, 4, 6, 8, 12, 16};
    m.doc["tolerances"] = tolerances_or(doc, json{{"residual_target", 1e-8}});
  } else if (kind == "growth") {
    require_field(doc, "designation", "manifest");
    const std::string des = doc["designation"].get<std::string>();
    if (des == "besov-algebra") {
      require_field(doc, "p", "manifest");
      require_field(doc, "alpha", "manifest");
    } else if (des == "hb") {
      require_field(doc, "b", "manifest");
      rat_from_json(doc["b"], "manifest.b");
    } else if (des == "dmu-surrogate") {
      require_field(doc, "atoms", "manifest");
      atoms_from_json(doc["atoms"], "manifest.atoms");
    } else {
      throw validation_error("manifest.designation: unknown designation '" + des + "'");
    }
    require_field(doc, "n_max", "manifest");
    require_int(doc["n_max"], "manifest.n_max", 1);
  } else if (kind == "identity-check") {
    require_field(doc, "inputs", "manifest");
    require_field(doc["inputs"], "atoms", "manifest.inputs");
    require_field(doc["inputs"], "g", "manifest.inputs");
    atoms_from_json(doc["inputs"]["atoms"], "manifest.inputs.atoms");
    poly_from_json(doc["inputs"]["g"], "manifest.inputs.g");
    if (!m.doc.contains("quadrature"))
      m.doc["quadrature"] = json{{"radial_nodes", 128}, {"angular_nodes", 256}};
    m.doc["tolerances"] = tolerances_or(doc, json{{"rel_gap", 1e-4}});
  } else if (kind == "outer") {
    require_field(doc, "inputs", "manifest");
    require_field(doc["inputs"], "f", "manifest.inputs");
    poly_from_json(doc["inputs"]["f"], "manifest.inputs.f");
    if (!m.doc.contains("grid_size")) m.doc["grid_size"] = 16384;
    if (!m.doc.contains("probes")) m.doc["probes"] = 8;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Experiment execution

json RunRecord::to_json() const {
  json out;
  out["manifest_hash"] = manifest_hash;
  out["version"] = version;
  out["elapsed_ms"] = elapsed_ms;
  out["manifest"] = manifest;
  out["results"] = results;
  out["warnings"] = warnings;
  out["conventions"] = conventions_json();
  return out;
}

RunRecord run(const ExperimentManifest& manifest, double tolerance_scale) {
  RunRecord record;
  record.manifest = manifest.doc;
  record.manifest_hash = canonical_hash(manifest.doc);
  const double start = now_ms();
  json& res = record.results;
  res["tolerance_scale"] = tolerance_scale;
  const json& doc = manifest.doc;

  if (manifest.kind == "mate") {
    MateOptions opt;
    opt.roundtrip_tol = doc["tolerances"]["roundtrip"].get<double>() * tolerance_scale;
    opt.ball_tol = doc["tolerances"]["ball"].get<double>() * tolerance_scale;
    opt.series_tol = doc["tolerances"]["series"].get<double>() * tolerance_scale;
    opt.c_length = doc["c_length"].get<int>();
    const RationalMate m = mate(rat_from_json(doc["inputs"]["b"], "manifest.inputs.b"), opt);
    res["mate"] = mate_to_json(m);
    res["a_at_zero"] = m.a(cplx(0.0)).real();
  } else if (manifest.kind == "gram") {
    const SpaceSpec space = space_from_json(doc["space"], "manifest.space");
    const int n_max = doc["n_max"].get<int>();
    const GramMatrix gram = monomial_gram(space, n_max);
    res["space"] = space.name();
    res["size"] = n_max + 1;
    json diag = json::array();
    for (int k = 0; k <= n_max; ++k) diag.push_back(gram.entries(k, k).real());
    res["diagonal"] = diag;
    res["hermitian"] = gram.is_hermitian();
    res["psd"] = gram.is_psd();
    if (n_max <= 64) res["gram"] = gram_to_json(gram);
    record.csv_files.emplace_back("gram.csv", gram_to_csv(gram));
  } else if (manifest.kind == "opa") {
    const SpaceSpec space = space_from_json(doc["space"], "manifest.space");
    const Poly f = poly_from_json(doc["inputs"]["f"], "manifest.inputs.f");
    const ApproximantResult r = opa(space, f, doc["degree"].get<int>());
    res["degree"] = r.degree;
    res["coefficients"] = poly_to_json(r.coefficients);
    res["distance"] = r.distance;
  } else if (manifest.kind == "cyclicity") {
    const SpaceSpec space = space_from_json(doc["space"], "manifest.space");
    const Poly f = poly_from_json(doc["inputs"]["f"], "manifest.inputs.f");
    const CyclicityReport report =
        cyclicity_scan(space, f, doc["n_max"].get<int>(), doc["schedule"].get<std::vector<int>>());
    res["report"] = cyclicity_to_json(report);
    record.csv_files.emplace_back("distances.csv",
                                  sequence_to_csv("n", "d_n", report.degrees, report.distances));
  } else if (manifest.kind == "bpe") {
    const SpaceSpec space = space_from_json(doc["space"], "manifest.space");
    const json& zj = doc["inputs"]["zeta"];
    const cplx zeta(zj[0].get<double>(), zj[1].get<double>());
    const BpeReport report = bpe_estimate(space, zeta, doc["n_max"].get<int>());
    res["report"] = bpe_to_json(report);
    record.csv_files.emplace_back("bpe.csv",
                                  sequence_to_csv("n", "v_n", report.degrees, report.values));
  } else if (manifest.kind == "corona-sweep") {
    const SpaceSpec space = space_from_json(doc["space"], "manifest.space");
    std::vector<CoronaInstance> family;
    if (doc["family"].contains("name")) {
      const std::string name = doc["family"]["name"].get<std::string>();
      family = name == "constant" ? constant_corona_family() : boundary_corona_family();
    } else {
      for (size_t i = 0; i < doc["family"]["instances"].size(); ++i) {
        const json& inst = doc["family"]["instances"][i];
        const std::string path = "manifest.family.instances[" + std::to_string(i) + "]";
        family.push_back(make_corona_instance(poly_from_json(inst["f1"], path + ".f1"),
                                              poly_from_json(inst["f2"], path + ".f2")));
      }
    }
    const double target = doc["tolerances"]["residual_target"].get<double>() * tolerance_scale;
    const ExponentFit fit =
        exponent_sweep(space, family, doc["degree_schedule"].get<std::vector<int>>(), target);
    res["fit"] = exponent_fit_to_json(fit);
    res["note"] =
        "norms are sup-circle lower bounds for multiplier norms; the fitted exponent is an "
        "experimental surrogate for the algebra-norm exponent";
    record.csv_files.emplace_back("sweep.csv", sweep_to_csv(fit));
  } else if (manifest.kind == "growth") {
    const std::string des = doc["designation"].get<std::string>();
    const int n_max = doc["n_max"].get<int>();
    GrowthReport report;
    if (des == "besov-algebra") {
      const double p = doc["p"].get<double>();
      const double alpha = doc["alpha"].get<double>();
      if (!(alpha + 1.0 <= p && p <= alpha + 2.0))
        record.warnings.push_back(
            "growth: Besov parameters outside the standing range alpha+1 <= p <= alpha+2 "
            "(exploratory norms only)");
      report = monomial_growth_besov_algebra(p, alpha, n_max);
    } else if (des == "hb") {
      report = monomial_growth_hb(mate(rat_from_json(doc["b"], "manifest.b")), n_max);
    } else {
      report = monomial_growth_dmu_surrogate(atoms_from_json(doc["atoms"], "manifest.atoms"), n_max);
    }
    res["report"] = growth_to_json(report);
    record.csv_files.emplace_back("growth.csv", growth_to_csv(report));
  } else if (manifest.kind == "identity-check") {
    const MeasureAtoms atoms = atoms_from_json(doc["inputs"]["atoms"], "manifest.inputs.atoms");
    const Poly g = poly_from_json(doc["inputs"]["g"], "manifest.inputs.g");
    QuadratureSpec quad;
    quad.radial_nodes = doc["quadrature"]["radial_nodes"].get<int>();
    quad.angular_nodes = doc["quadrature"]["angular_nodes"].get<int>();
    const EnergyIdentityResult r = energy_identity_check(atoms, g, quad);
    res["lhs"] = r.lhs;
    res["rhs"] = r.rhs;
    res["relative_gap"] = r.relative_gap;
    res["gap_tolerance"] = doc["tolerances"]["rel_gap"].get<double>() * tolerance_scale;
    res["within_tolerance"] = r.relative_gap <= res["gap_tolerance"].get<double>();
    if (r.quadrature_warning) record.warnings.push_back("identity-check: quadrature shift above 1e-6");
  } else if (manifest.kind == "outer") {
    const Poly f = poly_from_json(doc["inputs"]["f"], "manifest.inputs.f");
    res["is_outer"] = is_outer(f);
    json zeros = json::array();
    for (const auto& [zeta, mult] : boundary_zeros(f))
      zeros.push_back(json{{"zeta", json::array({zeta.real(), zeta.imag()})}, {"multiplicity", mult}});
    res["boundary_zeros"] = zeros;
    res["mean_value_gap"] = outer_mean_value_gap(f);
    const int grid_size = doc["grid_size"].get<int>();
    const int probes = doc["probes"].get<int>();
    const BoundaryModulus bm = BoundaryModulus::from_poly_modulus(f, grid_size);
    json probe_rows = json::array();
    SplitMix rng(7);
    for (int i = 0; i < probes; ++i) {
      const cplx z = std::polar(0.5 * rng.uniform(), 2.0 * kPi * rng.uniform());
      const OuterEval eval = outer_from_modulus(bm, z);
      probe_rows.push_back(json{{"z", json::array({z.real(), z.imag()})},
                                {"reconstructed", json::array({eval.value.real(), eval.value.imag()})},
                                {"direct", json::array({f(z).real(), f(z).imag()})},
                                {"abs_error", std::abs(eval.value - f(z))}});
    }
    res["herglotz_probes"] = probe_rows;
  }

  record.elapsed_ms = now_ms() - start;
  return record;
}

// ---------------------------------------------------------------------------
// Families

std::vector<Rat> paper_b_family() {
  std::vector<Rat> family;
  family.push_back(Rat::from_poly(Poly{0.5, 0.5}));                    // (1+z)/2
  family.push_back(Rat::from_poly(Poly{0.0, 0.5}));                    // z/2
  family.push_back(Rat::from_poly(Poly{0.25, 0.5, 0.25}));             // (1+z)^2/4
  family.push_back(Rat::from_poly(Poly{0.0, 0.75, 0.25}));             // z(3+z)/4
  family.push_back(Rat::from_poly(Poly{0.0, 0.5, 0.5}));               // z(1+z)/2
  // Mate with a multiplicity-2 boundary zero at 1: b = c (1+z)(z-u) with
  // u = 3+2 sqrt(2), c = (sqrt(2)-1)/4, so that 1-|b|^2 = |1-z|^4/16.
  const double u = 3.0 + 2.0 * std::sqrt(2.0);
  const double c = (std::sqrt(2.0) - 1.0) / 4.0;
  family.push_back(Rat::from_poly(Poly{cplx(-u * c), cplx((1.0 - u) * c), cplx(c)}));
  family.push_back(Rat{Poly{0.0, 1.0}, Poly{2.0, -1.0}});              // z/(2-z)
  return family;
}

std::vector<CoronaInstance> constant_corona_family() {
  std::vector<CoronaInstance> family;
  const Poly f1 = Poly::monomial(1);
  // log-spaced constants spanning over 1.5 decades of delta
  const double lo = 0.015, hi = 0.5;
  const int count = 8;
  for (int i = 0; i < count; ++i) {
    const double t = lo * std::pow(hi / lo, double(i) / (count - 1));
    family.push_back(make_corona_instance(f1, Poly{cplx(t)}));
  }
  return family;
}

std::vector<CoronaInstance> boundary_corona_family() {
  std::vector<CoronaInstance> family;
  const double lo = 0.02, hi = 0.5;
  const int count = 7;
  for (int i = 0; i < count; ++i) {
    const double d = lo * std::pow(hi / lo, double(i) / (count - 1));
    const Poly lin1{cplx(-(1.0 + d) / (2.0 + d)), cplx(1.0 / (2.0 + d))};
    const Poly lin2{cplx(0.5), cplx(-0.5)};
    family.push_back(make_corona_instance(cplx(0.5) * (lin1 * lin1), cplx(0.5) * (lin2 * lin2)));
  }
  return family;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using RowFn = std::function<SuiteRow(double)>;

SuiteRow timed_row(const std::string& id, const std::string& description, double budget_s,
                   const std::function<void(SuiteRow&)>& body) {
  SuiteRow row;
  row.id = id;
  row.description = description;
  row.budget_s = budget_s;
  const double start = now_ms();
  try {
    row.passed = true;
    body(row);
  } catch (const std::exception& e) {
    row.passed = false;
    row.details["exception"] = e.what();
  }
  row.elapsed_s = (now_ms() - start) / 1000.0;
  if (budget_s > 0.0 && row.elapsed_s >= budget_s) {
    row.passed = false;
    row.details["runtime_exceeded"] = row.elapsed_s;
  }
  return row;
}

void check(SuiteRow& row, bool condition, const std::string& what) {
  if (!condition) {
    row.passed = false;
    row.details["failures"].push_back(what);
  }
}

}  // namespace

namespace suite_rows {

// Criterion 1: |a|^2 + |b|^2 = 1 on the circle and a(0) > 0 across the family.
SuiteRow mate_identity(double ts) {
  return timed_row("criterion-01", "mate identity |a|^2+|b|^2=1, a(0)>0 over the b-family", 5.0,
                   [ts](SuiteRow& row) {
    const auto family = paper_b_family();
    json entries = json::array();
    bool saw_mult2 = false;
    for (const auto& b : family) {
      const RationalMate m = mate(b);
      for (const auto& [zeta, mult] : m.boundary_zeros) {
        (void)zeta;
        if (mult >= 2) saw_mult2 = true;
      }
      const double a0 = m.a(cplx(0.0)).real();
      check(row, m.roundtrip_residual <= 1e-9 * ts, "roundtrip residual above 1e-9");
      check(row, a0 > 0.0, "a(0) not positive");
      entries.push_back(json{{"b", rat_to_json(b)},
                             {"roundtrip_residual", m.roundtrip_residual},
                             {"a0", a0},
                             {"N", m.N}});
    }
    check(row, family.size() >= 6, "family smaller than 6");
    check(row, saw_mult2, "no multiplicity-2 boundary zero in the family");
    row.details["family"] = entries;
  });
}

// Criterion 2: ||chi_n||^2_{H(b)} = 1 + sum |c_j|^2; = 4n+2 for b=(1+z)/2.
SuiteRow hb_norm_identity(double ts) {
  return timed_row("criterion-02", "H(b) monomial norm identity (diagonal = 1 + sum |c_j|^2)", 10.0,
                   [ts](SuiteRow& row) {
    const RationalMate m1 = mate(Rat::from_poly(Poly{0.5, 0.5}), MateOptions{.c_length = 256});
    const SpaceSpec hb1 = SpaceSpec::de_branges_rovnyak(m1);
    const GramMatrix gram1 = monomial_gram(hb1, 200);
    double worst = 0.0;
    for (int n = 1; n <= 200; ++n)
      worst = std::max(worst, std::abs(gram1.entries(n, n).real() - (4.0 * n + 2.0)));
    check(row, worst <= 1e-9 * ts, "||chi_n||^2 differs from 4n+2");
    row.details["max_defect_4n2"] = worst;

    double worst_diag = 0.0;
    for (const auto& b : paper_b_family()) {
      const RationalMate m = mate(b);
      const SpaceSpec hb = SpaceSpec::de_branges_rovnyak(m);
      const GramMatrix gram = monomial_gram(hb, 64);
      const auto c = mate_c_prefix(m, 64);
      double csum = 0.0;
      for (int n = 0; n <= 64; ++n) {
        csum += std::norm(c[static_cast<size_t>(n)]);
        worst_diag = std::max(worst_diag, std::abs(gram.entries(n, n).real() - (1.0 + csum)));
      }
    }
    check(row, worst_diag <= 1e-9 * ts, "diagonal differs from 1 + sum |c_j|^2");
    row.details["max_diagonal_defect"] = worst_diag;
  });
}

// Criterion 3: growth bounds with margin >= -1e-9.
SuiteRow growth_bounds(double ts) {
  return timed_row("criterion-03", "monomial growth bounds (Besov, H(b), D(mu))", 30.0,
                   [ts](SuiteRow& row) {
    const double floor = -1e-9 * ts;
    json items = json::array();
    for (const auto& [p, alpha] : std::vector<std::pair<double, double>>{{2, 0}, {2, 1}, {3, 1.5}}) {
      const GrowthReport r = monomial_growth_besov_algebra(p, alpha, 200);
      check(row, r.bound_margin >= floor, "Besov growth margin below floor");
      items.push_back(growth_to_json(r));
    }
    for (const auto& b : paper_b_family()) {
      const RationalMate m = mate(b, MateOptions{.c_length = 512});
      const GrowthReport r = monomial_growth_hb(m, 400, 50);
      check(row, r.bound_margin >= floor, "H(b) c-sum growth margin below floor");
      items.push_back(growth_to_json(r));
    }
    MeasureAtoms atoms;
    atoms.atoms = {{cplx(1.0), 1.0}, {std::polar(1.0, 2.0), 0.5}, {cplx(0.3, 0.2), 0.25}};
    const GrowthReport r = monomial_growth_dmu_surrogate(atoms, 200);
    check(row, r.bound_margin >= floor, "D(mu) pointwise inequality margin below floor");
    items.push_back(growth_to_json(r));
    row.details["reports"] = items;
  });
}

// Criterion 4 (suite part): Hardy distance law d_n^2 = 1/(n+2) for f = 1-z.
SuiteRow hardy_distance_law(double ts) {
  return timed_row("criterion-04", "Hardy OPA distance law d_n^2 = 1/(n+2) for f = 1-z", 20.0,
                   [ts](SuiteRow& row) {
    const SpaceSpec hardy = SpaceSpec::hardy();
    const Poly f{1.0, -1.0};
    double worst = 0.0;
    for (int n = 0; n <= 50; ++n) {
      const ApproximantResult r = opa(hardy, f, n);
      worst = std::max(worst, std::abs(r.distance * r.distance - 1.0 / (n + 2.0)));
    }
    check(row, worst <= 1e-9 * ts, "distance law violated");
    row.details["max_defect"] = worst;
    row.details["note"] = "cross-method oracle agreement runs in the acceptance harness";
  });
}

// Criterion 5: E_0 membership, bounded point evaluation and plateau verdicts
// tie together at zeta = 1.
SuiteRow lemma_triangle(double ts) {
  return timed_row("criterion-05", "E0 / BPE / cyclicity triangle at zeta = 1", 60.0,
                   [ts](SuiteRow& row) {
    const Rat b = Rat::from_poly(Poly{0.5, 0.5});
    const RationalMate m = mate(b);
    const SpaceSpec hb = SpaceSpec::de_branges_rovnyak(m);
    const Poly f{1.0, -1.0};

    const E0Report e0 = e0_membership(b, cplx(1.0));
    check(row, e0.member, "E0 membership at 1 expected for b=(1+z)/2");

    const BpeReport bpe = bpe_estimate(hb, cplx(1.0), 128);
    check(row, bpe.bounded_flag, "H(b) BPE at 1 expected bounded");

    const CyclicityReport scan = cyclicity_scan(hb, f, 128);
    check(row, scan.verdict == "plateau", "H(b) scan expected plateau");

    // Duality d_n * v_{n+1} >= 1 - 1e-9 for every n <= 128.
    const GramMatrix gram = monomial_gram(hb, 129);
    double min_product = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= 128; ++n) {
      const double d = opa(hb, f, n).distance;
      Eigen::VectorXcd e(n + 2);
      for (int k = 0; k <= n + 1; ++k) e(k) = cplx(1.0);
      const Eigen::MatrixXcd section = gram.entries.topLeftCorner(n + 2, n + 2);
      const double v = std::sqrt(std::max(0.0, (e.adjoint() * solve_gram(section, e))(0, 0).real()));
      min_product = std::min(min_product, d * v);
    }
    check(row, min_product >= 1.0 - 1e-9 * ts, "duality product below 1 - 1e-9");
    row.details["min_duality_product"] = min_product;

    for (const SpaceSpec& space : {SpaceSpec::hardy(), SpaceSpec::weighted_dirichlet(0.0)}) {
      const BpeReport r = bpe_estimate(space, cplx(1.0), 512);
      check(row, !r.bounded_flag, space.name() + ": BPE at 1 expected unbounded");
      if (std::holds_alternative<HardySpec>(space.kind)) {
        check(row, r.values.back() > 10.0, "Hardy v_512 expected > 10");
        row.details["hardy_v512"] = r.values.back();
      }
      const CyclicityReport scan2 = cyclicity_scan(space, f, 128);
      check(row, scan2.verdict == "decaying", space.name() + ": scan expected decaying");
    }
  });
}

// Criterion 6: delta_lambda inequalities on seeded random instances.
SuiteRow delta_lambda_checks(double ts) {
  return timed_row("criterion-06", "delta_lambda lower bounds (dominated pair and outer f)", 60.0,
                   [ts](SuiteRow& row) {
    SplitMix rng(20240601);
    double min_margin_dom = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 100; ++trial) {
      const int df = rng.uniform_int(1, 6);
      std::vector<cplx> fc(static_cast<size_t>(df) + 1);
      for (auto& c : fc) c = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
      Poly f(std::move(fc));
      if (f.is_zero()) f = Poly::one();
      const int dh = rng.uniform_int(0, 4);
      std::vector<cplx> hc(static_cast<size_t>(dh) + 1);
      for (auto& c : hc) c = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
      Poly h(std::move(hc));
      if (h.is_zero()) h = Poly{cplx(0.5)};
      h = cplx(1.0 / h.coeff_l1()) * h;  // sup |h| <= 1 on the closed disc
      const Poly g = f * h;
      const cplx lambda = std::polar(std::exp(rng.uniform(std::log(0.2), std::log(5.0))),
                                     2.0 * kPi * rng.uniform());
      const DeltaLambdaResult r = delta_lambda_dominated(f, g, lambda);
      min_margin_dom = std::min(min_margin_dom, r.value - r.bound);
    }
    check(row, min_margin_dom >= -1e-4 * ts, "dominated delta_lambda bound violated");
    row.details["min_margin_dominated"] = min_margin_dom;

    double min_margin_outer = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 50; ++trial) {
      const int nroots = rng.uniform_int(1, 4);
      std::vector<cplx> roots;
      for (int i = 0; i < nroots; ++i) {
        const double radius = rng.uniform() < 0.3 ? 1.0 : rng.uniform(1.05, 2.5);
        roots.push_back(std::polar(radius, 2.0 * kPi * rng.uniform()));
      }
      const Poly f = poly_from_roots(roots);
      const double eps = rng.uniform(0.1, 1.0);
      double lam_mod = rng.uniform(0.0, 2.4);
      if (std::abs(lam_mod - 1.0) < 0.05) lam_mod += 0.1;
      const cplx lambda = std::polar(lam_mod, 2.0 * kPi * rng.uniform());
      const DeltaLambdaResult r = delta_lambda_outer(f, lambda, eps);
      min_margin_outer = std::min(min_margin_outer, r.value - r.bound);
    }
    check(row, min_margin_outer >= -1e-4 * ts, "outer delta_lambda bound violated");
    row.details["min_margin_outer"] = min_margin_outer;
  });
}

// Criterion 7: Bezout least squares and exponent sweeps.
SuiteRow corona_experiments(double ts) {
  return timed_row("criterion-07", "Bezout LS on coprime pairs; exponent sweeps", 120.0,
                   [ts](SuiteRow& row) {
    const SpaceSpec hardy = SpaceSpec::hardy();
    const Poly one_minus_z{1.0, -1.0};
    const std::vector<std::pair<Poly, Poly>> pairs = {
        {Poly::monomial(2), one_minus_z * one_minus_z},
        {Poly::monomial(1), one_minus_z},
        {Poly::monomial(3), one_minus_z * one_minus_z},
        {Poly{-0.09, 0.0, 1.0}, one_minus_z * one_minus_z},
        {Poly::monomial(2), one_minus_z * one_minus_z * one_minus_z},
        {Poly{0.25, 0.0, 1.0}, one_minus_z},
        {Poly{0.0, -0.5, 1.0}, Poly{1.0, 0.0, -1.0}},
        {Poly{0.16, -0.8, 1.0}, Poly{0.36, 1.2, 1.0}},
        {Poly::monomial(4), one_minus_z * one_minus_z},
        {Poly{0.3, 0.5, 1.0}, one_minus_z * one_minus_z},
    };
    json bez = json::array();
    for (const auto& [f1, f2] : pairs) {
      const CoronaInstance inst = make_corona_instance(f1, f2);
      const int degree = f1.degree() + f2.degree();
      const BezoutSolution sol = bezout_ls(hardy, inst, degree);
      check(row, sol.residual < 1e-8 * ts, "coprime pair residual above 1e-8");
      bez.push_back(json{{"delta", inst.delta}, {"degree", degree}, {"residual", sol.residual}});
    }
    row.details["coprime_pairs"] = bez;

    const ExponentFit constant_fit =
        exponent_sweep(hardy, constant_corona_family(), {0, 1, 2}, 1e-8 * ts);
    check(row, std::abs(constant_fit.fitted_A - 1.0) <= 0.05,
          "constant family fitted_A outside 1.00 +- 0.05");
    row.details["constant_fit"] = exponent_fit_to_json(constant_fit);

    const ExponentFit boundary_fit =
        exponent_sweep(hardy, boundary_corona_family(), {0, 1, 2, 3, 4, 6, 8}, 1e-8 * ts);
    row.details["boundary_fit"] = exponent_fit_to_json(boundary_fit);
    row.details["boundary_note"] = "reported without assertion; upper-bound regime, not an asymptotic";
  });
}

// Criterion 8: energy identity for mixed atomic measures.
SuiteRow energy_identity(double ts) {
  return timed_row("criterion-08", "D(mu) energy identity, mixed atoms, degree <= 20", 30.0,
                   [ts](SuiteRow& row) {
    struct Case {
      MeasureAtoms atoms;
      Poly g;
    };
    std::vector<Case> cases;
    cases.push_back({MeasureAtoms{{{cplx(1.0), 1.0}}}, Poly::monomial(20)});
    {
      MeasureAtoms atoms{{{cplx(0.5), 0.5}, {std::polar(1.0, kPi / 3.0), 0.25}}};
      const Poly f{1.0, -1.0};
      cases.push_back({atoms, f * f * f * Poly{1.0, 0.0, 1.0}});
    }
    {
      MeasureAtoms atoms;
      atoms.atoms = {{cplx(1.0), 1.0},           {cplx(0.0, 1.0), 0.5},
                     {cplx(-1.0), 0.25},         {cplx(0.0, -1.0), 0.125},
                     {cplx(0.0), 0.3},           {cplx(0.3, 0.2), 0.2},
                     {cplx(-0.4), 0.7},          {cplx(0.1, -0.6), 0.11}};
      SplitMix rng(99);
      std::vector<cplx> gc(21);
      for (auto& c : gc) c = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
      cases.push_back({atoms, Poly(std::move(gc))});
    }
    cases.push_back({MeasureAtoms{{{std::polar(1.0, 2.0), 2.0}}},
                     Poly::monomial(15) + Poly::monomial(3) + Poly::one()});

    json rows = json::array();
    for (const auto& [atoms, g] : cases) {
      const EnergyIdentityResult r = energy_identity_check(atoms, g);
      check(row, r.relative_gap <= 1e-4 * ts, "energy identity gap above 1e-4");
      rows.push_back(json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"relative_gap", r.relative_gap}});
    }
    row.details["cases"] = rows;
  });
}

// Criterion 9: power-sum and resolvent inequality micro-suite.
SuiteRow inequality_micro_suite(double ts) {
  return timed_row("criterion-09", "power-sum lattice and resolvent ray grid", 5.0,
                   [ts](SuiteRow& row) {
    double min_gap = std::numeric_limits<double>::infinity();
    for (int p = 0; p <= 6; ++p) {
      for (double x : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}) {
        const PowerSumCheck c = power_sum_inequality(p, x);
        min_gap = std::min(min_gap, (c.rhs - c.lhs) / c.rhs);
        check(row, c.lhs <= c.rhs * (1.0 + 1e-12), "power-sum inequality violated");
      }
    }
    row.details["power_sum_min_relative_gap"] = min_gap;

    const RationalMate m = mate(Rat::from_poly(Poly{0.5, 0.5}));
    std::vector<double> c_seq;
    const auto c = mate_c_prefix(m, 200);
    double s = 0.0;
    for (int n = 0; n <= 200; ++n) {
      s += std::norm(c[static_cast<size_t>(n)]);
      c_seq.push_back(std::sqrt(1.0 + s));
    }
    double min_margin = std::numeric_limits<double>::infinity();
    for (double radius : {1.05, 1.2, 1.5, 2.0, 3.0, 5.0, 10.0}) {
      for (int k = 0; k < 16; ++k) {
        const cplx lambda = std::polar(radius, 2.0 * kPi * k / 16.0);
        const ResolventCheck r = resolvent_bound_check(c_seq, 1, lambda);
        min_margin = std::min(min_margin, r.paper_bound - r.series_value);
        check(row, r.series_value <= r.paper_bound + 1e-9 * ts, "resolvent bound violated");
      }
    }
    row.details["resolvent_min_margin"] = min_margin;
  });
}

SuiteRow smoke_mate(double ts) {
  return timed_row("smoke-mate", "mate of b=(1+z)/2", 5.0, [ts](SuiteRow& row) {
    const RationalMate m = mate(Rat::from_poly(Poly{0.5, 0.5}));
    check(row, m.roundtrip_residual <= 1e-9 * ts, "roundtrip residual");
    check(row, m.N == 1, "expected N = 1");
    row.details["residual"] = m.roundtrip_residual;
  });
}

SuiteRow smoke_gram(double) {
  return timed_row("smoke-gram", "Hardy identity Gram", 5.0, [](SuiteRow& row) {
    const GramMatrix gram = monomial_gram(SpaceSpec::hardy(), 8);
    check(row, gram.is_hermitian() && gram.is_psd(), "Gram not Hermitian PSD");
    check(row, std::abs(gram.entries(3, 3).real() - 1.0) < 1e-15, "Hardy diagonal not 1");
  });
}

SuiteRow smoke_opa(double) {
  return timed_row("smoke-opa", "Hardy OPA of 1-z at degree 4", 5.0, [](SuiteRow& row) {
    const ApproximantResult r = opa(SpaceSpec::hardy(), Poly{1.0, -1.0}, 4);
    check(row, std::abs(r.distance * r.distance - 1.0 / 6.0) < 1e-12, "d_4^2 != 1/6");
    row.details["distance"] = r.distance;
  });
}

}  // namespace suite_rows

std::string SuiteResult::payload() const {
  json rows_json = json::array();
  for (const auto& row : rows)
    rows_json.push_back(json{{"id", row.id}, {"passed", row.passed}, {"details", row.details}});
  return rows_json.dump();
}

json SuiteResult::summary() const {
  json out;
  out["suite"] = name;
  out["all_passed"] = all_passed;
  json rows_json = json::array();
  for (const auto& row : rows) {
    rows_json.push_back(json{{"id", row.id},
                             {"description", row.description},
                             {"passed", row.passed},
                             {"elapsed_s", row.elapsed_s},
                             {"budget_s", row.budget_s},
                             {"details", row.details}});
  }
  out["rows"] = rows_json;
  out["conventions"] = conventions_json();
  out["version"] = kVersion;
  return out;
}

namespace {

std::vector<SuiteRow> run_rows(const std::vector<RowFn>& fns, int threads, double ts) {
  std::vector<SuiteRow> rows(fns.size());
  if (threads <= 1) {
    for (size_t i = 0; i < fns.size(); ++i) rows[i] = fns[i](ts);
    return rows;
  }
  size_t next = 0;
  while (next < fns.size()) {
    const size_t batch = std::min<size_t>(static_cast<size_t>(threads), fns.size() - next);
    std::vector<std::future<SuiteRow>> futures;
    for (size_t i = 0; i < batch; ++i)
      futures.push_back(std::async(std::launch::async, fns[next + i], ts));
    for (size_t i = 0; i < batch; ++i) rows[next + i] = futures[i].get();
    next += batch;
  }
  return rows;
}

}  // namespace

SuiteResult suite(const std::string& name, int threads, double tolerance_scale) {
  SuiteResult result;
  result.name = name;
  std::vector<RowFn> fns;
  bool determinism_row = false;

  if (name == "paper-s5") {
    fns = {suite_rows::mate_identity,  suite_rows::hb_norm_identity, suite_rows::growth_bounds,
           suite_rows::hardy_distance_law, suite_rows::lemma_triangle,   suite_rows::delta_lambda_checks,
           suite_rows::corona_experiments, suite_rows::energy_identity,  suite_rows::inequality_micro_suite};
    determinism_row = true;
  } else if (name == "smoke") {
    fns = {suite_rows::smoke_mate, suite_rows::smoke_gram, suite_rows::smoke_opa};
  } else {
    throw unknown_suite_error("unknown suite '" + name + "'");
  }

  result.rows = run_rows(fns, threads, tolerance_scale);

  if (determinism_row) {
    // Criterion 10: an independent single-threaded pass must reproduce the
    // payload byte-for-byte.
    SuiteResult first;
    first.rows = result.rows;
    const std::string payload_a = first.payload();
    SuiteResult second;
    second.rows = run_rows(fns, 1, tolerance_scale);
    const std::string payload_b = second.payload();
    SuiteRow row;
    row.id = "criterion-10";
    row.description = "determinism: payload identical across reruns and thread counts";
    row.passed = payload_a == payload_b;
    row.details["payload_bytes"] = payload_a.size();
    row.details["identical"] = row.passed;
    result.rows.push_back(row);
  }

  for (const auto& row : result.rows) result.all_passed = result.all_passed && row.passed;
  return result;
}

std::vector<std::string> list_suites() { return {"paper-s5", "smoke"}; }

void write_run_outputs(const RunRecord& record, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream out(fs::path(out_dir) / "record.json");
    out << record.to_json().dump(2) << "\n";
  }
  for (const auto& [name, content] : record.csv_files) {
    std::ofstream out(fs::path(out_dir) / name);
    out << "# manifest_hash=" << record.manifest_hash << " version=" << record.version
        << " area_measure=normalized\n";
    out << content;
  }
}

void write_suite_outputs(const SuiteResult& result, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::ofstream out(fs::path(out_dir) / (result.name + "-summary.json"));
  out << result.summary().dump(2) << "\n";
}

}  // namespace cyclab
