#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cyclab/errors.hpp"
#include "cyclab/runner.hpp"

using namespace cyclab;

namespace {

json mate_manifest() {
  return json{{"kind", "mate"},
              {"inputs", {{"b", {{"num", {{0.5, 0.0}, {0.5, 0.0}}}, {"den", {{1.0, 0.0}}}}}}}};
}

}  // namespace

TEST_CASE("manifest validation errors name the field") {
  CHECK_THROWS_AS(parse_manifest(json{{"kind", "unknown-kind"}}), validation_error);
  try {
    parse_manifest(json{{"kind", "opa"}, {"space", {{"kind", "hardy"}}}, {"degree", 3}});
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("manifest.inputs") != std::string::npos);
  }
  try {
    parse_manifest(json{{"kind", "gram"}, {"n_max", 4}});
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("manifest.space") != std::string::npos);
  }
  try {
    parse_manifest(json{{"kind", "gram"},
                        {"space", {{"kind", "weighted-dirichlet"}, {"params", json::object()}}},
                        {"n_max", 4}});
    FAIL("expected a validation error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
}

TEST_CASE("defaults are materialized at parse time") {
  const ExperimentManifest m = parse_manifest(
      json{{"kind", "cyclicity"},
           {"space", {{"kind", "hardy"}}},
           {"inputs", {{"f", {{1.0, 0.0}, {-1.0, 0.0}}}}},
           {"n_max", 16}});
  CHECK(m.doc.contains("schedule"));
  CHECK(m.doc["space"].contains("quadrature"));

  const ExperimentManifest mm = parse_manifest(mate_manifest());
  CHECK(mm.doc["tolerances"]["roundtrip"].get<double>() == 1e-9);
  CHECK(mm.doc["c_length"].get<int>() == 256);
}

TEST_CASE("mate experiment record") {
  const RunRecord record = run(parse_manifest(mate_manifest()));
  CHECK(record.results["a_at_zero"].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(record.results["mate"]["N"].get<int>() == 1);
  CHECK(record.results["mate"]["roundtrip_residual"].get<double>() <= 1e-9);
  CHECK(!record.manifest_hash.empty());
  CHECK(record.manifest_hash == canonical_hash(record.manifest));
}

TEST_CASE("cyclicity record matches the library path and is deterministic") {
  const json doc{{"kind", "cyclicity"},
                 {"space", {{"kind", "hardy"}}},
                 {"inputs", {{"f", {{1.0, 0.0}, {-1.0, 0.0}}}}},
                 {"n_max", 16}};
  const ExperimentManifest m = parse_manifest(doc);
  const RunRecord a = run(m);
  const RunRecord b = run(m);
  CHECK(a.results.dump() == b.results.dump());
  CHECK(a.manifest_hash == b.manifest_hash);
  const auto distances = a.results["report"]["distances"].get<std::vector<double>>();
  CHECK(distances.back() * distances.back() == doctest::Approx(1.0 / 18.0).epsilon(1e-9));
  REQUIRE(!a.csv_files.empty());
  CHECK(a.csv_files[0].first == "distances.csv");
  CHECK(a.csv_files[0].second.find("n,d_n") == 0);
}

TEST_CASE("identity-check and growth records") {
  const RunRecord e = run(parse_manifest(
      json{{"kind", "identity-check"},
           {"inputs",
            {{"atoms", json::array({{{"location", {1.0, 0.0}}, {"weight", 1.0}}})},
             {"g", {{0.0, 0.0}, {1.0, 0.0}}}}}}));
  CHECK(e.results["within_tolerance"].get<bool>());
  CHECK(e.results["lhs"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  const RunRecord g = run(parse_manifest(
      json{{"kind", "growth"}, {"designation", "besov-algebra"}, {"p", 2.0}, {"alpha", 0.0}, {"n_max", 32}}));
  CHECK(g.results["report"]["bound_margin"].get<double>() >= -1e-9);
}

TEST_CASE("space serialization round trip") {
  const std::vector<SpaceSpec> spaces = {
      SpaceSpec::hardy(), SpaceSpec::weighted_dirichlet(0.4), SpaceSpec::besov_dirichlet(3.0, 1.5),
      SpaceSpec::de_branges_rovnyak(mate(Rat::from_poly(Poly{0.5, 0.5}))),
      SpaceSpec::harmonic_dirichlet(MeasureAtoms{{{cplx(1.0), 1.0}, {cplx(0.2, 0.1), 0.5}}})};
  for (const auto& space : spaces) {
    const SpaceSpec back = space_from_json(space_to_json(space), "roundtrip");
    CHECK(back.name() == space.name());
    CHECK(space_to_json(back).dump() == space_to_json(space).dump());
  }
}

TEST_CASE("poly and rat serialization round trip") {
  const Poly p{cplx(1.0, -2.0), cplx(0.0, 3.5), cplx(-0.25, 0.0)};
  CHECK(poly_from_json(poly_to_json(p), "t").coeffs() == p.coeffs());
  const Rat r{p, Poly{2.0, -1.0}};
  const Rat back = rat_from_json(rat_to_json(r), "t");
  CHECK(back.num.coeffs() == r.num.coeffs());
  CHECK(back.den.coeffs() == r.den.coeffs());
  CHECK_THROWS_AS(poly_from_json(json{{"oops", 1}}, "t"), validation_error);
}

TEST_CASE("smoke suite passes quickly") {
  const SuiteResult result = suite("smoke");
  CHECK(result.all_passed);
  CHECK(result.rows.size() == 3);
  double total = 0.0;
  for (const auto& row : result.rows) total += row.elapsed_s;
  CHECK(total < 5.0);
  CHECK_THROWS_AS(suite("no-such-suite"), unknown_suite_error);
}
