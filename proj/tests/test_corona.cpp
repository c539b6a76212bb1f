#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclab/corona.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/runner.hpp"

using namespace cyclab;

TEST_CASE("delta_inf examples") {
  CHECK(delta_inf(Rat::from_poly(Poly::monomial(1)), Rat::from_poly(Poly{0.5})).value ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(delta_inf(Rat::from_poly(Poly::monomial(1)), Rat::from_poly(Poly{1.0, -1.0})).value ==
        doctest::Approx(1.0).epsilon(1e-9));
  // interior minimiser: accuracy set by the refinement resolution
  CHECK(delta_inf(Rat::from_poly(Poly{-0.5, 1.0}), Rat::from_poly(Poly{0.3})).value ==
        doctest::Approx(0.3).epsilon(1e-4));
  CHECK_THROWS_AS(delta_inf(Rat{Poly{1.0}, Poly{0.5, -1.0}}, Rat::from_poly(Poly{0.3})), pole_error);
}

TEST_CASE("delta_inf refinement stability") {
  const Poly f1{0.1, -0.7, 1.0};
  const Poly f2{0.4, 0.2};
  DiscGridSpec coarse;
  coarse.radial = 48;
  coarse.angular = 256;
  DiscGridSpec fine;
  fine.radial = 96;
  fine.angular = 512;
  const double vc = delta_inf(Rat::from_poly(f1), Rat::from_poly(f2), coarse).value;
  const double vf = delta_inf(Rat::from_poly(f1), Rat::from_poly(f2), fine).value;
  const double lipschitz = f1.derivative().coeff_l1() + f2.derivative().coeff_l1();
  const double h = 1.0 / coarse.radial + 2.0 * 3.15 / coarse.angular;
  CHECK(vf <= vc + lipschitz * h);
  CHECK(vc <= vf + lipschitz * h);
}

TEST_CASE("corona instance upper bound") {
  const CoronaInstance inst = make_corona_instance(Poly::monomial(1), Poly{1.0, -1.0});
  CHECK(inst.delta == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(inst.upper == doctest::Approx(3.0).epsilon(1e-6));  // |z| + |1-z| peaks at z = -1
  CHECK(inst.delta <= inst.upper);
}

TEST_CASE("bezout_ls exact identities") {
  const SpaceSpec hardy = SpaceSpec::hardy();
  {
    const CoronaInstance inst = make_corona_instance(Poly::monomial(1), Poly{1.0, -1.0});
    const BezoutSolution sol = bezout_ls(hardy, inst, 0);
    CHECK(sol.residual <= 1e-12);
    CHECK(std::abs(sol.g1.coeff(0) - cplx(1.0)) < 1e-10);
    CHECK(std::abs(sol.g2.coeff(0) - cplx(1.0)) < 1e-10);
  }
  {
    // z^2 g1 + (1-z)^2 g2 = 1 has the unique degree-1 solution
    // g1 = 3 - 2z, g2 = 1 + 2z (extended Euclid).
    const Poly f1 = Poly::monomial(2);
    const Poly omz{1.0, -1.0};
    const CoronaInstance inst = make_corona_instance(f1, omz * omz);
    const BezoutSolution sol = bezout_ls(hardy, inst, 1);
    CHECK(sol.residual <= 1e-10);
    CHECK(std::abs(sol.g1.coeff(0) - cplx(3.0)) < 1e-8);
    CHECK(std::abs(sol.g1.coeff(1) + cplx(2.0)) < 1e-8);
    CHECK(std::abs(sol.g2.coeff(0) - cplx(1.0)) < 1e-8);
    CHECK(std::abs(sol.g2.coeff(1) - cplx(2.0)) < 1e-8);
    // invariant: the reported residual is the norm of the explicit combination
    const Poly combo = inst.f1 * sol.g1 + inst.f2 * sol.g2 - Poly::one();
    CHECK(std::abs(sol.residual - norm(hardy, combo)) <= 1e-9);
  }
}

TEST_CASE("bezout_ls rejects a common zero on the closed disc") {
  const CoronaInstance inst = make_corona_instance(Poly{-1.0, 1.0}, Poly{-1.0, 1.0});
  CHECK(inst.delta <= 1e-6);
  CHECK_THROWS_AS(bezout_ls(SpaceSpec::hardy(), inst, 2), std::invalid_argument);
}

TEST_CASE("bezout residual is nonincreasing in degree") {
  const SpaceSpec hardy = SpaceSpec::hardy();
  const Poly omz{1.0, -1.0};
  const CoronaInstance inst = make_corona_instance(Poly::monomial(2), omz * omz);
  double prev = std::numeric_limits<double>::infinity();
  for (int degree = 0; degree <= 4; ++degree) {
    const double r = bezout_ls(hardy, inst, degree).residual;
    CHECK(r <= prev + 1e-10);
    prev = r;
  }
}

TEST_CASE("constant family sweep recovers exponent 1") {
  const ExponentFit fit =
      exponent_sweep(SpaceSpec::hardy(), constant_corona_family(), {0, 1, 2});
  CHECK(std::abs(fit.fitted_A - 1.0) <= 0.05);
  CHECK(fit.fit_residual <= 0.05);
  for (size_t i = 0; i < fit.deltas.size(); ++i)
    CHECK(fit.norms[i] == doctest::Approx(1.0 / fit.deltas[i]).epsilon(1e-6));
}

TEST_CASE("sweep rejects degenerate families") {
  CHECK_THROWS_AS(exponent_sweep(SpaceSpec::hardy(), {}, {0, 1}), family_degenerate_error);
  // too narrow a delta range
  std::vector<CoronaInstance> narrow;
  for (double t : {0.2, 0.3, 0.4, 0.5})
    narrow.push_back(make_corona_instance(Poly::monomial(1), Poly{cplx(t)}));
  CHECK_THROWS_AS(exponent_sweep(SpaceSpec::hardy(), narrow, {0, 1}), std::invalid_argument);
}

TEST_CASE("boundary family sweep reports a fit") {
  const ExponentFit fit =
      exponent_sweep(SpaceSpec::hardy(), boundary_corona_family(), {0, 1, 2, 3, 4, 6, 8});
  CHECK(fit.deltas.size() >= 4);
  CHECK(fit.fitted_A > 0.0);  // reported, not asserted against the upper-bound regime
  for (const auto& p : fit.points) CHECK(p.degree <= 4);
}

TEST_CASE("delta_lambda_dominated") {
  {
    const DeltaLambdaResult r = delta_lambda_dominated(Poly{2.0}, Poly{1.0}, cplx(1.0));
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.bound == doctest::Approx(0.5));
    CHECK(r.value >= r.bound);
  }
  {
    const Poly f{1.0, -1.0};
    const DeltaLambdaResult r = delta_lambda_dominated(f, cplx(0.5) * f, cplx(2.0));
    CHECK(r.bound == doctest::Approx(0.25));
    CHECK(r.value >= 0.25 - 1e-9);
  }
  {
    const Poly f{1.0, -1.0};
    const DeltaLambdaResult r = delta_lambda_dominated(f, f, cplx(1.0));
    CHECK(r.value >= 1.0 - 1e-9);  // |1-f| + |f| >= 1 by the triangle inequality
    CHECK(r.bound == doctest::Approx(0.5));
  }
  CHECK_THROWS_AS(delta_lambda_dominated(Poly{1.0, -1.0}, Poly{2.0, -2.0}, cplx(1.0)),
                  domination_error);
  CHECK_THROWS_AS(delta_lambda_dominated(Poly{1.0}, Poly{1.0}, cplx(0.0)), std::invalid_argument);
}

TEST_CASE("delta_lambda_outer") {
  {
    const DeltaLambdaResult r = delta_lambda_outer(Poly{1.0, -1.0}, cplx(0.0), 0.5);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.bound <= 0.5 + 1e-12);
    CHECK(r.value >= r.bound - 1e-4);
    CHECK(r.c_eps > 0.0);
  }
  {
    const DeltaLambdaResult r = delta_lambda_outer(Poly{2.0}, cplx(0.3, 0.2), 0.4);
    CHECK(r.value >= 2.0 - 1e-9);
    CHECK(r.value >= r.bound - 1e-4);
  }
  {
    const Poly f{1.0, -2.0, 1.0};  // (1-z)^2
    const DeltaLambdaResult r = delta_lambda_outer(f, cplx(1.5), 0.5);
    CHECK(r.bound <= 0.25 + 1e-12);
    CHECK(r.value >= r.bound - 1e-4);
  }
  CHECK_THROWS_AS(delta_lambda_outer(Poly{-0.5, 1.0}, cplx(0.0), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(delta_lambda_outer(Poly{1.0, -1.0}, cplx(1.0), 0.5), std::invalid_argument);
}

TEST_CASE("log dominance checks") {
  const Poly f{1.0, -1.0};
  {
    const LogDominanceResult r = log_dominance_check_with_norm(f, Poly{}, 2.0, 2.0);
    CHECK(r.holds);
  }
  {
    // synthetic norm e: threshold (log e)^(-gamma) = 1, so g = 1 sits on the boundary
    const LogDominanceResult r =
        log_dominance_check_with_norm(Poly::one(), Poly::one(), 1.5, std::exp(1.0));
    CHECK(r.holds);
  }
  {
    const LogDominanceResult r = log_dominance_check_with_norm(f, Poly{cplx(-0.1)}, 2.0, 2.0);
    CHECK(!r.holds);
    CHECK(r.reason == "Re g < 0");
    CHECK(r.witness.has_value());
  }
  {
    const SpaceSpec besov = SpaceSpec::besov_dirichlet(2.0, 0.0);
    const LogDominanceResult r = log_dominance_check(f, Poly{}, 2.0, besov);
    CHECK(r.holds);
    CHECK(r.f_algebra_norm > 0.0);
  }
}
