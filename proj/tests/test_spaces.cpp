#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cyclab/errors.hpp"
#include "cyclab/runner.hpp"
#include "cyclab/spaces.hpp"

using namespace cyclab;

namespace {

constexpr double kPi = std::numbers::pi;

Poly random_poly(std::mt19937& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(static_cast<size_t>(degree) + 1);
  for (auto& x : c) x = cplx(u(rng), u(rng));
  return Poly(std::move(c));
}

SpaceSpec hb_space(const Poly& b_num) {
  return SpaceSpec::de_branges_rovnyak(mate(Rat::from_poly(b_num)));
}

}  // namespace

TEST_CASE("hardy and weighted dirichlet monomial inner products") {
  const SpaceSpec hardy = SpaceSpec::hardy();
  CHECK(inner(hardy, Poly::monomial(2), Poly::monomial(2)) == cplx(1.0));
  CHECK(inner(hardy, Poly::monomial(1), Poly::monomial(2)) == cplx(0.0));

  const SpaceSpec wd = SpaceSpec::weighted_dirichlet(0.0);
  for (int n = 1; n <= 8; ++n)
    CHECK(inner(wd, Poly::monomial(n), Poly::monomial(n)).real() == doctest::Approx(double(n)).epsilon(1e-12));
  CHECK(inner(wd, Poly::one(), Poly::one()).real() == doctest::Approx(1.0));
}

TEST_CASE("weighted dirichlet beta formula agrees with quadrature") {
  const double alpha = 1.5;
  const SpaceSpec wd = SpaceSpec::weighted_dirichlet(alpha);
  QuadratureSpec quad;
  for (int n : {1, 3, 7}) {
    const double exact = inner(wd, Poly::monomial(n), Poly::monomial(n)).real();
    const double integral = besov_seminorm_integral(Poly::monomial(n).derivative(), 2.0, alpha, quad);
    CHECK(exact == doctest::Approx((1.0 + alpha) * integral).epsilon(1e-11));
  }
}

TEST_CASE("harmonic dirichlet with a unit atom at 1") {
  const SpaceSpec dmu = SpaceSpec::harmonic_dirichlet(MeasureAtoms{{{cplx(1.0), 1.0}}});
  for (int n = 0; n <= 6; ++n)
    CHECK(inner(dmu, Poly::monomial(n), Poly::monomial(n)).real() ==
          doctest::Approx(1.0 + n).epsilon(1e-12));
}

TEST_CASE("inner products are Hermitian and sesquilinear") {
  std::mt19937 rng(17);
  const std::vector<SpaceSpec> spaces = {SpaceSpec::hardy(), SpaceSpec::weighted_dirichlet(0.7),
                                         hb_space(Poly{0.5, 0.5}),
                                         SpaceSpec::harmonic_dirichlet(MeasureAtoms{
                                             {{cplx(1.0), 0.5}, {cplx(0.2, 0.1), 0.25}}})};
  for (const auto& space : spaces) {
    const Poly f = random_poly(rng, 5);
    const Poly g = random_poly(rng, 4);
    const Poly h = random_poly(rng, 3);
    const cplx s(0.7, -0.2);
    CHECK(std::abs(inner(space, f, g) - std::conj(inner(space, g, f))) < 1e-11);
    CHECK(std::abs(inner(space, s * f + h, g) - (s * inner(space, f, g) + inner(space, h, g))) < 1e-10);
  }
}

TEST_CASE("monomial gram examples") {
  const GramMatrix identity = monomial_gram(SpaceSpec::hardy(), 2);
  CHECK((identity.entries - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-14);

  const GramMatrix hb = monomial_gram(hb_space(Poly{0.5, 0.5}), 2);
  const double expected[3][3] = {{2, 2, 2}, {2, 6, 6}, {2, 6, 10}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(hb.entries(i, j).real() == doctest::Approx(expected[i][j]).epsilon(1e-12));
      CHECK(std::abs(hb.entries(i, j).imag()) < 1e-12);
    }

  const SpaceSpec dmu = SpaceSpec::harmonic_dirichlet(MeasureAtoms{{{cplx(1.0), 1.0}}});
  const GramMatrix gd = monomial_gram(dmu, 2);
  CHECK(gd.entries(0, 0).real() == doctest::Approx(1.0));
  CHECK(gd.entries(1, 1).real() == doctest::Approx(2.0));
  CHECK(gd.entries(2, 2).real() == doctest::Approx(3.0));
  // off-diagonals from the polarised local Dirichlet integrals: min(m, n)
  CHECK(gd.entries(2, 1).real() == doctest::Approx(1.0));
  CHECK(gd.entries(1, 0).real() == doctest::Approx(0.0));
}

TEST_CASE("gram entries agree with the generic inner-product route") {
  std::mt19937 rng(29);
  const SpaceSpec dmu = SpaceSpec::harmonic_dirichlet(
      MeasureAtoms{{{std::polar(1.0, 0.9), 0.6}, {cplx(0.4, -0.3), 1.2}}});
  const GramMatrix gram = monomial_gram(dmu, 10);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = rng() % 11, n = rng() % 11;
    CHECK(std::abs(gram.entries(m, n) - inner(dmu, Poly::monomial(m), Poly::monomial(n))) < 1e-11);
  }
}

TEST_CASE("gram matrices are Hermitian PSD across spaces") {
  const std::vector<SpaceSpec> spaces = {
      SpaceSpec::hardy(), SpaceSpec::weighted_dirichlet(-0.3), SpaceSpec::besov_dirichlet(2.0, 1.0),
      hb_space(Poly{0.25, 0.5, 0.25}),
      SpaceSpec::harmonic_dirichlet(MeasureAtoms{{{cplx(1.0), 1.0}, {cplx(0.0), 0.4}}})};
  for (const auto& space : spaces) {
    const GramMatrix gram = monomial_gram(space, 16);
    CHECK(gram.is_hermitian());
    CHECK(gram.is_psd());
  }
}

TEST_CASE("rotation invariance: diagonal grams for hardy and weighted dirichlet") {
  for (const auto& space : {SpaceSpec::hardy(), SpaceSpec::weighted_dirichlet(1.2)}) {
    const GramMatrix gram = monomial_gram(space, 12);
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j)
        if (i != j) CHECK(std::abs(gram.entries(i, j)) <= 1e-12);
  }
}

TEST_CASE("H(b) diagonal identity against 1 + sum |c_j|^2") {
  for (const auto& b : paper_b_family()) {
    const RationalMate m = mate(b);
    const GramMatrix gram = monomial_gram(SpaceSpec::de_branges_rovnyak(m), 48);
    const auto c = mate_c_prefix(m, 48);
    double csum = 0.0;
    for (int n = 0; n <= 48; ++n) {
      csum += std::norm(c[static_cast<size_t>(n)]);
      CHECK(std::abs(gram.entries(n, n).real() - (1.0 + csum)) <= 1e-9);
    }
  }
}

TEST_CASE("nesting: H(z/2) gram is uniformly equivalent to the Hardy gram") {
  const SpaceSpec hb = hb_space(Poly{0.0, 0.5});
  for (int n_max : {8, 32, 64}) {
    const GramMatrix gram = monomial_gram(hb, n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram.entries, Eigen::EigenvaluesOnly);
    CHECK(eig.eigenvalues().minCoeff() >= 1.0 - 1e-9);
    CHECK(eig.eigenvalues().maxCoeff() <= 1.0 + 4.0 / 3.0 + 1e-9);
  }
}

TEST_CASE("norms") {
  CHECK(norm(SpaceSpec::hardy(), Poly{}) == 0.0);
  CHECK(norm(SpaceSpec::besov_dirichlet(3.0, 1.5), Poly{}) == 0.0);

  // algebra norm of chi_1 in D^2_0: sup^2 + integral of 1 = 2
  const SpaceSpec besov20 = SpaceSpec::besov_dirichlet(2.0, 0.0);
  CHECK(norm(besov20, Poly::monomial(1), NormVariant::algebra) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  CHECK(norm(hb_space(Poly{0.5, 0.5}), Poly::monomial(5)) ==
        doctest::Approx(std::sqrt(22.0)).epsilon(1e-12));
}

TEST_CASE("besov norms: p != 2 quadrature path and convergence flag") {
  const SpaceSpec besov = SpaceSpec::besov_dirichlet(3.0, 1.5);
  CHECK_THROWS_AS(inner(besov, Poly::one(), Poly::one()), non_hilbert_error);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const NormResult r = norm_checked(besov, random_poly(rng, 6 + 3 * trial));
    CHECK(!r.quadrature_warning);
    CHECK(r.quadrature_shift <= 1e-6);
  }
  // p = 2 norm path coincides with the weighted Dirichlet inner product
  const Poly f = random_poly(rng, 5);
  CHECK(norm(SpaceSpec::besov_dirichlet(2.0, 1.0), f) ==
        doctest::Approx(norm(SpaceSpec::weighted_dirichlet(1.0), f)).epsilon(1e-12));
}

TEST_CASE("besov standing-range flag") {
  CHECK(!SpaceSpec::besov_dirichlet(3.0, 1.5).besov_outside_standard_range());
  CHECK(SpaceSpec::besov_dirichlet(4.0, 0.0).besov_outside_standard_range());
  CHECK(!SpaceSpec::hardy().besov_outside_standard_range());
}

TEST_CASE("kernels") {
  const SpaceSpec hardy = SpaceSpec::hardy();
  for (const cplx z : {cplx(0.0), cplx(0.5, 0.2), cplx(-0.7)})
    CHECK(std::abs(kernel(hardy, cplx(0.0), z) - cplx(1.0)) < 1e-15);

  const SpaceSpec hb = hb_space(Poly{0.5, 0.5});
  CHECK(kernel(hb, cplx(0.0), cplx(0.0)).real() == doctest::Approx(0.75).epsilon(1e-12));
  const cplx l(0.3, 0.1), z(-0.2, 0.4);
  CHECK(std::abs(kernel(hb, l, z) - std::conj(kernel(hb, z, l))) < 1e-13);
  for (const cplx w : {cplx(0.0), cplx(0.6, -0.1), cplx(-0.4, 0.5)})
    CHECK(kernel(hb, w, w).real() >= 0.0);

  CHECK_THROWS_AS(kernel(SpaceSpec::weighted_dirichlet(0.0), cplx(0.0), cplx(0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernel(hardy, cplx(1.0), cplx(0.0)), std::invalid_argument);
}

TEST_CASE("u_mu") {
  const MeasureAtoms delta1{{{cplx(1.0), 1.0}}};
  CHECK(u_mu(delta1, cplx(0.0)) == doctest::Approx(1.0));
  CHECK(u_mu(delta1, cplx(0.5)) == doctest::Approx(3.0));

  const MeasureAtoms half_origin{{{cplx(0.0), 0.5}}};
  CHECK(u_mu(half_origin, cplx(0.5)) == doctest::Approx(0.5 * std::log(4.0)).epsilon(1e-12));
  CHECK_THROWS_AS(u_mu(half_origin, cplx(0.0)), singularity_error);

  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  const MeasureAtoms mixed{{{cplx(1.0), 0.3}, {cplx(0.2, 0.4), 0.8}}};
  for (int i = 0; i < 20; ++i) CHECK(u_mu(mixed, cplx(u(rng), u(rng))) >= 0.0);
}

TEST_CASE("local dirichlet integrals") {
  for (int n = 1; n <= 10; ++n)
    CHECK(local_dirichlet(Poly::monomial(n), cplx(1.0)) == doctest::Approx(double(n)).epsilon(1e-13));
  CHECK(local_dirichlet(Poly{cplx(3.0, -2.0)}, cplx(0.3, 0.4)) == 0.0);
  CHECK(local_dirichlet(Poly::monomial(2), cplx(0.0)) == doctest::Approx(1.0));
}

TEST_CASE("energy identity examples") {
  const MeasureAtoms delta1{{{cplx(1.0), 1.0}}};
  {
    const auto r = energy_identity_check(delta1, Poly::monomial(1));
    CHECK(r.rhs == doctest::Approx(1.0));
    CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-10));
  }
  {
    const auto r = energy_identity_check(delta1, Poly{cplx(2.0, 1.0)});
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.0);
  }
  {
    const auto r = energy_identity_check(delta1, Poly::monomial(2));
    CHECK(r.rhs == doctest::Approx(2.0));
    CHECK(r.relative_gap <= 1e-4);
  }
}

TEST_CASE("energy identity property: random atoms and polynomials") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    MeasureAtoms atoms;
    const int n_atoms = 1 + int(rng() % 8);
    for (int a = 0; a < n_atoms; ++a) {
      const bool circle = u(rng) < 0.5;
      const double angle = 2.0 * kPi * u(rng);
      const double radius = circle ? 1.0 : 0.85 * u(rng);
      atoms.atoms.push_back({std::polar(radius, angle), 0.05 + u(rng)});
    }
    const Poly g = random_poly(rng, 1 + int(rng() % 20));
    const auto r = energy_identity_check(atoms, g);
    CHECK(r.relative_gap <= 1e-10);
    CHECK(!r.quadrature_warning);
  }
}
