#include <cmath>

#include "doctest.h"
#include "gaussmix/entanglement.hpp"
#include "gaussmix/errors.hpp"
#include "gaussmix/evolution.hpp"
#include "support.hpp"

using namespace gaussmix;
using gaussmix::testing::Draws;
using gaussmix::testing::kPi;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("coupling spec") {
  CHECK(CouplingSpec::from_tau(0.3).tau() == 0.3);
  CHECK_THROWS_AS(CouplingSpec::from_tau(-0.01), DomainError);
  CHECK_THROWS_AS(CouplingSpec::from_tau(1.01), DomainError);
  CHECK_FALSE(CouplingSpec::from_tau(0.0).interacting());
  CHECK_FALSE(CouplingSpec::from_tau(1.0).interacting());
  CHECK(CouplingSpec::from_tau(0.5).interacting());
  CHECK(CouplingSpec::from_rate(1.0, kPi / 4).tau() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(CouplingSpec::from_rate(2.0, 0.0).tau() == 1.0);
  CHECK(CouplingSpec::from_rate(1.0, 3 * kPi / 2).tau() < 1e-30);
}

TEST_CASE("identical inputs come out as two uncorrelated copies") {
  Draws draws(21);
  for (int i = 0; i < 200; ++i) {
    const SingleModeState s = state_from_params(draws.params());
    const TwoModeState t = mix(s, s, CouplingSpec::from_tau(draws.tau()));
    CHECK(t.sigma12().isZero(0.0));
    CHECK(max_abs(t.sigma1() - s.cm) < 1e-14 * max_abs(s.cm));
    CHECK(max_abs(t.sigma2() - s.cm) < 1e-14 * max_abs(s.cm));
    CHECK(max_abs(reduce(t, 1).cm - s.cm) < 1e-14 * max_abs(s.cm));
  }
}

TEST_CASE("tau = 1 is the identity") {
  const SingleModeState s1 = state_from_params({.alpha_re = 0.4, .r = 0.3, .psi = 1.0, .n_th = 0.2});
  const SingleModeState s2 = state_from_params({.alpha_im = -1.0, .r = 0.9, .psi = 2.0, .n_th = 0.7});
  const TwoModeState t = mix(s1, s2, CouplingSpec::from_tau(1.0));
  CHECK(t.sigma1() == s1.cm);
  CHECK(t.sigma2() == s2.cm);
  CHECK(t.sigma12().isZero(0.0));
  const SingleModeState back = reduce(t, 2);
  CHECK(back.cm == s2.cm);
  CHECK(back.mean == s2.mean);
}

TEST_CASE("balanced mixing reduces to the average") {
  const SingleModeState s1 = state_from_params({.r = 0.5, .n_th = 0.2});
  const SingleModeState s2 = state_from_params({.r = 0.7, .psi = 1.1, .n_th = 0.3});
  const SingleModeState out = reduce(mix(s1, s2, CouplingSpec::from_tau(0.5)), 1);
  CHECK(max_abs(out.cm - 0.5 * (s1.cm + s2.cm)) < 1e-15);
}

TEST_CASE("reduce rejects bad mode index") {
  const TwoModeState t;
  CHECK_THROWS_AS(reduce(t, 0), InvalidParameter);
  CHECK_THROWS_AS(reduce(t, 3), InvalidParameter);
}

TEST_CASE("opposite squeezed vacua at tau 1/2 give a two-mode squeezed state") {
  for (double r : {0.1, 0.5, 1.0}) {
    const SingleModeState s1 = state_from_params({.r = r, .psi = 0.0});
    const SingleModeState s2 = state_from_params({.r = r, .psi = kPi});
    const TwoModeState t = mix(s1, s2, CouplingSpec::from_tau(0.5));
    CHECK(t.sigma1().isApprox(0.5 * std::cosh(2 * r) * Mat2::Identity(), 1e-14));
    CHECK(t.sigma12()(0, 0) == doctest::Approx(-0.5 * std::sinh(2 * r)).epsilon(1e-14));
    CHECK(t.sigma12()(1, 1) == doctest::Approx(0.5 * std::sinh(2 * r)).epsilon(1e-14));
    const auto [lo, hi] = gaussmix::testing::symplectic_oracle(partial_transpose(t));
    CHECK(lo == doctest::Approx(0.5 * std::exp(-2 * r)).epsilon(1e-12));
    CHECK(hi == doctest::Approx(0.5 * std::exp(2 * r)).epsilon(1e-12));
  }
}

TEST_CASE("mix equals S diag(s1, s2) S^T with a symplectic S") {
  Draws draws(22);
  const Mat4 omega = symplectic_form();
  for (int i = 0; i < 300; ++i) {
    const double tau = draws.uniform(0.0, 1.0);
    const Mat4 s = exchange_matrix(tau);
    CHECK(max_abs(s * omega * s.transpose() - omega) < 1e-14);

    const SingleModeState a = state_from_params(draws.params(2.0, 2.0, 2.0));
    const SingleModeState b = state_from_params(draws.params(2.0, 2.0, 2.0));
    Mat4 in = Mat4::Zero();
    in.block<2, 2>(0, 0) = a.cm;
    in.block<2, 2>(2, 2) = b.cm;
    Vec4 mean;
    mean << a.mean, b.mean;
    const TwoModeState t = mix(a, b, CouplingSpec::from_tau(tau));
    const Mat4 expected = s * in * s.transpose();
    CHECK(max_abs(t.cm - expected) < 1e-12 * max_abs(expected));
    CHECK(max_abs(t.mean - s * mean) < 1e-13);
    CHECK(t.cm.trace() == doctest::Approx(a.cm.trace() + b.cm.trace()).epsilon(1e-13));
    CHECK(max_abs(t.cm - t.cm.transpose()) == 0.0);
    CHECK(validate_physical(t.cm, 2));
  }
}

TEST_CASE("output determinant of pure inputs at tau in {0, 1}") {
  const SingleModeState a = state_from_params({.r = 0.4, .psi = 0.3});
  const SingleModeState b = state_from_params({.r = 1.2, .psi = 2.3});
  for (double tau : {0.0, 1.0}) {
    const TwoModeState t = mix(a, b, CouplingSpec::from_tau(tau));
    CHECK(t.cm.determinant() == doctest::Approx(a.cm.determinant() * b.cm.determinant()).epsilon(1e-12));
  }
}

TEST_CASE("swapping inputs and tau <-> 1 - tau flips the sign of the correlations") {
  Draws draws(23);
  for (int i = 0; i < 200; ++i) {
    const SingleModeState a = state_from_params(draws.params(2.0, 2.0, 2.0));
    const SingleModeState b = state_from_params(draws.params(2.0, 2.0, 2.0));
    const double tau = draws.tau();
    const TwoModeState x = mix(a, b, CouplingSpec::from_tau(tau));
    const TwoModeState y = mix(b, a, CouplingSpec::from_tau(1.0 - tau));
    const double scale = max_abs(x.cm);
    CHECK(max_abs(x.sigma1() - y.sigma1()) < 1e-13 * scale);
    CHECK(max_abs(x.sigma2() - y.sigma2()) < 1e-13 * scale);
    CHECK(max_abs(x.sigma12() + y.sigma12()) < 1e-13 * scale);
    CHECK(max_abs(x.mean.head<2>() - y.mean.head<2>()) < 1e-13);
    CHECK(max_abs(x.mean.tail<2>() + y.mean.tail<2>()) < 1e-13);
    CHECK(is_entangled(x).lambda_tilde == doctest::Approx(is_entangled(y).lambda_tilde).epsilon(1e-10));
  }
}
