#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "susyp/errors.hpp"
#include "susyp/spectral.hpp"

using namespace susyp;
using doctest::Approx;

TEST_CASE("2x2 eigenvalues") {
    DiscretizedHamiltonian h{{0, 1}, {2, 2}, {-1}};
    auto ev = eigenvalues(h, 2);
    CHECK(ev[0] == Approx(1.0).epsilon(1e-15));
    CHECK(ev[1] == Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(eigenvalues(h, 3), DomainError);
}

TEST_CASE("discretization preconditions") {
    auto v = [](double x) { return x; };
    CHECK_THROWS_AS(discretize(v, 0.0, 1.0, 1), DomainError);
    CHECK_THROWS_AS(discretize(v, 1.0, 0.0, 10), DomainError);
}

TEST_CASE("harmonic oscillator spectrum") {
    auto v = [](double x) { return x * x / 2; };
    auto ev = eigenvalues(discretize(v, -12.0, 12.0, 2000), 6);
    CHECK(ev[0] == Approx(0.5).epsilon(5e-5 / 0.5));
    for (int n = 0; n < 6; ++n) CHECK(std::abs(ev[n] - (n + 0.5)) < 1e-3);

    auto shifted = eigenvalues(discretize([](double x) { return x * x / 2 + 1; }, -12.0, 12.0, 2000), 6);
    for (int n = 0; n < 6; ++n) CHECK(shifted[n] - ev[n] == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("radial oscillator spectrum") {
    auto v = [](double x) { return potential(SystemKind::ro(1.0), x, 0); };
    auto ev = eigenvalues(discretize(v, 1e-3, 14.0, 2000), 3);
    CHECK(std::abs(ev[0] - 1.25) < 5e-4);
    CHECK(std::abs(ev[1] - 2.25) < 5e-4);
}

TEST_CASE("second-order convergence on the harmonic oscillator") {
    auto v = [](double x) { return x * x / 2; };
    double d1 = eigenvalues(discretize(v, -12.0, 12.0, 399), 3)[2] - 2.5;
    double d2 = eigenvalues(discretize(v, -12.0, 12.0, 799), 3)[2] - 2.5;
    CHECK(d1 / d2 == Approx(4.0).epsilon(0.05));
}

TEST_CASE("SUSY partner spectra") {
    ChainSpec one{SystemKind::ho(), 1, {0.0, Mixing::from_nu(0.9)}, false};
    SpectrumReport r = spectrum_check(one);
    CHECK(r.computed.size() == 7);
    CHECK(r.max_deviation() < 5e-3);
    CHECK(r.predicted[0] == 0.0);
    CHECK(r.predicted[1] == 0.5);

    ChainSpec two{SystemKind::ho(), 2, {-1.0, Mixing::from_nu(0.5)}, false};
    SpectrumReport r2 = spectrum_check(two, {0.0, 0.0, 1000, 2});
    CHECK(std::abs(r2.computed[0] + 2.0) < 5e-3);
    CHECK(std::abs(r2.computed[1] + 1.0) < 5e-3);

    ChainSpec ro{SystemKind::ro(1.0), 1, {1.0, Mixing::from_nu(1.0)}, false};
    SpectrumReport r3 = spectrum_check(ro, {0.0, 0.0, 2000, 2});
    CHECK(r3.lo == 1e-3);
    CHECK(std::abs(r3.computed[0] - 1.0) < 5e-3);
    CHECK(std::abs(r3.computed[1] - 1.25) < 5e-3);
}

TEST_CASE("Richardson ratios") {
    ChainSpec one{SystemKind::ho(), 1, {0.0, Mixing::from_nu(0.9)}, false};
    for (double r : convergence_ratios(one, {0.0, 0.0, 500, 2})) CHECK(r == Approx(4.0).epsilon(0.05));
}
