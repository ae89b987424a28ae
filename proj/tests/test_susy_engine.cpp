#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "susyp/errors.hpp"
#include "susyp/susy_engine.hpp"

using namespace susyp;
using doctest::Approx;

namespace {

ChainSpec ho_chain(int k, cplx e, cplx nu) { return {SystemKind::ho(), k, {e, Mixing::from_nu(nu)}, false}; }
ChainSpec ro_chain(double j, int k, cplx e, cplx nu) {
    return {SystemKind::ro(j), k, {e, Mixing::from_nu(nu)}, false};
}

// First-order intertwiner A+ f = -f' + (u'/u) f applied to a jet (value and two derivatives).
ScalarJet apply_first_order(const Jet& u, const std::array<cplx, 4>& f) {
    cplx a = u[1] / u[0];
    cplx ap = u[2] / u[0] - a * a;
    cplx app = u[3] / u[0] - 3.0 * a * (u[2] / u[0]) + 2.0 * a * a * a;
    return {-f[1] + a * f[0], -f[2] + ap * f[0] + a * f[1], -f[3] + app * f[0] + 2.0 * ap * f[1] + a * f[2]};
}

}  // namespace

TEST_CASE("determinant") {
    std::vector<cplx> m = {2, -1, 0, -1, 2, -1, 0, -1, 2};
    CHECK(determinant(m, 3).real() == Approx(4.0).epsilon(1e-15));
    CHECK_THROWS_AS(determinant({1, 2, 3}, 2), DimensionError);
}

TEST_CASE("Wronskian of one and two Gaussian states") {
    double x = 0.6, g = std::exp(-x * x / 2);
    Jet a{x, {g, -x * g, (x * x - 1) * g, (3 * x - x * x * x) * g}};
    WronskianJet w1 = wronskian_jet({a}, 1);
    CHECK(std::abs(w1.w[0] - a[0]) == 0.0);
    CHECK(std::abs(w1.w[1] - a[1]) == 0.0);

    Jet b = jet_extend(SystemKind::ho(), 1.5, {x * g, (1 - x * x) * g}, x, 4);
    WronskianJet w2 = wronskian_jet({jet_extend(SystemKind::ho(), 0.5, {g, -x * g}, x, 4), b}, 1);
    CHECK(w2.w[0].real() == Approx(std::exp(-x * x)).epsilon(1e-14));
    CHECK(w2.w[1].real() == Approx(-2 * x * std::exp(-x * x)).epsilon(1e-13));
}

TEST_CASE("Wronskian derivative matches central differences") {
    ChainSpec c = ho_chain(3, -0.75, 0.5);
    double h = 1e-5;
    for (double x : {-1.2, 0.3, 2.0}) {
        auto at = [&](double t) { return wronskian_jet(seed_family(c, t), 3); };
        WronskianJet mid = at(x);
        for (int m = 1; m <= 3; ++m) {
            cplx fd = (at(x + h).w[m - 1] - at(x - h).w[m - 1]) / (2 * h);
            CHECK(std::abs(fd - mid.w[m]) <= 1e-7 * (std::abs(mid.w[m]) + std::abs(mid.w[0])));
        }
    }
}

TEST_CASE("seed family") {
    ChainSpec one = ho_chain(1, 0.2, 0.3);
    auto f1 = seed_family(one, 0.7);
    REQUIRE(f1.size() == 1);
    CHECK(std::abs(f1[0][0] - seed_eval(one.system, one.seed, 0.7).first) < 1e-15);

    ChainSpec c = ho_chain(3, -2.5, 0.5);
    auto f = seed_family(c, 1.0);
    REQUIRE(f.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(f[i].order() >= 5);
        cplx e = c.epsilon(i + 1);
        cplx res = f[i][2] - 2.0 * (0.5 - e) * f[i][0];
        CHECK(std::abs(res) < 1e-9 * (1 + std::abs(f[i][2])));
    }
    CHECK_THROWS_AS(seed_family(ho_chain(7, 0.1, 0.1), 0.0), DimensionError);
}

TEST_CASE("physical top state maps down the ladder") {
    // eps1 = 5/2 with nu = 0 is (up to scale) the n = 2 eigenstate; a- gives the n = 1 state.
    ChainSpec c = ho_chain(2, 2.5, 0.0);
    double x = 0.8;
    auto f = seed_family(c, x);
    CHECK((f[1][1] / f[1][0]).real() == Approx(1.0 / x - x).epsilon(1e-12));
}

TEST_CASE("degenerate chain is detected or regularized") {
    // The HO ground state at eps1 = 1/2 is annihilated by a-.
    ChainSpec c = ho_chain(2, 0.5, 0.0);
    CHECK_THROWS_AS(seed_family(c, 0.4), ZeroSeedError);
    c.regularize_degenerate = true;
    auto f = seed_family(c, 0.4);
    CHECK(std::abs(f[1][0]) > 0.0);
}

TEST_CASE("first-order partner potentials") {
    for (double x : {-2.0, 0.0, 1.3})
        CHECK(partner_potential(ho_chain(1, 0.5, 0.0), x).real() == Approx(x * x / 2 + 1).epsilon(1e-13));
    // Reference values from mpmath (V0 - (ln W)'').
    CHECK(partner_potential(ho_chain(1, 0.0, 0.9), 0.7).real() ==
          Approx(0.029621726018334120914).epsilon(1e-11));
    CHECK(partner_potential(ho_chain(2, 0.25, 0.5), 0.7).real() ==
          Approx(0.10929215482936746517).epsilon(1e-11));
    CHECK(partner_potential(ro_chain(1.0, 1, 1.0, 1.0), 1.3).real() ==
          Approx(1.2004472576481473537).epsilon(1e-11));
}

TEST_CASE("Riccati path agrees with the Wronskian path") {
    for (const ChainSpec& c : {ho_chain(2, 0.25, 0.5), ho_chain(3, -0.75, 0.5), ro_chain(1.0, 2, 1.0, 1.0)}) {
        for (double x : default_grid(c.system, 61)) {
            cplx w = partner_potential(c, x), r = riccati_potential(c, x);
            CHECK(std::abs(w - r) <= 1e-9 * std::max(1.0, std::abs(w)));
        }
    }
}

TEST_CASE("Riccati chain members") {
    ChainSpec one = ho_chain(1, -0.3, 0.4);
    double x = 0.9;
    auto [u, up] = seed_eval(one.system, one.seed, x);
    CHECK(std::abs(riccati_chain(one, x)[0] - up / u) < 1e-14);

    // alpha_2' + alpha_2^2 = 2(V_1 - eps_2).
    ChainSpec two = ho_chain(2, 0.25, 0.5);
    ChainSpec first = ho_chain(1, 0.25, 0.5);
    double h = 1e-5;
    for (double t : {-1.5, 0.2, 1.7}) {
        cplx a2 = riccati_chain(two, t)[1];
        cplx d = (riccati_chain(two, t + h)[1] - riccati_chain(two, t - h)[1]) / (2 * h);
        cplx rhs = 2.0 * (partner_potential(first, t) - two.epsilon(2));
        CHECK(std::abs(d + a2 * a2 - rhs) < 1e-8);
    }
}

TEST_CASE("k = 1 eigenfunctions") {
    ChainSpec c = ho_chain(1, 0.0, 0.9);
    for (double x : {-1.0, 0.5, 2.0}) {
        cplx u = seed_eval(c.system, c.seed, x).first;
        CHECK(std::abs(eigenfunction(c, EigenSelector::new_level(1), x) * u - 1.0) < 1e-12);
        ScalarJet psi = eigenfunction_jet(c, EigenSelector::mapped(0), x);
        CHECK(schrodinger_residual(psi, partner_potential(c, x), 0.5) < 1e-8);
    }
    CHECK(eigen_energy(c, EigenSelector::mapped(3)).real() == 3.5);
    CHECK(eigen_energy(c, EigenSelector::new_level(1)).real() == 0.0);
}

TEST_CASE("k = 2 new level is the Wronskian ratio") {
    ChainSpec c = ho_chain(2, 0.25, 0.5);
    cplx ref = 0.0;
    for (double x : {-0.8, 0.4, 1.9}) {
        auto f = seed_family(c, x);
        cplx ratio = f[0][0] / wronskian_jet(f, 0).w[0];
        cplx psi = eigenfunction(c, EigenSelector::new_level(2), x);
        if (ref == 0.0) ref = psi / ratio;
        CHECK(std::abs(psi / ratio - ref) < 1e-12 * std::abs(ref));
    }
}

TEST_CASE("Crum form agrees with sequential first-order intertwiners") {
    // Mapped level n = 1: A2+ A1+ psi_1 against W(u1..uk, psi_1)/W(u1..uk), k = 1, 2.
    for (int k : {1, 2}) {
        ChainSpec c = ho_chain(k, 0.25, 0.5);
        SystemKind sys = c.system;
        cplx ref = 0.0;
        for (double x : {0.7, 1.3, -0.4}) {
            Jet u1 = jet_extend(sys, c.epsilon(1), seed_eval(sys, c.seed, x), x, 5);
            Jet f = base_eigenstate(sys, 1, x, 5);
            ScalarJet p = apply_first_order(u1, {f[0], f[1], f[2], f[3]});
            cplx val = p[0];
            if (k == 2) {
                Jet u2 = jet_extend(sys, c.epsilon(2), annihilate(sys, u1), x, 5);
                ScalarJet v = apply_first_order(u1, {u2[0], u2[1], u2[2], u2[3]});
                val = -p[1] + (v[1] / v[0]) * p[0];
            }
            cplx crum = eigenfunction(c, EigenSelector::mapped(1), x);
            if (ref == 0.0) ref = val / crum;
            CHECK(std::abs(val / crum - ref) < 1e-12 * std::abs(ref));
        }
    }
}

TEST_CASE("predicted spectra") {
    SpectrumPrediction p1 = predicted_spectrum(ho_chain(1, 0.0, 0.9), 3);
    std::vector<double> want1 = {0.0, 0.5, 1.5, 2.5};
    CHECK(p1.lowest(4) == want1);
    SpectrumPrediction p2 = predicted_spectrum(ho_chain(2, -1.0, 0.5), 2);
    std::vector<double> want2 = {-2.0, -1.0, 0.5, 1.5};
    CHECK(p2.lowest(4) == want2);
    SpectrumPrediction p3 = predicted_spectrum(ro_chain(1.0, 1, 1.0, 1.0), 2);
    std::vector<double> want3 = {1.0, 1.25, 2.25};
    CHECK(p3.lowest(3) == want3);
    CHECK(p3.infinite_ladder_base == 1.25);
    CHECK_THROWS_AS(predicted_spectrum({SystemKind::ro(1.0), 1, {cplx(1, -0.6), Mixing::from_nu(1.0)}, false}),
                    ValidationError);
}

TEST_CASE("singular Wronskian raises NodeError") {
    WronskianJet w{0.0, {cplx(1e-20), cplx(1.0)}, 1.0};
    CHECK(w.singular());
    // nu = -1 puts the HO seed's zero at infinity; far enough out W/scale underflows the test.
    ChainSpec c = ho_chain(1, 0.5, 0.0);
    CHECK_NOTHROW(evaluate_chain(c, 3.0));
}
