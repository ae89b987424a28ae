#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "susyp/errors.hpp"
#include "susyp/oscillators.hpp"

using namespace susyp;
using doctest::Approx;

namespace {

// Plain term-by-term sum, real arguments only.
double series_1f1(double a, double b, double y) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 400; ++n) {
        term *= (a + n) / (b + n) * y / (n + 1);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

SeedParams seed(cplx e, cplx nu) { return {e, Mixing::from_nu(nu)}; }

}  // namespace

TEST_CASE("potential values") {
    CHECK(potential(SystemKind::ho(), 2.0, 0) == 2.0);
    for (double x : {-3.0, 0.0, 1.7}) CHECK(potential(SystemKind::ho(), x, 2) == 1.0);
    CHECK(potential(SystemKind::ro(1.0), 2.0, 0) == Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(potential(SystemKind::ro(1.0), 0.0, 0), DomainError);
}

TEST_CASE("RO potential derivatives match finite differences") {
    SystemKind ro = SystemKind::ro(2.0);
    double x = 1.3, h = 1e-4;
    for (int m = 0; m < 3; ++m) {
        double fd = (potential(ro, x + h, m) - potential(ro, x - h, m)) / (2 * h);
        CHECK(potential(ro, x, m + 1) == Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("HO seed at eps = 1/2, nu = 0 is the Gaussian") {
    for (double x : {-1.5, 0.0, 0.8, 2.2}) {
        auto [u, up] = seed_eval(SystemKind::ho(), seed(0.5, 0.0), x);
        CHECK(u.real() == Approx(std::exp(-x * x / 2)).epsilon(1e-14));
        CHECK(up.real() == Approx(-x * std::exp(-x * x / 2)).epsilon(1e-13).scale(1e-16));
    }
}

TEST_CASE("HO seed parity") {
    for (double x : {0.4, 1.9}) {
        auto a = seed_eval(SystemKind::ho(), seed(0.1, 0.6), -x);
        auto b = seed_eval(SystemKind::ho(), seed(0.1, -0.6), x);
        CHECK(std::abs(a.first - b.first) < 1e-13);
        CHECK(std::abs(a.second + b.second) < 1e-13);
    }
}

TEST_CASE("HO seed against direct series summation") {
    double x = 1.0, e = 0.0, nu = 0.9;
    double a1 = (1 - 2 * e) / 4, a2 = (3 - 2 * e) / 4;
    double c = 2 * nu * std::tgamma(a2) / std::tgamma(a1);
    double want = std::exp(-x * x / 2) * (series_1f1(a1, 0.5, x * x) + c * x * series_1f1(a2, 1.5, x * x));
    CHECK(seed_eval(SystemKind::ho(), seed(e, nu), x).first.real() == Approx(want).epsilon(1e-12));
}

TEST_CASE("seed values against reference points") {
    auto ho = seed_eval(SystemKind::ho(), seed(0.25, 0.5), 1.1);
    CHECK(ho.first.real() == Approx(1.0243920528011769018).epsilon(1e-13));
    CHECK(ho.second.real() == Approx(0.080467653591696935674).epsilon(1e-12));
    auto ro = seed_eval(SystemKind::ro(1.0), seed(1.0, 1.0), 1.3);
    CHECK(ro.first.real() == Approx(2.4812501424319850688).epsilon(1e-13));
    CHECK(ro.second.real() == Approx(0.14496180208577933319).epsilon(1e-12));
}

TEST_CASE("lambda-kappa mixing reproduces nu mixing") {
    SeedParams p = seed(0.2, 0.4);
    cplx c = mixing_coefficient(SystemKind::ho(), p);
    SeedParams q{0.2, Mixing::from_lambda_kappa(c.real(), 0.0)};
    auto a = seed_eval(SystemKind::ho(), p, 0.9);
    auto b = seed_eval(SystemKind::ho(), q, 0.9);
    CHECK(std::abs(a.first - b.first) < 1e-14);
}

TEST_CASE("jet extension") {
    double x = 0.8;
    double g = std::exp(-x * x / 2);
    Jet j = jet_extend(SystemKind::ho(), 0.5, {g, -x * g}, x, 2);
    CHECK(j[2].real() == Approx((x * x - 1) * g).epsilon(1e-14));

    SystemKind sys = SystemKind::ho();
    SeedParams p = seed(-0.75, 0.5);
    Jet four = jet_extend(sys, p.epsilon, seed_eval(sys, p, x), x, 4);
    Jet two = jet_extend(sys, p.epsilon, seed_eval(sys, p, x), x, 2);
    CHECK(std::abs(four[2] - two[2]) == 0.0);
    // u'''' from differentiating u'' = 2(V - eps)u twice.
    cplx u = four[0], up = four[1], upp = four[2];
    cplx d4 = 2.0 * (1.0 * u + 2.0 * x * up + (x * x / 2 - p.epsilon) * upp);
    CHECK(std::abs(four[4] - d4) < 1e-12 * std::abs(d4));
}

TEST_CASE("jet derivatives match finite differences") {
    for (SystemKind sys : {SystemKind::ho(), SystemKind::ro(1.0)}) {
        SeedParams p = seed(sys.is_ro() ? cplx(0.5) : cplx(0.1), 0.7);
        double h = 1e-4;
        for (double x : {0.6, 1.4, 2.3}) {
            Jet c = jet_extend(sys, p.epsilon, seed_eval(sys, p, x), x, 5);
            Jet l = jet_extend(sys, p.epsilon, seed_eval(sys, p, x - h), x - h, 5);
            Jet r = jet_extend(sys, p.epsilon, seed_eval(sys, p, x + h), x + h, 5);
            for (int m = 1; m <= 5; ++m) {
                cplx fd = (r[m - 1] - l[m - 1]) / (2 * h);
                CHECK(std::abs(fd - c[m]) <= 1e-6 * (1 + std::abs(c[m])));
            }
        }
    }
}

TEST_CASE("HO ladder operators on eigenstates") {
    double x = 0.9, g = std::exp(-x * x / 2);
    Jet ground = jet_extend(SystemKind::ho(), 0.5, {g, -x * g}, x, 3);
    auto zero = annihilate(SystemKind::ho(), ground);
    CHECK(std::abs(zero.first) < 1e-15);
    CHECK(std::abs(zero.second) < 1e-15);

    Jet first = jet_extend(SystemKind::ho(), 1.5, {x * g, (1 - x * x) * g}, x, 3);
    auto low = annihilate(SystemKind::ho(), first);
    // Proportional to the Gaussian: the log-derivative is -x.
    CHECK((low.second / low.first).real() == Approx(-x).epsilon(1e-14));
}

TEST_CASE("RO ladder output solves the shifted equation") {
    SystemKind sys = SystemKind::ro(2.0);
    SeedParams p = seed(0.4, 0.8);
    for (int i = 0; i < 20; ++i) {
        double x = 0.3 + 0.25 * i;
        Jet j = jet_extend(sys, p.epsilon, seed_eval(sys, p, x), x, 4);
        Pair down = annihilate(sys, j);
        // Second derivative of the lowered pair from its own jet, compared against the ODE.
        Jet dj = jet_extend(sys, p.epsilon - 1.0, down, x, 2);
        double h = 1e-5;
        Jet jl = jet_extend(sys, p.epsilon, seed_eval(sys, p, x - h), x - h, 4);
        Jet jr = jet_extend(sys, p.epsilon, seed_eval(sys, p, x + h), x + h, 4);
        cplx fd = (annihilate(sys, jr).second - annihilate(sys, jl).second) / (2 * h);
        CHECK(std::abs(fd - dj[2]) <= 1e-6 * (1 + std::abs(dj[2])));
        Pair up = create(sys, j);
        Jet uj = jet_extend(sys, p.epsilon + 1.0, up, x, 2);
        cplx fdu = (create(sys, jr).second - create(sys, jl).second) / (2 * h);
        CHECK(std::abs(fdu - uj[2]) <= 1e-6 * (1 + std::abs(uj[2])));
    }
}

TEST_CASE("nodeless validation rules") {
    CHECK(validate_nodeless(SystemKind::ho(), seed(0.25, 0.99), 1).accepted());
    Verdict hi = validate_nodeless(SystemKind::ho(), seed(0.7, 0.5), 1);
    CHECK(hi.status == Verdict::Status::Reject);
    CHECK(hi.reason.find("1/2") != std::string::npos);
    CHECK(validate_nodeless(SystemKind::ho(), seed(0.0, 1.5), 1).status == Verdict::Status::Reject);

    // RO bound -Gamma(b1)/Gamma(a1) = 0.904006 for j = 1, eps = 1.
    CHECK(validate_nodeless(SystemKind::ro(1.0), seed(1.0, 0.905), 1).accepted());
    CHECK(validate_nodeless(SystemKind::ro(1.0), seed(1.0, 0.903), 1).status == Verdict::Status::Reject);
    CHECK(validate_nodeless(SystemKind::ro(1.0), seed(1.3, 1.0), 1).status == Verdict::Status::Reject);

    Verdict cx = validate_nodeless(SystemKind::ho(), {7.0, Mixing::from_lambda_kappa(1, 1)}, 2);
    CHECK(cx.accepted());
    CHECK(cx.pole_scan_required);
}

TEST_CASE("RO ground state and lower solution energies") {
    double j = 1.0;
    for (double x : {0.5, 1.5, 3.0}) {
        Jet g = jet_extend(SystemKind::ro(j), SystemKind::ro(j).ground_energy(), ro_ground_state(j, x), x, 2);
        double h = 1e-5;
        cplx fd = (ro_ground_state(j, x + h).second - ro_ground_state(j, x - h).second) / (2 * h);
        CHECK(std::abs(fd - g[2]) < 1e-7);
        Jet l = jet_extend(SystemKind::ro(j), 1.0 - SystemKind::ro(j).ground_energy(), ro_lower_solution(j, x), x, 2);
        cplx fdl = (ro_lower_solution(j, x + h).second - ro_lower_solution(j, x - h).second) / (2 * h);
        CHECK(std::abs(fdl - l[2]) < 1e-6 * (1 + std::abs(l[2])));
    }
}
