#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "susyp/common.hpp"
#include "susyp/errors.hpp"
#include "susyp/hierarchies.hpp"

using namespace susyp;
using doctest::Approx;

TEST_CASE("PIV classification") {
    CHECK(classify(Equation::PIV, 3, -2.5).name == "rational");
    CHECK(classify(Equation::PIV, 3, -2.5).form == "rational:g3(x,-5/2)");
    CHECK(classify(Equation::PIV, 1, -2.5).name == "error-function");
    CHECK(classify(Equation::PIV, 1, 0.3).name == "confluent-hypergeometric");
    CHECK(classify(Equation::PIV, 2, cplx(7, 1)).name == "confluent-hypergeometric");
    CHECK(classify(Equation::PIV, 2, -4.5, std::nullopt, Mixing::from_nu(0.0)).name == "rational");
    CHECK(classify(Equation::PIV, 2, -4.5, std::nullopt, Mixing::from_nu(0.3)).name == "error-function");
    // Deterministic.
    CHECK(classify(Equation::PIV, 2, -0.5).name == classify(Equation::PIV, 2, -0.5).name);
}

TEST_CASE("PV classification") {
    CHECK(classify(Equation::PV, 1, 0.25, 0.0).name == "Hermite");
    CHECK(classify(Equation::PV, 1, 1.25, 2.0).name == "Laguerre");
    CHECK(classify(Equation::PV, 1, 0.25, 1.0).name == "exponential");
    CHECK(classify(Equation::PV, 1, 0.0, 3.0).name == "modified-Bessel");
    CHECK(classify(Equation::PV, 1, 0.4, 0.0).name == "Weber");
    CHECK(classify(Equation::PV, 1, 0.4, 1.0).name == "confluent-hypergeometric");
    CHECK(classify(Equation::PV, 1, cplx(1, 11), 3.0).name == "confluent-hypergeometric");
}

TEST_CASE("closed form values") {
    CHECK(closed_form(catalogue_label("rational:g3(x,-5/2)"), 1.0).real() == Approx(-116.0 / 161).epsilon(1e-15));
    CHECK(closed_form(catalogue_label("rational:g2(x,-9/2)"), 0.0) == cplx(0.0));
    CHECK(closed_form(catalogue_label("Laguerre:w1=1-z^(-1/2)"), 4.0).real() == Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(closed_form(catalogue_label("Weber:w1a"), 1.0), UnimplementedError);
    CHECK_THROWS_AS(catalogue_label("nonsense"), UnimplementedError);
}

TEST_CASE("closed form derivatives match finite differences") {
    double h = 1e-5;
    for (const auto& form : closed_form_catalogue()) {
        if (form.rfind("Weber", 0) == 0) continue;
        HierarchyLabel l = catalogue_label(form);
        double p = l.equation == Equation::PIV ? 0.6 : 1.7;
        auto m = closed_form_jet(l, p), lo = closed_form_jet(l, p - h), hi = closed_form_jet(l, p + h);
        CHECK(std::abs((hi[0] - lo[0]) / (2 * h) - m[1]) < 1e-6 * (1 + std::abs(m[1])));
        CHECK(std::abs((hi[1] - lo[1]) / (2 * h) - m[2]) < 1e-6 * (1 + std::abs(m[2])));
    }
}

TEST_CASE("self-residual gate") {
    for (const char* f : {"rational:g2(x,-9/2)", "rational:g3(x,-5/2)", "error-function:g1(x,-5/2)",
                          "error-function:g2(x,-1/2)", "confluent-hypergeometric:g1(x,eps1)"})
        CHECK(closed_form_self_check(catalogue_label(f)).passes);
    SelfCheck lag = closed_form_self_check(catalogue_label("Laguerre:w1=1-z^(-1/2)"));
    CHECK(lag.passes);
    CHECK(lag.max_residual < 1e-9);
    CHECK(lag.params[1] == Approx(-0.125).epsilon(1e-9));
    CHECK(std::abs(lag.params[3]) < 1e-9);
    CHECK_FALSE(closed_form_self_check(catalogue_label("Weber:w1b")).passes);
}

TEST_CASE("cross-checks against the generator") {
    auto grid = linspace(-5.0, 5.0, 201);
    for (const char* f : {"rational:g2(x,-9/2)", "rational:g3(x,-5/2)", "error-function:g1(x,-5/2)",
                          "error-function:g2(x,-1/2)", "confluent-hypergeometric:g1(x,eps1)"}) {
        CrosscheckReport r = crosscheck(catalogue_label(f), grid, 1e-10);
        CHECK_MESSAGE(r.status == CrosscheckReport::Status::Passed, f, " ", r.reason, " ", r.max_deviation);
    }
    CrosscheckReport w = crosscheck(catalogue_label("Weber:w1a"), grid);
    CHECK(w.status == CrosscheckReport::Status::Skipped);
    CHECK(w.reason.find("definition pending") != std::string::npos);
    CrosscheckReport lag = crosscheck(catalogue_label("Laguerre:w1=1-z^(-1/2)"), grid);
    CHECK(lag.status == CrosscheckReport::Status::Skipped);
    CHECK(lag.reason.find("parameter mismatch") != std::string::npos);
}

TEST_CASE("matched mixing constant for the rational forms") {
    auto r = crosscheck(catalogue_label("rational:g3(x,-5/2)"), linspace(-2.0, 2.0, 21));
    CHECK(std::abs(r.matched_nu) < 1e-12);
}
