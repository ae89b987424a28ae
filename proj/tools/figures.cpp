#include "figures.hpp"

#include <sstream>
#include <stdexcept>

namespace susyp::cli {

namespace {

std::string fmt(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

std::string fmt(cplx v) {
    if (v.imag() == 0.0) return fmt(v.real());
    std::ostringstream s;
    if (v.real() != 0.0) s << v.real() << (v.imag() < 0 ? "" : "+");
    s << v.imag() << "i";
    return s.str();
}

ChainSpec ho(int k, double e, Mixing m) { return {SystemKind::ho(), k, {e, m}, false}; }
ChainSpec ro(double j, int k, cplx e, Mixing m) { return {SystemKind::ro(j), k, {e, m}, true}; }

Curve potential_curve(const std::string& name, const ChainSpec& c, double lo, double hi) {
    Curve cv;
    cv.name = name;
    cv.kind = Curve::Kind::Potential;
    cv.chain = c;
    cv.lo = lo;
    cv.hi = hi;
    cv.n = 1001;
    return cv;
}

Curve piv_curve(const std::string& name, const ChainSpec& c, PIVFamily f, double half) {
    Curve cv;
    cv.name = name;
    cv.kind = Curve::Kind::PIV;
    cv.chain = c;
    cv.piv_family = f;
    cv.lo = -half;
    cv.hi = half;
    cv.n = 2001;
    return cv;
}

Curve pv_curve(const std::string& name, const ChainSpec& c) {
    Curve cv;
    cv.name = name;
    cv.kind = Curve::Kind::PV;
    cv.chain = c;
    cv.pv_family = 1;
    cv.lo = 0.01;
    cv.hi = 25.0;
    cv.n = 2000;
    return cv;
}

Figure piv_lattice(const std::string& id, int k, std::vector<std::pair<double, double>> cfgs) {
    Figure f{id, "HO order-" + std::to_string(k) + " partner potentials and PIV solutions", {}};
    for (auto [e, nu] : cfgs) {
        std::string tag = "eps1=" + fmt(e) + "_nu=" + fmt(nu);
        ChainSpec c = ho(k, e, Mixing::from_nu(nu));
        f.curves.push_back(potential_curve("V_" + tag, c, -5.0, 5.0));
        f.curves.push_back(piv_curve("g_" + tag, c, PIVFamily::I, 5.0));
    }
    return f;
}

std::vector<Figure> build() {
    std::vector<Figure> figs;

    Figure susy1{"susy1", "first-order HO partner, eps=0, nu=0.9", {}, true};
    susy1.curves.push_back(potential_curve("V1", ho(1, 0.0, Mixing::from_nu(0.9)), -5.0, 5.0));
    figs.push_back(susy1);

    Figure potro{"potro", "RO partner potentials, k=1 (j=2) and k=2 (j=5)", {}};
    for (double nu : {-0.59, -0.4, 1.0})
        potro.curves.push_back(
            potential_curve("k1_nu=" + fmt(nu), ro(2.0, 1, 0.5, Mixing::from_nu(nu)), 0.1, 8.0));
    for (double e : {0.0, -2.0, -4.0})
        potro.curves.push_back(
            potential_curve("k2_eps1=" + fmt(e), ro(5.0, 2, e, Mixing::from_nu(1.0)), 0.1, 8.0));
    figs.push_back(potro);

    figs.push_back(piv_lattice("piv-fig1", 1, {{0.25, 0.99}, {0.0, 0.1}, {-1.0, 0.5}, {-4.0, 0.5}}));
    figs.push_back(piv_lattice("piv-fig2", 2, {{0.25, 0.99}, {0.25, 0.5}, {-0.75, 0.5}, {-2.75, 0.5}}));
    figs.push_back(piv_lattice("piv-fig3", 3, {{0.25, 0.99}, {0.25, 0.5}, {-0.75, 0.5}, {-2.75, 0.5}}));

    Figure c1{"piv-complex1", "complex PIV solutions (a,b) = (12,-8) and (-5,-8)", {}};
    c1.curves.push_back(piv_curve("g_ii_k=2_eps1=7", ho(2, 7.0, Mixing::from_lambda_kappa(1, 1)),
                                  PIVFamily::II, 5.0));
    c1.curves.push_back(piv_curve("g_iii_k=1_eps1=2.5", ho(1, 2.5, Mixing::from_lambda_kappa(1, 1)),
                                  PIVFamily::III, 5.0));
    figs.push_back(c1);

    Figure cp{"piv-complex-param", "complex PIV solution (a,b) = (-9/2,-121/2) on |x| <= 10", {}};
    cp.curves.push_back(piv_curve("g_i_k=1_eps1=5", ho(1, 5.0, Mixing::from_lambda_kappa(2, 2)),
                                  PIVFamily::I, 10.0));
    figs.push_back(cp);

    Figure pv1{"pv-fig1", "RO first-order partner and PV solutions, j=1, eps1=1", {}};
    for (double nu : {0.905, 0.913, 1.0, 10.0}) {
        ChainSpec c = ro(1.0, 1, 1.0, Mixing::from_nu(nu));
        pv1.curves.push_back(potential_curve("V_nu=" + fmt(nu), c, 0.1, 6.0));
        pv1.curves.push_back(pv_curve("w_nu=" + fmt(nu), c));
    }
    figs.push_back(pv1);

    Figure pv2{"pv-fig-k2", "second-order PV solutions, nu1=0", {}};
    for (double e : {0.25, -0.75, -1.75, -2.75})
        pv2.curves.push_back(pv_curve("w_j=0_eps1=" + fmt(e), ro(0.0, 2, e, Mixing::from_nu(0.0))));
    for (double j : {1.0, 3.0, 6.0, 10.0})
        pv2.curves.push_back(pv_curve("w_j=" + fmt(j) + "_eps1=0", ro(j, 2, 0.0, Mixing::from_nu(0.0))));
    figs.push_back(pv2);

    Figure pc1{"pv-complex1", "complex PV solutions", {}};
    pc1.curves.push_back(pv_curve("w_j=3_eps1=0_nu=100i", ro(3.0, 1, 0.0, Mixing::from_nu({0, 100}))));
    pc1.curves.push_back(pv_curve("w_j=2_eps1=2_nu=i", ro(2.0, 1, 2.0, Mixing::from_nu({0, 1}))));
    figs.push_back(pc1);

    Figure pc2{"pv-complex2", "complex PV solutions with complex eps1", {}};
    pc2.curves.push_back(
        pv_curve("w_j=3_eps1=" + fmt(cplx(1, 11)) + "_nu=100i", ro(3.0, 1, {1, 11}, Mixing::from_nu({0, 100}))));
    pc2.curves.push_back(pv_curve("w_j=1_eps1=" + fmt(cplx(1, -0.6)) + "_nu=" + fmt(cplx(1, -1)),
                                  ro(1.0, 1, {1, -0.6}, Mixing::from_nu({1, -1}))));
    figs.push_back(pc2);
    return figs;
}

}  // namespace

const std::vector<Figure>& figure_registry() {
    static const std::vector<Figure> figs = build();
    return figs;
}

const Figure& find_figure(const std::string& id) {
    for (const auto& f : figure_registry())
        if (f.id == id) return f;
    throw std::out_of_range("unknown figure id '" + id + "'");
}

}  // namespace susyp::cli
