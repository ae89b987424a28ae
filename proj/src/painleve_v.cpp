#include "susyp/painleve_v.hpp"

#include <cmath>
#include <limits>

#include "susyp/errors.hpp"

namespace susyp {

PVParams pv_params(int family, double j, cplx e, int k) {
    double kk = k;
    auto sq = [](cplx v) { return v * v; };
    switch (family) {
        case 1:
            return {sq(2 * j + 4.0 * e + 3.0) / 32.0, -sq(2 * j - 4.0 * e + 4 * kk - 1.0) / 32.0,
                    (-2 * j + 2 * kk - 3) / 4, -0.125};
        case 2:
            return {sq(2 * j + 4.0 * e - 4 * kk + 3.0) / 32.0, -sq(2 * j - 4.0 * e - 1.0) / 32.0,
                    -(2 * j + 2 * kk + 3) / 4, -0.125};
        case 3:
            return {sq(2 * j - 4.0 * e + 4 * kk - 1.0) / 32.0, -sq(2 * j + 4.0 * e + 3.0) / 32.0,
                    (2 * j - 2 * kk - 1) / 4, -0.125};
        case 4:
            return {sq(2 * j - 4.0 * e - 1.0) / 32.0, -sq(2 * j + 4.0 * e - 4 * kk + 3.0) / 32.0,
                    (2 * j + 2 * kk - 1) / 4, -0.125};
        case 5:
            return {kk * kk / 2, -(2 * j + 1) * (2 * j + 1) / 8, (2.0 * e - kk) / 2.0, -0.125};
        case 6:
            return {(2 * j + 1) * (2 * j + 1) / 8, -kk * kk / 2, (kk - 2.0 * e - 2.0) / 2.0, -0.125};
        default:
            throw ValidationError("PV family must be in 1..6 (got " + std::to_string(family) + ")");
    }
}

PVParams pv_first_order_params(double j, cplx e) {
    return {(2 * j + 4.0 * e + 3.0) * (2 * j + 4.0 * e + 3.0) / 32.0,
            -(2 * j - 4.0 * e + 3.0) * (2 * j - 4.0 * e + 3.0) / 32.0, -(2 * j + 1) / 4, -0.125};
}

std::pair<PVState, PVState> pv_family_pair(int family) {
    switch (family) {
        case 1: return {PVState::C, PVState::D};
        case 2: return {PVState::A, PVState::D};
        case 3: return {PVState::A, PVState::B};
        case 4: return {PVState::B, PVState::C};
        case 5: return {PVState::B, PVState::D};
        case 6: return {PVState::A, PVState::C};
        default:
            throw ValidationError("PV family must be in 1..6 (got " + std::to_string(family) + ")");
    }
}

cplx pv_state_energy(const ChainSpec& chain, PVState s) {
    double e0 = chain.system.ground_energy();
    switch (s) {
        case PVState::A: return chain.epsilon(1) + 1.0;
        case PVState::B: return 1.0 - e0;
        case PVState::C: return chain.epsilon(chain.k);
        case PVState::D: return e0;
    }
    return 0.0;
}

PVParams pv_params_from_energies(cplx e1, cplx e2, cplx e3, cplx e4) {
    return {(e1 - e2) * (e1 - e2) / 2.0, -(e3 - e4) * (e3 - e4) / 2.0,
            (e1 + e2 - e3 - e4 - 1.0) / 2.0, -0.125};
}

namespace {

ScalarJet state_jet(const ChainSpec& chain, const ChainEval& ev, PVState s) {
    const SystemKind& sys = chain.system;
    double x = ev.x;
    int order = chain.k + 3;
    cplx e = pv_state_energy(chain, s);
    switch (s) {
        case PVState::A:
            return transform_state(ev, jet_extend(sys, e, create(sys, ev.jets[0]), x, order));
        case PVState::B:
            return transform_state(ev, jet_extend(sys, e, ro_lower_solution(sys.j, x), x, order));
        case PVState::C: return top_new_level(ev);
        case PVState::D:
            return transform_state(ev, jet_extend(sys, e, ro_ground_state(sys.j, x), x, order));
    }
    return {};
}

struct PairData {
    ScalarJet p, q;
    cplx ep, eq, wr;
    cplx v;
};

PairData pair_data(const ChainSpec& chain, int family, double x) {
    ChainEval ev = evaluate_chain(chain, x);
    auto [sp, sq] = pv_family_pair(family);
    PairData d;
    d.p = state_jet(chain, ev, sp);
    d.q = state_jet(chain, ev, sq);
    d.ep = pv_state_energy(chain, sp);
    d.eq = pv_state_energy(chain, sq);
    d.v = ev.v;
    d.wr = d.p[0] * d.q[1] - d.p[1] * d.q[0];
    double scale = std::abs(d.p[0] * d.q[1]) + std::abs(d.p[1] * d.q[0]);
    if (!(std::abs(d.wr) > 1e-12 * scale))
        throw NodeError("W(psi_p, psi_q) vanishes at x = " + std::to_string(x), {x});
    return d;
}

}  // namespace

PVSolution::PVSolution(ChainSpec chain, int family)
    : chain_(std::move(chain)), family_(family) {
    if (!chain_.system.is_ro()) throw ValidationError("PV solutions are generated from RO chains");
    params_ = pv_params(family_, chain_.system.j, chain_.seed.epsilon, chain_.k);
}

GJet PVSolution::eval_g(double x) const {
    PairData d = pair_data(chain_, family_, x);
    cplx delta = d.ep - d.eq;
    cplx pr = d.p[0] * d.q[0];
    cplx prp = d.p[1] * d.q[0] + d.p[0] * d.q[1];
    cplx prpp = (4.0 * d.v - 2.0 * d.ep - 2.0 * d.eq) * pr + 2.0 * d.p[1] * d.q[1];
    cplx h = 2.0 * delta * pr / d.wr;
    cplx t = 2.0 * delta * prp / d.wr;
    cplx hp = t - h * h;
    cplx hpp = 2.0 * delta * prpp / d.wr - h * t - 2.0 * h * hp;
    return {-x - h, -1.0 - hp, -hpp};
}

std::pair<cplx, cplx> PVSolution::h_two_ways(double x) const {
    PairData d = pair_data(chain_, family_, x);
    cplx h = 2.0 * (d.ep - d.eq) * d.p[0] * d.q[0] / d.wr;
    cplx alt = (d.p[0] * d.q[2] - d.p[2] * d.q[0]) / d.wr;
    return {h, alt};
}

WJet PVSolution::eval_w(double z) const {
    if (!(z > 0.0)) throw DomainError("PV evaluation requires z > 0");
    double x = std::sqrt(z);
    GJet g = eval_g(x);
    if (std::abs(g.g) < 1e-14 * (1.0 + x))
        throw DegenerateError("g vanishes; w map undefined at z = " + std::to_string(z), z);
    cplx g2 = g.g * g.g;
    cplx num = g.g - x * g.gp;
    cplx w = 1.0 + x / g.g;
    cplx wx = num / g2;
    cplx wxx = (-x * g.gpp * g2 - num * 2.0 * g.g * g.gp) / (g2 * g2);
    cplx wz = wx / (2 * x);
    cplx wzz = (wxx - wx / x) / (4 * x * x);
    return {w, wz, wzz};
}

PVSolution pv_solution(const ChainSpec& chain, int family,
                       const std::optional<std::vector<double>>& scan_xgrid) {
    PVSolution sol(chain, family);
    if (scan_xgrid) {
        std::vector<double> poles = pv_pole_scan(sol, *scan_xgrid);
        if (!poles.empty())
            throw NodeError("PV solution has " + std::to_string(poles.size()) +
                                " singular grid point(s), first at x = " + std::to_string(poles[0]),
                            poles);
    }
    return sol;
}

std::vector<double> pv_pole_scan(const PVSolution& sol, const std::vector<double>& xgrid) {
    std::vector<char> bad(xgrid.size(), 0);
    parallel_for(xgrid.size(), [&](std::size_t i) {
        try {
            GJet g = sol.eval_g(xgrid[i]);
            if (!std::isfinite(std::abs(g.g))) bad[i] = 1;
        } catch (const NodeError&) {
            bad[i] = 1;
        }
    });
    std::vector<double> out;
    for (std::size_t i = 0; i < xgrid.size(); ++i)
        if (bad[i]) out.push_back(xgrid[i]);
    return out;
}

double pv_equation_residual(const WJet& j, double z, const PVParams& p) {
    cplx w = j.w;
    cplx r = j.wpp - (1.0 / (2.0 * w) + 1.0 / (w - 1.0)) * j.wp * j.wp + j.wp / z -
             (w - 1.0) * (w - 1.0) / (z * z) * (p.a * w + p.b / w) - p.c * w / z -
             p.d * w * (w + 1.0) / (w - 1.0);
    return std::abs(r);
}

ResidualReport pv_residual(const PVSolution& sol, const std::vector<double>& zgrid) {
    std::vector<double> norm(zgrid.size(), -1.0), absr(zgrid.size(), 0.0);
    PVParams p = sol.params();
    parallel_for(zgrid.size(), [&](std::size_t i) {
        double z = zgrid[i];
        try {
            WJet w = sol.eval_w(z);
            if (std::abs(w.w - 1.0) < 1e-10 || std::abs(w.w) < 1e-10) return;
            double r = pv_equation_residual(w, z, p);
            absr[i] = r;
            norm[i] = r / (1.0 + std::pow(std::abs(w.w), 3));
            if (!std::isfinite(norm[i])) norm[i] = std::numeric_limits<double>::infinity();
        } catch (const NodeError&) {
        } catch (const DegenerateError&) {
        }
    });
    ResidualReport rep;
    for (std::size_t i = 0; i < zgrid.size(); ++i) {
        if (norm[i] < 0) {
            rep.excluded.push_back(zgrid[i]);
            continue;
        }
        ++rep.points;
        if (norm[i] > rep.max_normalized || rep.points == 1) {
            rep.max_normalized = norm[i];
            rep.argmax = zgrid[i];
        }
        rep.max_absolute = std::max(rep.max_absolute, absr[i]);
    }
    return rep;
}

std::array<ExtremalState, 4> pv_extremal_states(const ChainSpec& chain) {
    if (!chain.system.is_ro()) throw ValidationError("PV extremal states need an RO chain");
    auto make = [&chain](PVState s, const char* label) {
        return ExtremalState{label, pv_state_energy(chain, s), [chain, s](double x) {
                                 return state_jet(chain, evaluate_chain(chain, x), s);
                             }};
    };
    return {make(PVState::A, "psi_E1"), make(PVState::B, "psi_E2"), make(PVState::C, "psi_E3"),
            make(PVState::D, "psi_E4")};
}

}  // namespace susyp
