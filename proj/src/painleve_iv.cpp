#include "susyp/painleve_iv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "susyp/errors.hpp"

namespace susyp {

std::string to_string(PIVFamily f) {
    switch (f) {
        case PIVFamily::I: return "i";
        case PIVFamily::II: return "ii";
        case PIVFamily::III: return "iii";
    }
    return "?";
}

PIVFamily piv_family_from_string(const std::string& s) {
    if (s == "i" || s == "1") return PIVFamily::I;
    if (s == "ii" || s == "2") return PIVFamily::II;
    if (s == "iii" || s == "3") return PIVFamily::III;
    throw ValidationError("unknown PIV family '" + s + "' (expected i, ii or iii)");
}

PIVParams piv_params(PIVFamily family, cplx e1, int k) {
    double kk = k;
    switch (family) {
        case PIVFamily::I: return {-e1 + 2 * kk - 1.5, -2.0 * (e1 + 0.5) * (e1 + 0.5)};
        case PIVFamily::II: return {2.0 * e1 - kk, cplx(-2 * kk * kk)};
        case PIVFamily::III: return {-e1 - kk - 1.5, -2.0 * (e1 - kk + 0.5) * (e1 - kk + 0.5)};
    }
    return {};
}

PIVSolution::PIVSolution(ChainSpec chain, PIVFamily family)
    : chain_(std::move(chain)), family_(family), params_(piv_params(family, chain_.seed.epsilon, chain_.k)) {
    if (chain_.system.is_ro()) throw ValidationError("PIV solutions are generated from HO chains");
}

namespace {

Jet extremal_source(const ChainSpec& chain, const ChainEval& ev, PIVFamily family) {
    const SystemKind& sys = chain.system;
    int order = chain.k + 3;
    if (family == PIVFamily::II) return jet_extend(sys, 0.5, ho_ground_state(ev.x), ev.x, order);
    return jet_extend(sys, chain.epsilon(1) + 1.0, create(sys, ev.jets[0]), ev.x, order);
}

}  // namespace

GJet PIVSolution::eval(double x) const {
    ChainEval ev = evaluate_chain(chain_, x);
    if (family_ == PIVFamily::I) {
        if (chain_.k > 1 && ev.wkm1.singular())
            throw NodeError("W(u_1..u_{k-1}) vanishes at x = " + std::to_string(x), {x});
        auto a = log_derivatives(ev.wkm1);
        auto b = log_derivatives(ev.wk);
        return {-x - (a[0] - b[0]), -1.0 - (a[1] - b[1]), -(a[2] - b[2])};
    }
    std::vector<Jet> all = ev.jets;
    all.push_back(extremal_source(chain_, ev, family_));
    WronskianJet n = wronskian_jet(all, 2);
    if (n.singular())
        throw NodeError("extremal state vanishes at x = " + std::to_string(x), {x});
    ScalarJet psi = ratio_jet(n.w, ev.wk.w);
    cplx e = family_ == PIVFamily::II ? cplx(0.5) : chain_.epsilon(1) + 1.0;
    cplx l = psi[1] / psi[0];
    cplx q = 2.0 * (ev.v - e);
    return {-x - l, -1.0 - q + l * l, -2.0 * ev.vp + 2.0 * l * (q - l * l)};
}

std::vector<double> piv_pole_scan(const PIVSolution& sol, const std::vector<double>& grid) {
    std::vector<char> bad(grid.size(), 0);
    parallel_for(grid.size(), [&](std::size_t i) {
        try {
            GJet g = sol.eval(grid[i]);
            if (!std::isfinite(std::abs(g.g)) || !std::isfinite(std::abs(g.gpp))) bad[i] = 1;
        } catch (const NodeError&) {
            bad[i] = 1;
        }
    });
    std::vector<double> out;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (bad[i]) out.push_back(grid[i]);
    return out;
}

PIVSolution piv_solution(const ChainSpec& chain, PIVFamily family,
                         const std::optional<std::vector<double>>& scan_grid) {
    PIVSolution sol(chain, family);
    if (scan_grid) {
        std::vector<double> poles = piv_pole_scan(sol, *scan_grid);
        if (!poles.empty())
            throw NodeError("PIV solution has " + std::to_string(poles.size()) +
                                " singular grid point(s), first at x = " + std::to_string(poles[0]),
                            poles);
    }
    return sol;
}

double piv_equation_residual(const GJet& j, double x, const PIVParams& p) {
    cplx g = j.g, g2 = g * g;
    cplx r = g * j.gpp - 0.5 * j.gp * j.gp - 1.5 * g2 * g2 - 4.0 * x * g2 * g -
             2.0 * (x * x - p.a) * g2 - p.b;
    return std::abs(r);
}

ResidualReport piv_residual(const PIVSolution& sol, const std::vector<double>& grid) {
    std::vector<double> norm(grid.size(), -1.0), absr(grid.size(), 0.0);
    PIVParams p = sol.params();
    parallel_for(grid.size(), [&](std::size_t i) {
        try {
            GJet g = sol.eval(grid[i]);
            double r = piv_equation_residual(g, grid[i], p);
            absr[i] = r;
            norm[i] = r / (1.0 + std::pow(std::abs(g.g), 4));
            if (!std::isfinite(norm[i])) norm[i] = std::numeric_limits<double>::infinity();
        } catch (const NodeError&) {
            norm[i] = -1.0;
        }
    });
    ResidualReport rep;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (norm[i] < 0) {
            rep.excluded.push_back(grid[i]);
            continue;
        }
        ++rep.points;
        if (norm[i] > rep.max_normalized || rep.points == 1) {
            rep.max_normalized = norm[i];
            rep.argmax = grid[i];
        }
        rep.max_absolute = std::max(rep.max_absolute, absr[i]);
    }
    return rep;
}

std::array<ExtremalState, 3> piv_extremal_states(const ChainSpec& chain) {
    if (chain.system.is_ro()) throw ValidationError("PIV extremal states need an HO chain");
    auto via = [chain](PIVFamily f) {
        return [chain, f](double x) {
            ChainEval ev = evaluate_chain(chain, x);
            return transform_state(ev, extremal_source(chain, ev, f));
        };
    };
    ExtremalState e1{"psi_E1", 0.5, via(PIVFamily::II)};
    ExtremalState e2{"psi_E2", chain.epsilon(1) + 1.0, via(PIVFamily::III)};
    ExtremalState e3{"psi_E3", chain.epsilon(chain.k),
                     [chain](double x) { return top_new_level(evaluate_chain(chain, x)); }};
    return {e1, e2, e3};
}

cplx potential_from_g(cplx g, cplx gp, cplx epsilon3, double x) {
    return x * x / 2 - gp / 2.0 + g * g / 2.0 + x * g + epsilon3 + 0.5;
}

}  // namespace susyp
