#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "susyp/common.hpp"
#include "susyp/susy_engine.hpp"

namespace susyp {

struct PVParams {
    cplx a = 0.0, b = 0.0, c = 0.0, d = -0.125;
};

// Six families (1..6).
PVParams pv_params(int family, double j, cplx epsilon1, int k);
// k = 1 map in terms of j and eps.
PVParams pv_first_order_params(double j, cplx epsilon);

// Extremal states of the RO chain:
//   A: B+ b+ u_1 at eps_1 + 1,  B: B+ x^{-j}e^{-x^2/4} at 1 - E0,
//   C: W_{k-1}/W_k at eps_k,     D: B+ x^{j+1}e^{-x^2/4} at E0.
enum class PVState { A, B, C, D };

std::pair<PVState, PVState> pv_family_pair(int family);
cplx pv_state_energy(const ChainSpec& chain, PVState s);

// Parameters from the energies: g built from {E3, E4}, the remaining two are {E1, E2}.
PVParams pv_params_from_energies(cplx e1, cplx e2, cplx e3, cplx e4);

struct WJet {
    cplx w = 0.0, wp = 0.0, wpp = 0.0;  // derivatives in z
};

class PVSolution {
public:
    PVSolution(ChainSpec chain, int family);

    const ChainSpec& chain() const { return chain_; }
    int family() const { return family_; }
    PVParams params() const { return params_; }

    // g(x) = -x - h with h = (ln W(psi_p, psi_q))'.
    GJet eval_g(double x) const;
    // w(z) = 1 + z^{1/2} / g(z^{1/2}).
    WJet eval_w(double z) const;
    // h computed from the formula and from W(psi_p, psi_q)' with second derivatives of the
    // states; returns both.
    std::pair<cplx, cplx> h_two_ways(double x) const;

private:
    ChainSpec chain_;
    int family_;
    PVParams params_;
};

PVSolution pv_solution(const ChainSpec& chain, int family = 1,
                       const std::optional<std::vector<double>>& scan_xgrid = std::nullopt);

std::vector<double> pv_pole_scan(const PVSolution& sol, const std::vector<double>& xgrid);

double pv_equation_residual(const WJet& w, double z, const PVParams& p);
ResidualReport pv_residual(const PVSolution& sol, const std::vector<double>& zgrid);

std::array<ExtremalState, 4> pv_extremal_states(const ChainSpec& chain);

}  // namespace susyp
