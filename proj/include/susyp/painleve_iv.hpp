#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "susyp/common.hpp"
#include "susyp/susy_engine.hpp"

namespace susyp {

enum class PIVFamily { I, II, III };

std::string to_string(PIVFamily f);
PIVFamily piv_family_from_string(const std::string& s);

struct PIVParams {
    cplx a = 0.0, b = 0.0;
};

PIVParams piv_params(PIVFamily family, cplx epsilon1, int k);

class PIVSolution {
public:
    PIVSolution(ChainSpec chain, PIVFamily family);

    const ChainSpec& chain() const { return chain_; }
    PIVFamily family() const { return family_; }
    PIVParams params() const { return params_; }

    // g, g', g'' at x; throws NodeError where g has a pole.
    GJet eval(double x) const;

private:
    ChainSpec chain_;
    PIVFamily family_;
    PIVParams params_;
};

// Builds the solution; when scan_grid is given, every point is checked and a NodeError
// listing all singular points is thrown if any is found.
PIVSolution piv_solution(const ChainSpec& chain, PIVFamily family = PIVFamily::I,
                         const std::optional<std::vector<double>>& scan_grid = std::nullopt);

// Points of the grid where the solution is singular.
std::vector<double> piv_pole_scan(const PIVSolution& sol, const std::vector<double>& grid);

double piv_equation_residual(const GJet& g, double x, const PIVParams& p);
ResidualReport piv_residual(const PIVSolution& sol, const std::vector<double>& grid);

// psi_E1 (energy 1/2), psi_E2 (energy eps_1 + 1), psi_E3 (energy eps_k).
std::array<ExtremalState, 3> piv_extremal_states(const ChainSpec& chain);

cplx potential_from_g(cplx g, cplx gp, cplx epsilon3, double x);

}  // namespace susyp
