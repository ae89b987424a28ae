#pragma once

#include <functional>
#include <vector>

#include "susyp/susy_engine.hpp"

namespace susyp {

struct DiscretizedHamiltonian {
    std::vector<double> grid;
    std::vector<double> diag;
    std::vector<double> offdiag;  // size n - 1, shared by both sides
};

// -1/2 d^2/dx^2 + V with Dirichlet ends, h = (hi - lo) / (n + 1).
DiscretizedHamiltonian discretize(const std::function<double(double)>& v, double lo, double hi,
                                  int n);

// The `count` smallest eigenvalues, ascending (implicit-shift QL).
std::vector<double> eigenvalues(const DiscretizedHamiltonian& h, int count);

struct SolverConfig {
    double lo = 0.0, hi = 0.0;  // 0,0 means the system default domain
    int n = 2000;
    int extra_levels = 6;       // compare the lowest k + extra_levels levels
};

struct SpectrumReport {
    std::vector<double> computed;
    std::vector<double> predicted;
    std::vector<double> deviations;
    double lo = 0.0, hi = 0.0;
    int n = 0;
    double max_deviation() const;
};

SolverConfig default_solver(const SystemKind& sys);

SpectrumReport spectrum_check(const ChainSpec& chain, SolverConfig cfg = {});

// Richardson ratios (l_n - l_2n) / (l_2n - l_4n) per level for grids with n+1, 2(n+1), 4(n+1)
// intervals.
std::vector<double> convergence_ratios(const ChainSpec& chain, SolverConfig cfg = {});

}  // namespace susyp
