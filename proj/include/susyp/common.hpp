#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "susyp/specfun.hpp"
#include "susyp/susy_engine.hpp"

namespace susyp {

// g and its first two derivatives.
struct GJet {
    cplx g = 0.0, gp = 0.0, gpp = 0.0;
};

struct ResidualReport {
    double max_normalized = 0.0;
    double argmax = 0.0;
    double max_absolute = 0.0;
    std::size_t points = 0;
    std::vector<double> excluded;  // grid points skipped (poles / degenerate points)
};

struct ExtremalState {
    std::string label;
    cplx energy = 0.0;
    std::function<ScalarJet(double)> eval;
};

std::vector<double> linspace(double lo, double hi, std::size_t n);

// Threads used by grid sweeps: SUSYPAINLEVE_THREADS if set (>= 1), else hardware count.
unsigned worker_count();

// Calls fn(i) for i in [0, n) across worker_count() threads; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace susyp
