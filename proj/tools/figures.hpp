#pragma once

#include <string>
#include <vector>

#include "susyp/painleve_iv.hpp"
#include "susyp/susy_engine.hpp"

namespace susyp::cli {

struct Curve {
    enum class Kind { Potential, PIV, PV };
    std::string name;
    Kind kind = Kind::Potential;
    ChainSpec chain;
    PIVFamily piv_family = PIVFamily::I;
    int pv_family = 1;
    double lo = 0.0, hi = 0.0;  // x range (z range for PV)
    std::size_t n = 0;
};

struct Figure {
    std::string id;
    std::string description;
    std::vector<Curve> curves;
    bool spectrum = false;  // also run the spectral check on every potential curve
};

const std::vector<Figure>& figure_registry();
// Throws std::out_of_range for unknown ids.
const Figure& find_figure(const std::string& id);

}  // namespace susyp::cli
