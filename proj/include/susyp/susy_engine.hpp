#pragma once

#include <array>
#include <vector>

#include "susyp/oscillators.hpp"

namespace susyp {

struct ChainSpec {
    SystemKind system;
    int k = 1;
    SeedParams seed;
    // When a^-/b^- annihilates a chain member, replace it (and the rest of the chain) by
    // the confluent limit built from d/d(eps) of the seed instead of failing.
    bool regularize_degenerate = false;

    cplx epsilon(int i) const { return seed.epsilon - double(i - 1); }  // i is 1-based
};

struct WronskianJet {
    double x = 0.0;
    std::vector<cplx> w;  // w[m] = W^(m)(x)
    double scale = 1.0;   // product of row norms of the Wronskian matrix

    // Small against the row-norm product, or within ~100 rel of a simple zero (|W/W'|).
    bool singular(double rel = 1e-12) const {
        if (std::abs(w[0]) < rel * scale) return true;
        return w.size() > 1 && std::abs(w[0]) < 100 * rel * std::abs(w[1]);
    }
};

// Derivatives of a function of x at a point: v[0] = f, v[1] = f', ...
using ScalarJet = std::array<cplx, 3>;

cplx determinant(std::vector<cplx> m, int n);

WronskianJet wronskian_jet(const std::vector<Jet>& jets, int order);

// u_1..u_k at x, each carrying derivs up to `order` (default k + 3).
std::vector<Jet> seed_family(const ChainSpec& chain, double x, int order = -1);

struct ChainEval {
    double x = 0.0;
    std::vector<Jet> jets;
    WronskianJet wk;    // W(u_1..u_k), order 3
    WronskianJet wkm1;  // W(u_1..u_{k-1}), order 3 (identically 1 when k = 1)
    cplx v = 0.0;       // V_k
    cplx vp = 0.0;      // V_k'
};

ChainEval evaluate_chain(const ChainSpec& chain, double x);

// log-derivatives of a Wronskian jet: (W'/W, (ln W)'', (ln W)''').
std::array<cplx, 3> log_derivatives(const WronskianJet& w);

cplx partner_potential(const ChainSpec& chain, double x);

// Default evaluation grid: [-5, 5] (HO) or [0.1, 8] (RO). Closer to the RO origin the
// Wronskian loses most of its digits to cancellation between x^{-j} terms.
std::vector<double> default_grid(const SystemKind& sys, std::size_t n = 401);

// alphas[i] = alpha_{i+1}(x, eps_{i+1}) from the recursive finite-difference formula.
std::vector<cplx> riccati_chain(const ChainSpec& chain, double x);
// V_k built only from the alphas: V_j = -V_{j-1} + 2 eps_j + alpha_j^2.
cplx riccati_potential(const ChainSpec& chain, double x);

// Jet of n/w from the jets of n and w (orders 0..2).
ScalarJet ratio_jet(const std::vector<cplx>& n, const std::vector<cplx>& w);

// W(u_1..u_k, f) / W(u_1..u_k) with two derivatives; f must solve the base equation.
ScalarJet transform_state(const ChainEval& ev, const Jet& f);
// W(u_1..u_{k-1}) / W(u_1..u_k), up to a constant: the new level at eps_k.
ScalarJet top_new_level(const ChainEval& ev);

struct EigenSelector {
    enum class Kind { NewLevel, MappedLevel };
    Kind kind = Kind::MappedLevel;
    int index = 0;  // new level: 1..k (energy eps_i); mapped level: n >= 0

    static EigenSelector new_level(int i) { return {Kind::NewLevel, i}; }
    static EigenSelector mapped(int n) { return {Kind::MappedLevel, n}; }
};

// Base eigenstate n (HO: (a^+)^n e^{-x^2/2}; RO: (b^+)^n x^{j+1} e^{-x^2/4}) as a jet.
Jet base_eigenstate(const SystemKind& sys, int n, double x, int order);
double base_energy(const SystemKind& sys, int n);

ScalarJet eigenfunction_jet(const ChainSpec& chain, EigenSelector which, double x);
cplx eigenfunction(const ChainSpec& chain, EigenSelector which, double x);
cplx eigen_energy(const ChainSpec& chain, EigenSelector which);

// |-psi''/2 + (V - E) psi| relative to |psi''|/2 + |V psi| + |E psi|.
double schrodinger_residual(const ScalarJet& psi, cplx v, cplx energy);

struct SpectrumPrediction {
    std::vector<double> finite_ladder;  // eps_k .. eps_1, ascending
    double infinite_ladder_base = 0.0;
    double step = 1.0;
    std::vector<cplx> extremal_energies;
    std::vector<double> levels;  // merged spectrum: finite ladder plus n_max ladder rungs

    // The lowest n levels of the merged spectrum.
    std::vector<double> lowest(int n) const;
};

SpectrumPrediction predicted_spectrum(const ChainSpec& chain, int n_max = 0);

}  // namespace susyp
