#include "susyp/spectral.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "susyp/common.hpp"
#include "susyp/errors.hpp"

namespace susyp {

DiscretizedHamiltonian discretize(const std::function<double(double)>& v, double lo, double hi,
                                  int n) {
    if (n < 2) throw DomainError("discretize: need n >= 2");
    if (!(lo < hi)) throw DomainError("discretize: need lo < hi");
    DiscretizedHamiltonian h;
    double step = (hi - lo) / (n + 1);
    h.grid.resize(n);
    h.diag.resize(n);
    for (int i = 0; i < n; ++i) h.grid[i] = lo + (i + 1) * step;
    parallel_for(n, [&](std::size_t i) { h.diag[i] = 1.0 / (step * step) + v(h.grid[i]); });
    h.offdiag.assign(n - 1, -0.5 / (step * step));
    return h;
}

std::vector<double> eigenvalues(const DiscretizedHamiltonian& h, int count) {
    int n = static_cast<int>(h.diag.size());
    if (count > n) throw DomainError("eigenvalues: count exceeds matrix size");
    std::vector<double> d = h.diag;
    std::vector<double> e(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) e[i] = h.offdiag[i];
    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (++iter > 60)
                    throw ConvergenceError("eigenvalues: no convergence for index " +
                                           std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    e[i + 1] = (r = std::hypot(f, g));
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    d[i + 1] = g + (p = s * r);
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    d.resize(count);
    return d;
}

double SpectrumReport::max_deviation() const {
    double m = 0.0;
    for (double v : deviations) m = std::max(m, std::abs(v));
    return m;
}

SolverConfig default_solver(const SystemKind& sys) {
    SolverConfig cfg;
    if (sys.is_ro()) {
        cfg.lo = 1e-3;
        cfg.hi = 14.0;
    } else {
        cfg.lo = -12.0;
        cfg.hi = 12.0;
    }
    return cfg;
}

namespace {

SolverConfig resolve(const ChainSpec& chain, SolverConfig cfg) {
    if (cfg.lo == 0.0 && cfg.hi == 0.0) {
        SolverConfig d = default_solver(chain.system);
        cfg.lo = d.lo;
        cfg.hi = d.hi;
    }
    return cfg;
}

std::vector<double> chain_levels(const ChainSpec& chain, const SolverConfig& cfg, int n, int count) {
    auto v = [&chain](double x) { return partner_potential(chain, x).real(); };
    return eigenvalues(discretize(v, cfg.lo, cfg.hi, n), count);
}

}  // namespace

SpectrumReport spectrum_check(const ChainSpec& chain, SolverConfig cfg) {
    cfg = resolve(chain, cfg);
    int count = chain.k + cfg.extra_levels;
    SpectrumReport rep;
    rep.lo = cfg.lo;
    rep.hi = cfg.hi;
    rep.n = cfg.n;
    rep.predicted = predicted_spectrum(chain, cfg.extra_levels).lowest(count);
    rep.computed = chain_levels(chain, cfg, cfg.n, count);
    for (int i = 0; i < count; ++i) rep.deviations.push_back(rep.computed[i] - rep.predicted[i]);
    return rep;
}

std::vector<double> convergence_ratios(const ChainSpec& chain, SolverConfig cfg) {
    cfg = resolve(chain, cfg);
    int count = chain.k + cfg.extra_levels;
    int intervals = cfg.n + 1;
    auto l1 = chain_levels(chain, cfg, intervals - 1, count);
    auto l2 = chain_levels(chain, cfg, 2 * intervals - 1, count);
    auto l4 = chain_levels(chain, cfg, 4 * intervals - 1, count);
    std::vector<double> out;
    for (int i = 0; i < count; ++i) out.push_back((l1[i] - l2[i]) / (l2[i] - l4[i]));
    return out;
}

}  // namespace susyp
