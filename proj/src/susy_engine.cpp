#include "susyp/susy_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "susyp/common.hpp"
#include "susyp/errors.hpp"

namespace susyp {

cplx determinant(std::vector<cplx> m, int n) {
    if (static_cast<int>(m.size()) != n * n) throw DimensionError("determinant: size mismatch");
    cplx det = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        double best = std::abs(m[c * n + c]);
        for (int r = c + 1; r < n; ++r) {
            double a = std::abs(m[r * n + c]);
            if (a > best) {
                best = a;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != c) {
            for (int k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
            det = -det;
        }
        cplx p = m[c * n + c];
        det *= p;
        for (int r = c + 1; r < n; ++r) {
            cplx f = m[r * n + c] / p;
            if (f == cplx(0.0)) continue;
            for (int k = c + 1; k < n; ++k) m[r * n + k] -= f * m[c * n + k];
        }
    }
    return det;
}

WronskianJet wronskian_jet(const std::vector<Jet>& jets, int order) {
    WronskianJet out;
    int k = static_cast<int>(jets.size());
    if (k == 0) {
        out.w.assign(order + 1, 0.0);
        out.w[0] = 1.0;
        return out;
    }
    out.x = jets[0].x;
    for (const Jet& j : jets) {
        if (j.x != out.x) throw DimensionError("wronskian_jet: jets at different points");
        if (j.order() < k - 1 + order)
            throw JetOrderError("wronskian_jet: jet order " + std::to_string(j.order()) +
                                " < " + std::to_string(k - 1 + order));
    }
    out.scale = 1.0;
    for (const Jet& j : jets) {
        double s = 0.0;
        for (int c = 0; c < k; ++c) s += std::norm(j[c]);
        out.scale *= std::sqrt(s);
    }
    std::map<std::vector<int>, double> terms;
    std::vector<int> base(k);
    for (int c = 0; c < k; ++c) base[c] = c;
    terms[base] = 1.0;
    std::vector<cplx> mat(k * k);
    for (int m = 0; m <= order; ++m) {
        cplx total = 0.0;
        for (const auto& [rows, coef] : terms) {
            for (int i = 0; i < k; ++i)
                for (int c = 0; c < k; ++c) mat[i * k + c] = jets[i][rows[c]];
            total += coef * determinant(mat, k);
        }
        out.w.push_back(total);
        if (m == order) break;
        std::map<std::vector<int>, double> next;
        for (const auto& [rows, coef] : terms) {
            for (int c = 0; c < k; ++c) {
                std::vector<int> r = rows;
                ++r[c];
                if (std::count(r.begin(), r.end(), r[c]) > 1) continue;
                next[r] += coef;
            }
        }
        terms = std::move(next);
    }
    return out;
}

namespace {

bool annihilated(const SystemKind& sys, const Jet& jet, const Pair& p) {
    double x = jet.x;
    double weight = 1.0 + x * x + (sys.is_ro() ? sys.j * (sys.j + 1) / (x * x) : 0.0);
    double scale = 0.0;
    for (int m = 0; m <= std::min(3, jet.order()); ++m) scale += std::abs(jet[m]);
    scale *= weight;
    return std::abs(p.first) + std::abs(p.second) <= 1e-12 * scale;
}

}  // namespace

std::vector<Jet> seed_family(const ChainSpec& chain, double x, int order) {
    if (chain.k < 1 || chain.k > 6) throw DimensionError("chain order k must be in 1..6");
    if (order < 0) order = chain.k + 3;
    order = std::max(order, 3);
    const SystemKind& sys = chain.system;
    std::vector<Jet> jets;
    jets.reserve(chain.k);
    jets.push_back(jet_extend(sys, chain.epsilon(1), seed_eval(sys, chain.seed, x), x, order));
    bool regularized = false;
    for (int i = 2; i <= chain.k; ++i) {
        Pair p = annihilate(sys, jets.back());
        if (annihilated(sys, jets.back(), p)) {
            if (!chain.regularize_degenerate)
                throw ZeroSeedError("chain member u_" + std::to_string(i) +
                                    " vanishes identically (seed on the annihilated ladder)");
            if (regularized)
                throw ZeroSeedError("chain annihilated twice; confluent limit not supported");
            Jet d = jet_extend(sys, chain.epsilon(1), seed_eval_deps(sys, chain.seed, x), x,
                               order, &jets[0]);
            for (int m = 2; m < i; ++m)
                d = jet_extend(sys, chain.epsilon(m), annihilate(sys, d), x, order, &jets[m - 1]);
            p = annihilate(sys, d);
            regularized = true;
        }
        jets.push_back(jet_extend(sys, chain.epsilon(i), p, x, order));
    }
    return jets;
}

std::array<cplx, 3> log_derivatives(const WronskianJet& w) {
    cplx l1 = w.w[1] / w.w[0];
    cplx l2 = w.w[2] / w.w[0] - l1 * l1;
    cplx l3 = w.w[3] / w.w[0] - 3.0 * w.w[2] * w.w[1] / (w.w[0] * w.w[0]) + 2.0 * l1 * l1 * l1;
    return {l1, l2, l3};
}

ChainEval evaluate_chain(const ChainSpec& chain, double x) {
    ChainEval ev;
    ev.x = x;
    ev.jets = seed_family(chain, x);
    ev.wk = wronskian_jet(ev.jets, 3);
    if (ev.wk.singular())
        throw NodeError("Wronskian W(u_1..u_k) vanishes at x = " + std::to_string(x), {x});
    std::vector<Jet> head(ev.jets.begin(), ev.jets.end() - 1);
    ev.wkm1 = wronskian_jet(head, 3);
    ev.wkm1.x = x;
    auto l = log_derivatives(ev.wk);
    ev.v = potential(chain.system, x, 0) - l[1];
    ev.vp = potential(chain.system, x, 1) - l[2];
    return ev;
}

cplx partner_potential(const ChainSpec& chain, double x) { return evaluate_chain(chain, x).v; }

std::vector<cplx> riccati_chain(const ChainSpec& chain, double x) {
    std::vector<Jet> jets = seed_family(chain, x, 3);
    int k = chain.k;
    std::vector<cplx> cur(k);
    for (int m = 0; m < k; ++m) {
        if (jets[m][0] == cplx(0.0))
            throw DegenerateError("riccati_chain: seed vanishes", x);
        cur[m] = jets[m][1] / jets[m][0];
    }
    std::vector<cplx> alphas;
    for (int j = 0; j < k; ++j) {
        alphas.push_back(cur[j]);
        std::vector<cplx> next(k);
        for (int m = j + 1; m < k; ++m) {
            cplx den = cur[j] - cur[m];
            if (den == cplx(0.0))
                throw DegenerateError("riccati_chain: equal superpotentials", x);
            next[m] = -cur[j] - 2.0 * (chain.epsilon(j + 1) - chain.epsilon(m + 1)) / den;
        }
        cur = std::move(next);
    }
    return alphas;
}

std::vector<double> default_grid(const SystemKind& sys, std::size_t n) {
    return sys.is_ro() ? linspace(0.1, 8.0, n) : linspace(-5.0, 5.0, n);
}

cplx riccati_potential(const ChainSpec& chain, double x) {
    std::vector<cplx> alphas = riccati_chain(chain, x);
    cplx v = potential(chain.system, x, 0);
    for (int j = 0; j < chain.k; ++j) v = -v + 2.0 * chain.epsilon(j + 1) + alphas[j] * alphas[j];
    return v;
}

ScalarJet ratio_jet(const std::vector<cplx>& n, const std::vector<cplx>& w) {
    cplx q0 = n[0] / w[0];
    cplx q1 = (n[1] - q0 * w[1]) / w[0];
    cplx q2 = (n[2] - 2.0 * q1 * w[1] - q0 * w[2]) / w[0];
    return {q0, q1, q2};
}

ScalarJet transform_state(const ChainEval& ev, const Jet& f) {
    std::vector<Jet> all = ev.jets;
    all.push_back(f);
    WronskianJet n = wronskian_jet(all, 2);
    return ratio_jet(n.w, ev.wk.w);
}

ScalarJet top_new_level(const ChainEval& ev) { return ratio_jet(ev.wkm1.w, ev.wk.w); }

double base_energy(const SystemKind& sys, int n) { return sys.ground_energy() + n; }

Jet base_eigenstate(const SystemKind& sys, int n, double x, int order) {
    order = std::max(order, 3);
    Pair p = sys.is_ro() ? ro_ground_state(sys.j, x) : ho_ground_state(x);
    Jet jet = jet_extend(sys, base_energy(sys, 0), p, x, order);
    for (int i = 1; i <= n; ++i) jet = jet_extend(sys, base_energy(sys, i), create(sys, jet), x, order);
    return jet;
}

ScalarJet eigenfunction_jet(const ChainSpec& chain, EigenSelector which, double x) {
    ChainEval ev = evaluate_chain(chain, x);
    if (which.kind == EigenSelector::Kind::MappedLevel) {
        if (which.index < 0) throw DomainError("mapped level index must be >= 0");
        return transform_state(ev, base_eigenstate(chain.system, which.index, x, chain.k + 3));
    }
    if (which.index < 1 || which.index > chain.k)
        throw DomainError("new level index must be in 1..k");
    if (which.index == chain.k) return top_new_level(ev);
    std::vector<Jet> rest;
    for (int i = 0; i < chain.k; ++i)
        if (i != which.index - 1) rest.push_back(ev.jets[i]);
    return ratio_jet(wronskian_jet(rest, 2).w, ev.wk.w);
}

cplx eigenfunction(const ChainSpec& chain, EigenSelector which, double x) {
    return eigenfunction_jet(chain, which, x)[0];
}

cplx eigen_energy(const ChainSpec& chain, EigenSelector which) {
    if (which.kind == EigenSelector::Kind::NewLevel) return chain.epsilon(which.index);
    return base_energy(chain.system, which.index);
}

double schrodinger_residual(const ScalarJet& psi, cplx v, cplx energy) {
    cplx r = -psi[2] / 2.0 + (v - energy) * psi[0];
    double scale = std::abs(psi[2]) / 2 + std::abs(v * psi[0]) + std::abs(energy * psi[0]);
    if (scale == 0.0) return 0.0;
    return std::abs(r) / scale;
}

std::vector<double> SpectrumPrediction::lowest(int n) const {
    std::vector<double> out(finite_ladder.begin(), finite_ladder.end());
    for (int i = 0; static_cast<int>(out.size()) < n + static_cast<int>(finite_ladder.size()); ++i)
        out.push_back(infinite_ladder_base + step * i);
    std::sort(out.begin(), out.end());
    out.resize(std::min<std::size_t>(out.size(), n));
    return out;
}

SpectrumPrediction predicted_spectrum(const ChainSpec& chain, int n_max) {
    if (chain.seed.epsilon.imag() != 0.0)
        throw ValidationError("predicted_spectrum: complex factorization energy");
    SpectrumPrediction sp;
    double e1 = chain.seed.epsilon.real();
    for (int i = chain.k; i >= 1; --i) sp.finite_ladder.push_back(e1 - (i - 1));
    sp.infinite_ladder_base = chain.system.ground_energy();
    double ek = e1 - (chain.k - 1);
    if (chain.system.is_ro()) {
        double e0 = chain.system.ground_energy();
        sp.extremal_energies = {e1 + 1, 1 - e0, ek, e0};
    } else {
        sp.extremal_energies = {0.5, e1 + 1, ek};
    }
    sp.levels = sp.lowest(chain.k + n_max);
    return sp;
}

}  // namespace susyp
