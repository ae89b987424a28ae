#include "susyp/oscillators.hpp"

#include <cmath>
#include <sstream>

#include "susyp/errors.hpp"

namespace susyp {

namespace {

void require_positive(const SystemKind& sys, double x) {
    if (sys.is_ro() && !(x > 0.0))
        throw DomainError("radial oscillator requires x > 0 (got " + std::to_string(x) + ")");
}

struct HoArgs {
    cplx a1, a2;
};

HoArgs ho_args(cplx eps) { return {(1.0 - 2.0 * eps) / 4.0, (3.0 - 2.0 * eps) / 4.0}; }

struct RoArgs {
    cplx a1, b1, a2, b2;
};

RoArgs ro_args(double j, cplx eps) {
    return {(1.0 - 2.0 * j - 4.0 * eps) / 4.0, (1.0 - 2.0 * j) / 2.0,
            (3.0 + 2.0 * j - 4.0 * eps) / 4.0, (3.0 + 2.0 * j) / 2.0};
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

double potential(const SystemKind& sys, double x, int order) {
    if (order < 0) throw DomainError("potential: negative derivative order");
    if (!sys.is_ro()) {
        if (order == 0) return x * x / 2;
        if (order == 1) return x;
        if (order == 2) return 1.0;
        return 0.0;
    }
    if (x == 0.0) throw DomainError("potential: radial oscillator is singular at x = 0");
    double poly = 0.0;
    if (order == 0) poly = x * x / 8;
    if (order == 1) poly = x / 4;
    if (order == 2) poly = 0.25;
    double c = sys.j * (sys.j + 1) / 2;
    double fact = 1.0;
    for (int i = 2; i <= order + 1; ++i) fact *= i;
    double sign = (order % 2 == 0) ? 1.0 : -1.0;
    return poly + c * sign * fact * std::pow(x, -(order + 2));
}

cplx mixing_coefficient(const SystemKind& sys, const SeedParams& p) {
    if (p.mixing.kind == Mixing::Kind::LambdaKappa) return {p.mixing.lambda, p.mixing.kappa};
    if (p.mixing.nu == cplx(0.0)) return 0.0;
    if (!sys.is_ro()) {
        auto [a1, a2] = ho_args(p.epsilon);
        return 2.0 * p.mixing.nu * gamma(a2) * rgamma(a1);
    }
    RoArgs r = ro_args(sys.j, p.epsilon);
    return p.mixing.nu * gamma(r.a2) * rgamma(r.b2);
}

cplx mixing_coefficient_deps(const SystemKind& sys, const SeedParams& p) {
    if (p.mixing.kind == Mixing::Kind::LambdaKappa) return 0.0;
    if (p.mixing.nu == cplx(0.0)) return 0.0;
    if (!sys.is_ro()) {
        auto [a1, a2] = ho_args(p.epsilon);
        return -p.mixing.nu * gamma(a2) * (digamma(a2) * rgamma(a1) + rgamma_derivative(a1));
    }
    RoArgs r = ro_args(sys.j, p.epsilon);
    return -mixing_coefficient(sys, p) * digamma(r.a2);
}

Pair seed_eval(const SystemKind& sys, const SeedParams& p, double x) {
    require_positive(sys, x);
    cplx c = mixing_coefficient(sys, p);
    if (!sys.is_ro()) {
        auto [a1, a2] = ho_args(p.epsilon);
        double y = x * x;
        cplx f1 = hyp1f1(a1, 0.5, y), f1p = hyp1f1_derivative(a1, 0.5, y, 1);
        cplx f2 = 0.0, f2p = 0.0;
        if (c != cplx(0.0)) {
            f2 = hyp1f1(a2, 1.5, y);
            f2p = hyp1f1_derivative(a2, 1.5, y, 1);
        }
        double e = std::exp(-y / 2);
        cplx u = e * (f1 + c * x * f2);
        cplx up = -x * u + e * (2.0 * x * f1p + c * f2 + 2.0 * c * y * f2p);
        return {u, up};
    }
    RoArgs r = ro_args(sys.j, p.epsilon);
    double y = x * x / 2;
    double pw = sys.j + 0.5;
    cplx f1 = hyp1f1(r.a1, r.b1, y), f1p = hyp1f1_derivative(r.a1, r.b1, y, 1);
    cplx f2 = 0.0, f2p = 0.0;
    if (c != cplx(0.0)) {
        f2 = hyp1f1(r.a2, r.b2, y);
        f2p = hyp1f1_derivative(r.a2, r.b2, y, 1);
    }
    double ypw = std::pow(y, pw);
    double pre = std::pow(x, -sys.j) * std::exp(-x * x / 4);
    cplx s = f1 + c * ypw * f2;
    cplx sp = x * (f1p + c * (pw * ypw / y * f2 + ypw * f2p));
    cplx u = pre * s;
    cplx up = u * (-sys.j / x - x / 2) + pre * sp;
    return {u, up};
}

Pair seed_eval_deps(const SystemKind& sys, const SeedParams& p, double x) {
    require_positive(sys, x);
    cplx c = mixing_coefficient(sys, p);
    cplx dc = mixing_coefficient_deps(sys, p);
    bool second = c != cplx(0.0) || dc != cplx(0.0);
    if (!sys.is_ro()) {
        auto [a1, a2] = ho_args(p.epsilon);
        double y = x * x;
        cplx df1 = -0.5 * hyp1f1_da(a1, 0.5, y), df1p = -0.5 * hyp1f1_dy_da(a1, 0.5, y);
        cplx f2 = 0.0, f2p = 0.0, df2 = 0.0, df2p = 0.0;
        if (second) {
            f2 = hyp1f1(a2, 1.5, y);
            f2p = hyp1f1_derivative(a2, 1.5, y, 1);
            df2 = -0.5 * hyp1f1_da(a2, 1.5, y);
            df2p = -0.5 * hyp1f1_dy_da(a2, 1.5, y);
        }
        double e = std::exp(-y / 2);
        cplx du = e * (df1 + dc * x * f2 + c * x * df2);
        cplx dup = -x * du +
                   e * (2.0 * x * df1p + dc * f2 + c * df2 + 2.0 * y * (dc * f2p + c * df2p));
        return {du, dup};
    }
    RoArgs r = ro_args(sys.j, p.epsilon);
    double y = x * x / 2;
    double pw = sys.j + 0.5;
    cplx df1 = -hyp1f1_da(r.a1, r.b1, y), df1p = -hyp1f1_dy_da(r.a1, r.b1, y);
    cplx f2 = 0.0, f2p = 0.0, df2 = 0.0, df2p = 0.0;
    if (second) {
        f2 = hyp1f1(r.a2, r.b2, y);
        f2p = hyp1f1_derivative(r.a2, r.b2, y, 1);
        df2 = -hyp1f1_da(r.a2, r.b2, y);
        df2p = -hyp1f1_dy_da(r.a2, r.b2, y);
    }
    double ypw = std::pow(y, pw);
    double pre = std::pow(x, -sys.j) * std::exp(-x * x / 4);
    cplx ds = df1 + dc * ypw * f2 + c * ypw * df2;
    cplx dsp = x * (df1p + dc * (pw * ypw / y * f2 + ypw * f2p) +
                    c * (pw * ypw / y * df2 + ypw * df2p));
    cplx du = pre * ds;
    cplx dup = du * (-sys.j / x - x / 2) + pre * dsp;
    return {du, dup};
}

Jet jet_extend(const SystemKind& sys, cplx eps, Pair pair, double x, int order,
               const Jet* source) {
    require_positive(sys, x);
    if (order < 1) throw JetOrderError("jet_extend: order must be >= 1");
    if (source && source->order() < order - 2)
        throw JetOrderError("jet_extend: source jet too short");
    Jet jet;
    jet.x = x;
    jet.d.reserve(order + 1);
    jet.d.push_back(pair.first);
    jet.d.push_back(pair.second);
    std::vector<double> v(std::max(order - 1, 1));
    for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = potential(sys, x, i);
    std::vector<double> binom{1.0};
    for (int m = 0; m + 2 <= order; ++m) {
        if (m > 0) {
            std::vector<double> next(m + 1, 1.0);
            for (int i = 1; i < m; ++i) next[i] = binom[i - 1] + binom[i];
            binom = std::move(next);
        }
        cplx s = 0.0;
        for (int i = 0; i <= m; ++i) s += binom[i] * v[i] * jet.d[m - i];
        cplx val = 2.0 * s - 2.0 * eps * jet.d[m];
        if (source) val -= 2.0 * source->d[m];
        jet.d.push_back(val);
    }
    return jet;
}

namespace {

Pair ro_ladder(double j, const Jet& d, double s) {
    double x = d.x;
    double jj = j * (j + 1);
    double q = x * x / 4 - jj / (x * x) - s / 2;
    double qp = x / 2 + 2 * jj / (x * x * x);
    cplx v = (d[2] - s * x * d[1] + q * d[0]) / 2.0;
    cplx vp = (d[3] - s * (d[1] + x * d[2]) + qp * d[0] + q * d[1]) / 2.0;
    return {v, vp};
}

}  // namespace

Pair annihilate(const SystemKind& sys, const Jet& jet) {
    double x = jet.x;
    if (!sys.is_ro()) {
        if (jet.order() < 2) throw JetOrderError("annihilate: HO needs jet order >= 2");
        return {(jet[1] + x * jet[0]) / std::sqrt(2.0),
                (jet[2] + jet[0] + x * jet[1]) / std::sqrt(2.0)};
    }
    if (jet.order() < 3) throw JetOrderError("annihilate: RO needs jet order >= 3");
    return ro_ladder(sys.j, jet, -1.0);
}

Pair create(const SystemKind& sys, const Jet& jet) {
    double x = jet.x;
    if (!sys.is_ro()) {
        if (jet.order() < 2) throw JetOrderError("create: HO needs jet order >= 2");
        return {(-jet[1] + x * jet[0]) / std::sqrt(2.0),
                (-jet[2] + jet[0] + x * jet[1]) / std::sqrt(2.0)};
    }
    if (jet.order() < 3) throw JetOrderError("create: RO needs jet order >= 3");
    return ro_ladder(sys.j, jet, 1.0);
}

Verdict validate_nodeless(const SystemKind& sys, const SeedParams& p, int k) {
    Verdict v;
    if (k < 1) {
        v.status = Verdict::Status::Reject;
        v.reason = "chain order k must be >= 1";
        return v;
    }
    if (p.mixing.is_complex() || p.epsilon.imag() != 0.0) {
        v.reason = "complex seed: parameter conditions waived, pole scan required";
        v.pole_scan_required = true;
        return v;
    }
    double eps = p.epsilon.real();
    if (!sys.is_ro()) {
        if (!(eps < 0.5)) {
            v.status = Verdict::Status::Reject;
            v.reason = "epsilon must satisfy epsilon < 1/2 (got " + num(eps) + ")";
            return v;
        }
        double nu = 0.0;
        if (p.mixing.kind == Mixing::Kind::Nu) {
            nu = p.mixing.nu.real();
        } else {
            auto [a1, a2] = ho_args(p.epsilon);
            cplx den = 2.0 * gamma(a2) * rgamma(a1);
            if (den == cplx(0.0)) {
                v.status = Verdict::Status::Indeterminate;
                v.reason = "lambda to nu conversion undefined at this epsilon";
                return v;
            }
            nu = (p.mixing.lambda / den).real();
        }
        if (!(std::abs(nu) < 1.0)) {
            v.status = Verdict::Status::Reject;
            v.reason = "mixing must satisfy |nu| < 1 (got " + num(nu) + ")";
            return v;
        }
        v.reason = "epsilon < 1/2 and |nu| < 1";
        return v;
    }
    double e0 = sys.ground_energy();
    if (!(eps < e0)) {
        v.status = Verdict::Status::Reject;
        v.reason = "epsilon must satisfy epsilon < E0 = j/2 + 3/4 = " + num(e0) + " (got " +
                   num(eps) + ")";
        return v;
    }
    RoArgs r = ro_args(sys.j, p.epsilon);
    if (is_nonpositive_integer(r.b1)) {
        v.status = Verdict::Status::Indeterminate;
        v.reason = "Gamma((1-2j)/2) is at a pole; nu bound undefined";
        return v;
    }
    double nu = 0.0;
    if (p.mixing.kind == Mixing::Kind::Nu) {
        nu = p.mixing.nu.real();
    } else {
        nu = (p.mixing.lambda * rgamma(r.a2) * gamma(r.b2)).real();
    }
    double bound = (-gamma(r.b1) * rgamma(r.a1)).real();
    if (!(nu >= bound)) {
        v.status = Verdict::Status::Reject;
        v.reason = "mixing must satisfy nu >= " + num(bound) + " (got " + num(nu) + ")";
        return v;
    }
    v.reason = "epsilon < E0 and nu >= bound " + num(bound);
    return v;
}

Pair ho_ground_state(double x) {
    double e = std::exp(-x * x / 2);
    return {e, -x * e};
}

Pair ro_lower_solution(double j, double x) {
    double f = std::pow(x, -j) * std::exp(-x * x / 4);
    return {f, f * (-j / x - x / 2)};
}

Pair ro_ground_state(double j, double x) {
    double f = std::pow(x, j + 1) * std::exp(-x * x / 4);
    return {f, f * ((j + 1) / x - x / 2)};
}

}  // namespace susyp
