#include "susyp/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "susyp/errors.hpp"

namespace susyp {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 671/128, 14 terms.
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,      -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,    .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4,  .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,   -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4,  .368991826595316234e-5};

cplx lgamma_lanczos(cplx x) {
    cplx y = x;
    cplx tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

std::string describe(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << "," << z.imag() << ")";
    return os.str();
}

cplx series(cplx a, cplx b, cplx y, const Hyp1f1Options& opt) {
    cplx term = 1.0;
    cplx sum = 1.0;
    int small = 0;
    for (int n = 0; n < opt.max_terms; ++n) {
        term *= (a + double(n)) / (b + double(n)) * y / double(n + 1);
        sum += term;
        if (std::abs(term) <= opt.tol * std::abs(sum)) {
            if (++small >= opt.consecutive) return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("hyp1f1: series did not converge for a=" + describe(a) +
                           " b=" + describe(b) + " y=" + describe(y));
}

int nonpositive_order(cplx z) { return static_cast<int>(std::lround(-z.real())); }

void check_lower(cplx a, cplx b) {
    if (!is_nonpositive_integer(b)) return;
    if (is_nonpositive_integer(a) && nonpositive_order(a) <= nonpositive_order(b)) return;
    throw ParameterPoleError("hyp1f1: lower parameter b=" + describe(b) +
                             " is a non-positive integer");
}

}  // namespace

bool is_nonpositive_integer(cplx z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= 1e-13 * std::max(1.0, std::abs(r));
}

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at " + describe(z), z);
    if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
    return std::exp(lgamma_lanczos(z));
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return std::sin(kPi * z) * gamma(1.0 - z) / kPi;
    return std::exp(-lgamma_lanczos(z));
}

cplx rgamma_derivative(cplx z) {
    if (is_nonpositive_integer(z)) {
        int n = nonpositive_order(z);
        double f = 1.0;
        for (int i = 2; i <= n; ++i) f *= i;
        return (n % 2 == 0) ? f : -f;
    }
    return -digamma(z) * rgamma(z);
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at " + describe(z), z);
    if (z.real() < 0.5) return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    cplx acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    cplx r = 1.0 / (z * z);
    cplx tail =
        r * (-1.0 / 12 +
             r * (1.0 / 120 +
                  r * (-1.0 / 252 +
                       r * (1.0 / 240 + r * (-1.0 / 132 + r * (691.0 / 32760 + r * (-1.0 / 12)))))));
    return acc + std::log(z) - 0.5 / z + tail;
}

cplx hyp1f1(cplx a, cplx b, cplx y, const Hyp1f1Options& opt) {
    check_lower(a, b);
    if (y == cplx(0.0)) return 1.0;
    if (is_nonpositive_integer(a)) {
        int m = nonpositive_order(a);
        cplx term = 1.0, sum = 1.0;
        for (int n = 0; n < m; ++n) {
            term *= (a + double(n)) / (b + double(n)) * y / double(n + 1);
            sum += term;
        }
        return sum;
    }
    if (y.real() < 0.0) return std::exp(y) * hyp1f1(b - a, b, -y, opt);
    return series(a, b, y, opt);
}

cplx hyp1f1_derivative(cplx a, cplx b, cplx y, int order, const Hyp1f1Options& opt) {
    if (order < 0 || order > 4) throw DomainError("hyp1f1_derivative: order must be in 0..4");
    check_lower(a, b);
    cplx ratio = 1.0;
    for (int i = 0; i < order; ++i) {
        if (a + double(i) == cplx(0.0)) return 0.0;
        ratio *= (a + double(i)) / (b + double(i));
    }
    return ratio * hyp1f1(a + double(order), b + double(order), y, opt);
}

cplx hyp1f1_da(cplx a, cplx b, cplx y, const Hyp1f1Options& opt) {
    if (is_nonpositive_integer(b))
        throw ParameterPoleError("hyp1f1_da: lower parameter b=" + describe(b) +
                                 " is a non-positive integer");
    if (y == cplx(0.0)) return 0.0;
    if (y.real() < 0.0 && !is_nonpositive_integer(a))
        return -std::exp(y) * hyp1f1_da(b - a, b, -y, opt);
    cplx tp = 1.0, td = 0.0, sum = 0.0;
    int small = 0;
    for (int n = 0; n < opt.max_terms; ++n) {
        cplx f = y / ((b + double(n)) * double(n + 1));
        td = (td * (a + double(n)) + tp) * f;
        tp = tp * (a + double(n)) * f;
        sum += td;
        if (std::abs(td) <= opt.tol * std::abs(sum)) {
            if (++small >= opt.consecutive) return sum;
        } else {
            small = 0;
        }
    }
    throw ConvergenceError("hyp1f1_da: series did not converge for a=" + describe(a) +
                           " b=" + describe(b) + " y=" + describe(y));
}

cplx hyp1f1_dy_da(cplx a, cplx b, cplx y, const Hyp1f1Options& opt) {
    return hyp1f1(a + 1.0, b + 1.0, y, opt) / b + a / b * hyp1f1_da(a + 1.0, b + 1.0, y, opt);
}

}  // namespace susyp
