#pragma once

#include <complex>

namespace susyp {

using cplx = std::complex<double>;

struct Hyp1f1Options {
    double tol = 1e-16;
    int max_terms = 2000;
    int consecutive = 3;
};

// True when z is (numerically exactly) a non-positive integer.
bool is_nonpositive_integer(cplx z);

cplx gamma(cplx z);
// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
cplx rgamma(cplx z);
// d/dz [1/Gamma(z)].
cplx rgamma_derivative(cplx z);
cplx digamma(cplx z);

cplx hyp1f1(cplx a, cplx b, cplx y, const Hyp1f1Options& opt = {});
// n-th derivative in y, n <= 4.
cplx hyp1f1_derivative(cplx a, cplx b, cplx y, int order, const Hyp1f1Options& opt = {});
// Partial derivative with respect to the upper parameter a.
cplx hyp1f1_da(cplx a, cplx b, cplx y, const Hyp1f1Options& opt = {});
// d/da of d/dy 1F1.
cplx hyp1f1_dy_da(cplx a, cplx b, cplx y, const Hyp1f1Options& opt = {});

}  // namespace susyp
