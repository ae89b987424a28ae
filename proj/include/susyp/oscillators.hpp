#pragma once

#include <string>
#include <utility>
#include <vector>

#include "susyp/specfun.hpp"

namespace susyp {

enum class SystemTag { HO, RO };

struct SystemKind {
    SystemTag tag = SystemTag::HO;
    double j = 0.0;  // RO angular index

    static SystemKind ho() { return {SystemTag::HO, 0.0}; }
    static SystemKind ro(double j) { return {SystemTag::RO, j}; }
    bool is_ro() const { return tag == SystemTag::RO; }
    // Ground level of the physical ladder: 1/2 (HO) or j/2 + 3/4 (RO).
    double ground_energy() const { return is_ro() ? j / 2 + 0.75 : 0.5; }
};

// Either nu (real-solution convention, possibly complex) or lambda + i kappa.
struct Mixing {
    enum class Kind { Nu, LambdaKappa };
    Kind kind = Kind::Nu;
    cplx nu = 0.0;
    double lambda = 0.0;
    double kappa = 0.0;

    static Mixing from_nu(cplx nu) { return {Kind::Nu, nu, 0.0, 0.0}; }
    static Mixing from_lambda_kappa(double l, double k) { return {Kind::LambdaKappa, 0.0, l, k}; }
    bool is_complex() const {
        return kind == Kind::LambdaKappa ? kappa != 0.0 : nu.imag() != 0.0;
    }
};

struct SeedParams {
    cplx epsilon = 0.0;
    Mixing mixing;
};

struct Jet {
    double x = 0.0;
    std::vector<cplx> d;
    int order() const { return static_cast<int>(d.size()) - 1; }
    const cplx& operator[](int m) const { return d[m]; }
};

using Pair = std::pair<cplx, cplx>;

double potential(const SystemKind& sys, double x, int order);

// Coefficient multiplying the second 1F1 branch (lambda + i kappa in the complex form).
cplx mixing_coefficient(const SystemKind& sys, const SeedParams& p);
// d/d(epsilon) of mixing_coefficient.
cplx mixing_coefficient_deps(const SystemKind& sys, const SeedParams& p);

Pair seed_eval(const SystemKind& sys, const SeedParams& p, double x);
// Analytic epsilon-derivative of the seed and its x-derivative.
Pair seed_eval_deps(const SystemKind& sys, const SeedParams& p, double x);

// Extends (u, u') to derivs[0..order] by u'' = 2(V0 - eps) u. When source is given the
// recurrence is that of the epsilon-derivative: u'' = 2(V0 - eps) u - 2 source.
Jet jet_extend(const SystemKind& sys, cplx eps, Pair pair, double x, int order,
               const Jet* source = nullptr);

// Lowering operator a^- (HO) or b^- (RO); result solves the equation at eps - 1.
Pair annihilate(const SystemKind& sys, const Jet& jet);
// Raising operator a^+ (HO) or b^+ (RO); result solves the equation at eps + 1.
Pair create(const SystemKind& sys, const Jet& jet);

struct Verdict {
    enum class Status { Accept, Reject, Indeterminate };
    Status status = Status::Accept;
    std::string reason;
    bool pole_scan_required = false;
    bool accepted() const { return status == Status::Accept; }
};

Verdict validate_nodeless(const SystemKind& sys, const SeedParams& p, int k);

// x^{-j} e^{-x^2/4} (RO, energy 1 - E0) or x^{j+1} e^{-x^2/4} (RO, energy E0);
// e^{-x^2/2} for HO ground state.
Pair ro_lower_solution(double j, double x);
Pair ro_ground_state(double j, double x);
Pair ho_ground_state(double x);

}  // namespace susyp
