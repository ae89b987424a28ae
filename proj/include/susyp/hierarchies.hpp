#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "susyp/oscillators.hpp"

namespace susyp {

enum class Equation { PIV, PV };

std::string to_string(Equation e);

struct HierarchyLabel {
    Equation equation = Equation::PIV;
    // confluent-hypergeometric, error-function, rational, Laguerre, Hermite, exponential,
    // modified-Bessel, Weber
    std::string name;
    // Identifier of a displayed closed form ("" when only the family is known).
    std::string form;
    int k = 1;
    cplx epsilon1 = 0.0;
    std::optional<double> j;
    std::map<std::string, cplx> parameters;  // nu, n, order, ...
};

HierarchyLabel classify(Equation eq, int k, cplx epsilon1, std::optional<double> j = std::nullopt,
                        std::optional<Mixing> mixing = std::nullopt);

// All displayed closed forms, by identifier.
std::vector<std::string> closed_form_catalogue();
// Label for a catalogued form with its generating (k, eps1[, j]) filled in.
HierarchyLabel catalogue_label(const std::string& form);

// g(x) for PIV forms, w(z) for PV forms.
cplx closed_form(const HierarchyLabel& label, double point);
// Value with first and second derivative.
std::array<cplx, 3> closed_form_jet(const HierarchyLabel& label, double point);

struct SelfCheck {
    bool passes = false;
    double max_residual = 0.0;
    std::array<double, 4> params{};  // (a, b) for PIV; (a, b, c, d) for PV (fitted)
    std::string note;
};

// Residual of the closed form in its own equation (PIV: with the family-i parameters of the
// label; PV: with least-squares fitted a, b, c, d). Threshold 1e-9.
SelfCheck closed_form_self_check(const HierarchyLabel& label);

struct CrosscheckReport {
    enum class Status { Passed, Failed, Skipped };
    Status status = Status::Skipped;
    std::string reason;
    double max_deviation = 0.0;
    double argmax = 0.0;
    cplx matched_nu = 0.0;
};

std::string to_string(CrosscheckReport::Status s);

// Compares the closed form against the chain generator at the label's (k, eps1[, j]); the
// mixing constant is fixed by matching at one reference point.
CrosscheckReport crosscheck(const HierarchyLabel& label, const std::vector<double>& grid,
                            double tol = 1e-10);

}  // namespace susyp
