#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "figures.hpp"
#include "json.hpp"
#include "susyp/errors.hpp"
#include "susyp/hierarchies.hpp"
#include "susyp/painleve_iv.hpp"
#include "susyp/painleve_v.hpp"
#include "susyp/spectral.hpp"

namespace susyp::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Certification failure: the report is still written, then the process exits with 3.
class Uncertified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string system = "ho";
    double j = 0.0;
    int k = 1;
    std::string eps1 = "0";
    std::string nu;
    std::optional<double> lambda, kappa;
    std::string family;
    std::string grid;
    std::optional<double> tol;
    std::string output;
    std::string format = "csv";
    bool regularize = false;
    std::string equation = "piv";
    bool crosscheck = false;
    bool convergence = false;
    std::string figure;
    std::string output_dir = ".";
    bool list = false;
};

json cjson(cplx v) { return json::array({v.real(), v.imag()}); }

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> grid_points(const Grid& g) { return linspace(g.lo, g.hi, g.n); }

ChainSpec chain_from(const RunConfig& c) {
    SystemKind sys;
    if (c.system == "ho")
        sys = SystemKind::ho();
    else if (c.system == "ro")
        sys = SystemKind::ro(c.j);
    else
        throw UsageError("--system must be ho or ro");
    if (c.k < 1) throw UsageError("--k must be >= 1");
    Mixing m;
    bool lk = c.lambda || c.kappa;
    if (lk && !c.nu.empty()) throw UsageError("give either --nu or --lambda/--kappa, not both");
    if (lk)
        m = Mixing::from_lambda_kappa(c.lambda.value_or(0.0), c.kappa.value_or(0.0));
    else
        m = Mixing::from_nu(c.nu.empty() ? cplx(0.0) : parse_complex(c.nu));
    return {sys, c.k, {parse_complex(c.eps1), m}, c.regularize};
}

json mixing_json(const Mixing& m) {
    if (m.kind == Mixing::Kind::LambdaKappa) return {{"lambda", m.lambda}, {"kappa", m.kappa}};
    return {{"nu", cjson(m.nu)}};
}

json chain_json(const ChainSpec& c) {
    json j = {{"system", c.system.is_ro() ? "ro" : "ho"},
              {"k", c.k},
              {"epsilon1", cjson(c.seed.epsilon)},
              {"mixing", mixing_json(c.seed.mixing)}};
    if (c.system.is_ro()) j["j"] = c.system.j;
    if (c.regularize_degenerate) j["regularize_degenerate"] = true;
    return j;
}

// Rejects seeds that fail the nodeless rules; complex seeds pass and are pole-scanned later.
void require_valid(const ChainSpec& chain) {
    Verdict v = validate_nodeless(chain.system, chain.seed, chain.k);
    if (v.status == Verdict::Status::Reject) throw ValidationError("seed rejected: " + v.reason);
    if (v.status == Verdict::Status::Indeterminate)
        throw ValidationError("seed validity indeterminate: " + v.reason);
}

PIVFamily piv_family(const RunConfig& c) {
    return c.family.empty() ? PIVFamily::I : piv_family_from_string(c.family);
}

int pv_family(const RunConfig& c) {
    if (c.family.empty()) return 1;
    try {
        std::size_t used = 0;
        int f = std::stoi(c.family, &used);
        if (used == c.family.size() && f >= 1 && f <= 6) return f;
    } catch (const std::exception&) {
    }
    throw UsageError("PV --family must be an integer in 1..6");
}

bool is_complex(const ChainSpec& c) { return c.seed.mixing.is_complex() || c.seed.epsilon.imag() != 0.0; }

struct Table {
    std::string xname = "x";
    std::vector<double> x;
    std::vector<cplx> y;
};

std::string render(const std::string& format, const json& meta, const Table& t) {
    if (format == "json") {
        json data = json::array();
        for (std::size_t i = 0; i < t.x.size(); ++i)
            data.push_back(json::array({t.x[i], t.y[i].real(), t.y[i].imag()}));
        return json{{"meta", meta}, {"data", data}}.dump(1) + "\n";
    }
    std::string s = t.xname + ",re,im\n";
    for (std::size_t i = 0; i < t.x.size(); ++i)
        s += num(t.x[i]) + "," + num(t.y[i].real()) + "," + num(t.y[i].imag()) + "\n";
    return s;
}

void write_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw UsageError("cannot open '" + tmp.string() + "' for writing");
        f << content;
        if (!f.flush()) throw UsageError("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, p);
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
    if (c.output.empty())
        out << content;
    else
        write_atomic(c.output, content);
}

json base_meta(const RunConfig& c, const ChainSpec& chain) {
    return {{"command", c.command}, {"version", kVersion}, {"chain", chain_json(chain)}};
}

// Values on a grid; NodeError at any point aborts with every singular point listed.
Table sample(const std::vector<double>& xs, const std::function<cplx(double)>& f) {
    Table t;
    t.x = xs;
    t.y.assign(xs.size(), 0.0);
    std::vector<char> bad(xs.size(), 0);
    parallel_for(xs.size(), [&](std::size_t i) {
        try {
            t.y[i] = f(xs[i]);
        } catch (const NodeError&) {
            bad[i] = 1;
        }
    });
    std::vector<double> poles;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (bad[i]) poles.push_back(xs[i]);
    if (!poles.empty())
        throw NodeError("singular at " + std::to_string(poles.size()) + " grid point(s), first x = " +
                            num(poles.front()),
                        poles);
    return t;
}

Grid grid_or(const RunConfig& c, Grid fallback) { return c.grid.empty() ? fallback : parse_grid(c.grid); }

Grid default_x_grid(const ChainSpec& chain) {
    return chain.system.is_ro() ? Grid{0.1, 8.0, 401} : Grid{-5.0, 5.0, 1001};
}

json piv_params_json(const PIVParams& p) { return {{"a", cjson(p.a)}, {"b", cjson(p.b)}}; }
json pv_params_json(const PVParams& p) {
    return {{"a", cjson(p.a)}, {"b", cjson(p.b)}, {"c", cjson(p.c)}, {"d", cjson(p.d)}};
}

json residual_json(const ResidualReport& r, double tol) {
    return {{"max_normalized_residual", r.max_normalized},
            {"argmax", r.argmax},
            {"max_absolute_residual", r.max_absolute},
            {"points", r.points},
            {"excluded", r.excluded},
            {"tolerance", tol},
            {"certified", r.max_normalized <= tol && r.points > 0}};
}

std::vector<double> z_to_x(const std::vector<double>& z) {
    std::vector<double> x;
    for (double v : z) {
        if (!(v > 0.0)) throw UsageError("PV grid must have z > 0");
        x.push_back(std::sqrt(v));
    }
    return x;
}

int cmd_seed(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    require_valid(chain);
    Table t = sample(grid_points(grid_or(c, default_x_grid(chain))),
                     [&](double x) { return seed_eval(chain.system, chain.seed, x).first; });
    json meta = base_meta(c, chain);
    meta["quantity"] = "u";
    meta["mixing_coefficient"] = cjson(mixing_coefficient(chain.system, chain.seed));
    emit(c, render(c.format, meta, t), out);
    return kOk;
}

int cmd_potential(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    require_valid(chain);
    Table t = sample(grid_points(grid_or(c, default_x_grid(chain))),
                     [&](double x) { return partner_potential(chain, x); });
    json meta = base_meta(c, chain);
    meta["quantity"] = "V_k";
    emit(c, render(c.format, meta, t), out);
    return kOk;
}

int cmd_piv(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    require_valid(chain);
    PIVSolution sol(chain, piv_family(c));
    Table t = sample(grid_points(grid_or(c, {-5.0, 5.0, 1001})), [&](double x) { return sol.eval(x).g; });
    json meta = base_meta(c, chain);
    meta["quantity"] = "g";
    meta["family"] = to_string(sol.family());
    meta["params"] = piv_params_json(sol.params());
    emit(c, render(c.format, meta, t), out);
    return kOk;
}

int cmd_pv(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    if (!chain.system.is_ro()) throw ValidationError("pv needs --system ro");
    require_valid(chain);
    PVSolution sol(chain, pv_family(c));
    std::vector<double> z = grid_points(grid_or(c, {0.01, 25.0, 1000}));
    z_to_x(z);
    Table t = sample(z, [&](double v) { return sol.eval_w(v).w; });
    t.xname = "z";
    json meta = base_meta(c, chain);
    meta["quantity"] = "w";
    meta["family"] = sol.family();
    meta["params"] = pv_params_json(sol.params());
    emit(c, render(c.format, meta, t), out);
    return kOk;
}

int finish_report(const RunConfig& c, const json& report, std::ostream& out) {
    emit(c, report.dump(1) + "\n", out);
    if (!report.value("certified", false)) throw Uncertified("certification failed");
    return kOk;
}

int cmd_verify_piv(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    require_valid(chain);
    PIVSolution sol(chain, piv_family(c));
    std::vector<double> grid = grid_points(grid_or(c, {-5.0, 5.0, 2001}));
    double tol = c.tol.value_or(is_complex(chain) ? 1e-6 : 1e-7);
    std::vector<double> poles = piv_pole_scan(sol, grid);
    ResidualReport r = piv_residual(sol, grid);
    json rep = base_meta(c, chain);
    rep["equation"] = "PIV";
    rep["family"] = to_string(sol.family());
    rep["params"] = piv_params_json(sol.params());
    rep.update(residual_json(r, tol));
    rep["poles"] = poles;
    rep["certified"] = rep["certified"].get<bool>() && poles.empty();
    return finish_report(c, rep, out);
}

int cmd_verify_pv(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    if (!chain.system.is_ro()) throw ValidationError("verify-pv needs --system ro");
    require_valid(chain);
    PVSolution sol(chain, pv_family(c));
    std::vector<double> z = grid_points(grid_or(c, {0.01, 25.0, 2000}));
    std::vector<double> poles = pv_pole_scan(sol, z_to_x(z));
    double tol = c.tol.value_or(1e-6);
    ResidualReport r = pv_residual(sol, z);
    json rep = base_meta(c, chain);
    rep["equation"] = "PV";
    rep["family"] = sol.family();
    rep["params"] = pv_params_json(sol.params());
    rep.update(residual_json(r, tol));
    rep["poles_x"] = poles;
    rep["certified"] = rep["certified"].get<bool>() && poles.empty();
    return finish_report(c, rep, out);
}

json spectrum_json(const ChainSpec& chain, const SolverConfig& cfg, double tol, bool convergence) {
    SpectrumReport s = spectrum_check(chain, cfg);
    json levels = json::array();
    for (std::size_t i = 0; i < s.computed.size(); ++i)
        levels.push_back({{"computed", s.computed[i]}, {"predicted", s.predicted[i]}, {"deviation", s.deviations[i]}});
    json rep = {{"domain", {s.lo, s.hi}}, {"n", s.n}, {"levels", levels},
                {"max_deviation", s.max_deviation()}, {"tolerance", tol}};
    bool ok = s.max_deviation() <= tol;
    if (convergence) {
        auto ratios = convergence_ratios(chain, cfg);
        rep["richardson_ratios"] = ratios;
        for (double r : ratios) ok = ok && r >= 3.0 && r <= 5.0;
    }
    rep["certified"] = ok;
    return rep;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    ChainSpec chain = chain_from(c);
    require_valid(chain);
    SolverConfig cfg;
    if (!c.grid.empty()) {
        Grid g = parse_grid(c.grid);
        cfg.lo = g.lo;
        cfg.hi = g.hi;
        cfg.n = static_cast<int>(g.n);
    }
    json rep = base_meta(c, chain);
    rep.update(spectrum_json(chain, cfg, c.tol.value_or(5e-3), c.convergence));
    return finish_report(c, rep, out);
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
    Equation eq;
    if (c.equation == "piv")
        eq = Equation::PIV;
    else if (c.equation == "pv")
        eq = Equation::PV;
    else
        throw UsageError("--equation must be piv or pv");
    std::optional<double> j;
    if (eq == Equation::PV) j = c.j;
    std::optional<Mixing> m;
    if (!c.nu.empty()) m = Mixing::from_nu(parse_complex(c.nu));
    if (c.lambda || c.kappa) m = Mixing::from_lambda_kappa(c.lambda.value_or(0.0), c.kappa.value_or(0.0));
    HierarchyLabel l = classify(eq, c.k, parse_complex(c.eps1), j, m);
    json rep = {{"command", c.command}, {"version", kVersion}, {"equation", to_string(l.equation)},
                {"hierarchy", l.name}, {"form", l.form}, {"k", l.k}, {"epsilon1", cjson(l.epsilon1)}};
    if (l.j) rep["j"] = *l.j;
    json params = json::object();
    for (const auto& [key, v] : l.parameters) params[key] = cjson(v);
    rep["parameters"] = params;
    if (c.crosscheck && !l.form.empty()) {
        Grid g = grid_or(c, {-5.0, 5.0, 1001});
        CrosscheckReport r = crosscheck(l, grid_points(g), c.tol.value_or(1e-10));
        rep["crosscheck"] = {{"status", to_string(r.status)}, {"reason", r.reason},
                             {"max_deviation", r.max_deviation}, {"argmax", r.argmax},
                             {"matched_nu", cjson(r.matched_nu)}};
        emit(c, rep.dump(1) + "\n", out);
        if (r.status == CrosscheckReport::Status::Failed) throw Uncertified("cross-check failed");
        return kOk;
    }
    emit(c, rep.dump(1) + "\n", out);
    return kOk;
}

std::string file_safe(const std::string& s) {
    std::string r;
    for (char ch : s) r += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '.' || ch == '_') ? ch : '_';
    return r;
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
    if (c.list) {
        for (const auto& f : figure_registry()) out << f.id << "\t" << f.description << "\n";
        return kOk;
    }
    const Figure* fig;
    try {
        fig = &find_figure(c.figure);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    std::filesystem::create_directories(c.output_dir);
    json curves = json::array();
    bool all_ok = true;
    for (const Curve& cv : fig->curves) {
        json entry = {{"name", cv.name}, {"chain", chain_json(cv.chain)}};
        Verdict v = validate_nodeless(cv.chain.system, cv.chain.seed, cv.chain.k);
        entry["validation"] = v.status == Verdict::Status::Accept   ? "accept"
                              : v.status == Verdict::Status::Reject ? "reject"
                                                                    : "indeterminate";
        if (!v.reason.empty()) entry["validation_reason"] = v.reason;
        std::vector<double> pts = linspace(cv.lo, cv.hi, cv.n);
        Table t;
        json check;
        try {
            switch (cv.kind) {
                case Curve::Kind::Potential: {
                    t = sample(pts, [&](double x) { return partner_potential(cv.chain, x); });
                    double worst = 0.0;
                    if (cv.chain.k > 1) {
                        for (std::size_t i = 0; i < pts.size(); i += 10) {
                            cplx r = riccati_potential(cv.chain, pts[i]);
                            worst = std::max(worst, std::abs(r - t.y[i]) / std::max(1.0, std::abs(t.y[i])));
                        }
                    }
                    check = {{"riccati_vs_wronskian", worst}, {"tolerance", 1e-9}, {"certified", worst <= 1e-9}};
                    if (fig->spectrum) {
                        json s = spectrum_json(cv.chain, {}, 5e-3, false);
                        check["spectrum"] = s;
                        check["certified"] = check["certified"].get<bool>() && s["certified"].get<bool>();
                    }
                    break;
                }
                case Curve::Kind::PIV: {
                    PIVSolution sol(cv.chain, cv.piv_family);
                    t = sample(pts, [&](double x) { return sol.eval(x).g; });
                    double tol = is_complex(cv.chain) ? 1e-6 : 1e-7;
                    check = residual_json(piv_residual(sol, pts), tol);
                    check["family"] = to_string(cv.piv_family);
                    check["params"] = piv_params_json(sol.params());
                    break;
                }
                case Curve::Kind::PV: {
                    PVSolution sol(cv.chain, cv.pv_family);
                    t = sample(pts, [&](double z) { return sol.eval_w(z).w; });
                    t.xname = "z";
                    check = residual_json(pv_residual(sol, pts), 1e-6);
                    check["family"] = cv.pv_family;
                    check["params"] = pv_params_json(sol.params());
                    break;
                }
            }
            std::string file = file_safe(fig->id + "_" + cv.name) + ".csv";
            write_atomic((std::filesystem::path(c.output_dir) / file).string(), render("csv", {}, t));
            entry["file"] = file;
        } catch (const Error& e) {
            check = {{"certified", false}, {"error", e.what()}};
        }
        entry["verification"] = check;
        bool ok = check.value("certified", false);
        all_ok = all_ok && ok;
        out << (ok ? "ok   " : "FAIL ") << fig->id << " " << cv.name << "\n";
        curves.push_back(entry);
    }
    json report = {{"figure", fig->id}, {"description", fig->description}, {"version", kVersion},
                   {"curves", curves}, {"certified", all_ok}};
    write_atomic((std::filesystem::path(c.output_dir) / (fig->id + "_report.json")).string(),
                 report.dump(1) + "\n");
    if (!all_ok) throw Uncertified("figure " + fig->id + ": some curves failed verification");
    return kOk;
}

void add_chain_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--system", c.system, "ho or ro")->check(CLI::IsMember({"ho", "ro"}));
    sub->add_option("--j", c.j, "radial oscillator angular index");
    sub->add_option("--k", c.k, "chain order");
    sub->add_option("--eps1", c.eps1, "factorization energy, re[+imi]");
    sub->add_option("--nu", c.nu, "mixing constant nu, re[+imi]");
    sub->add_option("--lambda", c.lambda, "real part of the complex mixing constant");
    sub->add_option("--kappa", c.kappa, "imaginary part of the complex mixing constant");
    sub->add_flag("--regularize", c.regularize, "replace annihilated chain members by the confluent limit");
}

void add_output_options(CLI::App* sub, RunConfig& c, bool with_format) {
    sub->add_option("--grid", c.grid, "lo:hi:n");
    sub->add_option("--output,-o", c.output, "output file (default stdout)");
    if (with_format) sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

cplx parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw UsageError("empty complex number");
    auto real_of = [&](const std::string& t) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw UsageError("malformed number '" + raw + "'");
        }
        if (used != t.size()) throw UsageError("malformed number '" + raw + "'");
        return v;
    };
    if (s.back() != 'i') return real_of(s);
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    double iv = (im.empty() || im == "+") ? 1.0 : im == "-" ? -1.0 : real_of(im);
    return {re.empty() ? 0.0 : real_of(re), iv};
}

Grid parse_grid(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("grid must be lo:hi:n (got '" + s + "')");
    Grid g;
    try {
        std::size_t u1 = 0, u2 = 0, u3 = 0;
        g.lo = std::stod(parts[0], &u1);
        g.hi = std::stod(parts[1], &u2);
        long n = std::stol(parts[2], &u3);
        if (u1 != parts[0].size() || u2 != parts[1].size() || u3 != parts[2].size()) throw std::invalid_argument("");
        if (n < 2) throw UsageError("grid needs n >= 2");
        g.n = static_cast<std::size_t>(n);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed grid '" + s + "'");
    }
    if (!(g.lo < g.hi)) throw UsageError("grid needs lo < hi");
    return g;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"SUSY QM chains and Painleve IV/V solutions", "susypainleve"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    RunConfig c;

    auto* seed = app.add_subcommand("seed", "seed solution u(x) after nodeless validation");
    auto* pot = app.add_subcommand("potential", "SUSY partner potential V_k(x)");
    auto* piv = app.add_subcommand("piv", "PIV solution g(x)");
    auto* pv = app.add_subcommand("pv", "PV solution w(z)");
    auto* vpiv = app.add_subcommand("verify-piv", "PIV residual certification");
    auto* vpv = app.add_subcommand("verify-pv", "PV residual certification");
    auto* spec = app.add_subcommand("spectrum", "finite-difference spectrum against the prediction");
    auto* cls = app.add_subcommand("classify", "solution hierarchy of a configuration");
    auto* fig = app.add_subcommand("reproduce-figure", "named figure configuration with verification");

    for (auto* s : {seed, pot, piv, pv, vpiv, vpv, spec}) add_chain_options(s, c);
    for (auto* s : {seed, pot, piv, pv}) add_output_options(s, c, true);
    for (auto* s : {vpiv, vpv, spec}) add_output_options(s, c, false);
    for (auto* s : {piv, pv, vpiv, vpv}) s->add_option("--family", c.family, "PIV: i, ii, iii; PV: 1..6");
    for (auto* s : {vpiv, vpv, spec}) s->add_option("--tol", c.tol, "certification tolerance");
    spec->add_flag("--convergence", c.convergence, "also require Richardson ratios in [3, 5]");

    cls->add_option("--equation", c.equation, "piv or pv")->check(CLI::IsMember({"piv", "pv"}));
    cls->add_option("--k", c.k, "chain order");
    cls->add_option("--eps1", c.eps1, "factorization energy, re[+imi]");
    cls->add_option("--j", c.j, "radial oscillator angular index (PV)");
    cls->add_option("--nu", c.nu, "mixing constant nu");
    cls->add_option("--lambda", c.lambda, "real part of the complex mixing constant");
    cls->add_option("--kappa", c.kappa, "imaginary part of the complex mixing constant");
    cls->add_flag("--crosscheck", c.crosscheck, "compare the closed form with the generator");
    cls->add_option("--grid", c.grid, "cross-check grid lo:hi:n");
    cls->add_option("--tol", c.tol, "cross-check tolerance");
    cls->add_option("--output,-o", c.output, "output file (default stdout)");

    fig->add_option("id", c.figure, "figure id");
    fig->add_option("--output-dir,-d", c.output_dir, "directory for curves and report");
    fig->add_flag("--list", c.list, "list figure ids");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        if (c.command == "seed") return cmd_seed(c, out);
        if (c.command == "potential") return cmd_potential(c, out);
        if (c.command == "piv") return cmd_piv(c, out);
        if (c.command == "pv") return cmd_pv(c, out);
        if (c.command == "verify-piv") return cmd_verify_piv(c, out);
        if (c.command == "verify-pv") return cmd_verify_pv(c, out);
        if (c.command == "spectrum") return cmd_spectrum(c, out);
        if (c.command == "classify") return cmd_classify(c, out);
        if (c.figure.empty() && !c.list) throw UsageError("reproduce-figure needs an id (or --list)");
        return cmd_figure(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Uncertified& e) {
        err << "certification failure: " << e.what() << "\n";
        return kUncertified;
    } catch (const NodeError& e) {
        err << "certification failure: " << e.what() << "\n";
        return kUncertified;
    } catch (const ConvergenceError& e) {
        err << "certification failure: " << e.what() << "\n";
        return kUncertified;
    } catch (const DegenerateError& e) {
        err << "certification failure: " << e.what() << "\n";
        return kUncertified;
    } catch (const Error& e) {
        err << "rejected: " << e.what() << "\n";
        return kRejected;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace susyp::cli
