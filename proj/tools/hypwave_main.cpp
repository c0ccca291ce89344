// Batch verification and data-emission front end: identity checks,
// kernel profiles, convergence traces and domain summaries, emitted as
// deterministic CSV or JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypwave/nonhomog.hpp"
#include "hypwave/poisson.hpp"

using nlohmann::json;
using namespace hypwave;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Short form for human-facing labels (check names).
std::string label(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct CheckRow {
    std::string name;
    double lhs, rhs, residual, tol;
    bool pass;
};

struct Output {
    std::string format = "json";
    std::string path;  // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw ConfigError("cannot open output file: " + path);
            f << text;
        }
    }
};

std::string checks_to_csv(const std::vector<CheckRow>& checks) {
    std::string out = "name,lhs,rhs,residual,tol,pass\n";
    for (const auto& c : checks) {
        out += c.name + "," + fmt(c.lhs) + "," + fmt(c.rhs) + "," + fmt(c.residual) +
               "," + fmt(c.tol) + "," + (c.pass ? "1" : "0") + "\n";
    }
    return out;
}

json checks_to_json(const std::string& command, const json& config,
                    const std::vector<CheckRow>& checks) {
    json jchecks = json::array();
    for (const auto& c : checks) {
        jchecks.push_back({{"name", c.name},
                           {"lhs", c.lhs},
                           {"rhs", c.rhs},
                           {"residual", c.residual},
                           {"tol", c.tol},
                           {"pass", c.pass}});
    }
    return {{"command", command},
            {"config", config},
            {"checks", jchecks},
            {"meta", {{"version", kVersion}}}};
}

json rows_to_json(const std::string& command, const json& config,
                  const std::vector<std::string>& columns,
                  const std::vector<std::vector<double>>& rows) {
    json jrows = json::array();
    for (const auto& r : rows) {
        json jr;
        for (std::size_t i = 0; i < columns.size(); ++i) jr[columns[i]] = r[i];
        jrows.push_back(jr);
    }
    return {{"command", command},
            {"config", config},
            {"rows", jrows},
            {"meta", {{"version", kVersion}}}};
}

std::string rows_to_csv(const std::vector<std::string>& columns,
                        const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out += (i ? "," : "") + columns[i];
    }
    out += "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            out += (i ? "," : "") + fmt(r[i]);
        }
        out += "\n";
    }
    return out;
}

struct CommonOpts {
    double p = 2.0;
    std::vector<double> Qxy{1.25, 0.75};
    std::vector<double> rhos;
    std::string F_text, G_text, manufactured_text;
    double tol = 1e-8;
    Output out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_fields) {
    cmd->add_option("--p", o.p, "gamma semi-diameter");
    cmd->add_option("--Q", o.Qxy, "evaluation point x,y")->delimiter(',')->expected(2);
    cmd->add_option("--rho", o.rhos, "inner semi-diameter schedule")->delimiter(',');
    if (with_fields) {
        cmd->add_option("--F", o.F_text, "profile F(s) of the d'Alembert field");
        cmd->add_option("--G", o.G_text, "profile G(t) of the d'Alembert field");
        cmd->add_option("--manufactured", o.manufactured_text,
                        "polynomial u(s,t); runs the non-homogeneous checks with f = Delta_2 u");
    }
    cmd->add_option("--tol", o.tol, "relative residual tolerance for pass/fail");
    cmd->add_option("--format", o.out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out.path, "output file (default stdout)");
}

DependenceConfig config_of(const CommonOpts& o) {
    return DependenceConfig::make({o.Qxy[0], o.Qxy[1]}, o.p);
}

json config_json(const CommonOpts& o, const DependenceConfig& cfg) {
    json j = {{"p", o.p},
              {"Q", {o.Qxy[0], o.Qxy[1]}},
              {"q", cfg.q},
              {"alpha", cfg.alpha},
              {"A_p", cfg.A_p}};
    if (!o.F_text.empty()) j["F"] = o.F_text;
    if (!o.G_text.empty()) j["G"] = o.G_text;
    if (!o.manufactured_text.empty()) j["manufactured"] = o.manufactured_text;
    if (!o.rhos.empty()) j["rho"] = o.rhos;
    return j;
}

const QuadSpec kCliSpec{1e-10, 1e-12, 48, 8};

int run_verify(const CommonOpts& o) {
    const DependenceConfig cfg = config_of(o);
    if (o.manufactured_text.empty() && o.F_text.empty() && o.G_text.empty()) {
        throw ConfigError("verify: provide --F/--G or --manufactured");
    }
    std::vector<double> rhos = o.rhos.empty() ? std::vector<double>{0.1, 0.01} : o.rhos;
    std::vector<CheckRow> checks;
    auto push = [&](const std::string& name, const IdentityResult& r, double tol) {
        checks.push_back({name, r.lhs, r.rhs, r.residual, tol,
                          r.residual <= tol * (1.0 + std::abs(r.rhs))});
    };

    if (!o.manufactured_text.empty()) {
        const auto prob =
            SourceProblem::from_poly(PolyST::parse(o.manufactured_text), cfg);
        push("nonhomog_final_identity", nonhomog_final_identity(prob, kCliSpec), o.tol);
        for (const double rho : rhos) {
            push("combined_identity_finite[rho=" + label(rho) + "]",
                 combined_identity_finite(prob, rho, kCliSpec), o.tol);
        }
    } else {
        const PolyST F = o.F_text.empty() ? PolyST{} : PolyST::parse(o.F_text);
        const PolyST G = o.G_text.empty() ? PolyST{} : PolyST::parse(o.G_text);
        const ScalarField u = dalembert(F, G);
        push("final_identity", final_identity(u, cfg), o.tol);
        for (const double rho : rhos) {
            push("finite_rho_identity[rho=" + label(rho) + "]",
                 finite_rho_identity(u, cfg, rho, kCliSpec), o.tol);
        }
    }

    if (o.out.format == "csv") {
        o.out.emit(checks_to_csv(checks));
    } else {
        o.out.emit(checks_to_json("verify", config_json(o, cfg), checks).dump(2) + "\n");
    }
    for (const auto& c : checks) {
        if (!c.pass) return 1;
    }
    return 0;
}

struct KernelTableOpts {
    CommonOpts common;
    std::vector<double> phi_range{0.0, 0.6};
    int samples = 7;
};

int run_kernel_table(const KernelTableOpts& o) {
    const DependenceConfig cfg = config_of(o.common);
    if (o.samples < 2) throw ConfigError("kernel-table: need at least 2 samples");
    const double lo = o.phi_range[0], hi = o.phi_range[1];
    const double phi2 = cfg.phi2();
    if (!(lo <= hi) || std::abs(lo) >= phi2 || std::abs(hi) >= phi2) {
        throw ConfigError("kernel-table: phi range must lie inside (-phi2, phi2)");
    }
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < o.samples; ++i) {
        const double phi = lo + (hi - lo) * i / (o.samples - 1);
        const double k = kernel(cfg.p, cfg.q, phi);
        const double integral =
            phi >= 0 ? kernel_integral_closed_form(cfg.p, cfg.q, phi)
                     : -kernel_integral_closed_form(cfg.p, cfg.q, -phi);
        rows.push_back({phi, k, integral});
    }
    const std::vector<std::string> cols{"phi", "kernel", "integral_from_0"};
    if (o.common.out.format == "csv") {
        o.common.out.emit(rows_to_csv(cols, rows));
    } else {
        o.common.out.emit(
            rows_to_json("kernel-table", config_json(o.common, cfg), cols, rows).dump(2) +
            "\n");
    }
    return 0;
}

struct ConvergenceOpts {
    CommonOpts common;
    int order = 2;
};

int run_convergence(const ConvergenceOpts& o) {
    const DependenceConfig cfg = config_of(o.common);
    if (o.common.F_text.empty() && o.common.G_text.empty()) {
        throw ConfigError("convergence: provide --F/--G");
    }
    const PolyST F = o.common.F_text.empty() ? PolyST{} : PolyST::parse(o.common.F_text);
    const PolyST G = o.common.G_text.empty() ? PolyST{} : PolyST::parse(o.common.G_text);
    const ScalarField u = dalembert(F, G);
    std::vector<double> rhos =
        o.common.rhos.empty() ? std::vector<double>{1e-2, 1e-3, 1e-4, 1e-5} : o.common.rhos;

    std::vector<std::vector<double>> rows;
    std::vector<FitPoint> mi, ms, bs;
    for (const double rho : rhos) {
        const RhoAngles ang = rho_angles(cfg, rho);
        const double w = 1.0 / ang.theta_i;
        const double mean_i = mean_on_I(u, cfg, rho, false, kCliSpec);
        const double mean_is = mean_on_I(u, cfg, rho, true, kCliSpec);
        const double bsum =
            kernel_weighted_boundary(u, cfg, ang, kCliSpec) / (2.0 * ang.theta_i);
        rows.push_back({rho, ang.theta_i, ang.theta_i_star, w, mean_i, mean_is, bsum});
        mi.push_back({w, mean_i});
        ms.push_back({w, mean_is});
        bs.push_back({w, bsum});
    }
    // Extrapolated summary row at rho = 0 when the schedule supports it.
    // Coarse user schedules carry visible pre-asymptotic deviation, so the
    // junk-sequence diagnostic is run at 5%.
    if (static_cast<int>(rhos.size()) >= o.order + 1) {
        rows.push_back({0.0, 0.0, 0.0, 0.0,
                        extrapolate_to_zero(mi, o.order, 5e-2),
                        extrapolate_to_zero(ms, o.order, 5e-2),
                        extrapolate_to_zero(bs, o.order, 5e-2)});
    }
    const std::vector<std::string> cols{"rho",  "theta_i", "theta_i_star", "w",
                                        "mean_I", "mean_Istar", "boundary_sum"};
    if (o.common.out.format == "csv") {
        o.common.out.emit(rows_to_csv(cols, rows));
    } else {
        o.common.out.emit(
            rows_to_json("convergence", config_json(o.common, cfg), cols, rows).dump(2) +
            "\n");
    }
    return 0;
}

int run_domain_info(const CommonOpts& o) {
    const DependenceConfig cfg = config_of(o);
    json info = {{"command", "domain-info"},
                 {"config", config_json(o, cfg)},
                 {"q", cfg.q},
                 {"qstar", cfg.qstar},
                 {"alpha", cfg.alpha},
                 {"A_p", cfg.A_p},
                 {"phi2", cfg.phi2()},
                 {"Qstar", {cfg.Qstar.x, cfg.Qstar.y}},
                 {"P1", {cfg.P1.x, cfg.P1.y}},
                 {"P2", {cfg.P2.x, cfg.P2.y}},
                 {"meta", {{"version", kVersion}}}};
    std::vector<std::vector<double>> rows;
    for (const double rho : o.rhos) {
        const RhoAngles ang = rho_angles(cfg, rho);
        rows.push_back({rho, ang.rhostar, ang.phi_i, ang.theta_i, ang.theta_i_star,
                        ang.theta_i_star / ang.theta_i});
    }
    const std::vector<std::string> cols{"rho",     "rhostar",      "phi_i",
                                        "theta_i", "theta_i_star", "ratio"};
    if (o.out.format == "csv") {
        std::string text;
        text += "key,value\n";
        text += "q," + fmt(cfg.q) + "\n";
        text += "qstar," + fmt(cfg.qstar) + "\n";
        text += "alpha," + fmt(cfg.alpha) + "\n";
        text += "A_p," + fmt(cfg.A_p) + "\n";
        text += "phi2," + fmt(cfg.phi2()) + "\n";
        text += "Qstar_x," + fmt(cfg.Qstar.x) + "\n";
        text += "Qstar_y," + fmt(cfg.Qstar.y) + "\n";
        text += "P1_x," + fmt(cfg.P1.x) + "\n";
        text += "P1_y," + fmt(cfg.P1.y) + "\n";
        text += "P2_x," + fmt(cfg.P2.x) + "\n";
        text += "P2_y," + fmt(cfg.P2.y) + "\n";
        if (!rows.empty()) {
            text += "\n" + rows_to_csv(cols, rows);
        }
        o.out.emit(text);
    } else {
        if (!rows.empty()) {
            json jrows = json::array();
            for (const auto& r : rows) {
                json jr;
                for (std::size_t i = 0; i < cols.size(); ++i) jr[cols[i]] = r[i];
                jrows.push_back(jr);
            }
            info["rows"] = jrows;
        }
        o.out.emit(info.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wave-equation identities on the hyperbolic plane"};
    app.require_subcommand(1);

    CommonOpts verify_opts;
    auto* verify = app.add_subcommand(
        "verify", "run identity checks and emit a pass/fail report (exit 0 pass, 1 fail)");
    add_common(verify, verify_opts, true);

    KernelTableOpts kt;
    auto* kernel_cmd =
        app.add_subcommand("kernel-table", "sample the Poisson-like kernel over a phi range");
    add_common(kernel_cmd, kt.common, false);
    kernel_cmd->add_option("--phi", kt.phi_range, "phi range lo,hi")
        ->delimiter(',')
        ->expected(2);
    kernel_cmd->add_option("--samples", kt.samples, "number of sample rows");

    ConvergenceOpts cv;
    auto* conv = app.add_subcommand(
        "convergence",
        "trace mean values and the kernel-side sum over a rho schedule; a final rho=0 row "
        "holds the extrapolated limits");
    add_common(conv, cv.common, true);
    conv->add_option("--order", cv.order, "extrapolation order in w = 1/theta_i");

    CommonOpts di;
    auto* dom = app.add_subcommand("domain-info",
                                   "report Q*, P1, P2 and per-rho angle tables");
    add_common(dom, di, false);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(verify_opts);
        if (kernel_cmd->parsed()) return run_kernel_table(kt);
        if (conv->parsed()) return run_convergence(cv);
        if (dom->parsed()) return run_domain_info(di);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
