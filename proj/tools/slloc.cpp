// Command-line front end: transforms, eigensolves, localization envelopes,
// landscape iterations, and scripted reproduction of the bundled studies.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slloc/csv.hpp"
#include "slloc/experiments.hpp"
#include "slloc/landscape.hpp"
#include "slloc/localization.hpp"
#include "slloc/spectral.hpp"

namespace fs = std::filesystem;
using namespace slloc;

namespace {

struct CommonOpts {
    std::string preset_name;
    std::string config_path;
    int grid = 0;  // 0 = per-problem default
    std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_grid = true) {
    cmd->add_option("--preset", o.preset_name, "named problem configuration");
    cmd->add_option("--config", o.config_path, "path to a JSON problem config");
    if (with_grid) cmd->add_option("--grid", o.grid, "grid size (odd, >= 65)");
    cmd->add_option("--out", o.out_dir, "output directory (default: $SLLOC_OUT_DIR or ./slloc-out)");
}

std::string resolve_out(const CommonOpts& o) {
    if (!o.out_dir.empty()) return o.out_dir;
    if (const char* env = std::getenv("SLLOC_OUT_DIR")) return env;
    return "slloc-out";
}

Problem resolve_problem(const CommonOpts& o) {
    if (!o.preset_name.empty() && !o.config_path.empty())
        throw ValidationError("give either --preset or --config, not both");
    if (!o.preset_name.empty()) return preset(o.preset_name);
    if (!o.config_path.empty()) return Problem::from_config_file(o.config_path);
    throw ValidationError("a problem is required: --preset NAME or --config PATH");
}

int resolve_grid(const CommonOpts& o, const Problem& prob) {
    if (o.grid == 0) return prob.length() <= 1.0 ? 4097 : 8193;
    if (o.grid % 2 == 0 || o.grid < 65)
        throw ValidationError("--grid must be odd and at least 65");
    return o.grid;
}

std::string label_of(const Problem& prob) {
    return prob.label().empty() ? "problem" : prob.label();
}

// The landscape bound formulas assume a unit weight; with w != 1 they are
// still emitted but the L2 norms are w-weighted, and the outputs say so.
bool unit_weight(const Problem& prob) {
    const int m = prob.audit_points();
    for (int i = 0; i < m; ++i)
        if (std::abs(prob.w().value(prob.length() * i / (m - 1)) - 1.0) > 1e-12) return false;
    return true;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
    const fs::path dir(resolve_out(o));
    std::error_code ec;
    fs::create_directories(dir, ec);
    return (dir / name).string();
}

void cmd_transform(const CommonOpts& o) {
    const Problem prob = resolve_problem(o);
    const int n = resolve_grid(o, prob);
    const LiouvilleForm lf = transform(prob, n);
    const std::string path = out_path(o, "transform_" + label_of(prob) + ".csv");
    CsvFile csv(path, {"y", "x_of_y", "f", "Q"});
    for (int j = 0; j < n; ++j)
        csv.row({lf.Q().grid.node(j), lf.x_of_y().values[j], lf.f().values[j],
                 lf.Q().values[j]});
    write_sidecar(path, {{"command", json_quote("transform")},
                         {"preset", json_quote(label_of(prob))},
                         {"grid", std::to_string(n)},
                         {"B", format_number(lf.B())},
                         {"q_sup", format_number(lf.q_norms().sup)},
                         {"q_l4", format_number(lf.q_norms().l4)},
                         {"q_l1", format_number(lf.q_norms().l1)}});
    std::cout << path << "\n";
}

void cmd_eigs(const CommonOpts& o, int modes, const std::vector<int>& dump_modes) {
    const Problem prob = resolve_problem(o);
    const int n = resolve_grid(o, prob);
    const auto pairs = eigenpairs_direct(prob, modes, n);
    const std::string path = out_path(o, "eigs_" + label_of(prob) + ".csv");
    CsvFile csv(path, {"n", "lambda", "alpha"});
    for (const auto& pair : pairs)
        csv.row({static_cast<double>(pair.index), pair.lambda, alpha(pair.values)});
    write_sidecar(path, {{"command", json_quote("eigs")},
                         {"preset", json_quote(label_of(prob))},
                         {"grid", std::to_string(n)},
                         {"modes", std::to_string(modes)}});
    std::cout << path << "\n";
    for (int mode : dump_modes) {
        if (mode < 1 || mode > modes)
            throw ValidationError("--dump-modes entry out of the computed range");
        const std::string mp =
            out_path(o, "eigs_" + label_of(prob) + "_mode_" + std::to_string(mode) + ".csv");
        CsvFile mcsv(mp, {"x", "phi"});
        const auto& pair = pairs[mode - 1];
        for (int i = 0; i < n; ++i) mcsv.row({pair.values.grid.node(i), pair.values.values[i]});
        write_sidecar(mp, {{"command", json_quote("eigs")},
                           {"preset", json_quote(label_of(prob))},
                           {"grid", std::to_string(n)},
                           {"mode", std::to_string(mode)},
                           {"lambda", format_number(pair.lambda)}});
        std::cout << mp << "\n";
    }
}

void cmd_alpha(const CommonOpts& o, int modes) {
    const Problem prob = resolve_problem(o);
    const int n = resolve_grid(o, prob);
    const LiouvilleForm lf = transform(prob, n);
    const auto pairs = eigenpairs_direct(prob, modes, n);
    const std::string path = out_path(o, "alpha_" + label_of(prob) + ".csv");
    CsvFile csv(path, {"n", "lambda", "alpha", "alpha_phi", "lower", "upper", "applicable"});
    for (const auto& pair : pairs) {
        const BoundCoefficients c = bound_coefficients(lf, prob, pair.lambda);
        const Theorem1Envelope env = theorem1_envelope(c);
        csv.row({static_cast<double>(pair.index), pair.lambda, alpha(pair.values),
                 alpha_phi_closed_form(pair.lambda, lf.B()), env.lower, env.upper,
                 env.applicable ? 1.0 : 0.0});
    }
    write_sidecar(path, {{"command", json_quote("alpha")},
                         {"preset", json_quote(label_of(prob))},
                         {"grid", std::to_string(n)},
                         {"modes", std::to_string(modes)},
                         {"B", format_number(lf.B())}});
    std::cout << path << "\n";
}

void cmd_threshold(const CommonOpts& o, double B, double q_sup, double q_l4) {
    if (B > 0.0) {
        std::cout << format_number(assumption_threshold(B, {q_sup, q_l4, 0.0})) << "\n";
        return;
    }
    const Problem prob = resolve_problem(o);
    const int n = resolve_grid(o, prob);
    const LiouvilleForm lf = transform(prob, n);
    std::cout << format_number(assumption_threshold(lf.B(), lf.q_norms())) << "\n";
}

void cmd_envelope(const CommonOpts& o, double lambda_min, double lambda_max, int lambda_steps,
                  const std::string& regime_name, double B, double q_sup, double q_l4,
                  double q_l1, double beta, double gamma) {
    QNorms norms{q_sup, q_l4, q_l1};
    std::string label = "synthetic";
    if (B <= 0.0) {
        const Problem prob = resolve_problem(o);
        const int n = resolve_grid(o, prob);
        const LiouvilleForm lf = transform(prob, n);
        const BoundCoefficients c = bound_coefficients(lf, prob, 1.0);
        B = lf.B();
        norms = lf.q_norms();
        beta = c.beta;
        gamma = c.gamma;
        label = label_of(prob);
    }
    Regime regime = Regime::c0;
    if (regime_name == "BV")
        regime = Regime::bv;
    else if (regime_name == "C4AC")
        regime = Regime::c4ac;
    else if (regime_name != "C")
        throw ValidationError("--regime must be C, BV, or C4AC");

    const std::string path = out_path(o, "envelope_" + label + ".csv");
    CsvFile csv(path, {"lambda", "a", "b", "applicable", "t1_lower", "t1_upper", "alpha_phi",
                       "t2_lower", "t2_upper"});
    for (int i = 0; i <= lambda_steps; ++i) {
        const double lambda = lambda_min + (lambda_max - lambda_min) * i / lambda_steps;
        BoundCoefficients c = bound_coefficients_raw(B, norms, lambda);
        c.beta = beta;
        c.gamma = gamma;
        const Theorem1Envelope env = theorem1_envelope(c);
        double t2lo = std::numeric_limits<double>::quiet_NaN();
        double t2hi = std::numeric_limits<double>::quiet_NaN();
        try {
            const Theorem2Envelope t2 = theorem2_envelope(regime, lambda, B, beta, gamma, norms.l1);
            t2lo = t2.lower;
            t2hi = t2.upper;
        } catch (const NegativeDenominator&) {
        }
        csv.row({lambda, c.a, c.b, env.applicable ? 1.0 : 0.0, env.lower, env.upper,
                 alpha_phi_closed_form(lambda, B), t2lo, t2hi});
    }
    write_sidecar(path, {{"command", json_quote("envelope")},
                         {"preset", json_quote(label)},
                         {"regime", json_quote(regime_name)},
                         {"B", format_number(B)},
                         {"lambda_star", format_number(assumption_threshold(B, norms))}});
    std::cout << path << "\n";
}

void cmd_landscape(const CommonOpts& o, int k_max) {
    const Problem prob = resolve_problem(o);
    const int n = resolve_grid(o, prob);
    const auto pairs = eigenpairs_direct(prob, 2, n);
    const double p1_norm = projection_of_one(pairs, 1).norm;
    const auto& phi1 = pairs[0].values;

    const std::string spath = out_path(o, "landscape_" + label_of(prob) + "_summary.csv");
    CsvFile summary(spath, {"k", "sup_error", "prop1_bound"});
    for (int k = 1; k <= k_max; ++k) {
        const LandscapeIterate it = iterated_landscape(prob, k, n);
        double dot = 0.0, sup = 0.0;
        for (int i = 0; i < n; ++i) dot += it.values.values[i] * phi1.values[i];
        const double flip = dot < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i)
            sup = std::max(sup, std::abs(flip * it.values.values[i] - phi1.values[i]));

        const std::string kpath =
            out_path(o, "landscape_" + label_of(prob) + "_k" + std::to_string(k) + ".csv");
        CsvFile kcsv(kpath, {"x", "ell_k", "phi1", "abs_diff"});
        for (int i = 0; i < n; ++i)
            kcsv.row({it.values.grid.node(i), it.values.values[i], phi1.values[i],
                      std::abs(flip * it.values.values[i] - phi1.values[i])});
        write_sidecar(kpath, {{"command", json_quote("landscape")},
                              {"preset", json_quote(label_of(prob))},
                              {"grid", std::to_string(n)},
                              {"k", std::to_string(k)}});
        summary.row({static_cast<double>(k), sup,
                     prop1_bound(pairs[0].lambda, pairs[1].lambda, prob.length(), p1_norm, k)});
    }
    write_sidecar(spath, {{"command", json_quote("landscape")},
                          {"preset", json_quote(label_of(prob))},
                          {"grid", std::to_string(n)},
                          {"k_max", std::to_string(k_max)},
                          {"weighted_norm_caveat", unit_weight(prob) ? "false" : "true"}});
    std::cout << spath << "\n";
}

void cmd_glandscape(const CommonOpts& o, double t, int n0, int k_max, int j_max) {
    const Problem prob = resolve_problem(o);
    const int n = resolve_grid(o, prob);
    const auto pairs = eigenpairs_direct(prob, j_max, n);
    validate_prop2_window(pairs, t, n0);
    const std::string path = out_path(o, "glandscape_" + label_of(prob) + ".csv");
    CsvFile csv(path, {"k", "residual", "prop2_bound"});
    for (int k = 1; k <= k_max; ++k)
        csv.row({static_cast<double>(k), prop2_residual(pairs, t, k, n0, j_max),
                 prop2_bound(prob.length(), t, pairs[n0].lambda, k)});
    write_sidecar(path, {{"command", json_quote("glandscape")},
                         {"preset", json_quote(label_of(prob))},
                         {"grid", std::to_string(n)},
                         {"t", format_number(t)},
                         {"n0", std::to_string(n0)},
                         {"j_max", std::to_string(j_max)},
                         {"weighted_norm_caveat", unit_weight(prob) ? "false" : "true"}});
    std::cout << path << "\n";
}

int cmd_reproduce(const CommonOpts& o, const std::string& target, bool custom_window, double t,
                  int n0) {
    const std::string out = resolve_out(o);
    if (custom_window) {
        if (target != "prop2")
            throw ValidationError("--t/--n0 overrides apply to the prop2 target only");
        CommonOpts go = o;
        go.preset_name = "laplacian";
        cmd_glandscape(go, t, n0, 10, 20);
        return 0;
    }
    std::vector<std::string> names;
    if (target == "all")
        names = experiment_names();
    else if (target == "prop1")
        names = {"prop1-fig1", "prop1-setup2", "prop1-setup3"};
    else
        names = {target};

    int failures = 0;
    for (const auto& name : names) {
        const ExperimentResult r = run_experiment(name, out);
        if (r.ok) {
            for (const auto& f : r.files)
                if (f.find(".meta.json") == std::string::npos) std::cout << f << "\n";
        } else {
            ++failures;
            std::cerr << "experiment " << name << " failed: " << r.message << "\n";
        }
    }
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regular Sturm-Liouville eigenproblems: localization and landscape analysis"};
    app.require_subcommand(1);

    CommonOpts o_transform, o_eigs, o_alpha, o_threshold, o_envelope, o_landscape, o_glandscape,
        o_reproduce;

    auto* c_transform = app.add_subcommand("transform", "emit the normal-form data (y, x, f, Q)");
    add_common(c_transform, o_transform);

    auto* c_eigs = app.add_subcommand("eigs", "compute eigenvalues and localization coefficients");
    add_common(c_eigs, o_eigs);
    int eigs_modes = 20;
    std::vector<int> dump_modes;
    c_eigs->add_option("--modes", eigs_modes, "number of modes");
    c_eigs->add_option("--dump-modes", dump_modes, "modes whose eigenfunctions are written")
        ->delimiter(',');

    auto* c_alpha = app.add_subcommand("alpha", "alpha values with the two-sided envelope");
    add_common(c_alpha, o_alpha);
    int alpha_modes = 20;
    c_alpha->add_option("--modes", alpha_modes, "number of modes");

    auto* c_threshold = app.add_subcommand("threshold", "print the envelope validity threshold");
    add_common(c_threshold, o_threshold);
    double th_B = 0.0, th_qsup = 0.0, th_ql4 = 0.0;
    c_threshold->add_option("--B", th_B, "transformed length (synthetic mode)");
    c_threshold->add_option("--q-sup", th_qsup, "sup norm of Q (synthetic mode)");
    c_threshold->add_option("--q-l4", th_ql4, "L4 norm of Q (synthetic mode)");

    auto* c_envelope = app.add_subcommand("envelope", "tabulate envelopes over a lambda grid");
    add_common(c_envelope, o_envelope);
    double env_lmin = 0.25, env_lmax = 20.0, env_B = 0.0, env_qsup = 1.0, env_ql4 = 1.0,
           env_ql1 = 0.0, env_beta = 1.0, env_gamma = 1.0;
    int env_steps = 790;
    std::string env_regime = "C";
    c_envelope->add_option("--lambda-min", env_lmin, "lambda grid start");
    c_envelope->add_option("--lambda-max", env_lmax, "lambda grid end");
    c_envelope->add_option("--lambda-steps", env_steps, "lambda grid steps");
    c_envelope->add_option("--regime", env_regime, "asymptotic regime: C, BV, or C4AC");
    c_envelope->add_option("--B", env_B, "transformed length (synthetic mode)");
    c_envelope->add_option("--q-sup", env_qsup, "sup norm of Q (synthetic mode)");
    c_envelope->add_option("--q-l4", env_ql4, "L4 norm of Q (synthetic mode)");
    c_envelope->add_option("--q-l1", env_ql1, "L1 norm of Q (synthetic mode)");
    c_envelope->add_option("--beta", env_beta, "lower norm-bridge constant (synthetic mode)");
    c_envelope->add_option("--gamma", env_gamma, "upper norm-bridge constant (synthetic mode)");

    auto* c_landscape = app.add_subcommand("landscape", "iterated landscape against phi_1");
    add_common(c_landscape, o_landscape);
    int k_max = 12;
    c_landscape->add_option("--k-max", k_max, "largest iteration count");

    auto* c_glandscape =
        app.add_subcommand("glandscape", "generalized landscape residuals and bounds");
    add_common(c_glandscape, o_glandscape);
    double gl_t = 0.05;
    int gl_n0 = 1, gl_kmax = 10, gl_jmax = 20;
    c_glandscape->add_option("--t", gl_t, "time scale");
    c_glandscape->add_option("--n0", gl_n0, "head mode count");
    c_glandscape->add_option("--k-max", gl_kmax, "largest iteration count");
    c_glandscape->add_option("--j-max", gl_jmax, "tail truncation index");

    auto* c_reproduce = app.add_subcommand("reproduce", "rebuild bundled study data files");
    add_common(c_reproduce, o_reproduce, false);
    std::string target = "all";
    double rp_t = 0.05;
    int rp_n0 = 1;
    c_reproduce->add_option("target", target,
                            "fig1 | fig2 | fig3 | prop1 | prop1-<preset> | prop2 | all");
    auto* rp_t_opt = c_reproduce->add_option("--t", rp_t, "prop2 window time scale");
    auto* rp_n0_opt = c_reproduce->add_option("--n0", rp_n0, "prop2 head mode count");

    auto* c_reproduce_all = app.add_subcommand("reproduce-all", "rebuild every bundled data file");
    add_common(c_reproduce_all, o_reproduce, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_transform->parsed()) cmd_transform(o_transform);
        if (c_eigs->parsed()) cmd_eigs(o_eigs, eigs_modes, dump_modes);
        if (c_alpha->parsed()) cmd_alpha(o_alpha, alpha_modes);
        if (c_threshold->parsed()) cmd_threshold(o_threshold, th_B, th_qsup, th_ql4);
        if (c_envelope->parsed())
            cmd_envelope(o_envelope, env_lmin, env_lmax, env_steps, env_regime, env_B, env_qsup,
                         env_ql4, env_ql1, env_beta, env_gamma);
        if (c_landscape->parsed()) cmd_landscape(o_landscape, k_max);
        if (c_glandscape->parsed()) cmd_glandscape(o_glandscape, gl_t, gl_n0, gl_kmax, gl_jmax);
        if (c_reproduce->parsed())
            return cmd_reproduce(o_reproduce, target,
                                 rp_t_opt->count() > 0 || rp_n0_opt->count() > 0, rp_t, rp_n0);
        if (c_reproduce_all->parsed()) return cmd_reproduce(o_reproduce, "all", false, 0.0, 0);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
