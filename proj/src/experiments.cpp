#include "slloc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>

#include "slloc/csv.hpp"
#include "slloc/landscape.hpp"
#include "slloc/localization.hpp"
#include "slloc/spectral.hpp"

namespace slloc {

namespace {

namespace fs = std::filesystem;

int default_grid(const Problem& prob) { return prob.length() <= 1.0 ? 4097 : 8193; }

// Collects written paths so a failed experiment can clean up after itself.
struct Emitter {
    std::string dir;
    std::vector<std::string> files;

    explicit Emitter(const std::string& out_dir) : dir(out_dir) {
        std::error_code ec;
        fs::create_directories(dir, ec);
    }

    std::string path(const std::string& name) const { return (fs::path(dir) / name).string(); }

    CsvFile csv(const std::string& name, const std::vector<std::string>& columns) {
        CsvFile file(path(name), columns);
        files.push_back(file.path());
        files.push_back(file.path() + ".meta.json");
        return file;
    }

    void discard_all() {
        for (const auto& f : files) {
            std::error_code ec;
            fs::remove(f, ec);
        }
    }
};

void fig1(Emitter& em) {
    const Problem prob = preset("fig1-tanh-metric");
    const int n = default_grid(prob);
    const int modes = 30;
    const Grid xgrid(0.0, prob.length(), n);

    auto metric = em.csv("fig1_metric.csv", {"x", "p"});
    for (int i = 0; i < n; ++i) metric.row({xgrid.node(i), prob.p().value(xgrid.node(i))});
    write_sidecar(em.path("fig1_metric.csv"),
                  {{"experiment", json_quote("fig1")},
                   {"preset", json_quote(prob.label())},
                   {"grid", std::to_string(n)}});

    const auto pairs = eigenpairs_direct(prob, modes, n);
    auto table = em.csv("fig1_alpha.csv", {"n", "lambda", "alpha"});
    for (const auto& pair : pairs)
        table.row({static_cast<double>(pair.index), pair.lambda, alpha(pair.values)});
    write_sidecar(em.path("fig1_alpha.csv"),
                  {{"experiment", json_quote("fig1")},
                   {"preset", json_quote(prob.label())},
                   {"grid", std::to_string(n)},
                   {"modes", std::to_string(modes)}});

    for (int mode : {2, 30}) {
        const std::string name = "fig1_mode_" + std::to_string(mode) + ".csv";
        auto dump = em.csv(name, {"x", "phi"});
        const auto& pair = pairs[mode - 1];
        for (int i = 0; i < n; ++i) dump.row({xgrid.node(i), pair.values.values[i]});
        write_sidecar(em.path(name), {{"experiment", json_quote("fig1")},
                                      {"preset", json_quote(prob.label())},
                                      {"grid", std::to_string(n)},
                                      {"mode", std::to_string(mode)},
                                      {"lambda", format_number(pair.lambda)}});
    }
}

void fig2(Emitter& em) {
    // Synthetic envelope study: beta = gamma = B = ||Q||_inf = ||Q||_4 = 1.
    const double B = 1.0;
    const QNorms norms{1.0, 1.0, 1.0};
    const double lambda_star = assumption_threshold(B, norms);

    auto table = em.csv("fig2_envelope.csv",
                        {"lambda", "a", "b", "applicable", "lower", "upper", "alpha_phi",
                         "asymptote"});
    const int steps = 790;
    const double lo = 0.25, hi = 20.0;
    for (int i = 0; i <= steps; ++i) {
        const double lambda = lo + (hi - lo) * i / steps;
        BoundCoefficients c = bound_coefficients_raw(B, norms, lambda);
        const Theorem1Envelope env = theorem1_envelope(c);
        table.row({lambda, c.a, c.b, env.applicable ? 1.0 : 0.0, env.lower, env.upper,
                   alpha_phi_closed_form(lambda, B), 2.0 * B / 3.0});
    }
    write_sidecar(em.path("fig2_envelope.csv"),
                  {{"experiment", json_quote("fig2")},
                   {"B", format_number(B)},
                   {"q_sup", format_number(norms.sup)},
                   {"q_l4", format_number(norms.l4)},
                   {"lambda_star", format_number(lambda_star)}});
}

void fig3(Emitter& em) {
    const double B = 1.0;
    auto table = em.csv("fig3_alpha_phi.csv", {"lambda", "alpha_phi"});
    const int steps = 1600;
    const double lo = 0.25, hi = 200.0;
    for (int i = 0; i <= steps; ++i) {
        const double lambda = lo + (hi - lo) * i / steps;
        table.row({lambda, alpha_phi_closed_form(lambda, B)});
    }
    write_sidecar(em.path("fig3_alpha_phi.csv"),
                  {{"experiment", json_quote("fig3")}, {"B", format_number(B)}});
}

void prop1(Emitter& em, const std::string& preset_name) {
    const Problem prob = preset(preset_name);
    const int n = default_grid(prob);
    const int k_max = 12;

    const auto pairs = eigenpairs_direct(prob, 2, n);
    const double lam1 = pairs[0].lambda, lam2 = pairs[1].lambda;
    const auto& phi1 = pairs[0].values;
    const double p1_norm = projection_of_one(pairs, 1).norm;

    std::vector<SampledFn> kept;
    const std::string summary_name = "prop1_" + preset_name + "_summary.csv";
    auto summary = em.csv(summary_name, {"k", "sup_error", "prop1_bound"});
    for (int k = 1; k <= k_max; ++k) {
        const LandscapeIterate it = iterated_landscape(prob, k, n);
        double dot = 0.0, sup = 0.0;
        for (int i = 0; i < n; ++i) dot += it.values.values[i] * phi1.values[i];
        const double flip = dot < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i)
            sup = std::max(sup, std::abs(flip * it.values.values[i] - phi1.values[i]));
        summary.row({static_cast<double>(k), sup, prop1_bound(lam1, lam2, prob.length(),
                                                              p1_norm, k)});
        if (k == 1 || k == 2 || k == 4 || k == 8) kept.push_back(it.values);
    }
    write_sidecar(em.path(summary_name), {{"experiment", json_quote("prop1")},
                                          {"preset", json_quote(prob.label())},
                                          {"grid", std::to_string(n)},
                                          {"lambda1", format_number(lam1)},
                                          {"lambda2", format_number(lam2)},
                                          {"p1_norm", format_number(p1_norm)}});

    const std::string curves_name = "prop1_" + preset_name + "_curves.csv";
    auto curves = em.csv(curves_name, {"x", "phi1", "ell_1", "ell_2", "ell_4", "ell_8"});
    const Grid& xgrid = phi1.grid;
    for (int i = 0; i < n; ++i)
        curves.row({xgrid.node(i), phi1.values[i], kept[0].values[i], kept[1].values[i],
                    kept[2].values[i], kept[3].values[i]});
    write_sidecar(em.path(curves_name), {{"experiment", json_quote("prop1")},
                                         {"preset", json_quote(prob.label())},
                                         {"grid", std::to_string(n)}});
}

void prop2(Emitter& em) {
    const Problem prob = preset("laplacian");
    const int n = default_grid(prob);
    const int j_max = 20;
    const auto pairs = eigenpairs_direct(prob, j_max, n);

    const std::pair<double, int> windows[] = {{0.05, 1}, {0.02, 2}};
    for (const auto& [t, n0] : windows) {
        validate_prop2_window(pairs, t, n0);
        const std::string name =
            "prop2_t" + std::to_string(static_cast<int>(std::lround(t * 1000))) + "m_n0_" +
            std::to_string(n0) + ".csv";
        auto table = em.csv(name, {"k", "residual", "prop2_bound"});
        for (int k = 1; k <= 10; ++k)
            table.row({static_cast<double>(k), prop2_residual(pairs, t, k, n0, j_max),
                       prop2_bound(prob.length(), t, pairs[n0].lambda, k)});
        write_sidecar(em.path(name), {{"experiment", json_quote("prop2")},
                                      {"preset", json_quote(prob.label())},
                                      {"grid", std::to_string(n)},
                                      {"t", format_number(t)},
                                      {"n0", std::to_string(n0)},
                                      {"j_max", std::to_string(j_max)}});
    }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "fig1", "fig2", "fig3", "prop1-fig1", "prop1-setup2", "prop1-setup3", "prop2"};
    return names;
}

ExperimentResult run_experiment(const std::string& name, const std::string& out_dir) {
    ExperimentResult result;
    result.name = name;
    Emitter em(out_dir);
    try {
        if (name == "fig1")
            fig1(em);
        else if (name == "fig2")
            fig2(em);
        else if (name == "fig3")
            fig3(em);
        else if (name == "prop1-fig1")
            prop1(em, "fig1-tanh-metric");
        else if (name == "prop1-setup2")
            prop1(em, "setup2");
        else if (name == "prop1-setup3")
            prop1(em, "setup3");
        else if (name == "prop2")
            prop2(em);
        else
            throw UnknownPreset("unknown experiment '" + name + "'");
        result.ok = true;
        result.files = em.files;
    } catch (const std::exception& e) {
        em.discard_all();
        result.ok = false;
        result.message = e.what();
    }
    return result;
}

int run_all_experiments(const std::string& out_dir, std::vector<ExperimentResult>* results) {
    int failures = 0;
    for (const auto& name : experiment_names()) {
        ExperimentResult r = run_experiment(name, out_dir);
        if (!r.ok) ++failures;
        if (results) results->push_back(std::move(r));
    }
    return failures;
}

}  // namespace slloc
