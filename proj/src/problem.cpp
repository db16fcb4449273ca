#include "slloc/problem.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "slloc/interp.hpp"

namespace slloc {

namespace {

double sech2(double z) {
    const double c = std::cosh(z);
    return 1.0 / (c * c);
}

// Second-order three-point derivative tables on a (possibly nonuniform) grid.
std::vector<double> table_deriv1(const std::vector<double>& x, const std::vector<double>& v) {
    const int n = static_cast<int>(x.size());
    std::vector<double> d(n);
    for (int i = 1; i + 1 < n; ++i) {
        const double h1 = x[i] - x[i - 1], h2 = x[i + 1] - x[i];
        d[i] = -h2 / (h1 * (h1 + h2)) * v[i - 1] + (h2 - h1) / (h1 * h2) * v[i] +
               h1 / (h2 * (h1 + h2)) * v[i + 1];
    }
    d[0] = d[1];
    d[n - 1] = d[n - 2];
    return d;
}

std::vector<double> table_deriv2(const std::vector<double>& x, const std::vector<double>& v) {
    const int n = static_cast<int>(x.size());
    std::vector<double> d(n);
    for (int i = 1; i + 1 < n; ++i) {
        const double h1 = x[i] - x[i - 1], h2 = x[i + 1] - x[i];
        d[i] = 2.0 / (h1 * (h1 + h2)) * v[i - 1] - 2.0 / (h1 * h2) * v[i] +
               2.0 / (h2 * (h1 + h2)) * v[i + 1];
    }
    d[0] = d[1];
    d[n - 1] = d[n - 2];
    return d;
}

}  // namespace

CoefficientFn CoefficientFn::closed_form(std::string name, Fn value, Fn d1, Fn d2) {
    if (!value) throw ValidationError("closed-form coefficient needs a value map");
    CoefficientFn c;
    c.kind_ = Kind::closed_form;
    c.name_ = std::move(name);
    c.value_ = std::move(value);
    c.d1_ = d1 ? std::move(d1) : [](double) { return 0.0; };
    c.d2_ = d2 ? std::move(d2) : [](double) { return 0.0; };
    return c;
}

CoefficientFn CoefficientFn::constant(double v) {
    auto c = closed_form(
        "", [v](double) { return v; }, [](double) { return 0.0; }, [](double) { return 0.0; });
    c.is_constant_ = true;
    c.const_value_ = v;
    return c;
}

CoefficientFn CoefficientFn::tabulated(std::vector<double> xs, std::vector<double> vals) {
    if (xs.size() != vals.size() || xs.size() < 4)
        throw ValidationError("tabulated coefficient needs >= 4 matching (x, value) pairs");
    CoefficientFn c;
    c.kind_ = Kind::tabulated;
    c.xs_ = xs;
    c.vals_ = vals;
    auto interp = std::make_shared<PchipInterpolant>(xs, vals);
    auto interp_d1 = std::make_shared<PchipInterpolant>(xs, table_deriv1(xs, vals));
    auto interp_d2 = std::make_shared<PchipInterpolant>(xs, table_deriv2(xs, vals));
    c.value_ = [interp](double x) { return (*interp)(x); };
    c.d1_ = [interp_d1](double x) { return (*interp_d1)(x); };
    c.d2_ = [interp_d2](double x) { return (*interp_d2)(x); };
    return c;
}

double CoefficientFn::value(double x) const { return value_(x); }
double CoefficientFn::deriv1(double x) const { return d1_(x); }
double CoefficientFn::deriv2(double x) const { return d2_(x); }

double CoefficientFn::coverage_lo() const {
    return kind_ == Kind::tabulated ? xs_.front() : -std::numeric_limits<double>::infinity();
}
double CoefficientFn::coverage_hi() const {
    return kind_ == Kind::tabulated ? xs_.back() : std::numeric_limits<double>::infinity();
}

CoefficientFn coefficient_preset(const std::string& name, double L) {
    if (name == "one") return CoefficientFn::constant(1.0);
    if (name == "zero") return CoefficientFn::constant(0.0);
    if (name == "tanh-step-10" || name == "tanh-step-20") {
        const double c = name == "tanh-step-10" ? 10.0 : 20.0;
        const double k = 40.0 / L;
        return CoefficientFn::closed_form(
            name, [k, c](double x) { return std::tanh(k * x - c) + 1.1; },
            [k, c](double x) { return k * sech2(k * x - c); },
            [k, c](double x) { return -2.0 * k * k * sech2(k * x - c) * std::tanh(k * x - c); });
    }
    if (name == "two-plus-sin") {
        const double tau = 2.0 * std::numbers::pi;
        return CoefficientFn::closed_form(
            name, [tau](double x) { return 2.0 + std::sin(tau * x); },
            [tau](double x) { return tau * std::cos(tau * x); },
            [tau](double x) { return -tau * tau * std::sin(tau * x); });
    }
    throw UnknownPreset("unknown coefficient preset '" + name + "'");
}

Problem Problem::make(double L, CoefficientFn p, CoefficientFn q, CoefficientFn w,
                      std::string label, int audit_points) {
    if (!(L > 0.0) || !std::isfinite(L)) throw BadInterval("interval length must be positive");
    if (audit_points < 1024) audit_points = 1024;

    for (const auto* c : {&p, &q, &w}) {
        if (c->kind() == CoefficientFn::Kind::tabulated &&
            (c->coverage_lo() > 1e-12 * L || c->coverage_hi() < L * (1.0 - 1e-12)))
            throw ValidationError("tabulated coefficient does not cover [0, L]");
    }
    for (int i = 0; i < audit_points; ++i) {
        const double x = L * i / (audit_points - 1);
        const double pv = p.value(x), qv = q.value(x), wv = w.value(x);
        if (!std::isfinite(pv) || !std::isfinite(qv) || !std::isfinite(wv))
            throw ValidationError("coefficient is not finite at x = " + std::to_string(x));
        if (!(pv > 0.0))
            throw NonPositiveCoefficient("p is not strictly positive at x = " + std::to_string(x));
        if (!(wv > 0.0))
            throw NonPositiveCoefficient("w is not strictly positive at x = " + std::to_string(x));
        if (qv < 0.0)
            throw NegativePotential("q is negative at x = " + std::to_string(x));
    }

    Problem prob;
    prob.length_ = L;
    prob.p_ = std::move(p);
    prob.q_ = std::move(q);
    prob.w_ = std::move(w);
    prob.label_ = std::move(label);
    prob.audit_points_ = audit_points;
    return prob;
}

Problem make_problem(double L, CoefficientFn p, CoefficientFn q, CoefficientFn w,
                     std::string label) {
    return Problem::make(L, std::move(p), std::move(q), std::move(w), std::move(label));
}

Problem preset(const std::string& name) {
    if (name == "laplacian")
        return Problem::make(1.0, CoefficientFn::constant(1.0), CoefficientFn::constant(0.0),
                             CoefficientFn::constant(1.0), name);
    if (name.rfind("laplacian-", 0) == 0) {
        const std::string suffix = name.substr(10);
        try {
            size_t pos = 0;
            const double L = std::stod(suffix, &pos);
            if (pos != suffix.size() || !(L > 0.0)) throw std::invalid_argument(suffix);
            return Problem::make(L, CoefficientFn::constant(1.0), CoefficientFn::constant(0.0),
                                 CoefficientFn::constant(1.0), name);
        } catch (const std::invalid_argument&) {
            throw UnknownPreset("unknown preset '" + name + "'");
        } catch (const std::out_of_range&) {
            throw UnknownPreset("unknown preset '" + name + "'");
        }
    }
    if (name == "fig1-tanh-metric")
        return Problem::make(1.0, coefficient_preset("tanh-step-10", 1.0),
                             CoefficientFn::constant(0.0), CoefficientFn::constant(1.0), name);
    if (name == "setup2")
        return Problem::make(1.0, coefficient_preset("tanh-step-20", 1.0),
                             coefficient_preset("two-plus-sin", 1.0), CoefficientFn::constant(1.0),
                             name);
    if (name == "setup3")
        return Problem::make(5.0, coefficient_preset("tanh-step-10", 5.0),
                             coefficient_preset("two-plus-sin", 5.0), CoefficientFn::constant(1.0),
                             name);
    throw UnknownPreset("unknown preset '" + name + "'");
}

namespace {

using nlohmann::json;

json coefficient_to_json(const CoefficientFn& c, double L, int audit_points) {
    if (c.kind() == CoefficientFn::Kind::tabulated) {
        json pairs = json::array();
        for (size_t i = 0; i < c.table_x().size(); ++i)
            pairs.push_back({c.table_x()[i], c.table_v()[i]});
        return pairs;
    }
    if (!c.name().empty()) return c.name();
    if (c.is_constant()) return c.constant_value();
    // Anonymous closed form: fall back to dense samples.
    json pairs = json::array();
    for (int i = 0; i < audit_points; ++i) {
        const double x = L * i / (audit_points - 1);
        pairs.push_back({x, c.value(x)});
    }
    return pairs;
}

CoefficientFn coefficient_from_json(const json& j, double L, const std::string& key) {
    if (j.is_string()) return coefficient_preset(j.get<std::string>(), L);
    if (j.is_number()) return CoefficientFn::constant(j.get<double>());
    if (j.is_array()) {
        std::vector<double> xs, vs;
        for (const auto& pair : j) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                throw ConfigError("coefficient '" + key + "' entries must be [x, value] pairs");
            xs.push_back(pair[0].get<double>());
            vs.push_back(pair[1].get<double>());
        }
        try {
            return CoefficientFn::tabulated(std::move(xs), std::move(vs));
        } catch (const ValidationError& e) {
            throw ConfigError("coefficient '" + key + "': " + e.what());
        }
    }
    throw ConfigError("coefficient '" + key +
                      "' must be a preset name, a number, or an array of [x, value] pairs");
}

}  // namespace

std::string Problem::to_config_string() const {
    json j;
    j["label"] = label_;
    j["L"] = length_;
    j["p"] = coefficient_to_json(p_, length_, audit_points_);
    j["q"] = coefficient_to_json(q_, length_, audit_points_);
    j["w"] = coefficient_to_json(w_, length_, audit_points_);
    return j.dump(2);
}

Problem Problem::from_config_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (key != "label" && key != "L" && key != "p" && key != "q" && key != "w")
            throw ConfigError("unknown config key '" + key + "'");
    }
    if (!j.contains("L") || !j["L"].is_number()) throw ConfigError("config needs a numeric 'L'");
    const double L = j["L"].get<double>();
    if (!(L > 0.0)) throw BadInterval("config 'L' must be positive");
    std::string label = j.value("label", std::string{});
    for (const char* key : {"p", "q", "w"})
        if (!j.contains(key)) throw ConfigError(std::string("config is missing '") + key + "'");
    return Problem::make(L, coefficient_from_json(j["p"], L, "p"),
                         coefficient_from_json(j["q"], L, "q"),
                         coefficient_from_json(j["w"], L, "w"), std::move(label));
}

Problem Problem::from_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_config_string(ss.str());
}

}  // namespace slloc
