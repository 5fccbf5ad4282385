// spin-erasure: command-line front end for the spin-reservoir erasure
// engine. Emits figure-ready CSV/JSON tables; all numeric output
// round-trips at 17 significant digits and reruns with identical
// configuration are byte-identical.
//
// Exit codes: 0 success, 1 I/O or internal validation failure,
// 2 invalid or conflicting parameters.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinerasure/fluctuation.hpp"
#include "spinerasure/io.hpp"
#include "spinerasure/montecarlo.hpp"

namespace se = spinerasure;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    double alpha = 0.0;
    double gamma = 0.0;
    double p_init = 0.5;
    double tail_tol = 1e-14;
    int cycles = 0;
    bool full = false;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    double eps_max = 0.0;
    double eps_step = 0.1;
    std::string b_spec;
    std::string fig;
    std::string alphas;
    std::string output = "-";
    std::string format;
    std::string config_path;

    bool has_alpha = false;
    bool has_gamma = false;
    bool has_cycles = false;
    bool has_full = false;
    bool has_eps_max = false;
    bool has_eps_step = false;
    bool has_b = false;
    bool has_fig = false;
    bool has_alphas = false;
    bool has_format = false;

    CLI::Option* alpha_opt = nullptr;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* p_init_opt = nullptr;
    CLI::Option* tail_tol_opt = nullptr;
    CLI::Option* cycles_opt = nullptr;
    CLI::Option* full_opt = nullptr;
    CLI::Option* samples_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* eps_max_opt = nullptr;
    CLI::Option* eps_step_opt = nullptr;
    CLI::Option* b_opt = nullptr;
    CLI::Option* fig_opt = nullptr;
    CLI::Option* alphas_opt = nullptr;
    CLI::Option* output_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* config_opt = nullptr;
};

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

void add_param_options(CLI::App* cmd, Settings& s) {
    s.alpha_opt = cmd->add_option("--alpha", s.alpha,
                                  "reservoir up-polarization, in (0, 0.5)");
    s.gamma_opt = cmd->add_option(
        "--gamma", s.gamma, "dimensionless inverse spin temperature, > 0");
    s.alpha_opt->excludes(s.gamma_opt);
    s.gamma_opt->excludes(s.alpha_opt);
    s.p_init_opt = cmd->add_option("--p-init", s.p_init,
                                   "initial memory up-probability");
    s.tail_tol_opt =
        cmd->add_option("--tail-tol", s.tail_tol, "truncation tolerance");
}

void add_output_options(CLI::App* cmd, Settings& s) {
    s.output_opt =
        cmd->add_option("--output", s.output, "output path ('-' = stdout)");
    s.format_opt = cmd->add_option("--format", s.format, "csv or json");
    s.config_opt = cmd->add_option("--config", s.config_path,
                                   "JSON config file; flags take precedence");
}

double number_from_json(const ordered_json& value, const std::string& key) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        try {
            return std::stod(value.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw UsageError("config key '" + key + "' is not a number");
}

std::string string_from_json(const ordered_json& value,
                             const std::string& key) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_number_integer()) {
        return std::to_string(value.get<long long>());
    }
    if (value.is_number()) {
        return se::format_double17(value.get<double>());
    }
    if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
            if (!joined.empty()) {
                joined += ',';
            }
            joined += string_from_json(item, key);
        }
        return joined;
    }
    throw UsageError("config key '" + key + "' is not a string");
}

void apply_config(Settings& s) {
    s.has_alpha = given(s.alpha_opt);
    s.has_gamma = given(s.gamma_opt);
    s.has_cycles = given(s.cycles_opt);
    s.has_full = given(s.full_opt);
    s.has_eps_max = given(s.eps_max_opt);
    s.has_eps_step = given(s.eps_step_opt);
    s.has_b = given(s.b_opt);
    s.has_fig = s.fig_opt != nullptr && s.fig_opt->count() > 0;
    s.has_alphas = given(s.alphas_opt);
    s.has_format = given(s.format_opt);
    if (!given(s.config_opt)) {
        return;
    }

    std::ifstream in(s.config_path);
    if (!in) {
        throw UsageError("--config file cannot be read: " + s.config_path);
    }
    ordered_json config;
    try {
        in >> config;
    } catch (const std::exception& e) {
        throw UsageError("--config file is not valid JSON: " +
                         std::string(e.what()));
    }
    if (!config.is_object()) {
        throw UsageError("--config file must hold a flat JSON object");
    }

    // a flag choosing one member of an exclusive pair suppresses both
    // config members of that pair
    const bool flag_chose_density = s.has_alpha || s.has_gamma;
    const bool flag_chose_length = s.has_cycles || s.has_full;
    for (const auto& [key, value] : config.items()) {
        if (key == "alpha" && !flag_chose_density) {
            s.alpha = number_from_json(value, key);
            s.has_alpha = true;
        } else if (key == "gamma" && !flag_chose_density) {
            s.gamma = number_from_json(value, key);
            s.has_gamma = true;
        } else if (key == "p-init") {
            if (!given(s.p_init_opt)) {
                s.p_init = number_from_json(value, key);
            }
        } else if (key == "tail-tol") {
            if (!given(s.tail_tol_opt)) {
                s.tail_tol = number_from_json(value, key);
            }
        } else if (key == "cycles" && !flag_chose_length) {
            s.cycles = (int)number_from_json(value, key);
            s.has_cycles = true;
        } else if (key == "full" && !flag_chose_length) {
            if (!value.is_boolean()) {
                throw UsageError("config key 'full' must be a boolean");
            }
            s.full = value.get<bool>();
            s.has_full = s.full;
        } else if (key == "samples") {
            if (!given(s.samples_opt)) {
                s.samples = (std::uint64_t)number_from_json(value, key);
            }
        } else if (key == "seed") {
            if (!given(s.seed_opt)) {
                s.seed = (std::uint64_t)number_from_json(value, key);
            }
        } else if (key == "eps-max") {
            if (!given(s.eps_max_opt)) {
                s.eps_max = number_from_json(value, key);
                s.has_eps_max = true;
            }
        } else if (key == "eps-step") {
            if (!given(s.eps_step_opt)) {
                s.eps_step = number_from_json(value, key);
                s.has_eps_step = true;
            }
        } else if (key == "b") {
            if (!given(s.b_opt)) {
                s.b_spec = string_from_json(value, key);
                s.has_b = true;
            }
        } else if (key == "fig") {
            if (s.fig_opt != nullptr && !given(s.fig_opt)) {
                s.fig = string_from_json(value, key);
                s.has_fig = true;
            }
        } else if (key == "alphas") {
            if (!given(s.alphas_opt)) {
                s.alphas = string_from_json(value, key);
                s.has_alphas = true;
            }
        } else if (key == "output") {
            if (!given(s.output_opt)) {
                s.output = string_from_json(value, key);
            }
        } else if (key == "format") {
            if (!given(s.format_opt)) {
                s.format = string_from_json(value, key);
                s.has_format = true;
            }
        } else if (key != "alpha" && key != "gamma" && key != "cycles" &&
                   key != "full") {
            throw UsageError("unknown config key '" + key + "'");
        }
    }
}

se::ErasureParams resolve_params(const Settings& s) {
    if (s.has_alpha && s.has_gamma) {
        throw UsageError("use exactly one of --alpha or --gamma, not both");
    }
    if (!s.has_alpha && !s.has_gamma) {
        throw UsageError("one of --alpha or --gamma is required");
    }
    try {
        if (s.has_alpha) {
            return se::ErasureParams::from_alpha(s.alpha, s.p_init,
                                                 s.tail_tol);
        }
        return se::ErasureParams::from_gamma(s.gamma, s.p_init, s.tail_tol);
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("invalid --alpha/--gamma/--p-init/"
                                     "--tail-tol: ") +
                         e.what());
    }
}

std::string resolve_format(const Settings& s, const std::string& fallback) {
    const std::string fmt = s.has_format ? s.format : fallback;
    if (fmt != "csv" && fmt != "json") {
        throw UsageError("--format must be csv or json");
    }
    return fmt;
}

std::vector<int> parse_int_list(const std::string& spec,
                                const std::string& flag) {
    std::vector<int> values;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(token, &used);
            if (used != token.size() || v < 1) {
                throw std::invalid_argument(token);
            }
            values.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + " expects positive integers, got '" +
                             token + "'");
        }
    }
    if (values.empty()) {
        throw UsageError(flag + " expects at least one value");
    }
    return values;
}

std::vector<double> parse_double_list(const std::string& spec,
                                      const std::string& flag) {
    std::vector<double> values;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            values.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + " expects numbers, got '" + token + "'");
        }
    }
    if (values.empty()) {
        throw UsageError(flag + " expects at least one value");
    }
    return values;
}

int emit(const Settings& s, const std::string& content) {
    if (!se::write_text(s.output, content)) {
        std::cerr << "error: cannot write output: " << s.output << "\n";
        return kExitIo;
    }
    return kExitOk;
}

std::string render_table(const std::string& fmt,
                         const std::vector<std::string>& columns,
                         const std::vector<ordered_json>& rows) {
    if (fmt == "json") {
        ordered_json doc = ordered_json::array();
        for (const ordered_json& row : rows) {
            doc.push_back(row);
        }
        return doc.dump(2) + "\n";
    }
    std::string out;
    std::vector<std::string> header(columns.begin(), columns.end());
    out += se::csv_line(header);
    for (const ordered_json& row : rows) {
        std::vector<std::string> fields;
        for (const std::string& column : columns) {
            const ordered_json& value = row.at(column);
            if (value.is_null()) {
                fields.push_back("");
            } else if (value.is_number_integer()) {
                fields.push_back(std::to_string(value.get<long long>()));
            } else {
                fields.push_back(se::format_double17(value.get<double>()));
            }
        }
        out += se::csv_line(fields);
    }
    return out;
}

std::vector<ordered_json> pmf_rows(const se::SpinlaborPmf& pmf) {
    std::vector<ordered_json> rows;
    for (std::size_t q = 0; q < pmf.probs.size(); ++q) {
        rows.push_back({{"q", (long long)q}, {"probability", pmf.probs[q]}});
    }
    return rows;
}

int run_pmf(const Settings& s) {
    const se::ErasureParams params = resolve_params(s);
    if (s.has_cycles && s.has_full) {
        throw UsageError("use exactly one of --cycles or --full, not both");
    }
    if (!s.has_cycles && !s.has_full) {
        throw UsageError("one of --cycles or --full is required");
    }
    se::SpinlaborPmf pmf;
    if (s.has_full) {
        pmf = se::pmf_full_erasure(params);
    } else {
        if (s.cycles < 1) {
            throw UsageError("--cycles must be >= 1");
        }
        pmf = se::pmf_after_m_cycles(params, s.cycles);
    }
    pmf.validate();
    return emit(s, render_table(resolve_format(s, "csv"),
                                {"q", "probability"}, pmf_rows(pmf)));
}

int run_simulate(const Settings& s) {
    const se::ErasureParams params = resolve_params(s);
    if (s.samples < 1) {
        throw UsageError("--samples must be >= 1");
    }
    const se::EnsembleSummary ensemble =
        se::simulate_ensemble(params, s.samples, s.seed);
    const se::SpinlaborPmf exact = se::pmf_full_erasure(params);
    exact.validate();

    int q_max = (int)exact.probs.size() - 1;
    if (!ensemble.spinlabor_counts.empty()) {
        q_max = std::max(q_max, ensemble.spinlabor_counts.rbegin()->first);
    }
    std::vector<ordered_json> rows;
    for (int q = 0; q <= q_max; ++q) {
        const auto it = ensemble.spinlabor_counts.find(q);
        const double freq = it != ensemble.spinlabor_counts.end()
                                ? (double)it->second / (double)s.samples
                                : 0.0;
        const double exact_p =
            q < (int)exact.probs.size() ? exact.probs[q] : 0.0;
        rows.push_back({{"q", (long long)q},
                        {"frequency", freq},
                        {"exact_probability", exact_p}});
    }
    return emit(s, render_table(resolve_format(s, "csv"),
                                {"q", "frequency", "exact_probability"},
                                rows));
}

std::vector<ordered_json> curve_rows(const se::ViolationCurve& curve,
                                     std::optional<double> alpha) {
    std::vector<ordered_json> rows;
    for (std::size_t i = 0; i < curve.epsilons.size(); ++i) {
        ordered_json row;
        if (alpha) {
            row["alpha"] = *alpha;
        }
        row["epsilon"] = curve.epsilons[i];
        row["pr_violation"] = curve.pr_violation[i];
        row["bound_a"] = curve.bound_a[i];
        row["bound_b"] = curve.bound_b[i];
        if (curve.bound_semi.empty()) {
            row["bound_semi"] = nullptr;
        } else {
            row["bound_semi"] = curve.bound_semi[i];
        }
        rows.push_back(row);
    }
    return rows;
}

int run_bounds(const Settings& s) {
    se::ErasureParams params;
    if (s.has_b) {
        if (s.has_alpha || s.has_gamma) {
            throw UsageError("--b conflicts with --alpha/--gamma");
        }
        const std::vector<int> bs = parse_int_list(s.b_spec, "--b");
        if (bs.size() != 1) {
            throw UsageError("--b takes a single integer for bounds");
        }
        params = se::ErasureParams::from_gamma(
            std::numbers::ln2 / (double)bs[0], s.p_init, s.tail_tol);
    } else {
        params = resolve_params(s);
    }
    if (std::fabs(params.p_init - 0.5) > 1e-12) {
        throw UsageError("bounds requires --p-init 0.5");
    }
    const double eps_max = s.has_eps_max
                               ? s.eps_max
                               : std::ceil(se::vb_bound(params.g)) + 2.0;
    const double eps_step = s.has_eps_step ? s.eps_step : 0.1;
    se::ViolationCurve curve = se::violation_curve(params, eps_max, eps_step);
    curve.validate();
    return emit(s, render_table(resolve_format(s, "csv"),
                                {"epsilon", "pr_violation", "bound_a",
                                 "bound_b", "bound_semi"},
                                curve_rows(curve, std::nullopt)));
}

int run_jarzynski(const Settings& s) {
    const se::ErasureParams params = resolve_params(s);
    if (std::fabs(params.p_init - 0.5) > 1e-12) {
        throw UsageError("jarzynski requires --p-init 0.5");
    }
    const se::SpinlaborPmf pmf = se::pmf_full_erasure(params);
    pmf.validate();
    const double lhs = se::jarzynski_lhs(pmf);
    const double rhs = se::jarzynski_rhs(params.g);
    const std::string fmt = resolve_format(s, "json");
    if (fmt == "json") {
        ordered_json doc{{"lhs", lhs},
                         {"rhs", rhs},
                         {"abs_diff", std::fabs(lhs - rhs)}};
        return emit(s, doc.dump(2) + "\n");
    }
    std::string out = se::csv_line({"lhs", "rhs", "abs_diff"});
    out += se::csv_line({se::format_double17(lhs), se::format_double17(rhs),
                         se::format_double17(std::fabs(lhs - rhs))});
    return emit(s, out);
}

std::vector<ordered_json> decay_rows(const se::DecayStudy& study) {
    std::vector<ordered_json> rows;
    for (const se::DecayStudyRow& row : study.rows) {
        rows.push_back({{"b", (long long)row.b},
                        {"gamma", row.g},
                        {"a", row.decay_a},
                        {"a_squared", row.decay_a_squared}});
    }
    return rows;
}

int run_semianalytic(const Settings& s) {
    if (!s.has_b) {
        throw UsageError("--b is required (e.g. --b 1,2,4,8)");
    }
    const std::vector<int> bs = parse_int_list(s.b_spec, "--b");
    const se::DecayStudy study = se::decay_limit_study(bs, s.tail_tol);
    return emit(s, render_table(resolve_format(s, "csv"),
                                {"b", "gamma", "a", "a_squared"},
                                decay_rows(study)));
}

int run_figures(const Settings& s) {
    if (!s.has_fig) {
        throw UsageError("--fig is required (1a, 1b, 2a, 2b or supp)");
    }
    const std::string fig = s.fig;
    if (fig != "1a" && fig != "1b" && fig != "2a" && fig != "2b" &&
        fig != "supp") {
        throw UsageError("--fig must be one of 1a, 1b, 2a, 2b, supp");
    }
    const std::string fmt = resolve_format(s, "csv");

    if (fig == "supp") {
        std::vector<int> bs{1, 2, 4, 8, 16, 32, 64};
        if (s.has_b) {
            bs = parse_int_list(s.b_spec, "--b");
        }
        const se::DecayStudy study = se::decay_limit_study(bs, s.tail_tol);
        return emit(s, render_table(fmt, {"b", "gamma", "a", "a_squared"},
                                    decay_rows(study)));
    }

    std::string alphas_spec = s.alphas;
    if (!s.has_alphas) {
        alphas_spec = (fig == "1a" || fig == "1b") ? "0.2,0.4"
                                                   : "0.45,0.48,0.49";
    }
    const std::vector<double> alphas =
        parse_double_list(alphas_spec, "--alphas");

    std::vector<ordered_json> rows;
    for (double alpha : alphas) {
        se::ErasureParams params;
        try {
            params = se::ErasureParams::from_alpha(alpha, s.p_init,
                                                   s.tail_tol);
        } catch (const std::domain_error& e) {
            throw UsageError(std::string("invalid --alphas entry: ") +
                             e.what());
        }
        if (fig == "1a" || fig == "2a") {
            const se::SpinlaborPmf pmf = se::pmf_full_erasure(params);
            pmf.validate();
            const double bound = se::vb_bound(params.g);
            for (std::size_t q = 0; q < pmf.probs.size(); ++q) {
                rows.push_back({{"alpha", alpha},
                                {"q", (long long)q},
                                {"probability", pmf.probs[q]},
                                {"vb_bound", bound}});
            }
        } else {
            if (std::fabs(params.p_init - 0.5) > 1e-12) {
                throw UsageError("violation curves require --p-init 0.5");
            }
            const double eps_max =
                s.has_eps_max ? s.eps_max
                              : std::ceil(se::vb_bound(params.g)) + 2.0;
            const double eps_step = s.has_eps_step ? s.eps_step : 0.1;
            se::ViolationCurve curve =
                se::violation_curve(params, eps_max, eps_step);
            curve.validate();
            for (ordered_json& row : curve_rows(curve, alpha)) {
                rows.push_back(std::move(row));
            }
        }
    }
    if (fig == "1a" || fig == "2a") {
        return emit(s, render_table(fmt,
                                    {"alpha", "q", "probability", "vb_bound"},
                                    rows));
    }
    return emit(s, render_table(fmt,
                                {"alpha", "epsilon", "pr_violation",
                                 "bound_a", "bound_b", "bound_semi"},
                                rows));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and Monte Carlo statistics for spin-reservoir "
                 "information erasure"};
    app.require_subcommand(1);

    Settings pmf_s, sim_s, bounds_s, jarz_s, semi_s, fig_s;

    CLI::App* pmf_cmd =
        app.add_subcommand("pmf", "exact spinlabor distribution");
    add_param_options(pmf_cmd, pmf_s);
    pmf_s.cycles_opt =
        pmf_cmd->add_option("--cycles", pmf_s.cycles, "finite cycle count");
    pmf_s.full_opt =
        pmf_cmd->add_flag("--full", pmf_s.full, "full-erasure limit");
    pmf_s.cycles_opt->excludes(pmf_s.full_opt);
    pmf_s.full_opt->excludes(pmf_s.cycles_opt);
    add_output_options(pmf_cmd, pmf_s);

    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Monte Carlo erasure ensemble vs the exact distribution");
    add_param_options(sim_cmd, sim_s);
    sim_s.samples_opt =
        sim_cmd->add_option("--samples", sim_s.samples, "trajectory count");
    sim_s.seed_opt = sim_cmd->add_option("--seed", sim_s.seed, "master seed");
    add_output_options(sim_cmd, sim_s);

    CLI::App* bounds_cmd = app.add_subcommand(
        "bounds", "violation probability and its exponential bounds");
    add_param_options(bounds_cmd, bounds_s);
    bounds_s.b_opt = bounds_cmd->add_option(
        "--b", bounds_s.b_spec, "integer b selecting gamma = ln2/b");
    bounds_s.eps_max_opt =
        bounds_cmd->add_option("--eps-max", bounds_s.eps_max, "grid maximum");
    bounds_s.eps_step_opt =
        bounds_cmd->add_option("--eps-step", bounds_s.eps_step, "grid step");
    add_output_options(bounds_cmd, bounds_s);

    CLI::App* jarz_cmd = app.add_subcommand(
        "jarzynski", "exponentiated-spinlabor identity check");
    add_param_options(jarz_cmd, jarz_s);
    add_output_options(jarz_cmd, jarz_s);

    CLI::App* semi_cmd = app.add_subcommand(
        "semianalytic", "fitted exponential decay rates at gamma = ln2/b");
    semi_s.b_opt = semi_cmd->add_option("--b", semi_s.b_spec,
                                        "comma list of integers b");
    semi_s.tail_tol_opt = semi_cmd->add_option("--tail-tol", semi_s.tail_tol,
                                               "truncation tolerance");
    add_output_options(semi_cmd, semi_s);

    CLI::App* fig_cmd =
        app.add_subcommand("figures", "figure-ready data tables");
    add_param_options(fig_cmd, fig_s);
    fig_s.fig_opt = fig_cmd->add_option("--fig", fig_s.fig,
                                        "one of 1a, 1b, 2a, 2b, supp");
    fig_s.alphas_opt = fig_cmd->add_option("--alphas", fig_s.alphas,
                                           "comma list of alpha values");
    fig_s.b_opt = fig_cmd->add_option("--b", fig_s.b_spec,
                                      "comma list of b for --fig supp");
    fig_s.eps_max_opt =
        fig_cmd->add_option("--eps-max", fig_s.eps_max, "grid maximum");
    fig_s.eps_step_opt =
        fig_cmd->add_option("--eps-step", fig_s.eps_step, "grid step");
    add_output_options(fig_cmd, fig_s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (pmf_cmd->parsed()) {
            apply_config(pmf_s);
            return run_pmf(pmf_s);
        }
        if (sim_cmd->parsed()) {
            apply_config(sim_s);
            return run_simulate(sim_s);
        }
        if (bounds_cmd->parsed()) {
            apply_config(bounds_s);
            return run_bounds(bounds_s);
        }
        if (jarz_cmd->parsed()) {
            apply_config(jarz_s);
            return run_jarzynski(jarz_s);
        }
        if (semi_cmd->parsed()) {
            apply_config(semi_s);
            return run_semianalytic(semi_s);
        }
        if (fig_cmd->parsed()) {
            apply_config(fig_s);
            return run_figures(fig_s);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal validation failure: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
