#include "aco/cli.hpp"

#include "aco/jsonio.hpp"
#include "aco/metrics.hpp"
#include "aco/residual.hpp"
#include "aco/rk4.hpp"
#include "aco/series.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace aco::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

/// Configuration problem detected after flag parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string csv_num(double v) { return jsonio::format_double(v, 10); }

// ---------------------------------------------------------------------------
// flag storage
// ---------------------------------------------------------------------------

struct Options {
    int lambda = 1;
    double a = 1.0;
    double op = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double epsilon = 0.0;
    double gamma = 0.0;
    double span = 50.0;
    double dt = 1e-3;
    int q = 50;
    double h_lo = 1e-6;
    double h_hi = 1.5;
    double h = 0.0;
    std::string format = "csv";
    std::string output = "-";
    int stride = 10;
    std::string config_path;
    std::vector<std::string> table_rows;

    CLI::Option* op_flag = nullptr;
    CLI::Option* alpha_flag = nullptr;
    CLI::Option* beta_flag = nullptr;
    CLI::Option* epsilon_flag = nullptr;
    CLI::Option* gamma_flag = nullptr;
    CLI::Option* h_flag = nullptr;
};

void add_model_flags(CLI::App* sub, Options& o) {
    // Long-only help; the default "-h" short flag would shadow "--h".
    sub->set_help_flag("--help", "print help and exit");
    // The file itself is applied before parsing; see apply_config_file.
    sub->add_option("--config", o.config_path,
                    "key=value file mirroring the flags; flags win on conflict");
    sub->add_option("--a", o.a, "oscillation amplitude (initial displacement)")
        ->capture_default_str();
    sub->add_option("--lambda", o.lambda, "linear stiffness sign: -1, 0 or 1")
        ->capture_default_str();
    o.op_flag = sub->add_option(
        "--op", o.op, "set alpha, beta, epsilon and gamma to a common value");
    o.alpha_flag = sub->add_option("--alpha", o.alpha,
                                   "quartic inertia coefficient (overrides --op)");
    o.beta_flag =
        sub->add_option("--beta", o.beta, "cubic stiffness coefficient");
    o.epsilon_flag =
        sub->add_option("--epsilon", o.epsilon, "quadratic inertia coefficient");
    o.gamma_flag =
        sub->add_option("--gamma", o.gamma, "quintic stiffness coefficient");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "output path, '-' for stdout")
        ->capture_default_str();
}

void add_tuning_flags(CLI::App* sub, Options& o) {
    sub->add_option("--q", o.q, "residual grid intervals per period")
        ->capture_default_str();
    sub->add_option("--h-lo", o.h_lo, "lower end of the h search bracket")
        ->capture_default_str();
    sub->add_option("--h-hi", o.h_hi, "upper end of the h search bracket")
        ->capture_default_str();
}

void add_override_flag(CLI::App* sub, Options& o) {
    o.h_flag = sub->add_option(
        "--h", o.h, "fixed convergence-control parameter (skips tuning)");
}

void add_sampling_flags(CLI::App* sub, Options& o, bool with_span) {
    if (with_span)
        sub->add_option("--span", o.span, "integration span")
            ->capture_default_str();
    sub->add_option("--dt", o.dt, "integration step")->capture_default_str();
    sub->add_option("--stride", o.stride, "emit every stride-th sample")
        ->capture_default_str();
}

RunConfig make_config(const Options& o) {
    const double alpha = o.alpha_flag->count() ? o.alpha : o.op;
    const double beta = o.beta_flag->count() ? o.beta : o.op;
    const double epsilon = o.epsilon_flag->count() ? o.epsilon : o.op;
    const double gamma = o.gamma_flag->count() ? o.gamma : o.op;

    RunConfig cfg;
    cfg.params = OscillatorParams(o.lambda, epsilon, alpha, beta, gamma, o.a);
    cfg.span = o.span;
    cfg.dt = o.dt;
    cfg.q = o.q;
    cfg.h_bracket = {o.h_lo, o.h_hi};
    if (o.h_flag != nullptr && o.h_flag->count()) cfg.h_override = o.h;
    cfg.format = o.format == "json" ? OutputFormat::json : OutputFormat::csv;
    cfg.output_path = o.output;
    cfg.stride = o.stride;
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (!std::isfinite(cfg.span) || cfg.span <= 0.0)
        throw UsageError("span must be positive");
    if (!std::isfinite(cfg.dt) || cfg.dt <= 0.0)
        throw UsageError("dt must be positive");
    if (cfg.dt > 0.1) throw UsageError("dt must not exceed 0.1");
    if (cfg.dt >= cfg.span) throw UsageError("dt must be smaller than span");
    if (cfg.q < 2) throw UsageError("q must be at least 2");
    if (!(cfg.h_bracket.first < cfg.h_bracket.second))
        throw UsageError("h bracket must satisfy lo < hi");
    if (cfg.h_override && !std::isfinite(*cfg.h_override))
        throw UsageError("h must be finite");
    if (cfg.stride < 1) throw UsageError("stride must be at least 1");
}

// ---------------------------------------------------------------------------
// output assembly
// ---------------------------------------------------------------------------

/// Which knobs a subcommand actually exposes; only those are echoed.
struct EchoParts {
    bool model = true;
    bool span = false;
    bool dt = false;
    bool stride = false;
    bool tuning = true;
};

jsonio::Object config_echo(const RunConfig& cfg, const char* command,
                           EchoParts parts) {
    jsonio::Object obj;
    obj.emplace_back("command", command);
    obj.emplace_back("lambda", cfg.params.lambda);
    if (parts.model) {
        obj.emplace_back("a", cfg.params.amplitude);
        obj.emplace_back("epsilon", cfg.params.epsilon);
        obj.emplace_back("alpha", cfg.params.alpha);
        obj.emplace_back("beta", cfg.params.beta);
        obj.emplace_back("gamma", cfg.params.gamma);
    }
    if (parts.span) obj.emplace_back("span", cfg.span);
    if (parts.dt) obj.emplace_back("dt", cfg.dt);
    if (parts.stride) obj.emplace_back("stride", cfg.stride);
    if (parts.tuning) {
        obj.emplace_back("q", cfg.q);
        if (cfg.h_override) {
            obj.emplace_back("h", *cfg.h_override);
        } else {
            obj.emplace_back("h_lo", cfg.h_bracket.first);
            obj.emplace_back("h_hi", cfg.h_bracket.second);
        }
    }
    return obj;
}

std::string meta_value(const jsonio::Value& v) {
    if (const auto* d = std::get_if<double>(&v.v)) return csv_num(*d);
    if (const auto* i = std::get_if<long long>(&v.v)) return std::to_string(*i);
    if (const auto* b = std::get_if<bool>(&v.v)) return *b ? "true" : "false";
    if (const auto* s = std::get_if<std::string>(&v.v)) return *s;
    return "";
}

void append_meta(std::string& out, const jsonio::Object& obj) {
    for (const auto& [key, value] : obj)
        out += "# " + key + ": " + meta_value(value) + "\n";
}

void append_csv_row(std::string& out, const std::vector<double>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_num(cells[i]);
    }
    out += '\n';
}

std::string render_csv(const jsonio::Object& config, const jsonio::Object& diag,
                       const std::string& header,
                       const std::vector<std::vector<double>>& rows) {
    std::string out;
    append_meta(out, config);
    append_meta(out, diag);
    out += header;
    out += '\n';
    for (const auto& row : rows) append_csv_row(out, row);
    return out;
}

std::string render_json(const jsonio::Object& config, jsonio::Value results,
                        jsonio::Object diag) {
    jsonio::Object top;
    top.emplace_back("config", config);
    top.emplace_back("results", std::move(results));
    top.emplace_back("diagnostics", std::move(diag));
    return jsonio::dump(jsonio::Value{std::move(top)});
}

jsonio::Value table_results(const std::vector<std::string>& columns,
                            const std::vector<std::vector<double>>& rows) {
    jsonio::Array cols;
    for (const auto& c : columns) cols.emplace_back(c);
    jsonio::Array data;
    for (const auto& row : rows) {
        jsonio::Array r;
        for (double v : row) r.emplace_back(v);
        data.emplace_back(std::move(r));
    }
    jsonio::Object results;
    results.emplace_back("columns", std::move(cols));
    results.emplace_back("rows", std::move(data));
    return jsonio::Value{std::move(results)};
}

std::string join_header(const std::vector<std::string>& columns) {
    std::string header;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) header += ',';
        header += columns[i];
    }
    return header;
}

// ---------------------------------------------------------------------------
// solution setup shared by solve/trace/phase
// ---------------------------------------------------------------------------

struct TunedSolution {
    SeriesSolution sol;
    bool tuned = false;
    std::optional<ResidualProfile> profile;
};

TunedSolution make_solution(const RunConfig& cfg) {
    if (cfg.h_override)
        return {build_solution(cfg.params, *cfg.h_override), false, std::nullopt};
    ResidualProfile prof = optimize_h(cfg.params, cfg.h_bracket, 1e-6, cfg.q);
    SeriesSolution sol = build_solution(cfg.params, prof.h_star);
    return {std::move(sol), true, std::move(prof)};
}

void append_tuning_diag(jsonio::Object& diag, const TunedSolution& ts) {
    diag.emplace_back("h_tuned", ts.tuned);
    if (ts.profile) {
        diag.emplace_back("e_star", ts.profile->e_star);
        diag.emplace_back("minimum_at_edge", ts.profile->minimum_at_edge);
    }
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

std::string run_solve(const RunConfig& cfg) {
    const TunedSolution ts = make_solution(cfg);
    const FrequencyExpansion& e = ts.sol.expansion;

    jsonio::Object results;
    results.emplace_back("lambda0", e.lambda0);
    results.emplace_back("lambda1", e.lambda1);
    results.emplace_back("h", ts.sol.h);
    results.emplace_back("omega0", omega0(cfg.params));
    results.emplace_back("omega", e.omega);
    results.emplace_back("c13", ts.sol.c13);
    results.emplace_back("c15", ts.sol.c15);

    jsonio::Object diag;
    append_tuning_diag(diag, ts);

    const jsonio::Object config = config_echo(cfg, "solve", {});
    if (cfg.format == OutputFormat::json)
        return render_json(config, jsonio::Value{results}, std::move(diag));

    std::vector<double> row;
    std::vector<std::string> columns;
    for (const auto& [key, value] : results) {
        columns.push_back(key);
        row.push_back(std::get<double>(value.v));
    }
    return render_csv(config, diag, join_header(columns), {row});
}

std::string run_trace(const RunConfig& cfg) {
    const TunedSolution ts = make_solution(cfg);
    const Trajectory traj = integrate(cfg.params, cfg.span, cfg.dt);
    const ErrorReport rep = rms_error(traj, ts.sol);

    const std::vector<std::string> columns{"t", "x_rk4", "x_lthpm", "deviation"};
    std::vector<std::vector<double>> rows;
    rows.reserve(traj.size() / cfg.stride + 1);
    for (std::size_t i = 0; i < traj.size();
         i += static_cast<std::size_t>(cfg.stride)) {
        const double t = traj.time(i);
        const double xa = eval_displacement(ts.sol, t);
        rows.push_back({t, traj.x[i], xa, traj.x[i] - xa});
    }

    jsonio::Object diag;
    append_tuning_diag(diag, ts);
    diag.emplace_back("rms", rep.rms);
    diag.emplace_back("max_abs", rep.max_abs);
    diag.emplace_back("rows", rows.size());

    const jsonio::Object config = config_echo(cfg, "trace", {.span = true, .dt = true, .stride = true});
    if (cfg.format == OutputFormat::json)
        return render_json(config, table_results(columns, rows), std::move(diag));
    return render_csv(config, diag, join_header(columns), rows);
}

std::string run_phase(const RunConfig& cfg) {
    const TunedSolution ts = make_solution(cfg);
    const double omega = ts.sol.expansion.omega;
    const double period = 2.0 * std::numbers::pi / omega;

    // Step adjusted so the sampled grid ends exactly one analytic period in,
    // with the last emitted row landing on it.
    const long per_stride = std::max<long>(
        1, std::lround(period / (cfg.dt * static_cast<double>(cfg.stride))));
    const long n = per_stride * cfg.stride;
    const double step = period / static_cast<double>(n);
    if (step > 0.1)
        throw domain_error("stride too coarse for one period at this dt");
    const Trajectory traj = integrate(cfg.params, period, step);

    const std::vector<std::string> columns{"x_rk4", "v_rk4", "x_lthpm",
                                           "v_lthpm"};
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(per_stride) + 1);
    for (std::size_t i = 0; i < traj.size();
         i += static_cast<std::size_t>(cfg.stride)) {
        const double t = traj.time(i);
        rows.push_back({traj.x[i], traj.v[i], eval_displacement(ts.sol, t),
                        eval_velocity(ts.sol, t)});
    }

    const auto& first = rows.front();
    const auto& last = rows.back();
    const double closure = std::hypot(last[2] - first[2], last[3] - first[3]);
    const double rk4_gap = std::hypot(last[0] - first[0], last[1] - first[1]);

    jsonio::Object diag;
    append_tuning_diag(diag, ts);
    diag.emplace_back("analytic_period", period);
    diag.emplace_back("closure_deviation", closure);
    diag.emplace_back("rk4_endpoint_gap", rk4_gap);
    diag.emplace_back("rows", rows.size());

    const jsonio::Object config = config_echo(cfg, "phase", {.dt = true, .stride = true});
    if (cfg.format == OutputFormat::json)
        return render_json(config, table_results(columns, rows), std::move(diag));
    return render_csv(config, diag, join_header(columns), rows);
}

std::string run_residual_scan(const RunConfig& cfg) {
    const ResidualProfile prof =
        optimize_h(cfg.params, cfg.h_bracket, 1e-6, cfg.q);

    const std::vector<std::string> columns{"h", "e1", "is_minimizer"};
    std::vector<std::vector<double>> rows;
    rows.reserve(prof.h_grid.size() + 1);
    for (std::size_t i = 0; i < prof.h_grid.size(); ++i)
        rows.push_back({prof.h_grid[i], prof.e_values[i], 0.0});
    rows.push_back({prof.h_star, prof.e_star, 1.0});

    jsonio::Object diag;
    diag.emplace_back("h_star", prof.h_star);
    diag.emplace_back("e_star", prof.e_star);
    diag.emplace_back("minimum_at_edge", prof.minimum_at_edge);

    const jsonio::Object config = config_echo(cfg, "residual-scan", {});
    if (cfg.format == OutputFormat::json)
        return render_json(config, table_results(columns, rows), std::move(diag));
    return render_csv(config, diag, join_header(columns), rows);
}

struct TableOutcome {
    std::string payload;
    bool any_ok = false;
};

std::vector<std::pair<double, double>> table_pairs(const Options& o) {
    // Reference nine-row set: amplitudes x common nonlinear coefficient.
    static const std::vector<std::pair<double, double>> builtin{
        {0.2, 0.2}, {0.2, 0.8}, {0.2, 1.0}, {0.8, 0.2}, {0.8, 0.8},
        {0.8, 1.0}, {1.0, 0.2}, {1.0, 0.8}, {1.0, 1.0}};
    if (o.table_rows.empty()) return builtin;

    std::vector<std::pair<double, double>> pairs;
    for (const std::string& spec : o.table_rows) {
        double a = 0.0;
        double op = 0.0;
        int consumed = -1;
        if (std::sscanf(spec.c_str(), "%lf,%lf%n", &a, &op, &consumed) != 2 ||
            consumed != static_cast<int>(spec.size()))
            throw UsageError("--row expects 'a,op', got '" + spec + "'");
        pairs.emplace_back(a, op);
    }
    return pairs;
}

TableOutcome run_table(const RunConfig& cfg,
                       const std::vector<std::pair<double, double>>& pairs) {
    std::vector<OscillatorParams> grid;
    grid.reserve(pairs.size());
    for (const auto& [a, op] : pairs)
        grid.push_back(OscillatorParams::uniform(a, op, cfg.params.lambda));

    const std::vector<SweepRow> swept = sweep(grid, cfg.span, cfg.dt);

    const std::vector<std::string> columns{"a", "op", "h_star", "rms_lthpm"};
    std::vector<std::vector<double>> rows;
    jsonio::Array row_errors;
    std::string error_meta;
    for (std::size_t i = 0; i < swept.size(); ++i) {
        const SweepRow& r = swept[i];
        if (r.ok) {
            rows.push_back(
                {r.params.amplitude, pairs[i].second, r.h_star, r.rms});
        } else {
            const std::string text = "a=" + csv_num(r.params.amplitude) +
                                     " op=" + csv_num(pairs[i].second) + ": " +
                                     r.error;
            row_errors.emplace_back(text);
            error_meta += "# row_error: " + text + "\n";
        }
    }

    jsonio::Object diag;
    diag.emplace_back("rows_ok", rows.size());
    diag.emplace_back("row_errors", std::move(row_errors));

    const jsonio::Object config = config_echo(cfg, "table", {.model = false, .span = true, .dt = true, .tuning = false});
    TableOutcome outcome;
    outcome.any_ok = !rows.empty();
    if (cfg.format == OutputFormat::json) {
        outcome.payload =
            render_json(config, table_results(columns, rows), std::move(diag));
    } else {
        std::string out;
        append_meta(out, config);
        out += error_meta;
        out += join_header(columns);
        out += '\n';
        for (const auto& row : rows) append_csv_row(out, row);
        outcome.payload = std::move(out);
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// flat config file
// ---------------------------------------------------------------------------

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
    std::optional<std::string> path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    return path;
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    while (std::getline(in, line)) {
        const std::string stripped = trimmed(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line is not key=value: '" + stripped + "'");
        const std::string key = trimmed(stripped.substr(0, eq));
        const std::string value = trimmed(stripped.substr(eq + 1));
        if (key.empty())
            throw UsageError("config line has an empty key: '" + stripped + "'");
        if (key == "config") continue;
        bool replaced = false;
        for (auto& entry : entries) {
            if (entry.first == key) {
                entry.second = value;  // later assignment wins within the file
                replaced = true;
                break;
            }
        }
        if (!replaced) entries.emplace_back(key, value);
    }
    return entries;
}

/// Appends "--key value" for every config entry whose flag is absent from the
/// command line, so explicit flags always win.
std::vector<std::string> apply_config_file(std::vector<std::string> args) {
    const std::optional<std::string> path = find_config_path(args);
    if (!path) return args;
    auto given = [&args](const std::string& key) {
        const std::string flag = "--" + key;
        for (const std::string& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    for (const auto& [key, value] : read_config_file(*path)) {
        if (given(key)) continue;
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

int write_payload(const RunConfig& cfg, const std::string& payload,
                  std::ostream& out, std::ostream& err) {
    if (cfg.output_path == "-") {
        out << payload;
        return exit_ok;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << cfg.output_path << "'\n";
        return exit_usage;
    }
    file << payload;
    if (!file) {
        err << "error: failed writing output file '" << cfg.output_path << "'\n";
        return exit_usage;
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "analytic first-order solutions with a tuned convergence-control "
        "parameter for the autonomous conservative oscillator, validated "
        "against a fixed-step RK4 reference"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    // Each subcommand keeps its own flag storage so presence checks stay
    // meaningful after parsing.
    Options o_solve, o_trace, o_phase, o_rscan, o_table;

    CLI::App* solve = app.add_subcommand(
        "solve", "tuned frequency expansion and displacement coefficients");
    add_model_flags(solve, o_solve);
    add_tuning_flags(solve, o_solve);
    add_override_flag(solve, o_solve);

    CLI::App* trace = app.add_subcommand(
        "trace", "displacement of the analytic solution against RK4 over time");
    add_model_flags(trace, o_trace);
    add_tuning_flags(trace, o_trace);
    add_override_flag(trace, o_trace);
    add_sampling_flags(trace, o_trace, true);

    CLI::App* phase = app.add_subcommand(
        "phase", "phase-portrait samples over one analytic period");
    add_model_flags(phase, o_phase);
    add_tuning_flags(phase, o_phase);
    add_override_flag(phase, o_phase);
    add_sampling_flags(phase, o_phase, false);

    CLI::App* rscan = app.add_subcommand(
        "residual-scan", "averaged square residual across the h bracket");
    add_model_flags(rscan, o_rscan);
    add_tuning_flags(rscan, o_rscan);

    CLI::App* table = app.add_subcommand(
        "table", "tuned h and rms deviation for a set of (a, op) rows");
    add_model_flags(table, o_table);
    table->add_option("--span", o_table.span, "integration span")
        ->capture_default_str();
    table->add_option("--dt", o_table.dt, "integration step")
        ->capture_default_str();
    table->add_option("--row", o_table.table_rows,
                      "extra 'a,op' row (repeatable); default is the built-in "
                      "nine-row reference set");

    std::vector<std::string> full_args;
    try {
        full_args = apply_config_file(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    std::vector<const char*> argv;
    argv.reserve(full_args.size() + 1);
    argv.push_back("aco");
    for (const std::string& a : full_args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const Options& o = solve->parsed()   ? o_solve
                       : trace->parsed() ? o_trace
                       : phase->parsed() ? o_phase
                       : rscan->parsed() ? o_rscan
                                         : o_table;

    RunConfig cfg;
    std::vector<std::pair<double, double>> pairs;
    try {
        cfg = make_config(o);
        validate(cfg);
        if (table->parsed()) pairs = table_pairs(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (table->parsed()) {
            const TableOutcome outcome = run_table(cfg, pairs);
            const int code = write_payload(cfg, outcome.payload, out, err);
            if (code != exit_ok) return code;
            if (!outcome.any_ok) {
                err << "error: every table row failed\n";
                return exit_domain;
            }
            return exit_ok;
        }

        std::string payload;
        if (solve->parsed()) payload = run_solve(cfg);
        else if (trace->parsed()) payload = run_trace(cfg);
        else if (phase->parsed()) payload = run_phase(cfg);
        else if (rscan->parsed()) payload = run_residual_scan(cfg);
        return write_payload(cfg, payload, out, err);
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

}  // namespace aco::cli
