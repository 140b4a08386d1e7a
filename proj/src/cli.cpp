#include "tipforge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tipforge/io.hpp"
#include "tipforge/report.hpp"
#include "tipforge/svg.hpp"

namespace tipforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TolEnv {
    const char* env;
    const char* flag;
    double Tolerances::*field;
};

constexpr TolEnv kTolerances[] = {
    {"TIPFORGE_TOL_REAL", "--tol-real", &Tolerances::real_classification},
    {"TIPFORGE_TOL_CLUSTER", "--tol-cluster", &Tolerances::root_cluster},
    {"TIPFORGE_TOL_ZERO", "--tol-zero", &Tolerances::zero_eigenvalue},
    {"TIPFORGE_TOL_PROBE", "--tol-probe", &Tolerances::stability_probe},
    {"TIPFORGE_TOL_SIGN", "--tol-sign", &Tolerances::sign_zero},
    {"TIPFORGE_TOL_KEY", "--tol-key", &Tolerances::canonical_key},
};

double positive_number(const std::string& name, const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(v > 0) || !std::isfinite(v))
        throw std::invalid_argument(name + " must be a positive number, got '" + text + "'");
    return v;
}

std::string read_text(const std::string& source) {
    if (source == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(source, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A path to an existing file, "-" for stdin, or the literal text itself.
std::string resolve_input(const std::string& arg) {
    std::error_code ec;
    if (arg == "-" || fs::is_regular_file(arg, ec)) return read_text(arg);
    return arg;
}

Matrix load_matrix(const std::string& arg) {
    const std::string text = resolve_input(arg);
    const std::string ext = fs::path(arg).extension().string();
    MatrixFormat format = detect_matrix_format(text);
    if (ext == ".json") format = MatrixFormat::Json;
    if (ext == ".csv") format = MatrixFormat::Csv;
    return parse_matrix(text, format);
}

// Patterns and inline matrices such as "-+;--" or "-1,2;2,-1" begin with a
// dash, so they are routed past the option parser.
bool looks_like_operand(const std::string& a) {
    if (a.size() < 2 || a[0] != '-') return false;
    const auto rest = a.find_first_not_of('-');
    return rest == std::string::npos || !std::isalpha(static_cast<unsigned char>(a[rest]));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << content;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

int exit_code_for(const Error& e) {
    const std::string kind = e.kind();
    if (kind == "ParseError" || kind == "DimensionMismatch") return kExitParse;
    if (kind == "NonNegativeDiagonal" || kind == "BudgetExceeded") return kExitDomain;
    return kExitNumeric;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
    err << json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}.dump() << "\n";
}

std::string render_cycles_text(const SignPattern& p, const CyclesPayload& c) {
    std::ostringstream s;
    s << "pattern " << p.to_string() << "\n";
    auto matrix = [&](const char* name, const IntMatrix& m) {
        s << "  " << name << ":\n";
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            s << "   ";
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                std::string v = std::to_string(m(i, j));
                s << std::string(5 - std::min<std::size_t>(4, v.size()), ' ') << v;
            }
            s << "\n";
        }
    };
    for (const auto& g : c.groups) {
        s << "\na" << g.coefficient;
        if (g.sigma_power) s << " sigma^" << *g.sigma_power;
        s << ": " << g.cell.tipping << "/" << g.cell.total << " tipping\n";
        for (const auto& t : g.terms) {
            s << "  " << (t.sign > 0 ? '+' : '-') << " ";
            if (t.elements.empty()) s << "(empty)";
            for (const auto& e : t.elements) s << "(" << e.row << "," << e.col << ")";
            s << "  sigma^" << t.sigma_power << "\n";
        }
        matrix("w_plus", g.weights.w_plus);
        matrix("w_minus", g.weights.w_minus);
        matrix("diff", g.weights.diff);
    }
    return s.str();
}

CyclesPayload build_cycles(const SignPattern& p, std::optional<int> coeff, bool by_sigma) {
    CyclesPayload out;
    out.by_sigma = by_sigma;
    std::vector<int> coefficients;
    if (coeff) {
        coefficients.push_back(*coeff);
    } else {
        for (int i = p.n(); i >= 0; --i) coefficients.push_back(i);
    }
    for (int i : coefficients) {
        const auto terms = coefficient_terms(p, i);
        std::vector<std::optional<int>> groups;
        if (by_sigma) {
            for (int j = p.n() - i; j >= 0; --j) groups.emplace_back(j);
        } else {
            groups.emplace_back(std::nullopt);
        }
        for (const auto& power : groups) {
            CycleGroup g;
            g.coefficient = i;
            g.sigma_power = power;
            for (const auto& t : terms) {
                if (power && t.sigma_power != *power) continue;
                g.terms.push_back(t);
                ++g.cell.total;
                if (t.sign < 0) ++g.cell.tipping;
            }
            if (power && g.terms.empty()) continue;
            g.weights = weight_matrices(p, i, power);
            out.groups.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

Tolerances tolerances_from_env(const EnvLookup& env, Tolerances base) {
    for (const auto& t : kTolerances)
        if (const char* v = env(t.env); v && *v) base.*(t.field) = positive_number(t.env, v);
    if (const char* v = env("TIPFORGE_TOL_QR_FACTOR"); v && *v)
        base.qr_iteration_factor = static_cast<int>(positive_number("TIPFORGE_TOL_QR_FACTOR", v));
    return base;
}

std::string render_tables_text(const TablesPayload& tables) {
    std::ostringstream s;
    auto render = [&](const SensitivityTable& t, char label, char prefix, bool plus_for_zero) {
        const int n_max = t.n_max;
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> header{"n"};
        for (int c = n_max; c >= 0; --c) header.push_back(std::string(1, prefix) + std::to_string(c));
        grid.push_back(header);
        for (int n = 2; n <= n_max; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (int c = n_max; c >= 0; --c) {
                if (c > n) {
                    row.emplace_back();
                    continue;
                }
                const SensitivityCell& cell = t.cell(n, c);
                if (cell.total == 0)
                    row.emplace_back();
                else if (plus_for_zero && cell.tipping == 0)
                    row.emplace_back("+");
                else
                    row.push_back(std::to_string(cell.tipping) + "/" + std::to_string(cell.total));
            }
            grid.push_back(std::move(row));
        }
        std::vector<std::size_t> width(grid[0].size(), 0);
        for (const auto& row : grid)
            for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
        s << label << ")\n";
        for (const auto& row : grid) {
            std::string line;
            for (std::size_t k = 0; k < row.size(); ++k)
                line += std::string(width[k] - row[k].size() + (k == 0 ? 0 : 2), ' ') + row[k];
            while (!line.empty() && line.back() == ' ') line.pop_back();
            s << line << "\n";
        }
    };
    render(tables.coefficients, 'a', 'a', true);
    s << "\n";
    render(tables.sigma_powers, 'b', 's', false);
    return s.str();
}

std::string render_tables_csv(const TablesPayload& tables) {
    std::string s = "n,coefficient,tipping,total\r\n";
    auto rows = [&](const SensitivityTable& t, char prefix) {
        for (int n = 2; n <= t.n_max; ++n)
            for (int c = n; c >= 0; --c) {
                const SensitivityCell& cell = t.cell(n, c);
                if (cell.total == 0) continue;
                s += std::to_string(n) + "," + prefix + std::to_string(c) + "," + std::to_string(cell.tipping) + "," +
                     std::to_string(cell.total) + "\r\n";
            }
    };
    rows(tables.coefficients, 'a');
    rows(tables.sigma_powers, 's');
    return s;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    CLI::App app{"tipforge: diagonal-forcing tipping points, feedback-cycle census and spectral signatures",
                 "tipforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version()));

    std::map<std::string, std::string> tol_flags;
    for (const auto& t : kTolerances) app.add_option(t.flag, tol_flags[t.flag], "override " + std::string(t.env));
    std::string qr_factor_flag;
    app.add_option("--tol-qr-factor", qr_factor_flag, "override TIPFORGE_TOL_QR_FACTOR");

    std::string matrix_arg, pattern_arg, out_path, format, svg_path, csv_path, mode = "plain";
    int n_max = 8, census_n = 2, threads = 1;
    std::optional<int> coeff;
    bool by_sigma = false;

    auto* analyze = app.add_subcommand("analyze", "full sigma report for a negative-diagonal matrix");
    analyze->add_option("matrix", matrix_arg, "matrix file (.json/.csv), '-' for stdin, or inline text")->required();
    analyze->add_option("--out", out_path, "write the JSON report here instead of stdout");

    auto* sigma_point = app.add_subcommand("sigma-point", "both tipping-point routes and the verdict");
    sigma_point->add_option("matrix", matrix_arg, "matrix file, '-' or inline text")->required();
    sigma_point->add_option("--out", out_path, "write the JSON report here");

    auto* table1 = app.add_subcommand("table1", "coefficient sensitivity tables of the canonical patterns");
    table1->add_option("--n-max", n_max, "largest order")->capture_default_str();
    table1->add_option("--format", format, "stdout format: text (default), csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table1->add_option("--csv", csv_path, "also write the CSV here");
    table1->add_option("--out", out_path, "also write the JSON report here");

    auto* cycles = app.add_subcommand("cycles", "signed terms, sensitivities and weight matrices of a pattern");
    cycles->add_option("pattern", pattern_arg, "sign pattern such as '-++;--+;---', or a file")->required();
    cycles->add_option("--coeff", coeff, "only the x^i coefficient");
    cycles->add_flag("--by-sigma", by_sigma, "split terms by the number of diagonal entries used");
    cycles->add_option("--format", format, "stdout format: json (default) or text")
        ->check(CLI::IsMember({"text", "json"}));
    cycles->add_option("--out", out_path, "write the JSON report here");

    auto* signature = app.add_subcommand("signature", "spectral signature of a sign pattern");
    signature->add_option("pattern", pattern_arg, "sign pattern or file")->required();
    signature->add_option("--mode", mode, "plain or hollow-scaled")
        ->check(CLI::IsMember({"plain", "hollow-scaled"}))
        ->capture_default_str();
    signature->add_option("--svg", svg_path, "write a complex-plane scatter here");
    signature->add_option("--csv", csv_path, "write eigenvalues (re,im) here");
    signature->add_option("--out", out_path, "write the JSON report here");

    auto* census_cmd = app.add_subcommand("census", "signatures of every sign pattern of order n");
    census_cmd->add_option("--n", census_n, "pattern order")->capture_default_str();
    census_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
    census_cmd->add_option("--out", out_path, "directory for census.json and census_lambda_max.csv");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> storage{"tipforge"};
    std::vector<std::string> trailing;
    const bool has_separator = std::find(args.begin(), args.end(), "--") != args.end();
    for (const auto& a : args) {
        if (!has_separator && looks_like_operand(a))
            trailing.push_back(a);
        else
            storage.push_back(a);
    }
    if (!trailing.empty()) {
        storage.emplace_back("--");
        storage.insert(storage.end(), trailing.begin(), trailing.end());
    }
    std::vector<char*> argv;
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "UsageError", e.what(), kExitUsage);
        return kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        Tolerances tol = tolerances_from_env(env);
        for (const auto& t : kTolerances)
            if (!tol_flags[t.flag].empty()) tol.*(t.field) = positive_number(t.flag, tol_flags[t.flag]);
        if (!qr_factor_flag.empty())
            tol.qr_iteration_factor = static_cast<int>(positive_number("--tol-qr-factor", qr_factor_flag));

        AnalysisReport report;
        report.tool_version = tool_version();
        report.tolerances = tol;
        auto elapsed = [&] {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        };
        auto emit_json = [&](const std::string& path) {
            report.elapsed_ms = elapsed();
            const std::string text = serialize(report);
            if (path.empty())
                out << text;
            else
                write_file(path, text);
        };

        if (analyze->parsed() || sigma_point->parsed()) {
            report.command = analyze->parsed() ? "analyze" : "sigma-point";
            const Matrix m = load_matrix(matrix_arg);
            report.input.matrix = m;
            const SigmaReport r = stabilize(m, tol);
            report.payload = r;
            if (sigma_point->parsed())
                out << "sigma* = " << (r.sigma_star_omega ? num(*r.sigma_star_omega) : std::string("none"))
                    << ", verdict = " << to_string(r.verdict) << "\n";
            emit_json(out_path);
        } else if (table1->parsed()) {
            report.command = "table1";
            report.input.parameters = {{"n_max", n_max}};
            TablesPayload tables{sensitivity_table(n_max), sigma_sensitivity_table(n_max)};
            report.payload = tables;
            const std::string csv = render_tables_csv(tables);
            if (!csv_path.empty()) write_file(csv_path, csv);
            if (format == "csv")
                out << csv;
            else if (format == "json")
                emit_json("");
            else
                out << render_tables_text(tables);
            if (!out_path.empty()) emit_json(out_path);
        } else if (cycles->parsed()) {
            report.command = "cycles";
            const SignPattern p = parse_pattern(resolve_input(pattern_arg));
            report.input.pattern = p;
            report.input.parameters = {{"coeff", coeff ? json(*coeff) : json(nullptr)}, {"by_sigma", by_sigma}};
            CyclesPayload payload = build_cycles(p, coeff, by_sigma);
            report.payload = payload;
            if (format == "text") out << render_cycles_text(p, payload);
            if (format != "text" || !out_path.empty()) emit_json(out_path);
        } else if (signature->parsed()) {
            report.command = "signature";
            const SignPattern p = parse_pattern(resolve_input(pattern_arg));
            report.input.pattern = p;
            report.input.parameters = {{"mode", mode}};
            const SpectralSignature s = spectral_signature(p, signature_mode_from_string(mode), tol);
            report.payload = s;
            if (!svg_path.empty())
                write_file(svg_path, spectrum_svg(s.spectrum, p.to_string() + " (" + mode + "), Re lambda_max = " +
                                                                  num(s.lambda_max.value)));
            if (!csv_path.empty()) write_file(csv_path, spectrum_csv(s.spectrum));
            emit_json(out_path);
        } else if (census_cmd->parsed()) {
            report.command = "census";
            report.input.parameters = {{"n", census_n}};
            const CensusResult c = census(census_n, tol, threads);
            report.payload = c;
            if (out_path.empty()) {
                emit_json("");
            } else {
                fs::create_directories(out_path);
                emit_json((fs::path(out_path) / "census.json").string());
                std::string csv = "lambda_max,member_count\r\n";
                for (const auto& k : c.comaximal_classes) {
                    char buf[40];
                    std::snprintf(buf, sizeof buf, "%.17g", k.lambda_max);
                    csv += std::string(buf) + "," + std::to_string(k.member_count) + "\r\n";
                }
                write_file((fs::path(out_path) / "census_lambda_max.csv").string(), csv);
                out << "census n=" << c.n << ": " << c.pattern_count << " patterns, " << c.cospectral_classes.size()
                    << " cospectral classes, " << c.comaximal_classes.size() << " comaximal classes\n";
            }
        }
        return kExitOk;
    } catch (const Error& e) {
        const int code = exit_code_for(e);
        report_error(err, e.kind(), e.what(), code);
        return code;
    } catch (const std::invalid_argument& e) {
        report_error(err, "UsageError", e.what(), kExitUsage);
        return kExitUsage;
    } catch (const std::exception& e) {
        report_error(err, "InternalError", e.what(), kExitNumeric);
        return kExitNumeric;
    }
}

}  // namespace tipforge
