#include "tipforge/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tipforge/io.hpp"

#ifndef TIPFORGE_VERSION
#define TIPFORGE_VERSION "0.0.0"
#endif

namespace tipforge {

using nlohmann::json;

const char* tool_version() { return TIPFORGE_VERSION; }

bool InputEcho::operator==(const InputEcho& o) const {
    if (matrix.has_value() != o.matrix.has_value()) return false;
    if (matrix && (matrix->rows() != o.matrix->rows() || matrix->cols() != o.matrix->cols() || *matrix != *o.matrix))
        return false;
    return pattern == o.pattern && parameters == o.parameters;
}

namespace {

// ---- scalar helpers -------------------------------------------------------

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_double(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

json complex_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json spectrum_json(const Spectrum& s) {
    json out = json::array();
    for (const auto& z : s) out.push_back(complex_json(z));
    return out;
}

Spectrum spectrum_from(const json& j) {
    std::vector<std::complex<double>> v;
    for (const auto& z : j) v.push_back(complex_from(z));
    return Spectrum(std::move(v));
}

json poly_json(const Poly& p) { return p.coeffs(); }

Poly poly_from(const json& j) { return Poly(j.get<std::vector<double>>()); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from(const json& j) {
    const auto& rows = j.at("entries");
    Matrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = rows.at(i).at(k).get<double>();
    return m;
}

json int_matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from(const json& j) {
    IntMatrix m(j.size(), j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = j.at(i).at(k).get<std::int64_t>();
    return m;
}

json tolerances_json(const Tolerances& t) {
    return {{"real_classification", t.real_classification},
            {"root_cluster", t.root_cluster},
            {"zero_eigenvalue", t.zero_eigenvalue},
            {"stability_probe", t.stability_probe},
            {"sign_zero", t.sign_zero},
            {"canonical_key", t.canonical_key},
            {"qr_iteration_factor", t.qr_iteration_factor}};
}

Tolerances tolerances_from(const json& j) {
    Tolerances t;
    t.real_classification = j.at("real_classification").get<double>();
    t.root_cluster = j.at("root_cluster").get<double>();
    t.zero_eigenvalue = j.at("zero_eigenvalue").get<double>();
    t.stability_probe = j.at("stability_probe").get<double>();
    t.sign_zero = j.at("sign_zero").get<double>();
    t.canonical_key = j.at("canonical_key").get<double>();
    t.qr_iteration_factor = j.at("qr_iteration_factor").get<int>();
    return t;
}

// ---- sigma analysis ---------------------------------------------------------

json sigma_json(const SigmaReport& r) {
    json grid = json::array();
    for (const Poly& p : r.grid.grid) grid.push_back(poly_json(p));

    json per = json::array();
    for (const auto& roots : r.omega.per_coefficient) {
        json list = json::array();
        for (const auto& root : roots) list.push_back({{"root", root.root}, {"multiplicity", root.multiplicity}});
        per.push_back(std::move(list));
    }
    json terms = json::array();
    for (const auto& t : r.dominant_cycles.terms)
        terms.push_back({{"power", t.power}, {"coefficient", t.coefficient}, {"contribution", t.contribution}});

    return {{"n", r.n},
            {"sigma_charpoly", std::move(grid)},
            {"omega",
             {{"per_coefficient", std::move(per)},
              {"identically_zero", r.omega.identically_zero},
              {"union", r.omega.all},
              {"maximum", opt(r.omega.maximum)}}},
            {"sigma_star_omega", opt(r.sigma_star_omega)},
            {"sigma_star_scaling", opt(r.sigma_star_scaling)},
            {"scaling_spectrum", spectrum_json(r.scaling_spectrum)},
            {"scaling_lambda_max", complex_json(r.scaling_lambda_max)},
            {"lambda_max_at_star", opt(r.lambda_max_at_star)},
            {"lambda_max_past_star", opt(r.lambda_max_past_star)},
            {"verdict", to_string(r.verdict)},
            {"dominant_cycles", {{"terms", std::move(terms)}, {"total", r.dominant_cycles.total}}},
            {"residuals",
             {{"r0_factor", r.r0_factor}, {"r0_residual", r.r0_residual}, {"route_gap", opt(r.route_gap)}}}};
}

SigmaReport sigma_from(const json& j) {
    SigmaReport r;
    r.n = j.at("n").get<int>();
    r.grid.n = r.n;
    for (const auto& p : j.at("sigma_charpoly")) r.grid.grid.push_back(poly_from(p));
    const json& om = j.at("omega");
    for (const auto& list : om.at("per_coefficient")) {
        std::vector<RealRoot<double>> roots;
        for (const auto& root : list)
            roots.push_back({root.at("root").get<double>(), root.at("multiplicity").get<int>()});
        r.omega.per_coefficient.push_back(std::move(roots));
    }
    r.omega.identically_zero = om.at("identically_zero").get<std::vector<bool>>();
    r.omega.all = om.at("union").get<std::vector<double>>();
    r.omega.maximum = opt_double(om.at("maximum"));
    r.sigma_star_omega = opt_double(j.at("sigma_star_omega"));
    r.sigma_star_scaling = opt_double(j.at("sigma_star_scaling"));
    r.scaling_spectrum = spectrum_from(j.at("scaling_spectrum"));
    r.scaling_lambda_max = complex_from(j.at("scaling_lambda_max"));
    r.lambda_max_at_star = opt_double(j.at("lambda_max_at_star"));
    r.lambda_max_past_star = opt_double(j.at("lambda_max_past_star"));
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    for (const auto& t : j.at("dominant_cycles").at("terms"))
        r.dominant_cycles.terms.push_back(
            {t.at("power").get<int>(), t.at("coefficient").get<double>(), t.at("contribution").get<double>()});
    r.dominant_cycles.total = j.at("dominant_cycles").at("total").get<double>();
    const json& res = j.at("residuals");
    r.r0_factor = res.at("r0_factor").get<double>();
    r.r0_residual = res.at("r0_residual").get<double>();
    r.route_gap = opt_double(res.at("route_gap"));
    return r;
}

// ---- tables -------------------------------------------------------------------

json table_json(const SensitivityTable& t) {
    json rows = json::array();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        json cells = json::array();
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            cells.push_back({{"index", c}, {"tipping", t.rows[r][c].tipping}, {"total", t.rows[r][c].total}});
        rows.push_back({{"n", r + 2}, {"cells", std::move(cells)}});
    }
    return {{"n_max", t.n_max}, {"rows", std::move(rows)}};
}

SensitivityTable table_from(const json& j) {
    SensitivityTable t;
    t.n_max = j.at("n_max").get<int>();
    for (const auto& row : j.at("rows")) {
        std::vector<SensitivityCell> cells;
        for (const auto& c : row.at("cells"))
            cells.push_back({c.at("tipping").get<std::int64_t>(), c.at("total").get<std::int64_t>()});
        t.rows.push_back(std::move(cells));
    }
    return t;
}

// ---- cycles -------------------------------------------------------------------

json weights_json(const WeightedCycleSet& w) {
    return {{"w_plus", int_matrix_json(w.w_plus)},
            {"w_minus", int_matrix_json(w.w_minus)},
            {"diff", int_matrix_json(w.diff)},
            {"positive_terms", w.positive_terms},
            {"negative_terms", w.negative_terms}};
}

WeightedCycleSet weights_from(const json& j) {
    return {int_matrix_from(j.at("w_plus")), int_matrix_from(j.at("w_minus")), int_matrix_from(j.at("diff")),
            j.at("positive_terms").get<std::int64_t>(), j.at("negative_terms").get<std::int64_t>()};
}

json cycles_json(const CyclesPayload& p) {
    json groups = json::array();
    for (const auto& g : p.groups) {
        json terms = json::array();
        for (const auto& t : g.terms) {
            json elements = json::array();
            for (const auto& e : t.elements) elements.push_back({e.row, e.col});
            terms.push_back({{"support", t.support},
                             {"perm", t.perm},
                             {"sign", t.sign},
                             {"sigma_power", t.sigma_power},
                             {"elements", std::move(elements)}});
        }
        groups.push_back({{"coefficient", g.coefficient},
                          {"sigma_power", g.sigma_power ? json(*g.sigma_power) : json(nullptr)},
                          {"tipping", g.cell.tipping},
                          {"total", g.cell.total},
                          {"terms", std::move(terms)},
                          {"weights", weights_json(g.weights)}});
    }
    return {{"by_sigma", p.by_sigma}, {"groups", std::move(groups)}};
}

CyclesPayload cycles_from(const json& j) {
    CyclesPayload p;
    p.by_sigma = j.at("by_sigma").get<bool>();
    for (const auto& g : j.at("groups")) {
        CycleGroup group;
        group.coefficient = g.at("coefficient").get<int>();
        if (!g.at("sigma_power").is_null()) group.sigma_power = g.at("sigma_power").get<int>();
        group.cell = {g.at("tipping").get<std::int64_t>(), g.at("total").get<std::int64_t>()};
        for (const auto& t : g.at("terms")) {
            CycleTerm term;
            term.support = t.at("support").get<std::vector<int>>();
            term.perm = t.at("perm").get<std::vector<int>>();
            term.sign = t.at("sign").get<int>();
            term.sigma_power = t.at("sigma_power").get<int>();
            for (const auto& e : t.at("elements")) term.elements.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
            group.terms.push_back(std::move(term));
        }
        group.weights = weights_from(g.at("weights"));
        p.groups.push_back(std::move(group));
    }
    return p;
}

// ---- signature / census -----------------------------------------------------

json key_json(const CanonicalKey& k) {
    json values = json::array();
    for (const auto& [re, im] : k.values) values.push_back({re, im});
    return {{"quantum", k.quantum}, {"values", std::move(values)}};
}

CanonicalKey key_from(const json& j) {
    CanonicalKey k{j.at("quantum").get<double>(), {}};
    for (const auto& v : j.at("values")) k.values.emplace_back(v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>());
    return k;
}

json signature_json(const SpectralSignature& s) {
    json coefficients = json::array();
    for (const auto& a : s.polynomial.coefficients) coefficients.push_back(int_matrix_json(a));
    return {{"pattern", s.pattern.to_string()},
            {"mode", to_string(s.mode)},
            {"polynomial",
             {{"n", s.polynomial.n}, {"degree", s.polynomial.degree}, {"coefficients", std::move(coefficients)}}},
            {"spectrum", spectrum_json(s.spectrum)},
            {"lambda_max", {{"value", s.lambda_max.value}, {"witness", complex_json(s.lambda_max.witness)}}},
            {"canonical_key", key_json(s.key)}};
}

SpectralSignature signature_from(const json& j) {
    SpectralSignature s;
    s.pattern = parse_pattern(j.at("pattern").get<std::string>());
    s.mode = signature_mode_from_string(j.at("mode").get<std::string>());
    const json& poly = j.at("polynomial");
    s.polynomial.n = poly.at("n").get<int>();
    s.polynomial.degree = poly.at("degree").get<int>();
    for (const auto& a : poly.at("coefficients")) s.polynomial.coefficients.push_back(int_matrix_from(a));
    s.spectrum = spectrum_from(j.at("spectrum"));
    s.lambda_max = {j.at("lambda_max").at("value").get<double>(), complex_from(j.at("lambda_max").at("witness"))};
    s.key = key_from(j.at("canonical_key"));
    return s;
}

json patterns_json(const std::vector<SignPattern>& v) {
    json out = json::array();
    for (const auto& p : v) out.push_back(p.to_string());
    return out;
}

std::vector<SignPattern> patterns_from(const json& j) {
    std::vector<SignPattern> out;
    for (const auto& p : j) out.push_back(parse_pattern(p.get<std::string>()));
    return out;
}

json census_json(const CensusResult& c) {
    json classes = json::array();
    for (const auto& k : c.cospectral_classes)
        classes.push_back(
            {{"canonical_key", key_json(k.key)}, {"lambda_max", k.lambda_max}, {"members", patterns_json(k.members)}});
    json comaximal = json::array();
    for (const auto& k : c.comaximal_classes)
        comaximal.push_back({{"lambda_max", k.lambda_max}, {"member_count", k.member_count}});
    return {{"n", c.n},
            {"pattern_count", c.pattern_count},
            {"cospectral_classes", c.cospectral_classes.size()},
            {"comaximal_classes", c.comaximal_classes.size()},
            {"cospectral", std::move(classes)},
            {"comaximal", std::move(comaximal)},
            {"minimum_lambda_max", c.minimum_lambda_max},
            {"minimum_members", patterns_json(c.minimum_members)},
            {"min_key_separation", opt(c.min_key_separation)}};
}

CensusResult census_from(const json& j) {
    CensusResult c;
    c.n = j.at("n").get<int>();
    c.pattern_count = j.at("pattern_count").get<std::int64_t>();
    for (const auto& k : j.at("cospectral"))
        c.cospectral_classes.push_back(
            {key_from(k.at("canonical_key")), k.at("lambda_max").get<double>(), patterns_from(k.at("members"))});
    for (const auto& k : j.at("comaximal"))
        c.comaximal_classes.push_back({k.at("lambda_max").get<double>(), k.at("member_count").get<std::int64_t>()});
    c.minimum_lambda_max = j.at("minimum_lambda_max").get<double>();
    c.minimum_members = patterns_from(j.at("minimum_members"));
    c.min_key_separation = opt_double(j.at("min_key_separation"));
    return c;
}

// ---- writer ---------------------------------------------------------------------

void write(std::string& out, const json& j, int indent) {
    const std::string pad(indent, ' ');
    const std::string inner(indent + 2, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += inner + json(it.key()).dump() + ": ";
                write(out, it.value(), indent + 2);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line; nested containers get one item per line.
            bool flat = true;
            for (const auto& v : j)
                if (v.is_structured()) flat = false;
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i > 0) out += ", ";
                    write(out, j[i], 0);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += ",\n";
                out += inner;
                write(out, j[i], indent + 2);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%#.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::size_t payload_index_for(const std::string& command) {
    if (command == "analyze" || command == "sigma-point") return 0;
    if (command == "table1") return 1;
    if (command == "cycles") return 2;
    if (command == "signature") return 3;
    if (command == "census") return 4;
    throw std::invalid_argument("unknown command '" + command + "'");
}

json to_json(const AnalysisReport& r) {
    json input = json::object();
    if (r.input.matrix) input["matrix"] = matrix_json(*r.input.matrix);
    if (r.input.pattern) input["pattern"] = r.input.pattern->to_string();
    input["parameters"] = r.input.parameters;

    json payload = std::visit(
        [](const auto& p) -> json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, SigmaReport>) return sigma_json(p);
            if constexpr (std::is_same_v<T, TablesPayload>)
                return {{"table_a", table_json(p.coefficients)}, {"table_b", table_json(p.sigma_powers)}};
            if constexpr (std::is_same_v<T, CyclesPayload>) return cycles_json(p);
            if constexpr (std::is_same_v<T, SpectralSignature>) return signature_json(p);
            if constexpr (std::is_same_v<T, CensusResult>) return census_json(p);
        },
        r.payload);

    return {{"tool", {{"name", "tipforge"}, {"version", r.tool_version}}},
            {"command", r.command},
            {"input", std::move(input)},
            {"tolerances", tolerances_json(r.tolerances)},
            {"payload", std::move(payload)},
            {"timing", {{"elapsed_ms", r.elapsed_ms}}}};
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    r.command = j.at("command").get<std::string>();
    r.tool_version = j.at("tool").at("version").get<std::string>();
    const json& input = j.at("input");
    if (input.contains("matrix")) r.input.matrix = matrix_from(input.at("matrix"));
    if (input.contains("pattern")) r.input.pattern = parse_pattern(input.at("pattern").get<std::string>());
    r.input.parameters = input.at("parameters");
    r.tolerances = tolerances_from(j.at("tolerances"));
    const json& p = j.at("payload");
    switch (payload_index_for(r.command)) {
        case 0: r.payload = sigma_from(p); break;
        case 1: r.payload = TablesPayload{table_from(p.at("table_a")), table_from(p.at("table_b"))}; break;
        case 2: r.payload = cycles_from(p); break;
        case 3: r.payload = signature_from(p); break;
        default: r.payload = census_from(p); break;
    }
    r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
    return r;
}

std::string dump_json(const json& j) {
    std::string out;
    write(out, j, 0);
    out += "\n";
    return out;
}

std::string serialize(const AnalysisReport& r) { return dump_json(to_json(r)); }

AnalysisReport parse_report(std::string_view text) {
    try {
        return report_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report document: ") + e.what());
    }
}

json redact_timing(json j) {
    j.erase("timing");
    return j;
}

}  // namespace tipforge
