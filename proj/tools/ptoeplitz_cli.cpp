// ptoeplitz: command-line front end for periodic banded Toeplitz operators.
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 invariant/precondition, 4 I/O,
// 5 tolerance breach.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptoeplitz/ptoeplitz.hpp"

namespace {

using namespace ptoeplitz;
using nlohmann::json;

enum class Format { kReportDoc, kFlatTable, kSvg };

struct RunConfig {
    std::string command;
    std::optional<std::string> spec_path;
    std::size_t theta_count = 720;
    std::size_t phi_count = 720;
    std::vector<std::size_t> s_values;  // empty: three smallest admissible values
    std::optional<std::string> output_path;
    Format format = Format::kReportDoc;
    std::size_t overlay_thetas = 0;
    double tol_scale = 1.0;
    double theta = 0.0;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kParse: return 2;
        case ErrorKind::kIo: return 4;
        case ErrorKind::kToleranceBreach: return 5;
        default: return 3;
    }
}

void emit(const RunConfig& cfg, const std::string& content) {
    if (cfg.output_path)
        io::write_file_atomic(*cfg.output_path, content);
    else
        std::cout << content;
}

PeriodicBandedSpec load_spec(const RunConfig& cfg) {
    if (!cfg.spec_path) fail(ErrorKind::kInvalidArgument, cfg.command + " needs --spec");
    return validate_spec(io::read_spec_file(*cfg.spec_path));
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

int cmd_validate(const RunConfig& cfg) {
    const auto spec = load_spec(cfg);
    emit(cfg, io::spec_to_json(spec).dump(2) + "\n");
    return 0;
}

int cmd_symbol(const RunConfig& cfg) {
    const auto spec = load_spec(cfg);
    const json doc = {{"theta", cfg.theta}, {"symbol", matrix_to_json(symbol(spec, cfg.theta))}};
    emit(cfg, doc.dump(2) + "\n");
    return 0;
}

std::string range_svg(const PeriodicBandedSpec& spec, const RangeReport& report, const RunConfig& cfg) {
    std::vector<io::SvgLayer> layers;
    for (std::size_t k = 0; k < cfg.overlay_thetas; ++k) {
        const auto ellipse = matrix_numerical_range(symbol(spec, uniform_angle(k, cfg.overlay_thetas)), cfg.phi_count);
        layers.push_back({ellipse.vertices, true, "black", 1.0, true});
    }
    layers.push_back({report.polygon.vertices, true, "red", 2.0, false});
    return io::render_svg(layers);
}

int cmd_range(const RunConfig& cfg, Format format) {
    const auto spec = load_spec(cfg);
    const auto report = operator_range(spec, cfg.theta_count, cfg.phi_count);
    switch (format) {
        case Format::kReportDoc: emit(cfg, io::report_to_json(report).dump(2) + "\n"); break;
        case Format::kFlatTable: emit(cfg, io::flat_table(report)); break;
        case Format::kSvg: emit(cfg, range_svg(spec, report, cfg)); break;
    }
    return 0;
}

int cmd_interval(const RunConfig& cfg) {
    const auto spec = load_spec(cfg);
    const auto [lo, hi] = selfadjoint_interval(spec, cfg.theta_count);
    emit(cfg, json{{"lower", lo}, {"upper", hi}, {"theta_count", cfg.theta_count}}.dump(2) + "\n");
    return 0;
}

struct CheckRow {
    std::string name;
    double value;
    double bound;
    bool pass() const { return value <= bound; }
};

int cmd_verify(const RunConfig& cfg) {
    const auto spec = load_spec(cfg);
    const auto period = static_cast<std::size_t>(spec.period());
    std::vector<std::size_t> s_values = cfg.s_values;
    if (s_values.empty()) {
        const std::size_t first = std::max<std::size_t>(2, (2 * spec.band() + period) / period);
        s_values = {first, first + 1, first + 2};
    }
    for (std::size_t s : s_values)
        if (s < 1 || s * period < 2 * spec.band() + 1)
            fail(ErrorKind::kInvalidArgument, "s=" + std::to_string(s) + " violates s(n+1) >= 2m+1 (n+1=" +
                                                  std::to_string(period) + ", m=" + std::to_string(spec.band()) + ")");

    std::vector<CheckRow> rows;
    const double block_bound = 1e-10 * (1.0 + spec.max_abs_coefficient()) * cfg.tol_scale;
    for (std::size_t s : s_values) {
        const std::string tag = "[s=" + std::to_string(s) + "]";
        rows.push_back({"block_diagonalization " + tag, block_diagonalization_residual(spec, s), block_bound});
        rows.push_back({"eigenvalue_multiset " + tag, eigenvalue_multiset_mismatch(spec, s), 1e-8 * cfg.tol_scale});
        rows.push_back({"lifted_eigenvector " + tag, lifted_eigenvector_residual(spec, s), 1e-8 * cfg.tol_scale});
    }
    const auto report = operator_range(spec, cfg.theta_count, cfg.phi_count);
    const double inclusion_bound = (sweep_resolution_bound(report.polygon, cfg.phi_count) + 1e-8) * cfg.tol_scale;
    for (std::size_t n : {10, 20, 40, 80})
        rows.push_back({"truncation_inclusion [N=" + std::to_string(n) + "]",
                        truncation_inclusion_check(spec, n, report), inclusion_bound});

    std::string table = "check\tvalue\tbound\tstatus\n";
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r.pass();
        table += r.name + '\t' + io::format_real(r.value) + '\t' + io::format_real(r.bound) + '\t' +
                 (r.pass() ? "pass" : "FAIL") + '\n';
    }
    emit(cfg, table);
    return ok ? 0 : 5;
}

int cmd_example4(const RunConfig& cfg) {
    const auto summary = counterexample_pipeline(cfg.theta_count, cfg.phi_count, 720);
    const auto& alg = summary.algebra;

    std::vector<CheckRow> rows{
        {"max_quartic_residual", summary.max_quartic_residual, 5e-3 * cfg.tol_scale},
        {"real_axis_max - 1.5", std::abs(summary.real_axis_max - 1.5), 1e-3 * cfg.tol_scale},
        {"real_axis_min + 2.5", std::abs(summary.real_axis_min + 2.5), 1e-3 * cfg.tol_scale},
        {"max_ellipse_residual", summary.max_ellipse_residual, 1e-9 * cfg.tol_scale},
        {"max_duality_residual", alg.max_duality_residual, 1e-6 * cfg.tol_scale},
    };
    bool ok = true;
    std::string text;
    char buf[256];
    std::snprintf(buf, sizeof buf, "range: %zu x %zu samples, %zu hull vertices\n", cfg.theta_count, cfg.phi_count,
                  summary.range.polygon.size());
    text += buf;
    for (const auto& r : rows) {
        ok = ok && r.pass();
        std::snprintf(buf, sizeof buf, "  %-22s %.3e (bound %.1e) %s\n", r.name.c_str(), r.value, r.bound,
                      r.pass() ? "ok" : "FAIL");
        text += buf;
    }
    std::snprintf(buf, sizeof buf, "envelope: alpha^2 + beta^2 - gamma^2 = (%lld/%lld) L(1, X, Y)\n",
                  alg.envelope_ratio_num, alg.envelope_ratio_den);
    text += buf;
    std::snprintf(buf, sizeof buf, "dual form hyperbolic: %s (%zu directions, max |Im| %.6f)\n",
                  alg.verdict.hyperbolic ? "yes" : "no", alg.verdict.direction_count, alg.verdict.max_imag);
    text += buf;
    if (alg.verdict.witness_angle) {
        std::snprintf(buf, sizeof buf, "witness angle: %.9f rad\n", *alg.verdict.witness_angle);
        text += buf;
        text += "witness real roots:";
        for (double r : alg.witness_real_roots) {
            std::snprintf(buf, sizeof buf, " %.6f", r);
            text += buf;
        }
        text += '\n';
    }
    text += "verdict: " + alg.conclusion + "\n";
    std::cout << text;

    if (cfg.output_path) {
        json doc = {{"range", io::report_to_json(summary.range, false)},
                    {"max_quartic_residual", summary.max_quartic_residual},
                    {"real_axis", {summary.real_axis_min, summary.real_axis_max}},
                    {"max_ellipse_residual", summary.max_ellipse_residual},
                    {"nonrepresentability", io::nonrepresentability_to_json(alg)}};
        io::write_file_atomic(*cfg.output_path, doc.dump(2) + "\n");
    }
    return ok ? 0 : 5;
}

int run(const RunConfig& cfg) {
    if (cfg.command == "validate") return cmd_validate(cfg);
    if (cfg.command == "symbol") return cmd_symbol(cfg);
    if (cfg.command == "range") return cmd_range(cfg, cfg.format);
    if (cfg.command == "plot") return cmd_range(cfg, Format::kSvg);
    if (cfg.command == "interval") return cmd_interval(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    return cmd_example4(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical ranges of periodic banded Toeplitz operators"};
    RunConfig cfg;
    std::string spec_path, output_path;

    app.add_option("command", cfg.command, "validate | symbol | range | interval | verify | example4 | plot")
        ->required()
        ->check(CLI::IsMember({"validate", "symbol", "range", "interval", "verify", "example4", "plot"}));
    app.add_option("--spec", spec_path, "operator spec file (JSON)");
    app.add_option("--theta-count", cfg.theta_count, "symbol parameter samples")->check(CLI::Range(1, 1000000));
    app.add_option("--phi-count", cfg.phi_count, "support directions per symbol")->check(CLI::Range(3, 1000000));
    app.add_option("--s", cfg.s_values, "replication counts for verify")->delimiter(',');
    app.add_option("--out", output_path, "output file (default: stdout)");
    app.add_option("--format", cfg.format, "report-doc | flat-table | svg")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{
                {"report-doc", Format::kReportDoc}, {"flat-table", Format::kFlatTable}, {"svg", Format::kSvg}},
            CLI::ignore_case));
    app.add_option("--overlay-thetas", cfg.overlay_thetas, "dotted symbol ranges drawn in SVG output");
    app.add_option("--tol-scale", cfg.tol_scale, "multiplier on check tolerances")->check(CLI::PositiveNumber);
    app.add_option("--theta", cfg.theta, "symbol parameter for the symbol command");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (!spec_path.empty()) cfg.spec_path = spec_path;
    if (!output_path.empty()) cfg.output_path = output_path;

    try {
        return run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
