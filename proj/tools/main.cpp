// Command-line front end: rule dumps, single runs, convergence studies,
// benchmarks and SVG plots. Exit codes: 0 success, 1 argument/parse
// problems, 2 numerical divergence.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hnls/config.hpp"
#include "hnls/csv.hpp"
#include "hnls/harness.hpp"
#include "hnls/plot.hpp"
#include "hnls/presets.hpp"
#include "hnls/quadrature.hpp"
#include "hnls/schemes.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDiverged = 2;

void write_nodes_csv(int degree, const std::string& out_path) {
    const hnls::QuadratureRule rule = hnls::gauss_hermite_rule(degree);
    hnls::CsvTable table;
    table.header = {"index", "node", "weight", "christoffel"};
    for (int m = 0; m < degree; ++m) {
        table.rows.push_back({std::to_string(m), hnls::format_double(rule.nodes[m]),
                              hnls::format_double(rule.weights[m]),
                              hnls::format_double(rule.christoffel[m])});
    }
    if (out_path.empty()) {
        std::fputs(hnls::write_csv(table).c_str(), stdout);
    } else {
        hnls::write_csv_file(table, out_path);
    }
}

void write_outputs(const hnls::RunConfig& cfg, const hnls::EvolutionResult& result) {
    if (!cfg.records_out.empty()) {
        hnls::write_csv_file(hnls::records_table(result.records), cfg.records_out);
    }
    if (!cfg.snapshot_out.empty()) {
        const hnls::HermiteBasis basis(hnls::gauss_hermite_rule(cfg.modes));
        const hnls::NodalField nodal = basis.values_at_nodes(result.final_state);
        hnls::CsvTable table;
        table.header = {"x", "re", "im"};
        for (int m = 0; m < cfg.modes; ++m) {
            table.rows.push_back({hnls::format_double(basis.rule().nodes[m]),
                                  hnls::format_double(nodal.values[m].real()),
                                  hnls::format_double(nodal.values[m].imag())});
        }
        hnls::write_csv_file(table, cfg.snapshot_out);
    }
    if (!cfg.coeffs_out.empty()) {
        hnls::CsvTable table;
        table.header = {"m", "re", "im"};
        for (int m = 0; m < result.final_state.modes(); ++m) {
            table.rows.push_back({std::to_string(m),
                                  hnls::format_double(result.final_state.coeffs[m].real()),
                                  hnls::format_double(result.final_state.coeffs[m].imag())});
        }
        hnls::write_csv_file(table, cfg.coeffs_out);
    }
}

std::vector<double> parse_tau_list(const std::string& text) {
    std::vector<double> taus;
    size_t begin = 0;
    while (begin <= text.size()) {
        const size_t comma = text.find(',', begin);
        const std::string item =
            text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        if (!item.empty()) {
            size_t used = 0;
            const double tau = std::stod(item, &used);
            if (used != item.size() || tau <= 0.0) {
                throw hnls::ConfigError("--taus: bad entry '" + item + "'");
            }
            taus.push_back(tau);
        }
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (taus.empty()) throw hnls::ConfigError("--taus: empty list");
    return taus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite spectral solver for nonlinear Schrodinger equations on the line"};
    app.require_subcommand(1);

    int degree = 0;
    std::string out_path;
    CLI::App* nodes = app.add_subcommand("nodes", "print a Gauss-Hermite rule as CSV");
    nodes->add_option("--degree", degree, "rule degree M")->required();
    nodes->add_option("--out", out_path, "output file (default stdout)");

    std::string solve_config;
    CLI::App* solve = app.add_subcommand("solve", "run one configured evolution");
    solve->add_option("config", solve_config, "config file")->required();

    std::string conv_config, conv_ref, conv_taus, conv_out = "convergence.csv";
    CLI::App* converge = app.add_subcommand("converge", "final-time error against tau");
    converge->add_option("config", conv_config, "base config file")->required();
    converge->add_option("--taus", conv_taus, "comma-separated tau list")->required();
    converge->add_option("--ref", conv_ref, "reference config file (default: built-in)");
    converge->add_option("--out", conv_out, "output CSV path");

    std::vector<std::string> bench_configs;
    std::string bench_ref, bench_out = "bench.csv";
    CLI::App* bench = app.add_subcommand("bench", "error/CPU-time table for several runs");
    bench->add_option("configs", bench_configs, "config files (>= 2)")->required();
    bench->add_option("--ref", bench_ref, "reference config file (default: built-in)");
    bench->add_option("--out", bench_out, "output CSV path");

    std::string plot_csv, plot_kind, plot_out;
    CLI::App* plot = app.add_subcommand("plot", "render a study CSV as SVG");
    plot->add_option("csv", plot_csv, "input CSV")->required();
    plot->add_option("--kind", plot_kind, "order | cpu")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*nodes) {
            write_nodes_csv(degree, out_path);
        } else if (*solve) {
            const hnls::RunConfig cfg = hnls::load_config_file(solve_config);
            const hnls::EvolutionResult result = hnls::run_evolution(cfg);
            write_outputs(cfg, result);
            std::printf("steps=%lld final_mass=%.12g final_sigma1=%.12g cpu=%.3fs\n",
                        result.steps, result.records.back().mass,
                        result.records.back().sigma1, result.records.back().cpu_seconds);
        } else if (*converge) {
            const hnls::RunConfig base = hnls::load_config_file(conv_config);
            const hnls::RunConfig ref = conv_ref.empty()
                                            ? hnls::default_reference_config(base)
                                            : hnls::load_config_file(conv_ref);
            const auto taus = parse_tau_list(conv_taus);
            const hnls::ConvergenceStudy study = hnls::convergence_study(base, taus, ref);
            hnls::write_csv_file(study.table(), conv_out);
            std::printf("slope=%.6g rows=%zu -> %s\n", study.slope, study.rows.size(),
                        conv_out.c_str());
        } else if (*bench) {
            std::vector<hnls::RunConfig> cfgs;
            for (const std::string& path : bench_configs) {
                cfgs.push_back(hnls::load_config_file(path));
            }
            const hnls::RunConfig ref = bench_ref.empty()
                                            ? hnls::default_reference_config(cfgs.front())
                                            : hnls::load_config_file(bench_ref);
            const auto rows = hnls::benchmark(cfgs, ref);
            hnls::write_csv_file(hnls::benchmark_table(rows), bench_out);
            std::printf("%zu runs -> %s\n", rows.size(), bench_out.c_str());
        } else if (*plot) {
            hnls::PlotKind kind;
            if (plot_kind == "order") kind = hnls::PlotKind::order;
            else if (plot_kind == "cpu") kind = hnls::PlotKind::cpu;
            else throw hnls::ConfigError("--kind must be 'order' or 'cpu'");
            hnls::render_plot_file(plot_csv, kind, plot_out);
            std::printf("wrote %s\n", plot_out.c_str());
        }
    } catch (const hnls::DivergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDiverged;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitParse;
    }
    return kExitOk;
}
