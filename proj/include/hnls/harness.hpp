#pragma once

#include <string>
#include <vector>

#include "hnls/basis.hpp"
#include "hnls/config.hpp"
#include "hnls/csv.hpp"
#include "hnls/field.hpp"

namespace hnls {

/// Directory for on-disk reference solutions; HNLS_CACHE_DIR overrides the
/// default ".cache" under the working directory.
std::string default_cache_dir();

struct ErrorRecord {
    double t = 0.0;
    double l2_error = 0.0;  // 0 when no reference snapshot is available
    double mass = 0.0;      // L2 norm of psi
    double sigma1 = 0.0;    // Sigma^1 diagnostic
    double cpu_seconds = 0.0;
};

/// Reference trajectory: psi snapshots on the reference scheme's own basis.
/// Errors against it are measured by synthesizing at the probing run's
/// nodes, so mode counts need not match.
struct ReferenceSolution {
    RunConfig config;
    std::vector<double> times;
    std::vector<SpectralField> states;

    const SpectralField* at(double t) const;
};

struct EvolutionResult {
    std::vector<ErrorRecord> records;
    SpectralField final_state;  // psi (reconstructed for the gauge scheme)
    long long steps = 0;
};

/// Christoffel-weighted nodal L2 distance between a run state and a
/// reference snapshot synthesized at the run's nodes.
double reference_error(const SpectralField& state, const SpectralField& reference,
                       const HermiteBasis& basis);

/// Step the configured scheme from t = 0 to T, recording diagnostics every
/// record_interval steps (plus first and last). DivergenceError is rethrown
/// with the failing step index. Deterministic apart from cpu_seconds.
EvolutionResult run_evolution(const RunConfig& cfg,
                              const ReferenceSolution* reference = nullptr);

/// Reference trajectory with snapshots at the requested times (snapped to
/// the reference step grid), loaded from the cache when available and
/// persisted with an atomic write-then-rename otherwise.
ReferenceSolution compute_reference(const RunConfig& ref_cfg,
                                    std::vector<double> times,
                                    const std::string& cache_dir = default_cache_dir());

/// RK4 at 400 modes for dnlse studies; Strang at the probe's own mode count
/// for cubic ones.
RunConfig default_reference_config(const RunConfig& base);

struct ConvergenceRow {
    double tau = 0.0;
    double l2_error = 0.0;  // +inf when the run diverged
    double cpu_seconds = 0.0;
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double slope = 0.0;  // least-squares log-log fit over the finite rows

    CsvTable table() const;  // columns tau,l2_error,cpu_seconds,slope
};

/// Least-squares slope of log(error) against log(tau).
double fit_loglog_slope(const std::vector<double>& taus, const std::vector<double>& errors);

/// Final-time error of `base` rerun at each tau against the reference.
/// Requires ref_cfg.tau * 10 <= min(taus). Diverged runs are recorded as
/// +inf and excluded from the fit.
ConvergenceStudy convergence_study(const RunConfig& base, const std::vector<double>& taus,
                                   const RunConfig& ref_cfg,
                                   const std::string& cache_dir = default_cache_dir());

struct BenchRow {
    std::string scheme;
    double tau = 0.0;
    int modes = 0;
    double final_error = 0.0;
    double cpu_seconds = 0.0;
};

/// Wall-clock comparison of complete runs (propagator setup included).
/// Needs at least two configurations. Error columns are reproducible;
/// timings are not.
std::vector<BenchRow> benchmark(const std::vector<RunConfig>& cfgs,
                                const RunConfig& ref_cfg,
                                const std::string& cache_dir = default_cache_dir());

CsvTable benchmark_table(const std::vector<BenchRow>& rows);
CsvTable records_table(const std::vector<ErrorRecord>& records);

}  // namespace hnls
