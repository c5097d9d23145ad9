#include "hnls/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "hnls/presets.hpp"
#include "hnls/quadrature.hpp"
#include "hnls/schemes.hpp"

namespace hnls {

namespace fs = std::filesystem;

std::string default_cache_dir() {
    if (const char* env = std::getenv("HNLS_CACHE_DIR"); env && *env) return env;
    return ".cache";
}

const SpectralField* ReferenceSolution::at(double t) const {
    const double tol = 1e-12 * std::max(1.0, std::abs(t));
    for (size_t i = 0; i < times.size(); ++i) {
        if (std::abs(times[i] - t) <= tol) return &states[i];
    }
    return nullptr;
}

double reference_error(const SpectralField& state, const SpectralField& reference,
                       const HermiteBasis& basis) {
    const Eigen::VectorXcd ref_nodal = synthesize(reference, basis.rule().nodes);
    const Eigen::VectorXcd own_nodal = basis.values_at_nodes(state).values;
    double acc = 0.0;
    for (int j = 0; j < basis.modes(); ++j) {
        acc += basis.rule().christoffel[j] * std::norm(own_nodal[j] - ref_nodal[j]);
    }
    return std::sqrt(acc);
}

namespace {

double effective_final_time(const RunConfig& cfg) {
    return static_cast<double>(cfg.steps()) * cfg.tau;
}

/// Scheme-agnostic single-run driver; owns basis, state and cached factors.
class Driver {
  public:
    explicit Driver(const RunConfig& cfg)
        : cfg_(cfg), basis_(gauss_hermite_rule(cfg.modes)) {
        const SpectralField psi0 = initial_preset(cfg.initial, basis_);
        switch (cfg.scheme) {
            case Scheme::lie:
                prop_ = std::make_unique<FreePropagator>(cfg.modes, cfg.tau);
                psi_ = psi0;
                break;
            case Scheme::strang:
                prop_ = std::make_unique<FreePropagator>(cfg.modes, 0.5 * cfg.tau);
                psi_ = psi0;
                break;
            case Scheme::rtransform_strang:
                prop_ = std::make_unique<FreePropagator>(cfg.modes, 0.5 * cfg.tau);
                state_ = dnlse_forward_transform(psi0, cfg.delta, basis_);
                break;
            case Scheme::cn:
                cn_ = std::make_unique<CrankNicolsonFactor>(cfg.modes, cfg.tau);
                psi_ = psi0;
                break;
            case Scheme::rk4:
                psi_ = psi0;
                break;
        }
    }

    void advance() {
        switch (cfg_.scheme) {
            case Scheme::lie:
                psi_ = lie_step_cubic(psi_, cubic_params(), *prop_, basis_);
                break;
            case Scheme::strang:
                psi_ = strang_step_cubic(psi_, cubic_params(), *prop_, basis_);
                break;
            case Scheme::rtransform_strang:
                state_ = dnlse_strang_step(state_, dnlse_params(), *prop_, basis_);
                break;
            case Scheme::cn:
                psi_ = cn_baseline_step(psi_, dnlse_params(), *cn_, basis_);
                break;
            case Scheme::rk4:
                psi_ = rk4_reference_step(psi_, dnlse_params(), basis_);
                break;
        }
    }

    SpectralField current() const {
        if (cfg_.scheme == Scheme::rtransform_strang) {
            return dnlse_reconstruct(state_, cfg_.delta, basis_);
        }
        return psi_;
    }

    const HermiteBasis& basis() const { return basis_; }

  private:
    CubicParams cubic_params() const { return {cfg_.mu, cfg_.tau, cfg_.modes}; }
    DnlseParams dnlse_params() const { return {cfg_.delta, cfg_.tau, cfg_.modes}; }

    RunConfig cfg_;
    HermiteBasis basis_;
    std::unique_ptr<FreePropagator> prop_;
    std::unique_ptr<CrankNicolsonFactor> cn_;
    SpectralField psi_;
    DnlseState state_;
};

}  // namespace

EvolutionResult run_evolution(const RunConfig& cfg, const ReferenceSolution* reference) {
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&start]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    Driver driver(cfg);
    const long long nsteps = cfg.steps();

    EvolutionResult result;
    result.steps = nsteps;

    const auto record = [&](long long step) {
        const double t = static_cast<double>(step) * cfg.tau;
        const SpectralField psi = driver.current();
        ErrorRecord rec;
        rec.t = t;
        rec.mass = psi.l2_norm();
        rec.sigma1 = sigma_norm(psi, 1);
        rec.cpu_seconds = elapsed();
        if (reference) {
            if (const SpectralField* snap = reference->at(t)) {
                rec.l2_error = reference_error(psi, *snap, driver.basis());
            }
        }
        result.records.push_back(rec);
    };

    record(0);
    for (long long step = 1; step <= nsteps; ++step) {
        try {
            driver.advance();
        } catch (const DivergenceError& e) {
            throw DivergenceError(std::string(e.what()) + " [step " + std::to_string(step) +
                                  ", t = " + format_double(step * cfg.tau) + "]");
        }
        if (step == nsteps || step % cfg.record_interval == 0) {
            record(step);
        }
    }

    result.final_state = driver.current();
    return result;
}

// ---------------------------------------------------------------------------
// Reference cache

namespace {

uint64_t fnv1a(const std::string& data) {
    uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string reference_key(const RunConfig& cfg, const std::vector<double>& times) {
    std::string key = cfg.canonical() + ";times=";
    for (size_t i = 0; i < times.size(); ++i) {
        if (i) key += ',';
        key += format_double(times[i]);
    }
    return key;
}

std::string reference_serialize(const ReferenceSolution& ref, const std::string& key) {
    std::ostringstream out;
    out << "hnls-reference-v1\n";
    out << "key=" << key << "\n";
    out << "count=" << ref.times.size() << "\n";
    for (size_t i = 0; i < ref.times.size(); ++i) {
        const SpectralField& f = ref.states[i];
        out << "t=" << format_double(ref.times[i]) << " M=" << f.modes() << "\n";
        for (int m = 0; m < f.modes(); ++m) {
            out << m << ',' << format_double(f.coeffs[m].real()) << ','
                << format_double(f.coeffs[m].imag()) << "\n";
        }
    }
    return out.str();
}

bool reference_deserialize(const std::string& text, const std::string& key,
                           ReferenceSolution* out) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "hnls-reference-v1") return false;
    if (!std::getline(in, line) || line != "key=" + key) return false;
    if (!std::getline(in, line) || line.rfind("count=", 0) != 0) return false;
    size_t count = 0;
    if (std::sscanf(line.c_str(), "count=%zu", &count) != 1) return false;
    out->times.clear();
    out->states.clear();
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) return false;
        double t = 0.0;
        int modes = 0;
        if (std::sscanf(line.c_str(), "t=%lg M=%d", &t, &modes) != 2 || modes < 1) return false;
        SpectralField f = SpectralField::zero(modes);
        for (int m = 0; m < modes; ++m) {
            if (!std::getline(in, line)) return false;
            int index = 0;
            double re = 0.0, im = 0.0;
            if (std::sscanf(line.c_str(), "%d,%lg,%lg", &index, &re, &im) != 3 || index != m) {
                return false;
            }
            f.coeffs[m] = Complex(re, im);
        }
        out->times.push_back(t);
        out->states.push_back(std::move(f));
    }
    return true;
}

void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

}  // namespace

ReferenceSolution compute_reference(const RunConfig& ref_cfg, std::vector<double> times,
                                    const std::string& cache_dir) {
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    if (times.empty()) {
        throw std::invalid_argument("compute_reference: no snapshot times requested");
    }

    const std::string key = reference_key(ref_cfg, times);
    fs::path cache_file;
    if (!cache_dir.empty()) {
        char name[48];
        std::snprintf(name, sizeof(name), "ref_%016llx.txt",
                      static_cast<unsigned long long>(fnv1a(key)));
        cache_file = fs::path(cache_dir) / name;
        if (fs::exists(cache_file)) {
            std::ifstream in(cache_file, std::ios::binary);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            ReferenceSolution cached;
            cached.config = ref_cfg;
            if (reference_deserialize(buffer.str(), key, &cached)) {
                return cached;
            }
            // Stale or foreign file: fall through and rebuild it.
        }
    }

    // Snap each requested time onto the reference step grid.
    std::vector<long long> indices(times.size());
    for (size_t i = 0; i < times.size(); ++i) {
        indices[i] = std::llround(times[i] / ref_cfg.tau);
    }

    ReferenceSolution ref;
    ref.config = ref_cfg;
    Driver driver(ref_cfg);
    const long long last = indices.empty() ? 0 : indices.back();
    size_t cursor = 0;
    for (long long step = 0; step <= last; ++step) {
        if (step > 0) {
            try {
                driver.advance();
            } catch (const DivergenceError& e) {
                throw DivergenceError(std::string(e.what()) + " [reference run, step " +
                                      std::to_string(step) + "]");
            }
        }
        while (cursor < indices.size() && indices[cursor] == step) {
            ref.times.push_back(times[cursor]);
            ref.states.push_back(driver.current());
            ++cursor;
        }
    }

    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        atomic_write(cache_file, reference_serialize(ref, key));
    }
    return ref;
}

RunConfig default_reference_config(const RunConfig& base) {
    RunConfig ref = base;
    ref.records_out.clear();
    ref.snapshot_out.clear();
    ref.coeffs_out.clear();
    if (base.equation == Equation::dnlse) {
        ref.scheme = Scheme::rk4;
        ref.modes = 400;
        ref.tau = 1e-4;
    } else {
        ref.scheme = Scheme::strang;
        ref.tau = 1e-5;
    }
    return ref;
}

// ---------------------------------------------------------------------------
// Studies

double fit_loglog_slope(const std::vector<double>& taus, const std::vector<double>& errors) {
    if (taus.size() != errors.size()) {
        throw std::invalid_argument("fit_loglog_slope: size mismatch");
    }
    std::vector<double> x, y;
    for (size_t i = 0; i < taus.size(); ++i) {
        if (std::isfinite(errors[i]) && errors[i] > 0.0 && taus[i] > 0.0) {
            x.push_back(std::log(taus[i]));
            y.push_back(std::log(errors[i]));
        }
    }
    if (x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

ConvergenceStudy convergence_study(const RunConfig& base, const std::vector<double>& taus,
                                   const RunConfig& ref_cfg, const std::string& cache_dir) {
    if (taus.empty()) {
        throw std::invalid_argument("convergence_study: empty tau list");
    }
    const double min_tau = *std::min_element(taus.begin(), taus.end());
    if (ref_cfg.tau * 10.0 > min_tau * (1.0 + 1e-12)) {
        throw std::invalid_argument(
            "convergence_study: reference tau must be at least 10x smaller than the "
            "smallest probe tau");
    }

    std::vector<double> times;
    for (double tau : taus) {
        RunConfig probe = base;
        probe.tau = tau;
        times.push_back(effective_final_time(probe));
    }
    const ReferenceSolution ref = compute_reference(ref_cfg, times, cache_dir);

    ConvergenceStudy study;
    std::vector<double> fit_taus, fit_errors;
    for (double tau : taus) {
        RunConfig probe = base;
        probe.tau = tau;
        ConvergenceRow row;
        row.tau = tau;
        const auto start = std::chrono::steady_clock::now();
        try {
            const EvolutionResult res = run_evolution(probe, &ref);
            row.l2_error = res.records.back().l2_error;
            fit_taus.push_back(tau);
            fit_errors.push_back(row.l2_error);
        } catch (const DivergenceError& e) {
            std::fprintf(stderr, "warning: convergence_study: run diverged (%s); "
                         "recording error = inf\n", e.what());
            row.l2_error = std::numeric_limits<double>::infinity();
        }
        row.cpu_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        study.rows.push_back(row);
    }
    study.slope = fit_loglog_slope(fit_taus, fit_errors);
    return study;
}

CsvTable ConvergenceStudy::table() const {
    CsvTable t;
    t.header = {"tau", "l2_error", "cpu_seconds", "slope"};
    for (const auto& row : rows) {
        t.rows.push_back({format_double(row.tau), format_double(row.l2_error),
                          format_double(row.cpu_seconds), format_double(slope)});
    }
    return t;
}

std::vector<BenchRow> benchmark(const std::vector<RunConfig>& cfgs, const RunConfig& ref_cfg,
                                const std::string& cache_dir) {
    if (cfgs.size() < 2) {
        throw std::invalid_argument("benchmark: need >= 2 configurations");
    }
    std::vector<double> times;
    for (const RunConfig& cfg : cfgs) times.push_back(effective_final_time(cfg));
    const ReferenceSolution ref = compute_reference(ref_cfg, times, cache_dir);

    std::vector<BenchRow> rows;
    for (const RunConfig& cfg : cfgs) {
        BenchRow row;
        row.scheme = to_string(cfg.scheme);
        row.tau = cfg.tau;
        row.modes = cfg.modes;
        const auto start = std::chrono::steady_clock::now();
        try {
            const EvolutionResult res = run_evolution(cfg, &ref);
            row.final_error = res.records.back().l2_error;
        } catch (const DivergenceError& e) {
            std::fprintf(stderr, "warning: benchmark: run diverged (%s)\n", e.what());
            row.final_error = std::numeric_limits<double>::infinity();
        }
        row.cpu_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(row);
    }
    return rows;
}

CsvTable benchmark_table(const std::vector<BenchRow>& rows) {
    CsvTable t;
    t.header = {"scheme", "tau", "M", "final_error", "cpu_seconds"};
    for (const auto& row : rows) {
        t.rows.push_back({row.scheme, format_double(row.tau), std::to_string(row.modes),
                          format_double(row.final_error), format_double(row.cpu_seconds)});
    }
    return t;
}

CsvTable records_table(const std::vector<ErrorRecord>& records) {
    CsvTable t;
    t.header = {"t", "l2_error", "mass", "sigma1", "cpu_seconds"};
    for (const auto& rec : records) {
        t.rows.push_back({format_double(rec.t), format_double(rec.l2_error),
                          format_double(rec.mass), format_double(rec.sigma1),
                          format_double(rec.cpu_seconds)});
    }
    return t;
}

}  // namespace hnls
