#include "ncl/sweeps.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ncl/fock_oracle.hpp"

namespace ncl {

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
        out << '\n';
    }
}

namespace {

std::vector<double> linear_grid(double lo, double hi, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if (!(hi >= lo)) throw std::invalid_argument("sweep range must satisfy min <= max");
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out[i] = lo + (hi - lo) * i / (steps - 1);
    out.back() = hi;
    return out;
}

OptimizationResult fixed_splitter_result(const CenteredMoments& c, double t, double phi) {
    const BeamSplitterParams bs = BeamSplitterParams::from_transmission(t, phi);
    OptimizationResult res;
    res.best_value = entanglement_at(c, bs);
    res.best_t = bs.t;
    res.best_phi = bs.phi;
    res.evaluations = 1;
    return res;
}

}  // namespace

std::vector<SqueezedSweepRow> squeezed_sweep(const SqueezedSweepOptions& options) {
    if (!(options.r_min >= 0.0)) throw std::invalid_argument("squeezing strength must be non-negative");
    std::vector<SqueezedSweepRow> rows;
    for (double r : linear_grid(options.r_min, options.r_max, options.steps)) {
        SqueezedCoherentParams p{options.alpha, r, options.theta};
        const CenteredMoments fixed_moments = center(squeezed_coherent_moments(p));

        OptimizationResult fixed;
        OptimizationResult optimized;
        if (options.splitter == SplitterMode::maximize) {
            fixed = maximize_EN(fixed_moments, options.optimizer);
            optimized = maximize_EN_over_theta(p, options.optimizer);
        } else {
            fixed = fixed_splitter_result(fixed_moments, options.t, options.phi);
            optimized = fixed;
            for (int k = 0; k < options.optimizer.grid_theta; ++k) {
                SqueezedCoherentParams q = p;
                q.angle = 2.0 * M_PI * k / options.optimizer.grid_theta;
                const auto trial = fixed_splitter_result(center(squeezed_coherent_moments(q)), options.t, options.phi);
                if (trial.best_value > optimized.best_value) optimized = trial;
            }
        }
        // The theta scan contains theta = 0 but not necessarily options.theta.
        if (optimized.best_value < fixed.best_value) optimized = fixed;

        const OptimizationResult& shown = options.theta_mode == ThetaMode::fixed ? fixed : optimized;
        rows.push_back({r, fixed.best_value, optimized.best_value, shown.best_t, shown.best_phi});
    }
    return rows;
}

DickeSweepRow dicke_point(const dicke::DickeConfig& cfg, const DickeSweepOptions& options) {
    GroundStateOptions solver;
    solver.tol = options.tol;
    solver.max_iter = options.max_iter;
    solver.mix_degenerate = options.mix_degenerate;

    DickeSweepRow row;
    row.g = cfg.g;
    row.g_over_gc = cfg.g / cfg.critical_coupling();
    const GroundStateResult gs = ground_state(dicke::build_hamiltonian(cfg), solver);
    if (!gs.converged) {
        row.ground_energy = row.mean_photon = row.E_N = row.lambda_simon = NAN;
        row.degenerate_flag = -1;
        return row;
    }
    const SingleModeMoments m = dicke::field_moments(gs, cfg);
    const NonclassicalityReport report = evaluate_maximized(m, options.optimizer);
    row.ground_energy = gs.energy;
    row.mean_photon = m.photon_number;
    row.E_N = report.E_N;
    row.lambda_simon = report.lambda_simon;
    row.degenerate_flag = gs.degenerate ? 1 : 0;
    return row;
}

DickeSweepResult dicke_sweep(const DickeSweepOptions& options) {
    dicke::DickeConfig cfg;
    cfg.n_atoms = options.n_atoms;
    cfg.fock_dim = options.fock_dim;
    cfg.omega = options.omega;
    cfg.omega_eg = options.omega_eg;
    cfg.counter_rotating = options.counter_rotating;
    cfg.validate();
    const double g_max = options.g_max.value_or(2.0 * cfg.critical_coupling());
    if (!(options.g_min >= 0.0)) throw std::invalid_argument("coupling must be non-negative");

    DickeSweepResult result;
    for (double g : linear_grid(options.g_min, g_max, options.steps)) {
        cfg.g = g;
        result.rows.push_back(dicke_point(cfg, options));
        if (result.rows.back().degenerate_flag < 0) result.all_converged = false;
    }
    return result;
}

UniformStream::UniformStream(std::uint64_t seed) : engine_(seed) {}

double UniformStream::next() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

OracleCheckReport oracle_check(const OracleCheckOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("at least one trial is required");
    if (options.dim < 2) throw std::invalid_argument("dimension must be at least 2");
    UniformStream rng(options.seed);
    const auto convention = options.corrupt_phase ? fock::PhaseConvention::corrupted
                                                  : fock::PhaseConvention::heisenberg;
    OracleCheckReport report;
    for (int i = 0; i < options.trials; ++i) {
        OracleTrial trial;
        const double alpha_mag = options.alpha_max * rng.next();
        const double alpha_arg = 2.0 * M_PI * rng.next();
        trial.params.alpha = std::polar(alpha_mag, alpha_arg);
        trial.params.strength = options.r_max * rng.next();
        trial.params.angle = 2.0 * M_PI * rng.next();
        const double t = rng.next();
        const double phi = 2.0 * M_PI * rng.next();
        trial.bs = BeamSplitterParams::from_transmission(t, phi);

        const fock::FockVector input = fock::squeezed_coherent_vector_auto(trial.params, options.dim);
        trial.dim_used = input.dim();
        trial.truncation_overflow = input.truncation_overflow;
        const CovarianceBlocks measured =
            fock::two_mode_covariance(fock::apply_beam_splitter(input, trial.bs, convention));
        const CovarianceBlocks predicted =
            covariance_from_input(center(squeezed_coherent_moments(trial.params)), trial.bs);
        trial.discrepancy = measured.max_abs_difference(predicted);
        report.max_discrepancy = std::max(report.max_discrepancy, trial.discrepancy);
        report.trials.push_back(trial);
    }
    report.passed = report.max_discrepancy < kOracleTolerance;
    return report;
}

}  // namespace ncl
