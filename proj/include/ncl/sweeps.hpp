#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncl/dicke.hpp"
#include "ncl/optimizer.hpp"

namespace ncl {

/// 17 significant digits, '.' decimal point, no locale; "nan"/"inf" for non-finite values.
std::string format_real(double value);

/// Comma-separated with a header row and LF line endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// ---------------------------------------------------------------------------
// Squeezed-state sweep

enum class ThetaMode { fixed, optimize };
enum class SplitterMode { maximize, fixed };

struct SqueezedSweepOptions {
    double r_min = 0.0;
    double r_max = 2.0;
    int steps = 41;
    double theta = 0.0;  ///< angle used by the fixed-theta column
    ThetaMode theta_mode = ThetaMode::fixed;  ///< whose (t, phi) is reported
    cplx alpha{0.0, 0.0};
    SplitterMode splitter = SplitterMode::maximize;
    double t = M_SQRT1_2;  ///< used when splitter == fixed
    double phi = 0.0;
    OptimizerSettings optimizer;
};

struct SqueezedSweepRow {
    double r = 0.0;
    double en_fixed_theta = 0.0;
    double en_optimized_theta = 0.0;
    double best_t = 0.0;
    double best_phi = 0.0;
};

inline const std::vector<std::string> kSqueezedSweepHeader = {
    "r", "E_N_fixed_theta", "E_N_optimized_theta", "best_t", "best_phi"};

std::vector<SqueezedSweepRow> squeezed_sweep(const SqueezedSweepOptions& options);

// ---------------------------------------------------------------------------
// Dicke sweep

struct DickeSweepOptions {
    int n_atoms = 80;
    int fock_dim = 142;
    double g_min = 0.0;
    std::optional<double> g_max;  ///< defaults to 2 g_c
    int steps = 101;
    double omega = 1.0;
    double omega_eg = 1.0;
    bool counter_rotating = false;
    double tol = 1e-9;
    int max_iter = 50000;
    bool mix_degenerate = false;
    OptimizerSettings optimizer;
};

/// degenerate_flag is 1 or 0, or -1 when the eigensolver did not converge
/// (the other columns after g_over_gc are then NaN).
struct DickeSweepRow {
    double g = 0.0;
    double g_over_gc = 0.0;
    double ground_energy = 0.0;
    double mean_photon = 0.0;
    double E_N = 0.0;
    double lambda_simon = 0.0;
    int degenerate_flag = 0;
};

inline const std::vector<std::string> kDickeSweepHeader = {
    "g", "g_over_gc", "ground_energy", "mean_photon", "E_N", "lambda_simon", "degenerate_flag"};

struct DickeSweepResult {
    std::vector<DickeSweepRow> rows;
    bool all_converged = true;
};

DickeSweepRow dicke_point(const dicke::DickeConfig& cfg, const DickeSweepOptions& options);
DickeSweepResult dicke_sweep(const DickeSweepOptions& options);

// ---------------------------------------------------------------------------
// Fock-space oracle check

/// mt19937_64 draws mapped to [0, 1) as (x >> 11) * 2^-53.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed);
    double next();

private:
    std::mt19937_64 engine_;
};

struct OracleCheckOptions {
    int trials = 50;
    int dim = 80;
    std::uint64_t seed = 1;
    double r_max = 1.5;
    double alpha_max = 1.0;
    bool corrupt_phase = false;
};

struct OracleTrial {
    SqueezedCoherentParams params;
    BeamSplitterParams bs;
    int dim_used = 0;
    bool truncation_overflow = false;
    double discrepancy = 0.0;
};

struct OracleCheckReport {
    std::vector<OracleTrial> trials;
    double max_discrepancy = 0.0;
    bool passed = false;
};

inline constexpr double kOracleTolerance = 1e-6;

OracleCheckReport oracle_check(const OracleCheckOptions& options);

}  // namespace ncl
