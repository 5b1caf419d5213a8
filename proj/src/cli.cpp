#include "ncl/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ncl/optimizer.hpp"
#include "ncl/sweeps.hpp"

namespace ncl::cli {

nlohmann::ordered_json to_json(const NonclassicalityReport& report) {
    nlohmann::ordered_json j;
    j["eta_minus"] = report.eta_minus;
    j["eta_plus"] = report.eta_plus;
    j["E_N"] = report.E_N;
    j["lambda_simon"] = report.lambda_simon;
    j["lambda_dgcz"] = report.lambda_dgcz;
    j["dgcz_simple"] = report.dgcz_simple;
    j["hz"] = report.hz;
    j["best_t"] = report.best_t;
    j["best_phi"] = report.best_phi;
    return j;
}

namespace {

void add_optimizer_flags(CLI::App* cmd, OptimizerSettings& s, bool with_theta) {
    cmd->add_option("--grid-t", s.grid_t, "transmission grid points")->check(CLI::Range(8, 100000))->capture_default_str();
    cmd->add_option("--grid-phi", s.grid_phi, "phase grid points")->check(CLI::Range(8, 100000))->capture_default_str();
    if (with_theta) {
        cmd->add_option("--grid-theta", s.grid_theta, "squeezing-angle grid points")
            ->check(CLI::Range(8, 100000))->capture_default_str();
    }
    cmd->add_option("--refine-iters", s.refine_iters, "coordinate refinement sweeps")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
}

// Routes output to --output when given, standard output otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::invalid_argument("cannot open output file: " + path);
            out_ = file_.get();
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-mode nonclassicality from second moments via beam-splitter entanglement", "ncl"};
    app.require_subcommand(1);
    std::string output;

    // measure
    auto* measure = app.add_subcommand("measure", "Nonclassicality report for <a^2> = v e^{i theta}, <a^dag a> = n");
    double n = 0.0, v = 0.0, theta = 0.0, mean_re = 0.0, mean_im = 0.0;
    double t = M_SQRT1_2, phi = 0.0;
    std::string mode = "maximize";
    OptimizerSettings measure_opt;
    measure->add_option("--n", n, "<a^dag a>")->required();
    measure->add_option("--v", v, "|<a^2>|")->required()->check(CLI::NonNegativeNumber);
    measure->add_option("--theta", theta, "arg <a^2> in radians")->capture_default_str();
    measure->add_option("--mean-re", mean_re, "Re <a>")->capture_default_str();
    measure->add_option("--mean-im", mean_im, "Im <a>")->capture_default_str();
    measure->add_option("--mode", mode, "fixed: use --t/--phi; maximize: optimize the splitter")
        ->check(CLI::IsMember({"fixed", "maximize"}))->capture_default_str();
    measure->add_option("--t", t, "transmission amplitude (fixed mode)")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    measure->add_option("--phi", phi, "splitter phase in radians (fixed mode)")->capture_default_str();
    add_optimizer_flags(measure, measure_opt, false);
    measure->add_option("--output", output, "output path (default: standard output)");

    // squeezed-sweep
    auto* squeezed = app.add_subcommand("squeezed-sweep", "E_N versus squeezing strength r (CSV)");
    SqueezedSweepOptions sq;
    std::string theta_mode = "fixed";
    std::string splitter = "maximize";
    double alpha_re = 0.0, alpha_im = 0.0;
    squeezed->add_option("--r-min", sq.r_min)->check(CLI::NonNegativeNumber)->capture_default_str();
    squeezed->add_option("--r-max", sq.r_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    squeezed->add_option("--steps", sq.steps)->check(CLI::Range(2, 10000000))->capture_default_str();
    squeezed->add_option("--theta", sq.theta, "squeezing angle of the fixed-theta column")->capture_default_str();
    squeezed->add_option("--theta-mode", theta_mode, "whose optimum best_t/best_phi report")
        ->check(CLI::IsMember({"fixed", "optimize"}))->capture_default_str();
    squeezed->add_option("--alpha-re", alpha_re, "Re alpha (coherent displacement)")->capture_default_str();
    squeezed->add_option("--alpha-im", alpha_im, "Im alpha")->capture_default_str();
    squeezed->add_option("--mode", splitter, "maximize over (t, phi) or hold them fixed")
        ->check(CLI::IsMember({"fixed", "maximize"}))->capture_default_str();
    squeezed->add_option("--t", sq.t)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    squeezed->add_option("--phi", sq.phi)->capture_default_str();
    add_optimizer_flags(squeezed, sq.optimizer, true);
    squeezed->add_option("--output", output, "output path (default: standard output)");

    // dicke-sweep
    auto* dicke_cmd = app.add_subcommand("dicke-sweep", "Ground-state field nonclassicality versus coupling g (CSV)");
    DickeSweepOptions dk;
    double g_max = -1.0;
    dicke_cmd->add_option("--n-atoms", dk.n_atoms)->check(CLI::Range(1, 100000))->capture_default_str();
    dicke_cmd->add_option("--fock-dim", dk.fock_dim)->check(CLI::Range(2, 100000))->capture_default_str();
    dicke_cmd->add_option("--g-min", dk.g_min)->check(CLI::NonNegativeNumber)->capture_default_str();
    dicke_cmd->add_option("--g-max", g_max, "default: 2 g_c")->check(CLI::NonNegativeNumber);
    dicke_cmd->add_option("--steps", dk.steps)->check(CLI::Range(2, 10000000))->capture_default_str();
    dicke_cmd->add_option("--omega", dk.omega)->check(CLI::PositiveNumber)->capture_default_str();
    dicke_cmd->add_option("--omega-eg", dk.omega_eg)->check(CLI::PositiveNumber)->capture_default_str();
    dicke_cmd->add_flag("--counter-rotating", dk.counter_rotating, "add S+ a^dag + S- a terms");
    dicke_cmd->add_option("--tol", dk.tol, "eigensolver residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    dicke_cmd->add_option("--max-iter", dk.max_iter, "eigensolver matrix-vector budget")
        ->check(CLI::PositiveNumber)->capture_default_str();
    dicke_cmd->add_flag("--mix-degenerate", dk.mix_degenerate, "equal-weight mix of a degenerate ground pair");
    add_optimizer_flags(dicke_cmd, dk.optimizer, false);
    dicke_cmd->add_option("--output", output, "output path (default: standard output)");

    // oracle-check
    auto* oracle = app.add_subcommand("oracle-check", "Compare analytic covariance blocks with a Fock-space simulation");
    OracleCheckOptions oc;
    bool verbose = false;
    oracle->add_option("--trials", oc.trials)->check(CLI::Range(1, 1000000))->capture_default_str();
    oracle->add_option("--dim", oc.dim, "minimum Fock truncation")->check(CLI::Range(2, 4096))->capture_default_str();
    oracle->add_option("--seed", oc.seed)->capture_default_str();
    oracle->add_option("--r-max", oc.r_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    oracle->add_option("--alpha-max", oc.alpha_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    oracle->add_flag("--verbose", verbose, "one line per trial");
    oracle->add_flag("--corrupt-phase", oc.corrupt_phase)->group("");
    oracle->add_option("--output", output, "output path (default: standard output)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("ncl");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadArguments;
    }

    try {
        Sink sink(output, out);
        std::ostream& os = sink.stream();

        if (*measure) {
            SingleModeMoments m;
            m.mean_a = {mean_re, mean_im};
            m.a_squared = std::polar(v, theta);
            m.photon_number = n;
            const NonclassicalityReport report =
                mode == "fixed" ? evaluate_fixed(m, BeamSplitterParams::from_transmission(t, phi))
                                : evaluate_maximized(m, measure_opt);
            os << to_json(report).dump() << '\n';
            return kOk;
        }

        if (*squeezed) {
            if (sq.r_max < sq.r_min) throw std::invalid_argument("--r-max must not be below --r-min");
            sq.alpha = {alpha_re, alpha_im};
            sq.theta_mode = theta_mode == "fixed" ? ThetaMode::fixed : ThetaMode::optimize;
            sq.splitter = splitter == "fixed" ? SplitterMode::fixed : SplitterMode::maximize;
            std::vector<std::vector<double>> rows;
            for (const auto& row : squeezed_sweep(sq)) {
                rows.push_back({row.r, row.en_fixed_theta, row.en_optimized_theta, row.best_t, row.best_phi});
            }
            write_csv(os, kSqueezedSweepHeader, rows);
            return kOk;
        }

        if (*dicke_cmd) {
            if (g_max >= 0.0) {
                if (g_max < dk.g_min) throw std::invalid_argument("--g-max must not be below --g-min");
                dk.g_max = g_max;
            }
            const DickeSweepResult result = dicke_sweep(dk);
            std::vector<std::vector<double>> rows;
            for (const auto& row : result.rows) {
                rows.push_back({row.g, row.g_over_gc, row.ground_energy, row.mean_photon, row.E_N,
                                row.lambda_simon, static_cast<double>(row.degenerate_flag)});
            }
            write_csv(os, kDickeSweepHeader, rows);
            if (!result.all_converged) {
                err << "eigensolver did not converge for at least one coupling (degenerate_flag = -1)\n";
                return kNotConverged;
            }
            return kOk;
        }

        if (*oracle) {
            const OracleCheckReport report = oracle_check(oc);
            if (verbose) {
                for (std::size_t i = 0; i < report.trials.size(); ++i) {
                    const OracleTrial& tr = report.trials[i];
                    os << "trial " << i << " alpha=" << format_real(tr.params.alpha.real()) << ","
                       << format_real(tr.params.alpha.imag()) << " r=" << format_real(tr.params.strength)
                       << " theta=" << format_real(tr.params.angle) << " t=" << format_real(tr.bs.t)
                       << " phi=" << format_real(tr.bs.phi) << " dim=" << tr.dim_used
                       << (tr.truncation_overflow ? " truncated" : "")
                       << " discrepancy=" << format_real(tr.discrepancy) << '\n';
                }
            }
            os << "trials " << report.trials.size() << '\n';
            os << "seed " << oc.seed << '\n';
            os << "max_discrepancy " << format_real(report.max_discrepancy) << '\n';
            os << "tolerance " << format_real(kOracleTolerance) << '\n';
            os << (report.passed ? "PASS" : "FAIL") << '\n';
            return report.passed ? kOk : kOracleMismatch;
        }
    } catch (const UnphysicalMoments& e) {
        err << "error: " << e.what() << '\n';
        return kUnphysical;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadArguments;
    }
    return kBadArguments;
}

}  // namespace ncl::cli
