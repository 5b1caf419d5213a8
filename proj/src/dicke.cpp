#include "ncl/dicke.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ncl::dicke {

double DickeConfig::critical_coupling() const {
    return std::sqrt(omega * omega_eg);
}

void DickeConfig::validate() const {
    if (n_atoms < 1) throw std::invalid_argument("n_atoms must be at least 1");
    if (fock_dim < 2) throw std::invalid_argument("fock_dim must be at least 2");
    if (!(omega > 0.0) || !(omega_eg > 0.0)) throw std::invalid_argument("frequencies must be positive");
    if (!(g >= 0.0)) throw std::invalid_argument("coupling must be non-negative");
}

SparseOperator build_hamiltonian(const DickeConfig& cfg) {
    cfg.validate();
    const int atoms = cfg.n_atoms;
    const double coupling = cfg.g / std::sqrt(static_cast<double>(atoms));
    std::vector<SparseEntry> entries;
    entries.reserve(static_cast<std::size_t>(cfg.dim()) * (cfg.counter_rotating ? 5 : 3));

    for (int m = 0; m <= atoms; ++m) {
        // S_+ |m> = sqrt((N - m)(m + 1)) |m + 1>
        const double raise = std::sqrt(static_cast<double>(atoms - m) * (m + 1));
        for (int n = 0; n < cfg.fock_dim; ++n) {
            const int row = cfg.index(m, n);
            entries.push_back({row, row, cfg.omega * n + cfg.omega_eg * (m - 0.5 * atoms)});
            if (coupling == 0.0 || m == atoms) continue;
            // S_+ a: |m, n> -> |m + 1, n - 1>, plus the Hermitian partner S_- a^dag.
            if (n >= 1) {
                const double value = coupling * raise * std::sqrt(static_cast<double>(n));
                const int col = cfg.index(m + 1, n - 1);
                entries.push_back({col, row, value});
                entries.push_back({row, col, value});
            }
            // S_+ a^dag: |m, n> -> |m + 1, n + 1>, plus S_- a.
            if (cfg.counter_rotating && n + 1 < cfg.fock_dim) {
                const double value = coupling * raise * std::sqrt(static_cast<double>(n + 1));
                const int col = cfg.index(m + 1, n + 1);
                entries.push_back({col, row, value});
                entries.push_back({row, col, value});
            }
        }
    }
    return SparseOperator::from_entries(cfg.dim(), entries);
}

SparseOperator excitation_operator(const DickeConfig& cfg) {
    cfg.validate();
    std::vector<SparseEntry> entries;
    entries.reserve(static_cast<std::size_t>(cfg.dim()));
    for (int m = 0; m <= cfg.n_atoms; ++m) {
        for (int n = 0; n < cfg.fock_dim; ++n) {
            entries.push_back({cfg.index(m, n), cfg.index(m, n), static_cast<double>(m + n)});
        }
    }
    return SparseOperator::from_entries(cfg.dim(), entries);
}

SingleModeMoments field_moments(const GroundStateResult& result, const DickeConfig& cfg) {
    const Eigen::VectorXd& psi = result.vector;
    if (psi.size() != cfg.dim()) throw std::invalid_argument("state vector does not match configuration");
    double mean = 0.0;
    double pair = 0.0;
    double number = 0.0;
    const double norm_sq = psi.squaredNorm();
    for (int m = 0; m <= cfg.n_atoms; ++m) {
        for (int n = 0; n < cfg.fock_dim; ++n) {
            const double c = psi(cfg.index(m, n));
            number += n * c * c;
            if (n + 1 < cfg.fock_dim) mean += c * std::sqrt(n + 1.0) * psi(cfg.index(m, n + 1));
            if (n + 2 < cfg.fock_dim) {
                pair += c * std::sqrt((n + 1.0) * (n + 2.0)) * psi(cfg.index(m, n + 2));
            }
        }
    }
    SingleModeMoments moments;
    moments.mean_a = mean / norm_sq;
    moments.a_squared = pair / norm_sq;
    moments.photon_number = number / norm_sq;
    return moments;
}

}  // namespace ncl::dicke
