#pragma once

#include "ncl/eigensolver.hpp"
#include "ncl/moments.hpp"
#include "ncl/sparse_operator.hpp"

namespace ncl::dicke {

/// N two-level atoms in the symmetric Dicke ladder coupled to one field mode:
///   H = omega a^dag a + omega_eg S_z + (g/sqrt N)(S_+ a + S_- a^dag)
/// plus (g/sqrt N)(S_+ a^dag + S_- a) when counter_rotating is set.
/// Basis index = m * fock_dim + n, m = 0..N excitations in the ladder
/// (S_z = m - N/2), n = 0..fock_dim-1 photons.
struct DickeConfig {
    int n_atoms = 80;
    int fock_dim = 142;
    double omega = 1.0;
    double omega_eg = 1.0;
    double g = 0.0;
    bool counter_rotating = false;

    double critical_coupling() const;
    int dim() const { return (n_atoms + 1) * fock_dim; }
    int index(int m, int n) const { return m * fock_dim + n; }
    void validate() const;
};

SparseOperator build_hamiltonian(const DickeConfig& cfg);

/// Diagonal operator m + n (total excitation number).
SparseOperator excitation_operator(const DickeConfig& cfg);

/// <a>, <a^2>, <a^dag a> of the field factor of a state vector.
SingleModeMoments field_moments(const GroundStateResult& result, const DickeConfig& cfg);

}  // namespace ncl::dicke
