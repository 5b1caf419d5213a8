#pragma once

#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace ncl {

struct SparseEntry {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Real square operator in compressed sparse row form.
class SparseOperator {
public:
    using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor>;

    SparseOperator() = default;
    explicit SparseOperator(Storage matrix);

    /// Duplicate (row, col) pairs are summed.
    static SparseOperator from_entries(int dim, const std::vector<SparseEntry>& entries);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    long nonzeros() const { return matrix_.nonZeros(); }

    /// Entries in row-major order, columns ascending within a row.
    std::vector<SparseEntry> entries() const;

    Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return matrix_ * x; }
    Eigen::MatrixXd to_dense() const { return Eigen::MatrixXd(matrix_); }

    bool is_hermitian(double tol = 1e-14) const;
    int max_row_nonzeros() const;

    /// this * other - other * this
    SparseOperator commutator(const SparseOperator& other) const;

    const Storage& matrix() const { return matrix_; }

private:
    Storage matrix_;
};

}  // namespace ncl
