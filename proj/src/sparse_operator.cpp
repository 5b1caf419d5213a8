#include "ncl/sparse_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncl {

SparseOperator::SparseOperator(Storage matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("operator must be square");
    matrix_.makeCompressed();
}

SparseOperator SparseOperator::from_entries(int dim, const std::vector<SparseEntry>& entries) {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(entries.size());
    for (const SparseEntry& e : entries) {
        if (e.row < 0 || e.row >= dim || e.col < 0 || e.col >= dim) {
            throw std::out_of_range("sparse entry outside operator dimension");
        }
        triplets.emplace_back(e.row, e.col, e.value);
    }
    Storage m(dim, dim);
    m.setFromTriplets(triplets.begin(), triplets.end());
    return SparseOperator(std::move(m));
}

std::vector<SparseEntry> SparseOperator::entries() const {
    std::vector<SparseEntry> out;
    out.reserve(static_cast<std::size_t>(matrix_.nonZeros()));
    for (int row = 0; row < matrix_.outerSize(); ++row) {
        for (Storage::InnerIterator it(matrix_, row); it; ++it) {
            out.push_back({row, static_cast<int>(it.col()), it.value()});
        }
    }
    return out;
}

bool SparseOperator::is_hermitian(double tol) const {
    const Storage transposed = matrix_.transpose();
    const Storage diff = matrix_ - transposed;
    for (int row = 0; row < diff.outerSize(); ++row) {
        for (Storage::InnerIterator it(diff, row); it; ++it) {
            if (std::abs(it.value()) > tol) return false;
        }
    }
    return true;
}

int SparseOperator::max_row_nonzeros() const {
    int best = 0;
    for (int row = 0; row < matrix_.outerSize(); ++row) {
        best = std::max(best, static_cast<int>(matrix_.outerIndexPtr()[row + 1] - matrix_.outerIndexPtr()[row]));
    }
    return best;
}

SparseOperator SparseOperator::commutator(const SparseOperator& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("commutator of operators with different dimensions");
    Storage c = matrix_ * other.matrix_ - other.matrix_ * matrix_;
    c.prune(0.0);
    return SparseOperator(std::move(c));
}

}  // namespace ncl
