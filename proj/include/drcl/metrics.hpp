#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "drcl/param_vector.hpp"

namespace drcl {

// Lower-triangular accuracy matrix: r[i][j] = test accuracy on task j after
// training through task i (0-based, j <= i). Source of all forgetting metrics.
struct AccuracyMatrix {
    std::vector<std::vector<double>> r;

    std::size_t T() const { return r.size(); }
    void append_row(std::vector<double> row); // row t must have t+1 entries
    double at(std::size_t i, std::size_t j) const;
    bool complete() const; // every row i has i+1 entries
};

// Mean of the final row: (1/T) sum_j r[T-1][j].
double avg_accuracy(const AccuracyMatrix& m);

// Average forgetting F_T: mean over columns j < T-1 of the drop from the
// column's running peak to its final value,
// (1/(T-1)) sum_j [ max_{l in j..T-1} r[l][j] - r[T-1][j] ]. Always >= 0.
double avg_forgetting(const AccuracyMatrix& m);

// A_Inc = (1/T) sum_t mean(row t).
double avg_incremental_accuracy(const AccuracyMatrix& m);

// GEM-style BWT = (1/(T-1)) sum_{j<T-1} (r[T-1][j] - r[j][j]).
double backward_transfer(const AccuracyMatrix& m);

// Group forgetting after t tasks have been learned (t is a count, so valid
// rows are 0..t-1): (1/|G|) sum_{k in G} [ max_{j in k..t-1} A_{k,j} - A_{k,t-1} ]
// with A_{k,j} = r[j][k] (accuracy on task k after learning task j).
double group_forgetting(const AccuracyMatrix& m, const std::vector<std::size_t>& group,
                        std::size_t t);

// Fraction of coordinates with |dx_i| / max(|x_old_i|, 1e-8) < eps; the floor
// guards the ratio at zero weights.
double effective_stability(const ParamVector& x_new, const ParamVector& x_old, double eps);

// Fraction of |dx_i| <= atol (exact zeros when atol == 0).
double update_sparsity(const ParamVector& dx, double atol);

void write_matrix_csv(const AccuracyMatrix& m, const std::string& path);
AccuracyMatrix read_matrix_csv(const std::string& path);

} // namespace drcl
