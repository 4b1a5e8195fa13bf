#pragma once

#include <cstddef>
#include <vector>

#include "drcl/solver.hpp"

namespace drcl {

// f(x) = 0.5 (x - b)^T A (x - b) with A symmetric positive definite.
// Small dense instances only; this exists for the convex convergence and KKT
// oracles where the exact plasticity prox has a closed form.
struct QuadraticObjective {
    std::size_t d = 0;
    std::vector<double> a; // row-major d x d, symmetric
    std::vector<double> b;

    double value(const std::vector<double>& x) const;
    std::vector<double> gradient(const std::vector<double>& x) const;
};

// DRS on f + lambda * sum_i F_i |x_i - x_old_i| (or the l2 counterpart per
// cfg.regularizer). cfg.exact_quadratic_prox selects the exact prox of f,
// prox_{gamma f}(v) = (I + gamma A)^{-1} (v + gamma A b), otherwise the same
// gradient-step approximation production uses.
TaskRunResult solve_quadratic_composite(const QuadraticObjective& objective,
                                        const ParamVector& x_old,
                                        const ImportanceWeights& f,
                                        const SolverConfig& cfg,
                                        std::size_t max_outer);

} // namespace drcl
