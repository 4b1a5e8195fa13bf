#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "drcl/fisher.hpp"
#include "drcl/model.hpp"

namespace drcl {

enum class Regularizer { l1_weighted, l2_weighted, none };

struct SolverConfig {
    double eta = 5e-3;       // plasticity learning rate
    double gamma = -1.0;     // prox step size; < 0 means "use eta"
    double lambda = 10.0;    // stability weight
    std::size_t max_iter = 5;
    double residual_tol = -1.0; // < 0 means 1e-4 * sqrt(d)
    Regularizer regularizer = Regularizer::l1_weighted;
    // Mini-batches consumed per outer iteration; 0 spreads one epoch of
    // batches across max_iter iterations (ceil division).
    std::size_t inner_batches_per_iter = 0;
    std::size_t batch_size = 64; // 0 = full batch
    bool warm_start_y = true;    // carry y across epochs within a task
    // Test mode: solve the plasticity prox exactly on quadratic objectives
    // (solve_quadratic_composite honors it; run_task always uses gradients).
    bool exact_quadratic_prox = false;
    bool keep_iterates = false; // snapshot x/z/y/y~ per iteration into the trace

    double resolved_gamma() const { return gamma < 0 ? eta : gamma; }
    double resolved_residual_tol(std::size_t d) const;
    std::size_t resolved_inner_batches(std::size_t batches_per_epoch) const;
    void validate() const;
};

// The DRS triple plus everything Theorem 1 needs to audit one iteration.
struct SolverState {
    ParamVector x;       // learning variable x_k
    ParamVector z;       // stability variable z_k
    ParamVector y;       // consensus anchor y_k (after the consensus update)
    ParamVector y_tilde; // reflected point of the last completed iteration
    ParamVector x_old;
    std::vector<double> tau; // tau_i = gamma * lambda * F_i
    std::vector<double> residuals;
    std::size_t iter = 0;
};

struct IterationStats {
    std::size_t iter = 0;
    double residual = 0.0;
    double loss = 0.0;
    double sparsity_fraction = 0.0; // fraction of (z - x_old) entries exactly zero
};

struct IterateSnapshot {
    ParamVector x, z, y, y_tilde;
};

struct SolverTrace {
    std::vector<IterationStats> stats;
    std::vector<IterateSnapshot> iterates; // only when cfg.keep_iterates
    std::size_t stability_checks = 0;
    std::size_t stability_violations = 0;
    bool early_stopped = false;
};

struct TaskRunResult {
    ParamVector z_star;
    SolverState state;
    SolverTrace trace;
};

// --- Algorithm primitives -------------------------------------------------

// x_{k+1} = y - gamma * grad. Dense update, no thresholding.
ParamVector plasticity_step(const ParamVector& y, const ParamVector& grad,
                            const SolverConfig& cfg);

// y~ = 2 * x_next - y.
ParamVector reflect(const ParamVector& x_next, const ParamVector& y);

// z_i = x_old_i + S_{tau_i}(y~_i - x_old_i), S_t(u) = sign(u)*max(|u|-t, 0).
// tau_i == 0 passes y~_i through untouched (S_0 is the identity).
ParamVector prox_l1_weighted(const ParamVector& y_tilde, const ParamVector& x_old,
                             const std::vector<double>& tau);

// Minimizer of (lambda/2) F_i (x - x_old)^2 + (1/2 gamma)(x - y~)^2:
// z_i = (y~_i + gamma*lambda*F_i*x_old_i) / (1 + gamma*lambda*F_i).
ParamVector prox_l2_weighted(const ParamVector& y_tilde, const ParamVector& x_old,
                             double gamma, double lambda, const ImportanceWeights& f);

// y_next = y + (z_next - x_next); residual = ||z_next - x_next||_2.
std::pair<ParamVector, double> consensus_update(const ParamVector& y,
                                                const ParamVector& z_next,
                                                const ParamVector& x_next);

// Plain descent step shared by the SGD and EWC baselines (and by the solver
// itself when the stability term is inactive).
ParamVector sgd_baseline_step(const ParamVector& x, const ParamVector& grad_total,
                              double eta);

std::vector<double> compute_tau(double gamma, double lambda,
                                const ImportanceWeights& f, std::size_t d);

// Theorem 1 audit: for every i with |y~_i - x_old_i| < tau_i the prox must
// have returned exactly x_old_i. Reports the implication's truth per
// coordinate; any false entry is a solver bug, not a runtime error.
struct StabilityReport {
    std::vector<bool> ok;
    bool all_ok = true;
    std::size_t checked = 0;
};

StabilityReport check_stability_condition(const SolverState& state);

// --- Batch scheduling -----------------------------------------------------

// Deterministic endless mini-batch stream: a seeded shuffle per epoch,
// partitioned into batches of batch_size (last batch may be short).
class BatchStream {
public:
    BatchStream(const Batch& data, std::size_t batch_size, std::uint64_t seed);

    Batch next();
    std::size_t batches_per_epoch() const { return batches_per_epoch_; }

private:
    void reshuffle();

    const Batch* data_;
    std::size_t batch_size_;
    std::uint64_t seed_;
    std::size_t epoch_ = 0;
    std::size_t cursor_ = 0;
    std::vector<std::size_t> order_;
    std::size_t batches_per_epoch_ = 0;
};

// Optional additive gradient term for the EWC baseline:
// grad_total = grad + lambda * F (x - x_old).
struct EwcPenalty {
    double lambda = 0.0;
    const ImportanceWeights* f = nullptr;
    const ParamVector* x_old = nullptr;
};

// One epoch of DRCL (Algorithm: plasticity pull, reflection, weighted prox,
// consensus), consuming max_iter * inner batches from the stream. When the
// stability term is inactive (regularizer none, or lambda == 0) the loop
// degenerates to plain mini-batch gradient descent via sgd_baseline_step —
// the same code path the SGD/EWC baselines use, which is what makes the
// lambda=0 reduction bitwise.
TaskRunResult run_task(const ParamVector& x_old, const ImportanceWeights& f,
                       BatchStream& data, const SolverConfig& cfg,
                       const NetworkSpec& spec,
                       const ParamVector* y_init = nullptr,
                       const EwcPenalty* penalty = nullptr);

// --- Generic DRS loop (shared with the quadratic test harness) -------------

using PlasticityOp = std::function<ParamVector(const ParamVector& y, double& loss_out)>;
using StabilityOp = std::function<ParamVector(const ParamVector& y_tilde)>;

TaskRunResult drs_iterate(const ParamVector& x_old, std::vector<double> tau,
                          const SolverConfig& cfg, std::size_t max_outer,
                          const PlasticityOp& plasticity, const StabilityOp& stability,
                          const ParamVector* y_init = nullptr);

} // namespace drcl
