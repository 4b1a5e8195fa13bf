#pragma once

#include <cstdint>
#include <vector>

#include "drcl/param_vector.hpp"

namespace drcl {

enum class Activation { relu, tanh };

// Multi-head MLP: shared dense trunk, one output layer ("head") per task.
// Heads live inside the same flat ParamVector as the trunk so the solver's
// sparsity machinery treats them like any other parameter.
struct NetworkSpec {
    std::size_t input_dim = 0;
    std::vector<std::size_t> hidden_dims;
    std::size_t num_heads = 1;
    std::size_t classes_per_head = 2;
    Activation activation = Activation::relu;

    void validate() const; // throws ConfigError
    Layout layout() const; // trunk layers first, then one block per head
    std::size_t param_count() const;
    std::size_t trunk_layer_count() const { return hidden_dims.size(); }
    // Flat offset / size of one head's parameter block.
    std::size_t head_offset(std::size_t head) const;
    std::size_t head_param_count() const;
};

// A labelled mini-batch (or a whole dataset) already mapped to one head:
// labels are head-relative class indices and task_id selects the head.
struct Batch {
    std::vector<double> inputs; // row-major, n x dim
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<int> labels;
    int task_id = 0;

    const double* row(std::size_t i) const { return inputs.data() + i * dim; }
};

// Fan-in scaled uniform init: weights U(-s, s) with s = sqrt(1 / fan_in),
// biases zero. Deterministic for a fixed seed.
ParamVector init_params(const NetworkSpec& spec, std::uint64_t seed);

struct LossGrad {
    double loss = 0.0;
    ParamVector grad;
};

// Mean softmax cross-entropy over the batch, restricted to the batch's head.
// Gradient entries of inactive heads are exactly zero.
LossGrad loss_and_grad(const ParamVector& params, const Batch& batch, const NetworkSpec& spec);

// In-place variant so hot loops (Fisher estimation) can reuse the buffer.
double loss_and_grad_into(const ParamVector& params, const Batch& batch,
                          const NetworkSpec& spec, ParamVector& grad);

// Logits for every sample of the batch on its own head; out is n x classes.
void forward_logits(const ParamVector& params, const Batch& batch,
                    const NetworkSpec& spec, std::vector<double>& out);

// Fraction of argmax-correct predictions; argmax ties break toward the lowest
// class index.
double accuracy(const ParamVector& params, const Batch& dataset, const NetworkSpec& spec);

} // namespace drcl
