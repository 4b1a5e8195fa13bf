#pragma once

#include <cstdint>

#include "drcl/model.hpp"

namespace drcl {

// Per-parameter importance weights F_i: a diagonal Fisher estimate plus its
// normalization state.
struct ImportanceWeights {
    std::vector<double> f;
    bool normalized = false;
    std::size_t sample_count = 0;

    bool empty() const { return f.empty(); }
    std::size_t size() const { return f.size(); }
};

enum class FisherMode {
    true_fisher, // score labels sampled from the model's own softmax
    empirical,   // score labels taken from the dataset
};

// Diagonal Fisher: f_i = mean over sampled data points of the squared score
// d log p(v | u) / d x_i. Sampling is seeded and deterministic: n_samples <=
// |data| draws a subset without replacement, larger n draws with replacement.
// In true_fisher mode the label of a given data point is fixed per (seed,
// point), so a duplicated point contributes identical terms.
ImportanceWeights estimate_fisher(const ParamVector& params, const Batch& data,
                                  const NetworkSpec& spec, std::size_t n_samples,
                                  std::uint64_t seed,
                                  FisherMode mode = FisherMode::true_fisher);

// Divide by the global mean so mean(f) == 1. An all-zero input is returned
// unchanged (still flagged normalized): zero weights mean zero thresholds,
// i.e. no stability, and that degenerate case must not divide by zero.
ImportanceWeights mean_normalize(ImportanceWeights w);

enum class FisherAccumulate { none, sum, max };

// Fold a fresh per-task estimate into a running accumulator. `none` replaces.
void accumulate_importance(ImportanceWeights& acc, const ImportanceWeights& fresh,
                           FisherAccumulate mode);

} // namespace drcl
