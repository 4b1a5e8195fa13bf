#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drcl/model.hpp"

namespace drcl {

// A raw labelled dataset before any task structure is imposed. Labels range
// over [0, n_classes); Batch (head-relative labels) is derived from it.
struct Dataset {
    std::vector<double> inputs; // row-major n x dim
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<int> labels;
    int n_classes = 0;
};

enum class TaskKind { split_class, permuted_label, permuted_input };

struct TaskSpec {
    TaskKind kind = TaskKind::split_class;
    std::size_t num_tasks = 1;
    std::uint64_t seed = 0;
    double train_fraction = 0.8;
    bool drop_remainder = false; // split_class: drop classes that don't divide evenly
    Dataset base;

    void validate() const;
};

struct TaskData {
    Batch train;
    Batch test;
    std::size_t task_index = 0;
    int head = 0; // classifier head this task trains/evaluates
};

struct TaskStream {
    std::vector<TaskData> tasks;
    // Audit trail: per task, the label (or feature) permutation applied, or
    // for split_class the class ids assigned to the task.
    std::vector<std::vector<int>> permutations;
    std::size_t classes_per_task = 0;
    TaskKind kind = TaskKind::split_class;
};

// Gaussian clusters with unit covariance; centers drawn uniformly in a cube
// sized by the separation and re-drawn until pairwise distances >= separation.
Dataset make_blobs(int n_classes, int n_per_class, int dim, double separation,
                   std::uint64_t seed);

TaskStream build_stream(const TaskSpec& spec);

} // namespace drcl
