#pragma once

#include <cstddef>
#include <vector>

#include "drcl/errors.hpp"

namespace drcl {

// One dense layer's footprint inside the flat parameter vector: a rows x cols
// weight matrix stored row-major, optionally followed by a bias of length rows.
struct LayerShape {
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool has_bias = true;

    std::size_t param_count() const { return rows * cols + (has_bias ? rows : 0); }
    bool operator==(const LayerShape&) const = default;
};

using Layout = std::vector<LayerShape>;

std::size_t layout_param_count(const Layout& layout);

// Flat view of all model parameters. This is the single currency between the
// model, the solver, and the metrics: everything downstream of the network
// treats it as a plain vector in R^d.
struct ParamVector {
    std::vector<double> values;
    Layout layout;

    ParamVector() = default;
    explicit ParamVector(std::vector<double> v, Layout l = {})
        : values(std::move(v)), layout(std::move(l)) {}

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    static ParamVector zeros_like(const ParamVector& other) {
        ParamVector out;
        out.values.assign(other.values.size(), 0.0);
        out.layout = other.layout;
        return out;
    }
};

// Byte offset bookkeeping: flat offset where layer `index` begins.
std::size_t layer_offset(const Layout& layout, std::size_t index);

void check_same_size(const ParamVector& a, const ParamVector& b, const char* where);
void check_finite(const ParamVector& v, const char* what);

double l2_norm(const std::vector<double>& v);
double l2_distance(const ParamVector& a, const ParamVector& b);

} // namespace drcl
