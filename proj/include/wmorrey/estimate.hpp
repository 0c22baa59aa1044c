#pragma once

#include <cstddef>

#include "wmorrey/grid.hpp"

namespace wmorrey {

/// Empirical constant: the largest per-sample quantity and where it occurred.
struct ConstantEstimate {
    double value = 0.0;
    Ball witness{};
    std::size_t samples = 0;
    std::size_t skipped = 0;
    int grid_points = 0;
    std::size_t family_size = 0;
    bool diverging = false;  // set by checks that can detect non-integrable input

    /// Records `v` for `ball`; ties keep the earlier witness.
    void offer(double v, const Ball& ball) {
        if (samples == 0 || v > value) {
            value = v;
            witness = ball;
        }
        ++samples;
    }
};

}  // namespace wmorrey
