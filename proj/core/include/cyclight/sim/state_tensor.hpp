#pragma once

#include <cstdint>
#include <vector>

namespace cyclight::sim {

/// Agent observation: a vehicle-count grid and a mean-speed grid over the
/// incoming lanes, one row per lane (fixed lane order), one column per
/// 5-meter cell with column 0 adjacent to the stop line.
///
/// Stored as float: observations are replay-buffer payload, and counts and
/// mean speeds fit comfortably in single precision.
struct StateTensor {
    int lanes = 0;
    int cells = 0;
    std::vector<float> position;  // lanes * cells, row-major
    std::vector<float> speed;     // lanes * cells, zero where position is zero

    StateTensor() = default;
    StateTensor(int n_lanes, int n_cells)
        : lanes(n_lanes),
          cells(n_cells),
          position(static_cast<std::size_t>(n_lanes) * n_cells, 0.0f),
          speed(static_cast<std::size_t>(n_lanes) * n_cells, 0.0f) {}

    std::size_t index(int lane, int cell) const {
        return static_cast<std::size_t>(lane) * cells + cell;
    }
    float pos_at(int lane, int cell) const { return position[index(lane, cell)]; }
    float speed_at(int lane, int cell) const { return speed[index(lane, cell)]; }

    bool operator==(const StateTensor&) const = default;
};

}  // namespace cyclight::sim
