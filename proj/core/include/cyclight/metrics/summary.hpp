#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cyclight/eval/runner.hpp"
#include "cyclight/sim/simulation.hpp"

namespace cyclight::metrics {

/// Per-hour aggregates for one run; vehicles are attributed to the hour they
/// spawned in, and vehicles still on the map at the end contribute the
/// waiting they accrued so far.
struct HourlyStats {
    int n_bikes = 0;
    int n_cars = 0;
    double wait_bike_sum = 0;
    double wait_car_sum = 0;

    int n_all() const { return n_bikes + n_cars; }
    double wait_all_sum() const { return wait_bike_sum + wait_car_sum; }
    std::optional<double> mean_bike() const {
        if (n_bikes == 0) return std::nullopt;
        return wait_bike_sum / n_bikes;
    }
    std::optional<double> mean_car() const {
        if (n_cars == 0) return std::nullopt;
        return wait_car_sum / n_cars;
    }
    std::optional<double> mean_all() const {
        if (n_all() == 0) return std::nullopt;
        return wait_all_sum() / n_all();
    }
};

/// Daytime window used by the robustness sweep, hours 6..20 inclusive.
inline constexpr int kWindowFirstHour = 6;
inline constexpr int kWindowLastHour = 20;

struct RunSummary {
    std::string controller;
    std::string trace_id;
    std::array<HourlyStats, 24> hours{};

    // Window aggregates over hours [6, 20].
    double window_wait_sum = 0;
    int window_n_bikes = 0;
    int window_n_cars = 0;
    std::optional<double> window_mean_bike;
    std::optional<double> window_mean_car;

    // Whole-run aggregates.
    int total_vehicles = 0;
    double total_wait_sum = 0;
    std::optional<double> daily_mean_wait;
};

/// Hour bucket of a vehicle record (spawn-hour attribution).
int attribute_hour(const sim::VehicleRecord& record);

RunSummary summarize(const eval::RunResult& run);

struct RatioRow {
    std::string controller;
    double daily_mean_wait = 0;
    double ratio_vs_baseline = 0;
};

struct RatioTable {
    std::string baseline;
    std::string trace_id;
    std::vector<RatioRow> rows;  // baseline first, ratio 1
};

/// Daily mean waiting time of each run divided by the baseline's. All runs
/// must come from the same trace.
RatioTable compare(const RunSummary& baseline, const std::vector<RunSummary>& others);

void write_run_log(const std::filesystem::path& path,
                   const std::vector<sim::VehicleRecord>& records);
void write_summary_csv(const std::filesystem::path& path, const RunSummary& summary);
void write_summary_json(const std::filesystem::path& path, const RunSummary& summary);
void write_ratios_json(const std::filesystem::path& path, const RatioTable& table);

}  // namespace cyclight::metrics
